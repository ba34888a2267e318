# -*- coding: utf-8 -*-
r"""
 ____
|  _ \ ___ _ __ ___   ___  _ __ __ _
| |_) / _ \ '_ ` _ \ / _ \| '__/ _` |
|  _ <  __/ | | | | | (_) | | | (_| |
|_| \_\___|_| |_| |_|\___/|_|  \__,_|

A rank-polymorphic array language: reader, evaluator, type checker.
"""

from __future__ import unicode_literals

from .__version__ import __version__

__title__ = 'Remora'
__license__ = 'The MIT License (MIT)'

