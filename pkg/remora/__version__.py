# -*- coding: utf-8 -*-
from __future__ import unicode_literals

__version__ = '0.4.0'
