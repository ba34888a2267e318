# -*- coding: utf-8 -*-
from __future__ import unicode_literals

SUMMARY = """
Remora is a rank-polymorphic array language. Functions declare the rank of
the cells they consume and are lifted automatically over the frame of
their arguments.
"""

USAGE = """\
remora [--dialect dynamic|typed] [--check-only] [--no-prelude]
              [--parallel-cells] [--workers N] [FILE ...]
       remora corpus DIR
"""

EXAMPLES = """
examples:
  $ remora                            start the interactive interpreter
  $ remora examples.rem               run a file and print every result
  $ remora --dialect typed --check-only typed.rem
  $ remora corpus tests/corpus        run a directory of golden test cases

exit status:
  0  success
  1  a Remora error was reported (or a corpus case failed)
  2  the command line could not be used
"""

BANNER = """\
remora {version} ({dialect} dialect)
Type :help for help, :quit or Ctrl-D to leave.
"""

HELP = """\
====================================
Remora interactive interpreter
====================================

Enter a form and press return. A form that leaves a delimiter or a
string open continues on the next line.

[Commands]
  :help         : Show this message
  :type EXPR    : Print the type of EXPR (typed dialect)
  :quit         : Leave the interpreter

[Examples]
  (+ [1 2 3] 10)
  (define (vmag [v 1]) (square-root (reduce + (* v v))))
  (vmag [[3 4] [5 12]])
  (~(1 0)+ [1 2] [[10 20] [30 40]])
"""

CORPUS_REPORT = """\
{passed} passed, {failed} failed
"""
