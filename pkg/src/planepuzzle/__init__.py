"""Generalized fifteen-puzzle on projective planes PG(2,q).

Subpackages: gf (field arithmetic), plane (PG(2,q) incidence), moves
(elementary moves and hole-group generators), permgrp (permutation-group
engine), analysis (verification suites), session/service (interactive
puzzle), report (figures and delimited summaries), cli.
"""

__version__ = "0.1.0"
