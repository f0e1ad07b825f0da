"""Workbench for the online Thue game.

Core pieces: square-free word machinery (words), exact dyadic positions and
their adjacency structure (dyadic), the two-phase referee (game), Alice
strategies with coloring search and verifiers (alice), and the exact
adversary solver (solver).  A FastAPI service (thuegame.service) and a CLI
(thuegame.cli) sit on top.
"""

__version__ = "0.1.0"
