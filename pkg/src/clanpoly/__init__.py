"""Exact polynomial combinatorics for clan-indexed orbit closures.

Subpackages cover clan combinatorics, Schubert-type polynomial families,
the upsilon representatives, determinantal and patch ideals, and a small
exact Groebner toolkit.  See the CLI entry point ``clanpoly`` for the
command surface.
"""

from .poly import Poly
from .clans import Clan, parse_clan, enumerate_clans

__all__ = ["Poly", "Clan", "parse_clan", "enumerate_clans"]

__version__ = "0.1.0"
