"""Workbench for equational logic on finite monoids.

Core pieces: words over an indexed alphabet, identities with one-step
rewriting and bounded deduction, factor monoids of word sets with two
independent satisfaction engines, truncated equational theories, isoterm
search, the built-in word/identity families, and finite-lattice modularity.
"""

from . import claims, equational, families, fmon, kernel, lattice, rees, verdicts, words
from .equational import (
    Derivation,
    Identity,
    NotFoundWithinBudget,
    SearchBudget,
    Substitution,
    Witness,
    deduce,
    direct_successors,
    match_pattern,
    verify_derivation,
)
from .words import EMPTY, Letter, Word

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "Derivation",
    "Identity",
    "Letter",
    "NotFoundWithinBudget",
    "SearchBudget",
    "Substitution",
    "Witness",
    "Word",
    "claims",
    "deduce",
    "direct_successors",
    "equational",
    "families",
    "fmon",
    "kernel",
    "lattice",
    "match_pattern",
    "rees",
    "verdicts",
    "verify_derivation",
    "words",
]
