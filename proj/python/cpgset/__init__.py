"""Finite groups, G-sets, (G,X,0) semigroups and congruence permutability."""

from ._cpgset import (
    CpgsetError,
    Group,
    GSet,
    Semigroup,
    builtin_group_names,
    catalog,
    claims,
    compose,
    reproduce_example,
    run_suite,
    verify,
)

__all__ = [
    "CpgsetError",
    "Group",
    "GSet",
    "Semigroup",
    "builtin_group_names",
    "catalog",
    "claims",
    "compose",
    "reproduce_example",
    "run_suite",
    "verify",
]
__version__ = "0.1.0"
