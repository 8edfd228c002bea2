"""Combinatorics of H-primes of quantum partial flag varieties: the index set
of pairs (w, v) with w a minimal coset representative and v <= w in Bruhat
order, together with the Weyl group, Bruhat order, weight-system and
PBW-root machinery it rests on."""

from .root_system import (
    CartanDatum, InvalidInput, Root, RootSystem, SizeCapExceeded, Weight,
    build_root_system, group_order,
)
from .weyl import WeylElement, WeylGroup, weyl_group

__version__ = "0.1.0"
