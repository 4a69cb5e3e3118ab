from python_spin_crystal.core.cartan import INFINITY, CartanType, ContentVector, Weight
from python_spin_crystal.core.crystal import e_tilde, eps, f_tilde, phi
from python_spin_crystal.core.crystal_graph import CrystalGraph, generate
from python_spin_crystal.core.partitions import (
    EMPTY,
    HStrictPartition,
    enumerate_h_strict,
    enumerate_restricted,
    parse_partition,
)

__all__ = [
    "INFINITY",
    "CartanType",
    "ContentVector",
    "Weight",
    "HStrictPartition",
    "EMPTY",
    "parse_partition",
    "enumerate_h_strict",
    "enumerate_restricted",
    "eps",
    "phi",
    "e_tilde",
    "f_tilde",
    "CrystalGraph",
    "generate",
]
