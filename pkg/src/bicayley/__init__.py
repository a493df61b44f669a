"""Bi-Cayley graphs over finite groups: construction, exact invariants and
machine-checked structural claims."""
from __future__ import annotations

__version__ = "0.1.0"

from bicayley.errors import BiCayleyError, BudgetExceeded, InvalidConnectionSet, InvalidParameter, ParseError
from bicayley.groups import (ConnectionSet, FiniteGroup, make_cyclic, make_dihedral, make_symmetric,
                             parse_group, preset_connection_sets)
from bicayley.graph import BiCayleySpec, LabeledGraph, bicayley_graph, cayley_graph, side_subgraph
from bicayley.invariants import (Budget, Certificate, SolveOutcome, chromatic_number_exact,
                                 clique_number_exact, independence_number_exact, validate_certificate)
from bicayley import kernels

__all__ = [
    "__version__", "BiCayleyError", "BudgetExceeded", "InvalidConnectionSet", "InvalidParameter",
    "ParseError", "ConnectionSet", "FiniteGroup", "make_cyclic", "make_dihedral", "make_symmetric",
    "parse_group", "preset_connection_sets", "BiCayleySpec", "LabeledGraph", "bicayley_graph",
    "cayley_graph", "side_subgraph", "Budget", "Certificate", "SolveOutcome",
    "chromatic_number_exact", "clique_number_exact", "independence_number_exact",
    "validate_certificate", "kernels",
]
