"""Exact-arithmetic knot-concordance invariants.

Laurent-polynomial Alexander invariants, Arf invariants, Levine-Tristram
signatures, surgery-curve enumeration on genus-1 Seifert forms, a
satellite/infection calculus with a textual DSL, exact integer lattice
membership, Stallings-folding subgroup membership, and an end-to-end
verification pipeline for the slice-knot counterexample computations.
"""

from .errors import (ArityError, ClassificationFailure, ConcordanceError,
                     DimensionMismatch, InvalidDeterminant,
                     InvalidSeifertMatrix, NotNormalizable, ParseError,
                     SingularEvaluation, ZeroBase)
from .laurent import LaurentPoly, parse_poly
from .intlattice import colspace_member, det_int, hermite_normal_form
from .seifert import (SeifertMatrix, alexander, arf,
                      is_algebraically_slice_genus1, levine_tristram,
                      surgery_curve_classes)
from .knotexpr import (Atom, Infection, KnotExpr, Mirror, Reverse, Sum,
                       alexander_of, arf_of, atom, neg, parse, signature_of,
                       unparse)
from .freegroup import (Endomorphism, FoldedGraph, Word,
                        eta1_membership_check, member, reduce,
                        standard_map, subgroup_graph, suffix_class)
from .verify import (CounterexampleReport, UniquenessChecks,
                     default_theta_grid, run_counterexample,
                     run_uniqueness_checks)

__all__ = [
    "ArityError", "ClassificationFailure", "ConcordanceError",
    "DimensionMismatch", "InvalidDeterminant", "InvalidSeifertMatrix",
    "NotNormalizable", "ParseError", "SingularEvaluation", "ZeroBase",
    "LaurentPoly", "parse_poly",
    "colspace_member", "det_int", "hermite_normal_form",
    "SeifertMatrix", "alexander", "arf", "is_algebraically_slice_genus1",
    "levine_tristram", "surgery_curve_classes",
    "Atom", "Infection", "KnotExpr", "Mirror", "Reverse", "Sum",
    "alexander_of", "arf_of", "atom", "neg", "parse", "signature_of",
    "unparse",
    "Endomorphism", "FoldedGraph", "Word", "eta1_membership_check",
    "member", "reduce", "standard_map", "subgroup_graph", "suffix_class",
    "CounterexampleReport", "UniquenessChecks", "default_theta_grid",
    "run_counterexample", "run_uniqueness_checks",
]
