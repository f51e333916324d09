"""Planar webs, their skein reduction, and a brute-force oracle for the matrices."""

from .diagram import DiagramError, Strip, Web, compose
from .skein import (Budget, BudgetExceeded, SkeinElement, canonical_key, evaluate_closed,
                    reduce, reduce_element, resolve_crossing, resolve_crossings)
from .clasps import add_clasp, add_double_clasp, expand_clasp, expand_double_clasp
from .oracle import gram_matrix, oracle_generator_matrix, oracle_word_matrix, pair
from .moves import reidemeister_catalogue
from .textfmt import format_diagram, parse_diagram

__all__ = [
    "DiagramError", "Strip", "Web", "compose",
    "Budget", "BudgetExceeded", "SkeinElement", "canonical_key", "evaluate_closed",
    "reduce", "reduce_element", "resolve_crossing", "resolve_crossings",
    "add_clasp", "add_double_clasp", "expand_clasp", "expand_double_clasp",
    "gram_matrix", "oracle_generator_matrix", "oracle_word_matrix", "pair",
    "reidemeister_catalogue", "format_diagram", "parse_diagram",
]


def clear_caches() -> None:
    """Forget memoised closed-web values, box expansions and oracle bases."""
    from . import clasps, oracle, skein

    skein._MEMO.clear()
    for fn in (clasps.clasp_web, clasps.double_clasp_web, clasps.white_vertex_web,
               oracle._reduced_basis, oracle.gram_matrix, oracle._reduced_flipped):
        fn.cache_clear()


__all__.append("clear_caches")
