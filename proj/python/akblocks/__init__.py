"""Exact block combinatorics and verification for Ariki-Koike algebras.

The heavy lifting happens in the C++ extension ``akblocks._core``; this
package adds thin JSON-decoding wrappers around the report-producing
entry points.
"""

import json

from akblocks._core import (
    ParseError,
    PreconditionError,
    ResourceCapError,
    TheoremViolation,
    conjugate,
    conjugate_params,
    dominates,
    quantum_characteristic,
    selftest_quick,
    smallest_element_of_order,
    weight,
)
from akblocks import _core

__version__ = "0.1.0"

__all__ = [
    "ParseError",
    "PreconditionError",
    "ResourceCapError",
    "TheoremViolation",
    "blocks",
    "classify_weight_one",
    "conjugate",
    "conjugate_params",
    "count_standard_tableaux",
    "dominates",
    "quantum_characteristic",
    "search",
    "selftest_quick",
    "smallest_element_of_order",
    "verify_block",
    "weight",
]


def count_standard_tableaux(multipartition):
    """Number of standard tableaux of the given shape, as a python int."""
    return int(_core.count_standard_tableaux(multipartition))


def blocks(n, e, a):
    """All blocks of the r-partitions of n, grouped by residue content."""
    return json.loads(_core.blocks_json(n, e, list(a)))


def classify_weight_one(n, e, a, member):
    """Chain data of the weight-one block containing the given member."""
    return json.loads(_core.classify_weight_one_json(n, e, list(a), member))


def verify_block(p, q, a, n, content, cap=1000):
    """Full verification record of one weight-one block over F_p."""
    return json.loads(_core.verify_block_json(p, q, list(a), n, list(content), cap))


def search(r, n_min, n_max, e_values):
    """Weight-one blocks found in a parameter sweep."""
    return json.loads(_core.search_json(r, n_min, n_max, list(e_values)))
