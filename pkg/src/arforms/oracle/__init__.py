"""First-principles generators of category presentations."""

from .perfect import (
    PerfectComplex,
    dual_numbers_component,
    hom_complex_dim,
    hom_support_bound,
    stalk,
    x_chain,
)
from .uniserial import cosyzygy_dim, stable_hom_dim, uniserial_category

__all__ = [
    "PerfectComplex",
    "cosyzygy_dim",
    "dual_numbers_component",
    "hom_complex_dim",
    "hom_support_bound",
    "stable_hom_dim",
    "stalk",
    "uniserial_category",
    "x_chain",
]
