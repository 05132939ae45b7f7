from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from arforms.laurent import LaurentPoly
from arforms.oracle import dual_numbers_component, uniserial_category

DATA = Path(__file__).resolve().parent.parent / "data"

# oracle builds are cached on first use, which would trip the per-example deadline
settings.register_profile("arforms", deadline=None)
settings.load_profile("arforms")


@lru_cache(maxsize=None)
def uniserial(n):
    return uniserial_category(n)


@lru_cache(maxsize=None)
def dual_numbers(depth):
    return dual_numbers_component(depth)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


def laurent_polys(max_terms=6, lo=-6, hi=6, coeff=20):
    return st.dictionaries(
        st.integers(lo, hi), st.integers(-coeff, coeff), max_size=max_terms
    ).map(LaurentPoly)


def nonzero_laurent(**kw):
    return laurent_polys(**kw).filter(bool)


def palindromic_rims(max_halfwidth=4, max_coeff=5):
    """Rim forms a0 + sum a_i (t^i + t^-i), a0 >= 2, support within +-halfwidth."""
    return st.tuples(
        st.integers(2, max_coeff),
        st.lists(st.integers(0, max_coeff), min_size=0, max_size=max_halfwidth),
    ).map(
        lambda v: LaurentPoly(
            {0: v[0], **{i + 1: a for i, a in enumerate(v[1])}, **{-(i + 1): a for i, a in enumerate(v[1])}}
        )
    )
