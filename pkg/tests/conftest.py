import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from signedekr.core import Params, SignedFamily, iter_V_pairs

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def signed_families(draw, n_max: int = 7, l: int = 1, max_size: int = 25):
    n = draw(st.integers(3, n_max))
    k = draw(st.integers(1, min(3, n - l)))
    p = Params(n, k, l)
    pool = list(iter_V_pairs(p))
    picks = draw(st.lists(st.sampled_from(pool), max_size=max_size, unique=True))
    return SignedFamily.from_pairs(p, picks)


def brute_vectors(p: Params):
    """Every {0, +1, -1} vector of length n with k ones and l minus ones."""
    for vec in itertools.product((0, 1, -1), repeat=p.n):
        if vec.count(1) == p.k and vec.count(-1) == p.l:
            yield vec


@pytest.fixture
def small_params():
    return [Params(n, k, l) for n in range(2, 7) for k in range(1, 4) for l in range(0, 2)
            if l <= k and n >= k + l]
