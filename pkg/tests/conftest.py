import numpy as np
import pytest

from moaprod import MoaArray


def random_array(rng, rank=None, max_extent=5, min_extent=1):
    """Random-shape array with values in [-1, 2) (signs and zeros included)."""
    if rank is None:
        rank = int(rng.integers(0, 5))
    shape = tuple(int(e) for e in rng.integers(min_extent, max_extent + 1,
                                               size=rank))
    data = rng.random(int(np.prod(shape, dtype=np.int64))) * 3.0 - 1.0
    return MoaArray(shape, data)


def random_inner_pair(rng, max_rank=4, max_extent=5):
    """Operand pair with matching contraction extents, ranks 1..max_rank."""
    ra = int(rng.integers(1, max_rank + 1))
    rb = int(rng.integers(1, max_rank + 1))
    shared = int(rng.integers(1, max_extent + 1))
    sa = tuple(int(e) for e in rng.integers(1, max_extent + 1, size=ra - 1)) + (shared,)
    sb = (shared,) + tuple(int(e) for e in rng.integers(1, max_extent + 1,
                                                        size=rb - 1))
    a = MoaArray(sa, rng.random(int(np.prod(sa, dtype=np.int64))) * 3.0 - 1.0)
    b = MoaArray(sb, rng.random(int(np.prod(sb, dtype=np.int64))) * 3.0 - 1.0)
    return a, b


def assert_allclose_rel(actual: MoaArray, expected: MoaArray, rtol=1e-12,
                        exact=False):
    assert actual.shape == expected.shape
    if exact:
        np.testing.assert_array_equal(actual.data, expected.data)
    else:
        np.testing.assert_allclose(actual.data, expected.data, rtol=rtol,
                                   atol=0.0, equal_nan=True)


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
