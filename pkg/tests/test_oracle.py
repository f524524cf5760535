import ast
import inspect
import math

import pytest

import moaprod.oracle
from moaprod import (
    GemmParams,
    MoaArray,
    RankError,
    ShapeError,
    gemm_baseline,
    op_pair,
    oracle_inner,
    oracle_outer,
)
from conftest import assert_allclose_rel, random_inner_pair


class TestOracleInner:
    def test_matmul_hand_values(self):
        a = MoaArray((2, 3), [1, 2, 3, 4, 5, 6])
        b = MoaArray((3, 4), range(12))
        c = oracle_inner(a, b)
        assert c.shape == (2, 4)
        # row 0: 1*[0,1,2,3] + 2*[4,5,6,7] + 3*[8,9,10,11]
        assert c.data.tolist() == [32, 38, 44, 50, 68, 83, 98, 113]

    def test_dot_product(self):
        a = MoaArray((3,), [1, 2, 3])
        b = MoaArray((3,), [4, 5, 6])
        c = oracle_inner(a, b)
        assert c.shape == ()
        assert c.item() == 32.0

    def test_empty_contraction_fills_identity(self):
        a = MoaArray((2, 0), [])
        b = MoaArray((0, 3), [])
        for reduce, identity in [("add", 0.0), ("multiply", 1.0),
                                 ("min", math.inf), ("max", -math.inf)]:
            c = oracle_inner(a, b, op_pair("multiply", reduce))
            assert c.shape == (2, 3)
            assert c.data.tolist() == [identity] * 6

    def test_singleton(self):
        a = MoaArray((1, 1), [3.0])
        b = MoaArray((1, 1), [5.0])
        c = oracle_inner(a, b)
        assert c.data.tolist() == [15.0]

    def test_extent_mismatch(self):
        with pytest.raises(ShapeError):
            oracle_inner(MoaArray((2,), [1, 2]), MoaArray((3,), [1, 2, 3]))

    def test_rank0_rejected(self):
        with pytest.raises(RankError):
            oracle_inner(MoaArray.from_values(1.0), MoaArray((1,), [1.0]))

    def test_matches_gemm_third_path(self, rng):
        # independent route: the column-major baseline loop
        for _ in range(10):
            m, k, n = (int(v) for v in rng.integers(1, 8, size=3))
            a = MoaArray((m, k), rng.random(m * k))
            b = MoaArray((k, n), rng.random(k * n))
            zeros = MoaArray((m, n), [0.0] * (m * n))
            via_gemm = gemm_baseline(GemmParams(1.0, 0.0, m, n, k), a, b, zeros)
            assert_allclose_rel(oracle_inner(a, b), via_gemm, rtol=1e-12)


class TestOracleOuter:
    def test_enumerated_pairs(self):
        a = MoaArray((2,), [1, 2])
        b = MoaArray((2,), [10, 20])
        c = oracle_outer(a, b)
        assert c.shape == (2, 2)
        assert c.data.tolist() == [10, 20, 20, 40]

    def test_subtract_self_diagonal_zero(self, rng):
        a = MoaArray((3, 2), rng.random(6))
        c = oracle_outer(a, a, op_pair("subtract", "add"))
        for i in range(3):
            for j in range(2):
                flat = ((i * 2 + j) * 6) + (i * 2 + j)
                assert c.data[flat] == 0.0

    def test_scalar_scalar(self):
        c = oracle_outer(MoaArray.from_values(3.0), MoaArray.from_values(4.0))
        assert c.shape == ()
        assert c.item() == 12.0

    def test_shape_concatenation(self, rng):
        a, b = random_inner_pair(rng)
        assert oracle_outer(a, b).shape == a.shape + b.shape


def test_oracle_module_never_touches_kernel():
    tree = ast.parse(inspect.getsource(moaprod.oracle))
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.Import):
            imported.update(alias.name for alias in node.names)
        elif isinstance(node, ast.ImportFrom):
            imported.add(node.module or "")
            imported.update(alias.name for alias in node.names)
    assert not any("kernel" in name for name in imported), imported
