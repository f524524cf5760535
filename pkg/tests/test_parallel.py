from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from moaprod import (
    MoaArray,
    builtin_pairs,
    execute_parallel,
    execute_sequential,
    partition_rows,
    plan_inner,
    plan_outer,
)
from conftest import random_array, random_inner_pair


class TestPartition:
    def test_disjoint_and_covering(self):
        for noproc in (0, 1, 2, 7, 16):
            for workers in range(1, 9):
                owned = partition_rows(noproc, workers)
                assert len(owned) == workers
                flat = sorted(i for rows in owned for i in rows)
                assert flat == list(range(noproc))

    def test_round_robin_assignment(self):
        owned = partition_rows(7, 3)
        assert [list(r) for r in owned] == [[0, 3, 6], [1, 4], [2, 5]]

    def test_zero_workers_rejected(self):
        with pytest.raises(ValueError):
            partition_rows(4, 0)


class TestExecuteParallel:
    def test_single_worker_identical(self, rng):
        a, b = random_inner_pair(rng)
        plan = plan_inner(a.shape, b.shape)
        seq = execute_sequential(plan, a, b)
        par = execute_parallel(plan, a, b, workers=1)
        np.testing.assert_array_equal(par.data, seq.data)

    def test_surplus_workers_idle(self):
        a = MoaArray((2, 3), range(6))
        b = MoaArray((3, 4), range(12))
        plan = plan_inner(a.shape, b.shape)
        assert plan.noproc == 2
        par = execute_parallel(plan, a, b, workers=4)
        np.testing.assert_array_equal(par.data,
                                      execute_sequential(plan, a, b).data)

    def test_matches_matmul_oracle_value(self):
        a = MoaArray((2, 3), [1, 2, 3, 4, 5, 6])
        b = MoaArray((3, 4), range(12))
        c = execute_parallel(plan_inner(a.shape, b.shape), a, b, workers=3)
        assert c.data.tolist() == [32, 38, 44, 50, 68, 83, 98, 113]

    def test_zero_workers_rejected(self):
        a = MoaArray((2,), [1.0, 2.0])
        with pytest.raises(ValueError):
            execute_parallel(plan_inner((2,), (2,)), a, a, workers=0)

    def test_bitwise_determinism_across_worker_counts(self, rng):
        pairs = list(builtin_pairs())
        for case in range(40):
            ops = pairs[case % len(pairs)]
            if case % 2:
                a, b = random_inner_pair(rng)
                plan = plan_inner(a.shape, b.shape)
            else:
                a = random_array(rng)
                b = random_array(rng)
                plan = plan_outer(a.shape, b.shape)
            seq = execute_sequential(plan, a, b, ops)
            for workers in range(1, 9):
                par = execute_parallel(plan, a, b, ops, workers)
                np.testing.assert_array_equal(par.data, seq.data)

    def test_empty_result_parallel(self):
        a = MoaArray((0, 3), [])
        b = MoaArray((3, 4), range(12))
        c = execute_parallel(plan_inner(a.shape, b.shape), a, b, workers=4)
        assert c.shape == (0, 4)

    def test_concurrent_invocations_share_operands(self, rng):
        # the executor itself must be reentrant across threads
        a, b = random_inner_pair(rng)
        plan = plan_inner(a.shape, b.shape)
        want = execute_sequential(plan, a, b)
        with ThreadPoolExecutor(max_workers=6) as pool:
            futures = [pool.submit(execute_parallel, plan, a, b,
                                   workers=1 + i % 4)
                       for i in range(12)]
            for f in futures:
                np.testing.assert_array_equal(f.result().data, want.data)
