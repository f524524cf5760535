# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; the default backend when built.

Loop nests and arithmetic mirror moaprod._purekernel one operation at a
time (the extension is compiled with -ffp-contract=off), so results are
bit-identical to the pure-Python backend.  Operation codes must stay in
sync with moaprod.ops.COMBINE_OPS / REDUCE_OPS.  Both entry points
release the GIL, so fork-join workers run truly in parallel.
"""

cdef inline double _combine(int code, double x, double y) noexcept nogil:
    if code == 0:
        return x + y
    elif code == 1:
        return x - y
    elif code == 2:
        return x * y
    elif code == 3:
        return x / y
    elif code == 4:
        return x if x < y else y
    else:
        return x if x > y else y


cdef inline double _reduce(int code, double x, double y) noexcept nogil:
    if code == 0:
        return x + y
    elif code == 1:
        return x * y
    elif code == 2:
        return x if x < y else y
    else:
        return x if x > y else y


cdef void _rows_mul_add(double[::1] res, const double[::1] a, const double[::1] b,
                        Py_ssize_t noproc, Py_ssize_t rowsinred,
                        Py_ssize_t elsinop, Py_ssize_t lstride,
                        Py_ssize_t rstride, Py_ssize_t restride,
                        Py_ssize_t start, Py_ssize_t step) noexcept nogil:
    cdef Py_ssize_t i, l, j, ibase, lbase
    cdef double av
    i = start
    while i < noproc:
        ibase = i * restride
        for l in range(rowsinred):
            av = a[l + i * lstride]
            lbase = l * rstride
            for j in range(elsinop):
                res[ibase + j] = res[ibase + j] + av * b[lbase + j]
        i += step


cdef void _rows_generic(double[::1] res, const double[::1] a, const double[::1] b,
                        Py_ssize_t noproc, Py_ssize_t rowsinred,
                        Py_ssize_t elsinop, Py_ssize_t lstride,
                        Py_ssize_t rstride, Py_ssize_t restride,
                        int combine_code, int reduce_code,
                        Py_ssize_t start, Py_ssize_t step) noexcept nogil:
    cdef Py_ssize_t i, l, j, ibase, lbase
    cdef double av
    i = start
    while i < noproc:
        ibase = i * restride
        for l in range(rowsinred):
            av = a[l + i * lstride]
            lbase = l * rstride
            for j in range(elsinop):
                res[ibase + j] = _reduce(reduce_code, res[ibase + j],
                                         _combine(combine_code, av, b[lbase + j]))
        i += step


def product_rows(double[::1] res, const double[::1] a, const double[::1] b,
                 Py_ssize_t noproc, Py_ssize_t rowsinred, Py_ssize_t elsinop,
                 Py_ssize_t lstride, Py_ssize_t rstride, Py_ssize_t restride,
                 int combine_code, int reduce_code,
                 Py_ssize_t start, Py_ssize_t step):
    """Accumulate result rows start, start+step, ... of the unified product."""
    with nogil:
        if combine_code == 2 and reduce_code == 0:
            _rows_mul_add(res, a, b, noproc, rowsinred, elsinop,
                          lstride, rstride, restride, start, step)
        else:
            _rows_generic(res, a, b, noproc, rowsinred, elsinop,
                          lstride, rstride, restride,
                          combine_code, reduce_code, start, step)


def gemm_cols(double[::1] c, const double[::1] a, const double[::1] b,
              double alpha, double beta,
              Py_ssize_t m, Py_ssize_t n, Py_ssize_t k,
              Py_ssize_t start, Py_ssize_t step):
    """Update result columns start, start+step, ... of C = alpha*A*B + beta*C.

    All three buffers are flat column-major.
    """
    cdef Py_ssize_t i, j, l, jbase, lbase
    cdef double blj, temp
    with nogil:
        j = start
        while j < n:
            jbase = j * m
            if beta == 0.0:
                for i in range(m):
                    c[jbase + i] = 0.0
            elif beta != 1.0:
                for i in range(m):
                    c[jbase + i] = beta * c[jbase + i]
            for l in range(k):
                blj = b[l + j * k]
                if blj != 0.0:
                    temp = alpha * blj
                    lbase = l * m
                    for i in range(m):
                        c[jbase + i] = c[jbase + i] + temp * a[lbase + i]
            j += step
