# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled adaptive Gauss-Kronrod kernel; same algorithm as ``_quad_py``."""

from libc.math cimport cos, fabs, pow, fmax, fmin
from libc.stdlib cimport malloc, realloc, free

cdef double XGK[8]
cdef double WGK[8]
cdef double WG[4]
XGK[:] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
]
WGK[:] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
]
WG[:] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
]

cdef double EPMACH = 2.220446049250313e-16
cdef double UFLOW = 2.2250738585072014e-308


cdef inline double _f(int kind, int power, double freq, double u) nogil:
    cdef double d = 1.0 + u * u
    cdef double num = 1.0
    cdef int i
    if kind == 1:
        return cos(freq * u) / d
    for i in range(power):
        num *= u
    return num / d


cdef void _gk15(int kind, int power, double freq, double a, double b,
                double* result, double* abserr, double* absint) nogil:
    cdef double c = 0.5 * (a + b)
    cdef double h = 0.5 * (b - a)
    cdef double fc = _f(kind, power, freq, c)
    cdef double resk = fc * WGK[7]
    cdef double resg = fc * WG[3]
    cdef double resabs = fabs(resk)
    cdef double f1[7]
    cdef double f2[7]
    cdef double dx, y1, y2, reskh, resasc, err
    cdef int j
    for j in range(7):
        dx = h * XGK[j]
        y1 = _f(kind, power, freq, c - dx)
        y2 = _f(kind, power, freq, c + dx)
        f1[j] = y1
        f2[j] = y2
        resk += WGK[j] * (y1 + y2)
        resabs += WGK[j] * (fabs(y1) + fabs(y2))
        if j % 2 == 1:
            resg += WG[j // 2] * (y1 + y2)
    reskh = 0.5 * resk
    resasc = WGK[7] * fabs(fc - reskh)
    for j in range(7):
        resasc += WGK[j] * (fabs(f1[j] - reskh) + fabs(f2[j] - reskh))
    result[0] = resk * h
    resabs *= fabs(h)
    resasc *= fabs(h)
    err = fabs((resk - resg) * h)
    if resasc != 0.0 and err != 0.0:
        err = resasc * fmin(1.0, pow(200.0 * err / resasc, 1.5))
    if resabs > UFLOW / (50.0 * EPMACH):
        err = fmax(err, 50.0 * EPMACH * resabs)
    abserr[0] = err
    absint[0] = resabs


def gk15(int kind, int power, double freq, double a, double b):
    cdef double v, e, va
    _gk15(kind, power, freq, a, b, &v, &e, &va)
    return v, e, va


cdef struct Panel:
    double a
    double b
    double val
    double err
    double absval
    long serial


cdef inline bint _worse(Panel* x, Panel* y) nogil:
    # max-heap on err, ties broken by creation order (matches heapq on tuples)
    if x.err != y.err:
        return x.err > y.err
    return x.serial < y.serial


cdef void _sift_up(Panel* h, long i) nogil:
    cdef long p
    cdef Panel tmp
    while i > 0:
        p = (i - 1) // 2
        if _worse(&h[i], &h[p]):
            tmp = h[i]; h[i] = h[p]; h[p] = tmp
            i = p
        else:
            break


cdef void _sift_down(Panel* h, long n, long i) nogil:
    cdef long l, r, best
    cdef Panel tmp
    while True:
        l = 2 * i + 1
        r = l + 1
        best = i
        if l < n and _worse(&h[l], &h[best]):
            best = l
        if r < n and _worse(&h[r], &h[best]):
            best = r
        if best == i:
            break
        tmp = h[i]; h[i] = h[best]; h[best] = tmp
        i = best


def adaptive(int kind, int power, double freq, breaks, double abs_tol,
             double rel_tol, long max_panels):
    """Globally adaptive integration; returns (value, abserr, n_panels, converged)."""
    cdef long nb = len(breaks)
    cdef long cap = max(nb, 64) + 2
    cdef long n = 0
    cdef long i, serial
    cdef Panel* heap = <Panel*> malloc(cap * sizeof(Panel))
    cdef Panel* grown
    cdef Panel worst
    cdef double total_err = 0.0, total_abs = 0.0
    cdef double m, v1, e1, va1, v2, e2, va2
    cdef bint converged = True
    if heap == NULL:
        raise MemoryError()
    try:
        for i in range(nb - 1):
            heap[n].a = breaks[i]
            heap[n].b = breaks[i + 1]
            heap[n].serial = i
            _gk15(kind, power, freq, heap[n].a, heap[n].b,
                  &heap[n].val, &heap[n].err, &heap[n].absval)
            total_err += heap[n].err
            total_abs += heap[n].absval
            _sift_up(heap, n)
            n += 1
        serial = n
        with nogil:
            while total_err > fmax(abs_tol, rel_tol * total_abs):
                if n >= max_panels:
                    converged = False
                    break
                worst = heap[0]
                m = 0.5 * (worst.a + worst.b)
                if not (worst.a < m and m < worst.b):
                    converged = False
                    break
                if n + 1 >= cap:
                    cap *= 2
                    grown = <Panel*> realloc(heap, cap * sizeof(Panel))
                    if grown == NULL:
                        converged = False
                        break
                    heap = grown
                _gk15(kind, power, freq, worst.a, m, &v1, &e1, &va1)
                _gk15(kind, power, freq, m, worst.b, &v2, &e2, &va2)
                heap[0] = heap[n - 1]
                n -= 1
                _sift_down(heap, n, 0)
                heap[n].a = worst.a
                heap[n].b = m
                heap[n].val = v1
                heap[n].err = e1
                heap[n].absval = va1
                heap[n].serial = serial
                _sift_up(heap, n)
                n += 1
                heap[n].a = m
                heap[n].b = worst.b
                heap[n].val = v2
                heap[n].err = e2
                heap[n].absval = va2
                heap[n].serial = serial + 1
                _sift_up(heap, n)
                n += 1
                serial += 2
                total_err += e1 + e2 - worst.err
                total_abs += va1 + va2 - worst.absval
        vals = [heap[i].val for i in range(n)]
        errs = [heap[i].err for i in range(n)]
    finally:
        free(heap)
    from math import fsum
    return fsum(vals), fsum(errs), n, converged
