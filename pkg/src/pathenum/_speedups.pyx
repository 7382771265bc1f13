# cython: language_level=3
"""Compiled kernels for dense integer coefficient vectors.

Same contract as pathenum._kernels_py; coefficients stay Python ints so
arithmetic remains exact, the win comes from C-level loop and list handling.
"""

BACKEND = "c"


def vnorm(c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return list(c[:n])


def vadd(a, b):
    cdef Py_ssize_t i, nb
    if len(a) < len(b):
        a, b = b, a
    cdef list res = list(a)
    nb = len(b)
    for i in range(nb):
        res[i] = res[i] + b[i]
    return vnorm(res)


def vsub(a, b):
    cdef Py_ssize_t i, nb = len(b)
    cdef list res = list(a)
    if nb > len(res):
        res.extend([0] * (nb - len(res)))
    for i in range(nb):
        res[i] = res[i] - b[i]
    return vnorm(res)


def vneg(a):
    return [-x for x in a]


def vmul(a, b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef list res = [0] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            res[i + j] = res[i + j] + ai * b[j]
    return res


def vscale(a, k):
    if not k:
        return []
    return [k * x for x in a]


def veval(a, x):
    cdef Py_ssize_t i
    cdef object acc = 0
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc


def vdivexact(a, b):
    cdef Py_ssize_t i, k, nb = len(b), nq
    if nb == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if len(a) == 0:
        return []
    if len(a) < nb:
        return None
    cdef list rem = list(a)
    cdef object lead = b[nb - 1]
    nq = len(a) - nb + 1
    cdef list q = [0] * nq
    cdef object top, qk, r
    for k in range(nq - 1, -1, -1):
        top = rem[k + nb - 1]
        if not top:
            continue
        qk, r = divmod(top, lead)
        if r:
            return None
        q[k] = qk
        for i in range(nb):
            rem[k + i] = rem[k + i] - qk * b[i]
    for i in range(len(rem)):
        if rem[i]:
            return None
    return q


def vdivexact_int(a, k):
    cdef object q, r, x
    if k == 0:
        raise ZeroDivisionError("division by zero")
    cdef list out = []
    for x in a:
        q, r = divmod(x, k)
        if r:
            return None
        out.append(q)
    return out
