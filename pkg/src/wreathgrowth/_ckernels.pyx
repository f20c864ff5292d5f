# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; same contracts as ``_pykernels``.

Coefficients are arbitrary-precision Python ints, so arithmetic on them stays
at the object level.  Loop control, indexing and hook-length bookkeeping run
on C integers.
"""

from libc.stdlib cimport malloc, free


def mul_trunc(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n + 1)
    cdef Py_ssize_t lb = min(len(b), n + 1)
    cdef Py_ssize_t i, j, jmax
    cdef list out = [0] * (n + 1)
    cdef object ai, acc
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        jmax = min(lb, n + 1 - i)
        for j in range(jmax):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def expand_euler(list factors, Py_ssize_t n):
    cdef list c = [0] * (n + 1)
    cdef Py_ssize_t a, e, ae, step, i, r
    c[0] = 1
    for pair in factors:
        a = pair[0]
        e = pair[1]
        if e == 0:
            continue
        ae = -e if e < 0 else e
        step = a
        while step <= n:
            for r in range(ae):
                if e < 0:
                    for i in range(step, n + 1):
                        c[i] = c[i] + c[i - step]
                else:
                    i = n
                    while i >= step:
                        c[i] = c[i] - c[i - step]
                        i -= 1
            step += a
    return c


def log_derivative_recurrence(list w, Py_ssize_t n):
    cdef list a = [1]
    cdef Py_ssize_t k, j
    cdef object s, ak, rem
    for k in range(1, n + 1):
        s = 0
        for j in range(1, k + 1):
            s = s + w[j] * a[k - j]
        ak, rem = divmod(s, k)
        if rem:
            raise ArithmeticError(f"non-integral coefficient at degree {k}")
        a.append(ak)
    return a


def inverse_scaled(list s, Py_ssize_t n):
    cdef object s0 = s[0]
    cdef Py_ssize_t i, k
    cdef object p, acc
    if s0 == 0:
        raise ZeroDivisionError("constant term is zero")
    cdef list scaled = [0] * (n + 1)
    p = 1
    for i in range(1, n + 1):
        scaled[i] = s[i] * p if i < len(s) else 0
        p = p * s0
    cdef list u = [1]
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k + 1):
            acc = acc + scaled[i] * u[k - i]
        u.append(-acc)
    return u


cdef void _hooks(int *parts, int length, int *conj, int *out):
    cdef int i, j, pos = 0
    for j in range(parts[0]):
        conj[j] = 0
    for i in range(length):
        for j in range(parts[i]):
            conj[j] += 1
    for i in range(length):
        for j in range(parts[i]):
            out[pos] = parts[i] - j + conj[j] - i - 1
            pos += 1


def hook_rows(list parts):
    cdef int length = len(parts)
    if length == 0:
        return []
    cdef int weight = sum(parts)
    cdef int *p = <int *> malloc(length * sizeof(int))
    cdef int *conj = <int *> malloc(parts[0] * sizeof(int))
    cdef int *out = <int *> malloc(weight * sizeof(int))
    cdef int i, j, pos = 0
    try:
        for i in range(length):
            p[i] = parts[i]
        _hooks(p, length, conj, out)
        rows = []
        for i in range(length):
            rows.append([out[pos + j] for j in range(p[i])])
            pos += p[i]
        return rows
    finally:
        free(p)
        free(conj)
        free(out)


cdef bint _next_partition(int *a, int *length, int lo):
    cdef int i = length[0] - 1
    cdef int rem, v
    while i >= lo and a[i] == 1:
        i -= 1
    if i < lo:
        return False
    rem = length[0] - i
    v = a[i] - 1
    a[i] = v
    length[0] = i + 1
    while rem > v:
        a[length[0]] = v
        length[0] += 1
        rem -= v
    if rem:
        a[length[0]] = rem
        length[0] += 1
    return True


def hook_sum(int n, object p, object q, int largest):
    if n == 0:
        return 1
    if largest > n:
        return 0
    cdef object nfact = 1
    cdef int i, lo, rest, length, h, cells
    for i in range(2, n + 1):
        nfact = nfact * i
    cdef int *a = <int *> malloc((n + 1) * sizeof(int))
    cdef int *conj = <int *> malloc((n + 1) * sizeof(int))
    cdef int *hooks = <int *> malloc((n + 1) * sizeof(int))
    cdef object total = 0, num, hprod, f
    try:
        if largest > 0:
            a[0] = largest
            length = 1
            rest = n - largest
            while rest:
                a[length] = largest if rest > largest else rest
                rest -= a[length]
                length += 1
            lo = 1
        else:
            a[0] = n
            length = 1
            lo = 0
        while True:
            _hooks(a, length, conj, hooks)
            num = 1
            hprod = 1
            for i in range(n):
                h = hooks[i]
                num = num * (q * (h * h) - p)
                hprod = hprod * h
            f = nfact // hprod
            total = total + num * f * f
            if not _next_partition(a, &length, lo):
                break
        return total
    finally:
        free(a)
        free(conj)
        free(hooks)
