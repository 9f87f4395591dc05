# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of diagmin._kernel_py: identical functions and semantics,
with the loop bodies in C.  See that module for the data formats."""

from cpython cimport array
import array

IMPL_NAME = "c"


def mono_degree(tuple a):
    cdef Py_ssize_t i, la = len(a)
    cdef long d = 0
    for i in range(1, la, 2):
        d += <long>a[i]
    return d


def mono_mul(tuple a, tuple b):
    cdef Py_ssize_t ia = 0, ib = 0, la = len(a), lb = len(b)
    cdef long pa, pb
    cdef list out = []
    while ia < la and ib < lb:
        pa = a[ia]
        pb = b[ib]
        if pa == pb:
            out.append(pa)
            out.append(<long>a[ia + 1] + <long>b[ib + 1])
            ia += 2
            ib += 2
        elif pa < pb:
            out.append(pa)
            out.append(a[ia + 1])
            ia += 2
        else:
            out.append(pb)
            out.append(b[ib + 1])
            ib += 2
    while ia < la:
        out.append(a[ia])
        out.append(a[ia + 1])
        ia += 2
    while ib < lb:
        out.append(b[ib])
        out.append(b[ib + 1])
        ib += 2
    return tuple(out)


def mono_divides(tuple a, tuple b):
    cdef Py_ssize_t ia, ib = 0, la = len(a), lb = len(b)
    cdef long pa, ea
    for ia in range(0, la, 2):
        pa = a[ia]
        ea = a[ia + 1]
        while ib < lb and <long>b[ib] < pa:
            ib += 2
        if ib >= lb or <long>b[ib] != pa or <long>b[ib + 1] < ea:
            return False
        ib += 2
    return True


def mono_div(tuple a, tuple b):
    cdef Py_ssize_t ia, ib = 0, la = len(a), lb = len(b)
    cdef long pa, ea
    cdef list out = []
    for ia in range(0, la, 2):
        pa = a[ia]
        ea = a[ia + 1]
        if ib < lb and <long>b[ib] == pa:
            ea -= <long>b[ib + 1]
            ib += 2
            if ea < 0:
                raise ValueError("not divisible")
        if ea:
            out.append(pa)
            out.append(ea)
    if ib < lb:
        raise ValueError("not divisible")
    return tuple(out)


def mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t ia = 0, ib = 0, la = len(a), lb = len(b)
    cdef long pa, pb, ea, eb
    cdef list out = []
    while ia < la and ib < lb:
        pa = a[ia]
        pb = b[ib]
        if pa == pb:
            ea = a[ia + 1]
            eb = b[ib + 1]
            out.append(pa)
            out.append(ea if ea >= eb else eb)
            ia += 2
            ib += 2
        elif pa < pb:
            out.append(pa)
            out.append(a[ia + 1])
            ia += 2
        else:
            out.append(pb)
            out.append(b[ib + 1])
            ib += 2
    while ia < la:
        out.append(a[ia])
        out.append(a[ia + 1])
        ia += 2
    while ib < lb:
        out.append(b[ib])
        out.append(b[ib + 1])
        ib += 2
    return tuple(out)


def mono_coprime(tuple a, tuple b):
    cdef Py_ssize_t ia = 0, ib = 0, la = len(a), lb = len(b)
    cdef long pa, pb
    while ia < la and ib < lb:
        pa = a[ia]
        pb = b[ib]
        if pa == pb:
            return False
        if pa < pb:
            ia += 2
        else:
            ib += 2
    return True


def cmp_lex(tuple a, tuple b):
    cdef Py_ssize_t ia = 0, ib = 0, la = len(a), lb = len(b)
    cdef long pa, pb, ea, eb
    while ia < la and ib < lb:
        pa = a[ia]
        pb = b[ib]
        if pa == pb:
            ea = a[ia + 1]
            eb = b[ib + 1]
            if ea != eb:
                return 1 if ea > eb else -1
            ia += 2
            ib += 2
        elif pa < pb:
            return 1
        else:
            return -1
    if ia < la:
        return 1
    if ib < lb:
        return -1
    return 0


def cmp_degrevlex(tuple a, tuple b):
    cdef Py_ssize_t i, ia, ib, la = len(a), lb = len(b)
    cdef long da = 0, db = 0, pa, pb, ea, eb
    for i in range(1, la, 2):
        da += <long>a[i]
    for i in range(1, lb, 2):
        db += <long>b[i]
    if da != db:
        return 1 if da > db else -1
    ia = la - 2
    ib = lb - 2
    while ia >= 0 and ib >= 0:
        pa = a[ia]
        pb = b[ib]
        if pa == pb:
            ea = a[ia + 1]
            eb = b[ib + 1]
            if ea != eb:
                return 1 if ea < eb else -1
            ia -= 2
            ib -= 2
        elif pa > pb:
            return -1
        else:
            return 1
    if ia >= 0:
        return -1
    if ib >= 0:
        return 1
    return 0


cdef inline int _eval(int[:] F, int a, int b, int[:] dg, int q):
    cdef int v = 1, k, d
    for k in range(a, b):
        d = dg[F[k]]
        if d == 0:
            return 0
        v = v * d % q
    return v


cdef inline bint _ideal_vanishes(int[:] F, int[:] D, int p0, int p1, int[:] dg, int q):
    cdef int p, lv, tv
    for p in range(p0, p1):
        lv = _eval(F, D[4 * p], D[4 * p + 1], dg, q)
        if D[4 * p + 2] < 0:
            tv = 0
        else:
            tv = _eval(F, D[4 * p + 2], D[4 * p + 3], dg, q)
        if lv != tv:
            return False
    return True


def variety_compare(list common, list lhs, list witnesses, int nvars, int q):
    """See _kernel_py.variety_compare; this version flattens the polynomials
    into C arrays and walks the q^nvars points with an odometer."""
    cdef list ideals = [common, lhs]
    cdef list desc = []
    cdef list flat = []
    cdef list istart = [0]
    cdef int ls, le, ts, te
    for w in witnesses:
        ideals.append(w)
    for ideal in ideals:
        for lead, trail in ideal:
            ls = len(flat)
            flat.extend(lead)
            le = len(flat)
            if trail is None:
                ts = -1
                te = -1
            else:
                ts = len(flat)
                flat.extend(trail)
                te = len(flat)
            desc.append(ls)
            desc.append(le)
            desc.append(ts)
            desc.append(te)
        istart.append(len(desc) // 4)

    cdef array.array flat_a = array.array("i", flat if flat else [0])
    cdef array.array desc_a = array.array("i", desc if desc else [0])
    cdef array.array istart_a = array.array("i", istart)
    cdef array.array dg_a = array.array("i", [0] * (nvars if nvars else 1))
    cdef int[:] F = flat_a
    cdef int[:] D = desc_a
    cdef int[:] S = istart_a
    cdef int[:] dg = dg_a

    cdef int n_wit = len(witnesses)
    cdef long total = 1, step, lhs_count = 0, rhs_count = 0, mismatches = 0
    cdef int t, i, wi
    cdef bint in_lhs, in_rhs
    for t in range(nvars):
        total *= q
    for step in range(total):
        if _ideal_vanishes(F, D, S[0], S[1], dg, q):
            in_lhs = _ideal_vanishes(F, D, S[1], S[2], dg, q)
            in_rhs = False
            for wi in range(n_wit):
                if _ideal_vanishes(F, D, S[2 + wi], S[3 + wi], dg, q):
                    in_rhs = True
                    break
            if in_lhs:
                lhs_count += 1
            if in_rhs:
                rhs_count += 1
            if in_lhs != in_rhs:
                mismatches += 1
        i = 0
        while i < nvars:
            dg[i] += 1
            if dg[i] < q:
                break
            dg[i] = 0
            i += 1
    return lhs_count, rhs_count, mismatches


cdef unsigned int _SENTINEL = 0xFFFFFFFFu


cdef unsigned int _canon_rec(int n, unsigned int* adjm, int* assigned, int t,
                             unsigned int used, unsigned int prefix, int bits,
                             int total, unsigned int best):
    cdef int v, u
    cdef unsigned int nb
    if best != _SENTINEL and prefix > (best >> (total - bits)):
        return best
    if t == n:
        return prefix if prefix < best else best
    for v in range(n):
        if used >> v & 1u:
            continue
        nb = 0u
        for u in range(t):
            nb = (nb << 1) | ((adjm[v] >> assigned[u]) & 1u)
        assigned[t] = v
        best = _canon_rec(n, adjm, assigned, t + 1, used | (1u << v),
                          (prefix << t) | nb, bits + t, total, best)
    return best


def canonical_bits(int n, tuple adj):
    """See _kernel_py.canonical_bits (colex layout, prefix-pruned search)."""
    if n <= 1:
        return 0
    cdef unsigned int adjm[8]
    cdef int assigned[8]
    cdef int i
    if n > 8:
        raise ValueError("canonical_bits supports at most 8 vertices")
    for i in range(n):
        adjm[i] = adj[i]
    return _canon_rec(n, adjm, assigned, 0, 0u, 0u, 0, n * (n - 1) // 2, _SENTINEL)
