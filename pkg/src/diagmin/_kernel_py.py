"""Pure-Python implementation of the hot-loop primitives.

The compiled twin (`diagmin._speedups`) exposes the same functions with the
same semantics; `diagmin.kernel` picks one at import time.  Everything here
works on plain tuples and ints so the two implementations stay drop-in
interchangeable.

Monomials are flat tuples ``(p0, e0, p1, e1, ...)`` of position/exponent
pairs with positions strictly ascending and exponents positive.  Positions
encode the grid variable x[r,c] as ``(r-1)*n + (c-1)``, so a smaller
position means a greater variable.
"""

IMPL_NAME = "python"


def mono_degree(a):
    """Total degree of a flat monomial tuple."""
    return sum(a[1::2])


def mono_mul(a, b):
    """Product of two flat monomial tuples."""
    out = []
    ia, ib = 0, 0
    la, lb = len(a), len(b)
    while ia < la and ib < lb:
        pa, pb = a[ia], b[ib]
        if pa == pb:
            out.append(pa)
            out.append(a[ia + 1] + b[ib + 1])
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
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def mono_divides(a, b):
    """True iff monomial a divides monomial b."""
    ib = 0
    lb = len(b)
    for ia in range(0, len(a), 2):
        pa, ea = a[ia], a[ia + 1]
        while ib < lb and b[ib] < pa:
            ib += 2
        if ib >= lb or b[ib] != pa or b[ib + 1] < ea:
            return False
        ib += 2
    return True


def mono_div(a, b):
    """Quotient a / b; b must divide a."""
    out = []
    ib = 0
    lb = len(b)
    for ia in range(0, len(a), 2):
        pa, ea = a[ia], a[ia + 1]
        if ib < lb and b[ib] == pa:
            ea -= b[ib + 1]
            ib += 2
            if ea < 0:
                raise ValueError("not divisible")
        if ea:
            out.append(pa)
            out.append(ea)
    if ib < lb:
        raise ValueError("not divisible")
    return tuple(out)


def mono_lcm(a, b):
    """Least common multiple of two flat monomial tuples."""
    out = []
    ia, ib = 0, 0
    la, lb = len(a), len(b)
    while ia < la and ib < lb:
        pa, pb = a[ia], b[ib]
        if pa == pb:
            out.append(pa)
            ea, eb = a[ia + 1], b[ib + 1]
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
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def mono_coprime(a, b):
    """True iff the two monomials share no variable."""
    ia, ib = 0, 0
    la, lb = len(a), len(b)
    while ia < la and ib < lb:
        pa, pb = a[ia], b[ib]
        if pa == pb:
            return False
        if pa < pb:
            ia += 2
        else:
            ib += 2
    return True


def cmp_lex(a, b):
    """Lexicographic comparison: at the smallest position where the
    exponents differ, the larger exponent wins.  Returns -1, 0 or 1."""
    ia, ib = 0, 0
    la, lb = len(a), len(b)
    while ia < la and ib < lb:
        pa, pb = a[ia], b[ib]
        if pa == pb:
            ea, eb = a[ia + 1], b[ib + 1]
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


def cmp_degrevlex(a, b):
    """Degree reverse lexicographic comparison: higher total degree wins;
    on ties, the smaller exponent at the largest differing position wins."""
    da = sum(a[1::2])
    db = sum(b[1::2])
    if da != db:
        return 1 if da > db else -1
    ia, ib = len(a) - 2, len(b) - 2
    while ia >= 0 and ib >= 0:
        pa, pb = a[ia], b[ib]
        if pa == pb:
            ea, eb = a[ia + 1], b[ib + 1]
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


def _eval_mono(idxs, digits, q):
    v = 1
    for ix in idxs:
        d = digits[ix]
        if d == 0:
            return 0
        v = v * d % q
    return v


def _vanishes(polys, digits, q):
    for lead, trail in polys:
        lv = _eval_mono(lead, digits, q)
        tv = _eval_mono(trail, digits, q) if trail is not None else 0
        if (lv - tv) % q:
            return False
    return True


def variety_compare(common, lhs, witnesses, nvars, q):
    """Compare two vanishing sets over (F_q)^nvars point by point.

    Each polynomial is ``(lead, trail)`` where lead/trail are tuples of
    variable indices repeated per exponent and trail may be None (single
    monomial).  A point belongs to the left set when every polynomial of
    ``common`` and of ``lhs`` vanishes, and to the right set when every
    polynomial of ``common`` and of at least one witness list vanishes.

    Returns (left count, right count, number of points in exactly one set).
    """
    digits = [0] * nvars
    lhs_count = 0
    rhs_count = 0
    mismatches = 0
    for _ in range(q**nvars):
        if _vanishes(common, digits, q):
            in_lhs = _vanishes(lhs, digits, q)
            in_rhs = False
            for w in witnesses:
                if _vanishes(w, digits, q):
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
            digits[i] += 1
            if digits[i] < q:
                break
            digits[i] = 0
            i += 1
    return lhs_count, rhs_count, mismatches


def canonical_bits(n, adj):
    """Minimal adjacency bit-string over all vertex relabelings, as an int.

    ``adj`` is a tuple of n neighbor bitmasks (0-indexed vertices).  Bits are
    laid out in colex pair order ((0,1),(0,2),(1,2),(0,3),...), earliest pair
    most significant, so assigning vertices one at a time fixes a prefix and
    branches that already exceed the best prefix can be cut.
    """
    if n <= 1:
        return 0
    total = n * (n - 1) // 2
    best = None

    def rec(assigned, used, prefix, bits):
        nonlocal best
        t = len(assigned)
        if best is not None and prefix > (best >> (total - bits)):
            return
        if t == n:
            if best is None or prefix < best:
                best = prefix
            return
        for v in range(n):
            if used >> v & 1:
                continue
            nb = 0
            av = adj[v]
            for u in assigned:
                nb = nb << 1 | (av >> u & 1)
            rec(assigned + (v,), used | 1 << v, prefix << t | nb, bits + t)

    rec((), 0, 0, 0)
    return best
