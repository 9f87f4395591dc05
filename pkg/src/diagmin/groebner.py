"""Buchberger completion, reduction and initial-ideal utilities for the
two-term polynomial class.

The class is closed under S-polynomials and reduction: every step replaces
one term by one term, so no intermediate can grow a third term.  Hot loops
run on the raw flat-tuple representation so the kernel (compiled or pure)
does the arithmetic.

Determinism, fixed here once and relied on by the golden tests:
  * reduction rewrites the leading term first and picks the divisor with
    the smallest basis index;
  * the pair queue is ordered by (lcm degree, lcm under the active order,
    index pair) and pairs with coprime leads are skipped.
"""

from __future__ import annotations

import heapq
from typing import Optional, Sequence

from . import kernel
from .errors import InputError
from .monomials import Monomial, MonomialOrder
from .polynomials import GeneratorSet, TwoTermPoly

# raw polynomial: (lead_pairs, trail_pairs | None)
_Raw = tuple[tuple[int, ...], Optional[tuple[int, ...]]]


def _to_raw(p: TwoTermPoly) -> _Raw:
    return (p.lead.pairs, None if p.trail is None else p.trail.pairs)


def _from_raw(raw: Optional[_Raw], n: int) -> TwoTermPoly:
    if raw is None:
        return TwoTermPoly.zero()
    lead, trail = raw
    return TwoTermPoly(Monomial(n, lead), None if trail is None else Monomial(n, trail))


def _spoly_raw(f: _Raw, g: _Raw, cmp) -> Optional[_Raw]:
    fl, ft = f
    gl, gt = g
    if ft is None and gt is None:
        return None
    lcm = kernel.mono_lcm(fl, gl)
    u = kernel.mono_mul(kernel.mono_div(lcm, gl), gt) if gt is not None else None
    v = kernel.mono_mul(kernel.mono_div(lcm, fl), ft) if ft is not None else None
    if u is None:
        return (v, None)
    if v is None:
        return (u, None)
    c = cmp(u, v)
    if c == 0:
        return None
    return (u, v) if c > 0 else (v, u)


def _nf_raw(p: Optional[_Raw], basis: Sequence[_Raw], cmp) -> Optional[_Raw]:
    if p is None:
        return None
    divides = kernel.mono_divides
    div = kernel.mono_div
    mul = kernel.mono_mul
    lead, trail = p
    while True:
        hit = None
        for g in basis:
            if divides(g[0], lead):
                hit = g
                break
        if hit is not None:
            gl, gt = hit
            if gt is None:
                if trail is None:
                    return None
                lead, trail = trail, None
                continue
            new = mul(div(lead, gl), gt)
            if trail is None:
                lead = new
                continue
            c = cmp(new, trail)
            if c == 0:
                return None
            lead, trail = (new, trail) if c > 0 else (trail, new)
            continue
        if trail is None:
            return (lead, None)
        hit = None
        for g in basis:
            if divides(g[0], trail):
                hit = g
                break
        if hit is None:
            return (lead, trail)
        gl, gt = hit
        if gt is None:
            trail = None
        else:
            trail = mul(div(trail, gl), gt)


def _check_same_setup(f: TwoTermPoly, g: TwoTermPoly) -> None:
    if f.is_zero or g.is_zero:
        raise InputError("S-polynomial of a zero polynomial is undefined")
    if f.n != g.n:
        raise InputError(f"grid size mismatch: {f.n} vs {g.n}")


def spoly(f: TwoTermPoly, g: TwoTermPoly, order: MonomialOrder) -> TwoTermPoly:
    """S-polynomial (lcm/lt f)*f - (lcm/lt g)*g, normalized; Zero for two monomials."""
    _check_same_setup(f, g)
    return _from_raw(_spoly_raw(_to_raw(f), _to_raw(g), order.raw_cmp()), f.n)


def normal_form(p: TwoTermPoly, basis: GeneratorSet) -> TwoTermPoly:
    """Fully reduce p against the basis (lead first, lowest-index divisor)."""
    if len(basis) == 0:
        raise InputError("normal form needs a nonempty basis")
    if p.is_zero:
        return p
    if p.n != basis.n:
        raise InputError(f"grid size mismatch: {p.n} vs {basis.n}")
    raw = _nf_raw(_to_raw(p), [_to_raw(g) for g in basis], basis.order.raw_cmp())
    return _from_raw(raw, basis.n)


def buchberger(gens: GeneratorSet) -> GeneratorSet:
    """Complete gens to a Groebner basis (normal pair selection, product
    criterion only)."""
    order, n = gens.order, gens.n
    cmp = order.raw_cmp()
    basis: list[_Raw] = [_to_raw(p) for p in gens]
    coprime = kernel.mono_coprime
    lcm = kernel.mono_lcm
    deg = kernel.mono_degree

    heap: list[tuple[int, tuple, int, int]] = []

    def push_pairs(j: int) -> None:
        gj = basis[j][0]
        for i in range(j):
            gi = basis[i][0]
            if coprime(gi, gj):
                continue
            m = lcm(gi, gj)
            heapq.heappush(heap, (deg(m), order.raw_key(m, n), i, j))

    for j in range(len(basis)):
        push_pairs(j)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        s = _spoly_raw(basis[i], basis[j], cmp)
        r = _nf_raw(s, basis, cmp)
        if r is not None:
            basis.append(r)
            push_pairs(len(basis) - 1)
    return GeneratorSet((_from_raw(p, n) for p in basis), order, n)


def reduce_basis(gb: GeneratorSet) -> GeneratorSet:
    """The reduced basis: minimal leads, fully reduced tails, canonical sort.

    Caller contract: gb is a Groebner basis (anything else is undefined).
    """
    order, n = gb.order, gb.n
    cmp = order.raw_cmp()
    full = [_to_raw(g) for g in gb]
    divides = kernel.mono_divides

    by_lead = sorted(full, key=lambda p: order.raw_key(p[0], n))
    kept: list[_Raw] = []
    for p in by_lead:
        if any(divides(k[0], p[0]) for k in kept):
            continue
        kept.append(p)

    reduced = []
    for lead, trail in kept:
        if trail is None:
            reduced.append((lead, None))
            continue
        nf = _nf_raw((trail, None), full, cmp)
        reduced.append((lead, None) if nf is None else (lead, nf[0]))
    return GeneratorSet((_from_raw(p, n) for p in reduced), order, n)


def is_reduced(gb: GeneratorSet) -> bool:
    """No lead divides another element's lead or any trail."""
    leads = gb.leads()
    for i, li in enumerate(leads):
        for j, lj in enumerate(leads):
            if i != j and li.divides(lj):
                return False
    for p in gb:
        if p.trail is not None and any(li.divides(p.trail) for li in leads):
            return False
    return True


def initial_ideal(gb: GeneratorSet) -> list[Monomial]:
    """Minimal monomial generators of the ideal of leading monomials."""
    return minimalize_monomials(gb.leads(), gb.order)


def minimalize_monomials(monos: Sequence[Monomial], order: MonomialOrder) -> list[Monomial]:
    unique = list(dict.fromkeys(monos))
    kept = [m for m in unique if not any(o != m and o.divides(m) for o in unique)]
    return order.sort(kept, reverse=True)


def is_squarefree(m: Monomial) -> bool:
    return m.is_squarefree


def monomial_ideal_height(mins: Sequence[Monomial]) -> int:
    """Height of a squarefree monomial ideal given its minimal generators:
    the smallest set of variables meeting every generator's support."""
    supports = []
    for m in mins:
        if not m.is_squarefree:
            raise InputError(f"non-squarefree generator {m.render()}")
        supports.append(m.support())
    for i, s in enumerate(supports):
        for j, t in enumerate(supports):
            if i != j and s <= t:
                raise InputError("generators are not divisibility-minimal")
    if not supports:
        return 0
    all_vars = set().union(*supports)
    if len(all_vars) == sum(len(s) for s in supports):
        return len(supports)  # pairwise disjoint supports
    return _min_cover([sorted(s) for s in supports])


def _disjoint_lower_bound(supports: list[list[tuple[int, int]]]) -> int:
    taken: set[tuple[int, int]] = set()
    count = 0
    for s in supports:
        if taken.isdisjoint(s):
            taken.update(s)
            count += 1
    return count


def _min_cover(supports: list[list[tuple[int, int]]]) -> int:
    supports = sorted(supports, key=lambda s: (len(s), s))
    best = len({v for s in supports for v in s})  # trivial cover

    def rec(uncovered: list[list[tuple[int, int]]], size: int) -> None:
        nonlocal best
        if not uncovered:
            if size < best:
                best = size
            return
        if size + _disjoint_lower_bound(uncovered) >= best:
            return
        for v in uncovered[0]:
            rec([s for s in uncovered if v not in s], size + 1)

    rec(supports, 0)
    return best
