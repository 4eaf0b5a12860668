"""Groebner bases for the ideals I_n = (g_{n-2}, g_{n-1}, g_n).

Two independent constructions are kept side by side.  closed_form_basis
builds, for n >= 7, the known basis

    F_n = {f_0, ..., f_{t-1}},   f_i = w3^(alpha_i*s_{i-1}) * g_{n-2+2^i-s_i},

where 2^t-1 <= n < 2^{t+1}-1 and alpha/s come from the binary digits of
n - 2^t + 1.  buchberger computes a basis from arbitrary generators; it is
the fallback for n = 6 and the cross-check oracle for the closed form
(after reduce_basis both must agree, since the reduced basis is unique).

Everything uses the one fixed monomial order of this package: lex with
w2 > w3.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gseries import g_recurrence
from .poly import Monomial, Poly
from .report import Check


@dataclass(frozen=True)
class BinaryProfile:
    """The digit data (t, alpha, s, l) attached to n.

    alpha holds the binary digits of n - 2^t + 1, s the partial sums
    s_i = sum of alpha_j*2^j for j <= i (with s_{-1} = 0 by convention),
    and l_i = 2^(t-1-i) + sum of alpha_j*2^(j-i-1) for j > i, minus 1.
    """

    n: int
    t: int
    alpha: tuple
    s: tuple
    l: tuple

    def s_prev(self, i: int) -> int:
        return self.s[i - 1] if i > 0 else 0


def binary_profile(n: int) -> BinaryProfile:
    if n < 7:
        raise ValueError("binary profile backs the closed form, stated for n >= 7")
    t = (n + 1).bit_length() - 1
    m = n - (1 << t) + 1
    alpha = tuple((m >> j) & 1 for j in range(t))
    s = tuple(m & ((2 << i) - 1) for i in range(t))
    l = tuple((1 << (t - 1 - i)) + (m >> (i + 1)) - 1 for i in range(t))
    assert sum(a << j for j, a in enumerate(alpha)) == m
    assert s[t - 1] == m and all(x <= y for x, y in zip(s, s[1:]))
    assert all((n + 1 - s[i]) // 2 - (1 << i) == l[i] << i for i in range(t))
    return BinaryProfile(n, t, alpha, s, l)


class GroebnerBasis:
    """An ordered list of basis polynomials with cached leading monomials."""

    __slots__ = ("n", "polys", "lms")

    def __init__(self, polys: Iterable[Poly], n: int | None = None):
        ps = tuple(p for p in polys if p)
        if not ps:
            raise ValueError("empty Groebner basis")
        object.__setattr__(self, "polys", ps)
        object.__setattr__(self, "lms", tuple(p.leading_monomial() for p in ps))
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("GroebnerBasis is immutable")

    def __len__(self) -> int:
        return len(self.polys)

    def __repr__(self) -> str:
        tag = f"I_{self.n}" if self.n is not None else "ideal"
        return f"GroebnerBasis({tag}, {len(self.polys)} polynomials)"


def closed_form_basis(n: int) -> GroebnerBasis:
    """F_n for n >= 7, with every leading monomial checked against

    LM(f_i) = w2^(2^i*l_i) * w3^(alpha_i*s_{i-1}+2^i-1).
    """
    prof = binary_profile(n)
    polys = []
    for i in range(prof.t):
        e3 = prof.alpha[i] * prof.s_prev(i)
        g = g_recurrence(n - 2 + (1 << i) - prof.s[i])
        f = Poly._raw(frozenset((b, c + e3) for b, c in g.terms)) if e3 else g
        assert f.homogeneous_degree() is not None
        assert f.leading_monomial() == (prof.l[i] << i, e3 + (1 << i) - 1)
        polys.append(f)
    gb = GroebnerBasis(polys, n=n)
    # the staircase must close off both axes: a pure w2 power and a pure w3 power
    assert gb.lms[0][1] == 0 and gb.lms[-1][0] == 0
    return gb


def normal_form(p: Poly, gb: GroebnerBasis) -> Poly:
    """Remainder of p under division by gb.

    Deterministic: always rewrites the lex-greatest monomial still present,
    using the lowest-index basis element whose LM divides it.  No monomial
    of the result is divisible by any LM of gb.
    """
    lms = gb.lms
    polys = gb.polys
    present = set(p.terms)
    heap = [(-b, -c) for b, c in present]
    heapq.heapify(heap)
    remainder = set()
    while heap:
        nb, nc = heapq.heappop(heap)
        m = (-nb, -nc)
        if m not in present:
            continue  # stale entry, already toggled out
        present.discard(m)
        for lm, f in zip(lms, polys):
            if lm[0] <= m[0] and lm[1] <= m[1]:
                db, dc = m[0] - lm[0], m[1] - lm[1]
                for b, c in f.terms:
                    mm = (b + db, c + dc)
                    if mm == m:
                        continue
                    if mm in present:
                        present.discard(mm)
                    else:
                        present.add(mm)
                        heapq.heappush(heap, (-mm[0], -mm[1]))
                break
        else:
            remainder.add(m)
    return Poly._raw(frozenset(remainder))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return (max(a[0], b[0]), max(a[1], b[1]))


def _shift(p: Poly, db: int, dc: int) -> Poly:
    return Poly._raw(frozenset((b + db, c + dc) for b, c in p.terms))


def _spoly(f: Poly, g: Poly) -> Poly:
    mf, mg = f.leading_monomial(), g.leading_monomial()
    l = _lcm(mf, mg)
    return _shift(f, l[0] - mf[0], l[1] - mf[1]) + _shift(g, l[0] - mg[0], l[1] - mg[1])


def buchberger(generators: Sequence[Poly], n: int | None = None) -> GroebnerBasis:
    """Textbook Buchberger with the product criterion, normal pair order
    (S-pairs by degree of the lcm, ties by lex)."""
    basis = [p for p in generators if p]
    if not basis:
        raise ValueError("all generators are zero")
    pairs: list = []

    def push_pairs(j: int):
        mj = basis[j].leading_monomial()
        for i in range(j):
            mi = basis[i].leading_monomial()
            if mi[0] + mj[0] == max(mi[0], mj[0]) and mi[1] + mj[1] == max(mi[1], mj[1]):
                continue  # coprime LMs: S-poly reduces to zero
            l = _lcm(mi, mj)
            heapq.heappush(pairs, (2 * l[0] + 3 * l[1], l, i, j))

    for j in range(len(basis)):
        push_pairs(j)
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        r = normal_form(_spoly(basis[i], basis[j]), GroebnerBasis(basis))
        if r:
            basis.append(r)
            push_pairs(len(basis) - 1)
    return GroebnerBasis(basis, n=n)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced basis of the same ideal: minimal, tails in normal
    form, sorted by decreasing leading monomial."""
    by_lm = sorted(set(gb.polys), key=Poly.leading_monomial)
    minimal: list[Poly] = []
    kept_lms: list[Monomial] = []
    for p in by_lm:
        lm = p.leading_monomial()
        if not any(k[0] <= lm[0] and k[1] <= lm[1] for k in kept_lms):
            minimal.append(p)
            kept_lms.append(lm)
    # autoreduce tails; LMs are pairwise non-divisible so one pass settles
    for i in range(len(minimal)):
        others = minimal[:i] + minimal[i + 1 :]
        if others:
            minimal[i] = normal_form(minimal[i], GroebnerBasis(others))
    minimal.sort(key=Poly.leading_monomial, reverse=True)
    return GroebnerBasis(minimal, n=gb.n)


_basis_cache: dict[int, GroebnerBasis] = {}


def basis_for(n: int) -> GroebnerBasis:
    """Shared per-n basis: the closed form for n >= 7, Buchberger below."""
    gb = _basis_cache.get(n)
    if gb is None:
        if n >= 7:
            gb = closed_form_basis(n)
        elif n >= 2:
            gens = [g_recurrence(n - 2), g_recurrence(n - 1), g_recurrence(n)]
            gb = reduce_basis(buchberger(gens, n=n))
        else:
            raise ValueError("ideal index must be at least 2")
        _basis_cache[n] = gb
    return gb


def ideal_member(p: Poly, n: int) -> bool:
    """p in I_n, decided by reduction to zero."""
    return not normal_form(p, basis_for(n))


def w3_ideal_member(p: Poly, n: int) -> bool:
    """p in w3*I_n: w3 divides every term and the quotient lies in I_n."""
    if any(c == 0 for _, c in p.terms):
        return False
    return ideal_member(Poly._raw(frozenset((b, c - 1) for b, c in p.terms)), n)


def verify_membership_lemmas(t: int) -> list[Check]:
    """The four ideal-membership statements anchoring the upper bounds.

    For t >= 4:
      (m1) g_{3*2^(t-1)} + w2^(3*2^(t-2)) + sum_{k=1}^{t-3}
           w2^(3*2^(k-1))*w3^(2^(t-1)-2^k)  lies in  w3*I_{2^t+2^(t-2)+2^(t-4)}
      (c1) w2^(3*2^(t-2)) is congruent to that same sum mod I_{2^t+2^(t-2)+2}
           (this one also holds, with an empty sum, for t = 3)
      (m2) g_{2^(t+1)-6} + w2^(2^t-3) + w2^(2^(t-2)-3)*w3^(2^(t-1))
           lies in  w3*I_{2^t+2^(t-1)+2^(t-3)+2^(t-4)}
      (c2) w2^(2^t-3) is congruent to w2^(2^(t-2)-3)*w3^(2^(t-1))
           mod I_{13*2^(t-3)+1}
    """
    if t < 3:
        raise ValueError("requires t >= 3")
    p = 1 << t
    quarter_sum = Poly((3 << (k - 1), (p >> 1) - (1 << k)) for k in range(1, t - 2))
    checks = [
        Check(
            f"c1 t={t}: w2^{3 * p // 4} congruent to the quarter sum mod I_{p + p // 4 + 2}",
            ideal_member(Poly({(3 * p // 4, 0)}) + quarter_sum, p + p // 4 + 2),
        )
    ]
    if t >= 4:
        m1 = g_recurrence(3 * p // 2) + Poly({(3 * p // 4, 0)}) + quarter_sum
        m2 = (
            g_recurrence(2 * p - 6)
            + Poly({(p - 3, 0)})
            + Poly({(p // 4 - 3, p // 2)})
        )
        checks += [
            Check(
                f"m1 t={t}: membership in w3*I_{p + p // 4 + p // 16}",
                w3_ideal_member(m1, p + p // 4 + p // 16),
            ),
            Check(
                f"m2 t={t}: membership in w3*I_{p + p // 2 + p // 8 + p // 16}",
                w3_ideal_member(m2, p + p // 2 + p // 8 + p // 16),
            ),
            Check(
                f"c2 t={t}: w2^{p - 3} congruent to w2^{p // 4 - 3}*w3^{p // 2} mod I_{13 * p // 8 + 1}",
                ideal_member(
                    Poly({(p - 3, 0), (p // 4 - 3, p // 2)}), 13 * p // 8 + 1
                ),
            ),
        ]
    return checks
