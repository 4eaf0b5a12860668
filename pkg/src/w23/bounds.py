"""Integer arithmetic layered over zcl(W_n): sandwich bounds for the
zero-divisor cup-length of the oriented Grassmannian G~(n,3), and the lower
bounds for topological complexity that follow.

For n >= 15 the cup-length zcl(G~(n,3)) of the full cohomology ring is pinned
between 1 + zcl(W_n) and 2 + zcl(W_n).  On two sub-ranges of every level
[2^t - 1, 2^(t+1) - 2] the lower value is known to be exact; elsewhere
equality with the lower value is conjectured for all n >= 6, and everything
in this module keeps that epistemic split explicit (an optional `exact` field
rather than a claimed value).  No quotient ring is ever built here: callers
supply zcl(W_n) and the rest is arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, NamedTuple, Optional

from .report import Check
from .zcl import zcl_closed_form


def _level(n: int) -> int:
    """The t with 2^t - 1 <= n <= 2^(t+1) - 2."""
    return (n + 1).bit_length() - 1


def exceptional_degrees(n: int) -> tuple[int, Optional[int]]:
    """Degrees of the indecomposable classes of H*(G~(n,3)) outside W_n.

    There are at most two, a and b with |a| < |b| and |a| + |b| = 3n - 5;
    b is absent exactly for n in {2^t - 1, 2^t, 2^(t+1) - 3, 2^(t+1) - 2}.
    Returns (|a|, |b| or None).
    """
    if n < 15:
        raise ValueError(f"exceptional degrees are tabulated for n >= 15, got {n}")
    p = 1 << _level(n)
    first = 3 * n - 2 * p - 1
    second = 2 * p - 4
    if n in {p - 1, p, 2 * p - 3, 2 * p - 2}:
        return min(first, second), None
    return min(first, second), max(first, second)


def height_z_w2(n: int) -> int:
    """Height of z(w2) = w2 (x) 1 + 1 (x) w2 in W_n (x) W_n.

    Squaring is additive across the tensor factors, so the height of a
    z-class is the height of its argument rounded up to the next 2^k - 1.
    For w2 that closed form collapses to two bands per level: 2^t - 1 while
    n <= 2^t + 2^(t-1), then 2^(t+1) - 1.
    """
    if n < 7:
        raise ValueError(f"closed form needs n >= 7, got {n}")
    p = 1 << _level(n)
    return p - 1 if n <= p + p // 2 else 2 * p - 1


def exactness_established(n: int) -> bool:
    """Whether zcl(G~(n,3)) = 1 + zcl(W_n) is known, not just conjectured.

    True on roughly the first sixth and the last quarter of each level:
    either n < 2^t + 2^(t-1)/3 + 1, with the edge kept as an exact rational
    (it is never an integer), or n >= 2^t + 2^(t-1) + 2^(t-2) + 1.
    """
    if n < 15:
        raise ValueError(f"exactness ranges start at n = 15, got {n}")
    t = _level(n)
    p = 1 << t
    if Fraction(n) < p + Fraction(p, 6) + 1:
        return True
    return n >= p + p // 2 + p // 4 + 1


def exactness_edge_disagreements(t: int) -> list[int]:
    """n where the two readings of the first exactness edge would differ.

    The edge appears once as the strict rational bound
    n < 2^t + 2^(t-1)/3 + 1 and once as the inclusive integer bound
    n <= 2^t + floor(2^(t-1)/3) + 1.  Because 3 never divides a power of
    two, both admit exactly the same integers, so the returned list is
    expected to be empty for every t; a nonempty result means the two
    formulations have drifted apart.
    """
    if t < 4:
        raise ValueError(f"levels start at t = 4, got {t}")
    p = 1 << t
    out = []
    for n in range(p - 1, 2 * p - 1):
        rational = Fraction(n) < p + Fraction(p, 6) + 1
        inclusive = n <= p + (p // 2) // 3 + 1
        if rational != inclusive:
            out.append(n)
    return out


class BoundsRow(NamedTuple):
    """Everything known about zcl(G~(n,3)) and TC(G~(n,3)) for one n.

    `zcl_oriented_exact` is the established value when equality with the
    lower bound is proved and None otherwise; the hi bound always stays two
    above zcl(W_n) regardless.
    """

    n: int
    zcl_wn: int
    zcl_oriented_lo: int
    zcl_oriented_hi: int
    zcl_oriented_exact: Optional[int]
    tc_lower: int
    a_deg: int
    b_deg: Optional[int]


def bounds_row(n: int, zcl_value: int) -> BoundsRow:
    """Assemble the bounds ledger for one n from a supplied zcl(W_n).

    lo = 1 + zcl(W_n) and hi = 2 + zcl(W_n) sandwich zcl(G~(n,3));
    TC(G~(n,3)) >= 1 + lo.  The caller chooses where zcl_value comes from
    (search or closed form), which keeps this layer pure arithmetic.
    """
    if n < 15:
        raise ValueError(f"bounds rows start at n = 15, got {n}")
    a_deg, b_deg = exceptional_degrees(n)
    lo = 1 + zcl_value
    return BoundsRow(
        n=n,
        zcl_wn=zcl_value,
        zcl_oriented_lo=lo,
        zcl_oriented_hi=2 + zcl_value,
        zcl_oriented_exact=lo if exactness_established(n) else None,
        tc_lower=1 + lo,
        a_deg=a_deg,
        b_deg=b_deg,
    )


def verify_ineq_arithmetic(t: int) -> list[Check]:
    """Check 6n + height(z(w2)) < 3(|a| + zcl(W_n)) + 16 across level t.

    This inequality is the engine of the exactness argument: it rules out a
    maximal zero-divisor product carrying a square of the exceptional class
    z(a).  It must hold for every n in [2^t - 1, 2^(t+1) - 2], and only
    closed forms are consulted.  Returns a single summary check naming the
    first violating n, if any.
    """
    if t < 4:
        raise ValueError(f"levels start at t = 4, got {t}")
    p = 1 << t
    for n in range(p - 1, 2 * p - 1):
        a_deg, _ = exceptional_degrees(n)
        lhs = 6 * n + height_z_w2(n)
        rhs = 3 * (a_deg + zcl_closed_form(n)) + 16
        if lhs >= rhs:
            return [
                Check(
                    f"6n + height(z(w2)) < 3(|a| + zcl(W_n)) + 16 on [2^{t}-1, 2^{t + 1}-2]",
                    False,
                    f"lhs < rhs at n={n}",
                    f"lhs={lhs}, rhs={rhs}",
                )
            ]
    return [
        Check(f"6n + height(z(w2)) < 3(|a| + zcl(W_n)) + 16 on [2^{t}-1, 2^{t + 1}-2]", True)
    ]


class TcBand(NamedTuple):
    """One row of the TC lower-bound table: a run of n sharing one zcl value.

    `exact` marks rows where zcl(G~(n,3)) = zcl_oriented_lo is established;
    elsewhere the lo value is only a bound (and conjecturally the truth).
    """

    n_first: int
    n_last: int
    zcl_wn: int
    zcl_oriented_lo: int
    exact: bool
    tc_lower: int


def tc_table_bands(t: int) -> list[tuple[int, int]]:
    """The [n_first, n_last] runs that tile [2^t - 1, 2^(t+1) - 2].

    Runs are maximal stretches on which both zcl(W_n) and the exactness
    status are constant; the last quarter splits into one run per s with
    2^(t+1) - 2^(s+1) + 1 <= n <= 2^(t+1) - 2^s, s = t-3 down to 1.
    """
    if t < 4:
        raise ValueError(f"levels start at t = 4, got {t}")
    p = 1 << t
    bands = [
        (p - 1, p + (p // 2) // 3 + 1),
        (p + (p // 2) // 3 + 2, p + p // 4),
        (p + p // 4 + 1, p + p // 4 + 1),
        (p + p // 4 + 2, p + p // 2),
        (p + p // 2 + 1, p + p // 2 + 1),
        (p + p // 2 + 2, p + p // 2 + p // 8),
        (p + p // 2 + p // 8 + 1, p + p // 2 + p // 4),
    ]
    for s in range(t - 3, 0, -1):
        bands.append((2 * p - (1 << (s + 1)) + 1, 2 * p - (1 << s)))
    return bands


def tc_table_rows(
    t: int, zcl_fn: Callable[[int], int] = zcl_closed_form
) -> list[TcBand]:
    """TC lower-bound rows for level t, one TcBand per run of n.

    zcl_fn supplies zcl(W_n); swapping the default closed form for the
    search-based value cross-checks the band structure against computation.
    Every n in a run is evaluated, and a run that fails to be constant in
    either the zcl value or the exactness status raises RuntimeError.
    """
    rows = []
    for n_first, n_last in tc_table_bands(t):
        ns = range(n_first, n_last + 1)
        values = {zcl_fn(n) for n in ns}
        flags = {exactness_established(n) for n in ns}
        if len(values) != 1 or len(flags) != 1:
            raise RuntimeError(
                f"band [{n_first}, {n_last}] is not constant:"
                f" zcl values {sorted(values)}, exactness {sorted(flags)}"
            )
        v = values.pop()
        rows.append(TcBand(n_first, n_last, v, v + 1, flags.pop(), v + 2))
    return rows
