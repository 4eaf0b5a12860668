"""Zero-divisor arithmetic in the tensor square W_n (x) W_n.

Elements are sets of pairs (m1, m2) of basis monomials: the pairs e (x) f
with e, f ranging over the additive basis B_n form a basis of the tensor
square, so an element is zero exactly when its pair set is empty.  For a
ring class a, the zero divisor z(a) = a (x) 1 + 1 (x) a.

The quantity computed here is the largest beta + gamma with

    z(w2)^beta * z(w3)^gamma != 0,

which realizes the zero-divisor cup-length of W_n (w2 and w3 are the only
indecomposables).  The product decomposes into bigraded pieces indexed by
the left degree r, each piece a Lucas-filtered sum of nf(b, c) (x)
nf(beta-b, gamma-c) over 2b+3c = r; the product is nonzero iff some piece
is nonempty.  Pieces are scanned from the balanced degree outward, and only
the upper half: the coordinate swap is a ring automorphism fixing every
z(w2)^beta z(w3)^gamma, so the piece at r mirrors the piece at
2*beta+3*gamma-r.

The (beta, gamma) search walks a staircase instead of the full grid:
multiplying a zero element by further zero divisors keeps it zero, so
vanishing is upward-closed in each exponent and the boundary is monotone.
Exponent caps come from the heights of w2 and w3: an element of height h
gives z of height 2^ceil(log2(h+1))... precisely, 2^u <= h < 2^(u+1)
forces height(z) = 2^(u+1)-1.
"""

from __future__ import annotations

import multiprocessing
import random
from typing import Iterable, NamedTuple

from .poly import Monomial, Poly, lucas_binom_mod2
from .quotient import QuotientRing, build_quotient
from .report import Check

SMALL_N_ZCL = {6: 2, 7: 7, 8: 7, 9: 7, 10: 8, 11: 9, 12: 10, 13: 15, 14: 16}

Pair = tuple  # (Monomial, Monomial)


class TensorElement:
    """An element of W_n (x) W_n: a frozenset of basis-monomial pairs."""

    __slots__ = ("ring", "pairs")

    def __init__(self, ring: QuotientRing, pairs: Iterable[Pair] = ()):
        ps = frozenset(pairs)
        for m1, m2 in ps:
            assert m1 in ring.basis and m2 in ring.basis
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "pairs", ps)

    @classmethod
    def _raw(cls, ring: QuotientRing, pairs: frozenset) -> "TensorElement":
        el = object.__new__(cls)
        object.__setattr__(el, "ring", ring)
        object.__setattr__(el, "pairs", pairs)
        return el

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.ring is other.ring
            and self.pairs == other.pairs
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.pairs))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        assert self.ring is other.ring
        return TensorElement._raw(self.ring, self.pairs ^ other.pairs)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        assert self.ring is other.ring
        q = self.ring
        acc: set = set()
        for a1, a2 in self.pairs:
            for b1, b2 in other.pairs:
                left = q.nf_set(a1[0] + b1[0], a1[1] + b1[1])
                if not left:
                    continue
                right = q.nf_set(a2[0] + b2[0], a2[1] + b2[1])
                if not right:
                    continue
                acc ^= {(l, r) for l in left for r in right}
        return TensorElement._raw(q, frozenset(acc))

    def _square(self) -> "TensorElement":
        q = self.ring
        acc: set = set()
        for m1, m2 in self.pairs:  # char-2 Frobenius; cross terms cancel
            left = q.nf_set(2 * m1[0], 2 * m1[1])
            if not left:
                continue
            right = q.nf_set(2 * m2[0], 2 * m2[1])
            if not right:
                continue
            acc ^= {(l, r) for l in left for r in right}
        return TensorElement._raw(q, frozenset(acc))

    def __pow__(self, e: int) -> "TensorElement":
        if e < 0:
            raise ValueError("negative exponent")
        result = tensor_one(self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base._square()
        return result

    def swap(self) -> "TensorElement":
        return TensorElement._raw(
            self.ring, frozenset((m2, m1) for m1, m2 in self.pairs)
        )

    def __repr__(self) -> str:
        return f"TensorElement(n={self.ring.n}, {len(self.pairs)} pairs)"


def tensor_one(q: QuotientRing) -> TensorElement:
    return TensorElement._raw(q, frozenset({((0, 0), (0, 0))}))


def embed_left(q: QuotientRing, p: Poly) -> TensorElement:
    """p (x) 1, for p already in normal form."""
    return TensorElement._raw(q, frozenset((m, (0, 0)) for m in p.terms))


def embed_right(q: QuotientRing, p: Poly) -> TensorElement:
    """1 (x) p, for p already in normal form."""
    return TensorElement._raw(q, frozenset(((0, 0), m) for m in p.terms))


def nf_poly(q: QuotientRing, p: Poly) -> Poly:
    acc: set = set()
    for b, c in p.terms:
        acc ^= q.nf_set(b, c)
    return Poly._raw(frozenset(acc))


def z(q: QuotientRing, p: Poly) -> TensorElement:
    """The zero divisor of a ring class: z(a) = a (x) 1 + 1 (x) a."""
    npoly = nf_poly(q, p)
    return embed_left(q, npoly) + embed_right(q, npoly)


class GradedPiece(NamedTuple):
    r: int
    beta: int
    gamma: int
    element: TensorElement


def _piece_pairs(q: QuotientRing, beta: int, gamma: int, r: int) -> dict:
    """Left-degree-r part of z(w2)^beta*z(w3)^gamma, keyed by left monomial."""
    acc: dict[Monomial, set] = {}
    for c in range(min(gamma, r // 3) + 1):
        rem = r - 3 * c
        if rem % 2 or not lucas_binom_mod2(gamma, c):
            continue
        b = rem // 2
        if b > beta or not lucas_binom_mod2(beta, b):
            continue
        left = q.nf_set(b, c)
        if not left:
            continue
        right = q.nf_set(beta - b, gamma - c)
        if not right:
            continue
        for m in left:
            got = acc.get(m)
            if got is None:
                acc[m] = set(right)
            else:
                got.symmetric_difference_update(right)
    return acc


def graded_piece(q: QuotientRing, beta: int, gamma: int, r: int) -> GradedPiece:
    if beta < 0 or gamma < 0 or not 0 <= r <= 2 * beta + 3 * gamma:
        raise ValueError("left degree out of range")
    acc = _piece_pairs(q, beta, gamma, r)
    pairs = frozenset((m, mm) for m, rights in acc.items() for mm in rights)
    return GradedPiece(r, beta, gamma, TensorElement._raw(q, pairs))


def _scan_degrees(q: QuotientRing, beta: int, gamma: int):
    # balanced degree first, upper half only (swap symmetry covers the rest)
    total = 2 * beta + 3 * gamma
    lo = max((total + 1) // 2, total - q.max_degree)
    return range(lo, min(total, q.max_degree) + 1)


def zero_divisor_product_nonzero(q: QuotientRing, beta: int, gamma: int) -> bool:
    """Whether z(w2)^beta * z(w3)^gamma != 0 in W_n (x) W_n."""
    if beta < 0 or gamma < 0:
        raise ValueError("exponents must be nonnegative")
    if beta == 0 and gamma == 0:
        return True
    for r in _scan_degrees(q, beta, gamma):
        if any(_piece_pairs(q, beta, gamma, r).values()):
            return True
    return False


class ZclResult(NamedTuple):
    value: int
    beta: int
    gamma: int
    r: int
    pair: Pair


def _zcap(h: int) -> int:
    # height h in [2^u, 2^(u+1)) gives height(z) = 2^(u+1)-1
    return (1 << h.bit_length()) - 1


_search_cache: dict[int, ZclResult] = {}


def _witness(q: QuotientRing, beta: int, gamma: int) -> ZclResult:
    for r in _scan_degrees(q, beta, gamma):
        acc = _piece_pairs(q, beta, gamma, r)
        pairs = {(m, mm) for m, ms in acc.items() for mm in ms}
        if pairs:
            return ZclResult(beta + gamma, beta, gamma, r, min(pairs))
    raise AssertionError("witness requested for a vanishing product")


def zcl_search(q: QuotientRing) -> ZclResult:
    """Exhaustive-by-staircase maximum of beta+gamma, with one witness.

    Walks gamma upward; for each gamma the maximal nonzero beta is found by
    descending from the previous row's maximum (vanishing is upward-closed,
    so the boundary can only move left).  The witness is the first maximal
    cell in this walk, its first nonzero left degree in scan order, and the
    lexicographically least surviving pair there.
    """
    got = _search_cache.get(q.n)
    if got is not None:
        return got
    h2, h3 = q.heights()
    beta = _zcap(h2)
    best: ZclResult | None = None
    for gamma in range(_zcap(h3) + 1):
        while beta >= 0 and not zero_divisor_product_nonzero(q, beta, gamma):
            beta -= 1
        if beta < 0:
            break
        if best is None or beta + gamma > best.value:
            best = _witness(q, beta, gamma)
    assert best is not None  # (0, 0) is always nonzero
    _search_cache[q.n] = best
    return best


def zcl_wn(q: QuotientRing) -> int:
    """zcl(W_n), computed exactly by the staircase search."""
    return zcl_search(q).value


def zcl_closed_form(n: int) -> int:
    """The seven-case evaluation of zcl(W_n) for n >= 15."""
    if n < 15:
        raise ValueError("closed form starts at n = 15; below that use SMALL_N_ZCL")
    t = (n + 1).bit_length() - 1
    p = 1 << t
    if n <= p + p // 4:
        return p + p // 2 - 4
    if n == p + p // 4 + 1:
        return p + p // 2 - 3
    if n <= p + p // 2:
        return p + p // 2 - 2
    if n == p + p // 2 + 1:
        return 2 * p + p // 8 - 3
    if n <= 13 * p // 8:
        return 2 * p + p // 8 - 2
    if n <= p + p // 2 + p // 4:
        return 2 * p + p // 4 - 2
    s = (2 * p - n).bit_length() - 1  # band 2^(t+1)-2^(s+1)+1 <= n <= 2^(t+1)-2^s
    return 3 * p - (2 << s) - 2


def verify_zero_divisor_algebra(q: QuotientRing, trials: int, seed: int = 0) -> list[Check]:
    """The three z identities on random low-degree classes:

    z(a+b) = z(a)+z(b),
    z(ab) = z(a)z(b) + (1 (x) b)z(a) + (1 (x) a)z(b),
    z(a^(2^l)) = z(a)^(2^l).
    """
    rng = random.Random(seed)
    checks = []
    for k in range(trials):
        a = Poly((rng.randrange(4), rng.randrange(3)) for _ in range(rng.randrange(1, 4)))
        b = Poly((rng.randrange(4), rng.randrange(3)) for _ in range(rng.randrange(1, 4)))
        za, zb = z(q, a), z(q, b)
        ok_add = z(q, a + b) == za + zb
        ok_mul = z(q, a * b) == za * zb + embed_right(q, nf_poly(q, b)) * za + embed_right(
            q, nf_poly(q, a)
        ) * zb
        l = rng.choice((1, 2, 3))
        ok_pow = z(q, a ** (1 << l)) == za ** (1 << l)
        checks.append(
            Check(
                f"z identities n={q.n} trial={k}",
                ok_add and ok_mul and ok_pow,
                "all three hold",
                f"add={ok_add} mul={ok_mul} pow(2^{l})={ok_pow}",
            )
        )
    return checks


def verify_upper_bound_lemmas(t: int) -> list[Check]:
    """The stated z-product vanishings driving the upper bounds:

    n = 2^t+2^(t-2):   z(w2)^(2^t-1)*z(w3)^(2^(t-1)-2) = 0
                       and z(w2)^(2^t-2)*z(w3)^(2^(t-1)-1) = 0;
    n = 2^t+2^(t-2)+1: z(w2)^(2^t-1)*z(w3)^(2^(t-1)-1) = 0;
    n = 2^(t+1)-2^s (1 <= s <= t-3):
                       z(w2)^(2^(t+1)-2^(s+1))*z(w3)^(2^t-2^s) = 0
                       and z(w2)^(2^(t+1)-2^s)*z(w3)^(2^t-2^(s+1)) = 0.
    """
    if t < 4:
        raise ValueError("stated for t >= 4")
    p = 1 << t
    cells = [
        (p + p // 4, p - 1, p // 2 - 2),
        (p + p // 4, p - 2, p // 2 - 1),
        (p + p // 4 + 1, p - 1, p // 2 - 1),
    ]
    for s in range(1, t - 2):
        e = 1 << s
        cells.append((2 * p - e, 2 * p - 2 * e, p - e))
        cells.append((2 * p - e, 2 * p - e, p - 2 * e))
    return [
        Check(
            f"vanishing n={n}: z(w2)^{beta}*z(w3)^{gamma} = 0",
            not zero_divisor_product_nonzero(build_quotient(n), beta, gamma),
        )
        for n, beta, gamma in cells
    ]


def _zcl_entry(n: int) -> tuple:
    res = zcl_search(build_quotient(n))
    return (n, res.value, res.beta, res.gamma)


def zcl_range(lo: int, hi: int, jobs: int = 1) -> list[tuple]:
    """(n, zcl, witness beta, witness gamma) for lo <= n <= hi, in n order."""
    ns = list(range(max(lo, 6), hi + 1))
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            return pool.map(_zcl_entry, ns)
    return [_zcl_entry(n) for n in ns]
