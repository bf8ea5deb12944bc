"""Shadows, Kruskal-Katona minimality, and cross-intersecting checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bounds import binom
from .constructions import ConstructionSpec, build
from .core import Family, ParameterError, elements, mask_of


def shadow(fam: Family, ell: int) -> Family:
    """All (k - ell)-subsets of members."""
    if not (1 <= ell < fam.k):
        raise ParameterError(f"shadow order {ell} out of range 1..k-1")
    out = set()
    for m in fam.sets:
        for combo in combinations(elements(m), fam.k - ell):
            out.add(mask_of(combo))
    return Family.from_masks(fam.n, fam.k - ell, out, fam.excluded)


def kk_min_shadow(n: int, k: int, m: int, ell: int) -> int:
    """|shadow of the colex segment of m k-sets|, the Kruskal-Katona minimum.

    Built explicitly from the segment rather than via the binomial cascade;
    exactness over speed at desk scale.
    """
    if not (0 <= m <= binom(n, k)):
        raise ParameterError(f"segment length {m} outside [0, C({n},{k})]")
    if not (1 <= ell < k):
        raise ParameterError(f"shadow order {ell} out of range 1..k-1")
    if m == 0:
        return 0
    seg = build(ConstructionSpec("colex_segment", n, k, m))
    return len(shadow(seg, ell))


@dataclass(frozen=True)
class CrossPair:
    a: Family
    b: Family

    def __post_init__(self):
        if self.a.n != self.b.n:
            raise ParameterError("cross pair needs a shared ground set")


def is_cross_intersecting(a: Family, b: Family) -> bool:
    return all(x & y for x in a.sets for y in b.sets)


@dataclass(frozen=True)
class CrossCheckReport:
    cross: bool
    daykin_applicable: bool
    daykin_ok: bool | None
    daykin_min_size: int | None
    daykin_bound: int | None
    daykin_equality: bool | None
    lex_transfer_ok: bool | None


def cross_check(pair: CrossPair) -> CrossCheckReport:
    """Daykin's bound min(|A|,|B|) <= C(n-1,k-1) for equal-uniformity cross
    pairs with n > 2k, plus the lex-transfer reformulation."""
    a, b = pair.a, pair.b
    cross = is_cross_intersecting(a, b)
    n = a.n
    daykin_applicable = cross and a.k == b.k and n > 2 * a.k and a.sets and b.sets
    daykin_ok = daykin_min = daykin_bound = daykin_eq = None
    if daykin_applicable:
        daykin_min = min(len(a), len(b))
        daykin_bound = binom(n - 1, a.k - 1)
        daykin_ok = daykin_min <= daykin_bound
        daykin_eq = daykin_min == daykin_bound
    lex_ok = None
    if cross:
        la = build(ConstructionSpec("lex_segment", n, a.k, len(a)))
        lb = build(ConstructionSpec("lex_segment", n, b.k, len(b)))
        lex_ok = is_cross_intersecting(la, lb)
    return CrossCheckReport(
        cross=cross,
        daykin_applicable=bool(daykin_applicable),
        daykin_ok=daykin_ok,
        daykin_min_size=daykin_min,
        daykin_bound=daykin_bound,
        daykin_equality=daykin_eq,
        lex_transfer_ok=lex_ok,
    )


@dataclass(frozen=True)
class InequalityVerdict:
    applicable: bool
    lhs: int | str | None = None
    rhs: int | str | None = None
    holds: bool | None = None
    note: str = ""


@dataclass(frozen=True)
class CrossInequalityReport:
    cross: bool
    cor21: InequalityVerdict
    cor22_d: InequalityVerdict
    cor22_ell: InequalityVerdict
    lem61: InequalityVerdict
    lem62: InequalityVerdict


def cross_inequalities(pair: CrossPair, d: int | None = None,
                       r: int | None = None) -> CrossInequalityReport:
    """Evaluate the cross-intersecting size inequalities that apply to the
    pair, reporting exact sides for each.

    cor21:   |A| + |B| <= C(n,k)        (b = a+2, n >= 2a+2, |A| large)
    cor22_d: |B| <= C(n-1,b-1) + C(n-d,b-d+1)  (d-step size threshold on |A|)
    cor22_ell: |B| <= C(n,b) - C(n-l,b) for the smallest l with
               |A| >= C(n-l,a-l)
    lem61:   r|A| + |B| <= C(n,k)       (a = b = k, |A| <= |B|, n >= (r+1)k)
    lem62:   |A| + (C(n-d,a)/C(n-d,b-d)) |B| <= C(n,a), exact rationals
    """
    a, b = pair.a, pair.b
    n, ka, kb = a.n, a.k, b.k
    cross = is_cross_intersecting(a, b)
    na = InequalityVerdict(applicable=False)
    cor21 = cor22_d = cor22_ell = lem61 = lem62 = na
    if not cross:
        return CrossInequalityReport(cross, cor21, cor22_d, cor22_ell, lem61, lem62)

    if kb == ka + 2 and n >= 2 * ka + 2 and \
            len(a) >= binom(n - 1, ka - 1) + binom(n - 2, ka - 2):
        cor21 = InequalityVerdict(True, len(a) + len(b), binom(n, ka),
                                  len(a) + len(b) <= binom(n, ka))

    if d is not None and n >= ka + kb and 2 <= d <= kb + 1:
        threshold = sum(binom(n - i, ka - 2) for i in range(2, d + 1))
        if len(a) >= threshold:
            rhs = binom(n - 1, kb - 1) + binom(n - d, kb - d + 1)
            cor22_d = InequalityVerdict(True, len(b), rhs, len(b) <= rhs)

    if n >= ka + kb:
        # smallest applicable l yields the tightest bound
        best_ell = min((l for l in range(1, ka + 1)
                        if len(a) >= binom(n - l, ka - l)), default=None)
        if best_ell is not None:
            rhs = binom(n, kb) - binom(n - best_ell, kb)
            cor22_ell = InequalityVerdict(True, len(b), rhs, len(b) <= rhs,
                                          note=f"ell={best_ell}")

    if r is not None and ka == kb and len(a) <= len(b) and n >= (r + 1) * ka:
        lhs = r * len(a) + len(b)
        lem61 = InequalityVerdict(True, lhs, binom(n, ka), lhs <= binom(n, ka))

    if d is not None and d < kb and n >= ka + kb:
        threshold = sum(binom(n - i, ka - 1) for i in range(1, d + 1))
        denom = binom(n - d, kb - d)
        if len(a) >= threshold and denom:
            weight = Fraction(binom(n - d, ka), denom)
            lhs = len(a) + weight * len(b)
            lem62 = InequalityVerdict(True, str(lhs), binom(n, ka),
                                      lhs <= binom(n, ka),
                                      note=f"weight={weight}")

    return CrossInequalityReport(cross, cor21, cor22_d, cor22_ell, lem61, lem62)
