"""Named extremal families and their closed-form size/degree evaluators.

Every constructor places its anchor vertices canonically: stars at the given
center, the window families at vertex 1 with window [2, ell+1], the
t-anchored family at [t] with window [t+1, k+1], and the majority family at
[2r-1].  Isomorphic variants are obtained by relabeling, never by extra
parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import binom
from .core import Family, ParameterError, all_ksets, full_mask, mask_of

KINDS = ("star", "H_ell", "H_nkt", "L_r", "lex_segment", "colex_segment", "triangle")


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    n: int
    k: int
    param: int = 0

    def validate(self) -> None:
        n, k, p = self.n, self.k, self.param
        if self.kind not in KINDS:
            raise ParameterError(f"unknown construction kind {self.kind!r}")
        if not (1 <= k <= n):
            raise ParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
        if self.kind == "star" and not (1 <= p <= n):
            raise ParameterError(f"star center {p} outside [1,{n}]")
        if self.kind == "H_ell" and not (2 <= p <= k):
            raise ParameterError(f"H_ell needs 2 <= ell <= k, got ell={p}")
        if self.kind == "H_ell" and p + 1 > n:
            raise ParameterError(f"H_ell window [2,{p + 1}] exceeds n={n}")
        if self.kind == "H_nkt" and not (1 <= p < k):
            raise ParameterError(f"H_nkt needs 1 <= t < k, got t={p}")
        if self.kind == "H_nkt" and k + 1 > n:
            raise ParameterError(f"H_nkt window needs n >= k+1")
        if self.kind == "L_r" and not (1 <= p <= k and 2 * p - 1 <= n):
            raise ParameterError(f"L_r needs 1 <= r <= k and 2r-1 <= n, got r={p}")
        if self.kind in ("lex_segment", "colex_segment") and not (0 <= p <= binom(n, k)):
            raise ParameterError(f"segment length {p} outside [0, C({n},{k})]")
        if self.kind == "triangle" and n < 3:
            raise ParameterError("triangle family needs n >= 3")


def build(spec: ConstructionSpec) -> Family:
    spec.validate()
    n, k, p = spec.n, spec.k, spec.param
    if spec.kind == "star":
        center = 1 << (p - 1)
        masks = [m for m in all_ksets(n, k) if m & center]
    elif spec.kind == "H_ell":
        masks = _window_family(n, k, anchor=mask_of([1]), window=mask_of(range(2, p + 2)))
    elif spec.kind == "triangle":
        # All k-sets meeting [3] in at least 2 elements; equals H_ell with ell=2.
        tri = mask_of([1, 2, 3])
        masks = [m for m in all_ksets(n, k) if (m & tri).bit_count() >= 2]
    elif spec.kind == "H_nkt":
        masks = _window_family(n, k, anchor=mask_of(range(1, p + 1)),
                               window=mask_of(range(p + 1, k + 2)))
    elif spec.kind == "L_r":
        maj = mask_of(range(1, 2 * p))
        masks = [m for m in all_ksets(n, k) if (m & maj).bit_count() >= p]
    elif spec.kind == "lex_segment":
        ordered = list(all_ksets(n, k))  # lex order by construction
        masks = ordered[:p]
    else:  # colex_segment
        ordered = sorted(all_ksets(n, k))  # mask integer order = colex
        masks = ordered[:p]
    return Family.from_masks(n, k, masks)


def _window_family(n: int, k: int, anchor: int, window: int) -> list[int]:
    """Sets containing the anchor and meeting the window, plus sets
    containing the whole window and, for the t-anchored variant, all but one
    anchor vertex.

    For anchor {1} this is the H_ell definition; for anchor [t] with window
    [t+1, k+1] the second part degenerates to the k-sets [k+1] \\ {j}, j <= t,
    which is exactly anchor-union-window minus one anchor element.
    """
    out = []
    for m in all_ksets(n, k):
        if m & anchor == anchor and m & window:
            out.append(m)
        elif m & window == window and (anchor & ~m).bit_count() <= 1:
            out.append(m)
    return out


@dataclass(frozen=True)
class ClosedForm:
    size: int
    degree_profile: dict[int, int]  # index i -> predicted d_i, paper-covered range only


def closed_form(spec: ConstructionSpec) -> ClosedForm:
    """Exact size and the degree values the published formulas cover."""
    spec.validate()
    n, k, p = spec.n, spec.k, spec.param
    if spec.kind == "star":
        size = binom(n - 1, k - 1)
        profile = {1: size}
        for i in range(2, n + 1):
            profile[i] = binom(n - 2, k - 2)
        return ClosedForm(size, profile)
    if spec.kind in ("H_ell", "triangle"):
        ell = p if spec.kind == "H_ell" else 2
        size = binom(n - 1, k - 1) - binom(n - ell - 1, k - 1) + binom(n - ell - 1, k - ell)
        d = binom(n - 2, k - 2) + binom(n - ell - 1, k - ell)
        return ClosedForm(size, {i: d for i in range(2, ell + 2)})
    if spec.kind == "H_nkt":
        t = p
        size = (binom(n - t, k - t) - binom(n - k - 1, k - t)) + t
        d = binom(n - t - 1, k - t - 1) + t
        return ClosedForm(size, {i: d for i in range(t + 1, k + 2)})
    if spec.kind == "L_r":
        r = p
        size = sum(binom(2 * r - 1, j) * binom(n - 2 * r + 1, k - j)
                   for j in range(r, 2 * r))
        d = sum(binom(2 * r - 2, j) * binom(n - 2 * r + 1, k - j - 1)
                for j in range(r - 1, 2 * r - 1))
        return ClosedForm(size, {i: d for i in range(1, 2 * r)})
    raise ParameterError(f"no closed form for kind {spec.kind!r}")
