"""Shifting, shiftedness, and deterministic saturation closures."""

from __future__ import annotations

from .core import (
    Family,
    ParameterError,
    PreconditionError,
    all_ksets,
    elements,
    is_t_intersecting,
)

SATURATION_MODES = ("lex_greedy", "shift_alternate")


def shift_ij(fam: Family, i: int, j: int) -> Family:
    """The compression S_ij: replace j by i in a member when i is absent,
    j is present, and the replacement is not already in the family."""
    if not (1 <= i < j <= fam.n):
        raise ParameterError(f"shift needs 1 <= i < j <= n, got i={i}, j={j}")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    present = set(fam.sets)
    out = []
    for m in fam.sets:
        if m & bj and not m & bi:
            shifted = (m & ~bj) | bi
            out.append(m if shifted in present else shifted)
        else:
            out.append(m)
    return Family.from_masks(fam.n, fam.k, out, fam.excluded)


def precedes(a: int, b: int) -> bool:
    """Componentwise <= on the sorted element lists (the shifting order)."""
    ea, eb = elements(a), elements(b)
    if len(ea) != len(eb):
        raise ParameterError("precedes requires equal cardinalities")
    return all(x <= y for x, y in zip(ea, eb))


def is_shifted(fam: Family) -> bool:
    """Downward closure under the shifting order.

    Checking single-element decrements (replace some member element b by any
    smaller absent element) is equivalent to checking all predecessor pairs,
    since every strict predecessor is reachable by such covering moves.
    """
    present = set(fam.sets)
    for m in fam.sets:
        for b in elements(m):
            for a in range(1, b):
                ba = 1 << (a - 1)
                if m & ba:
                    continue
                lowered = (m & ~(1 << (b - 1))) | ba
                if lowered not in present:
                    return False
    return True


def make_shifted(fam: Family) -> Family:
    """Fixpoint of S_ij over all pairs i < j in ascending (i, j) order.

    Terminates because every effective shift strictly decreases the total
    element sum of the family.
    """
    cur = fam
    changed = True
    while changed:
        changed = False
        for i in range(1, cur.n):
            for j in range(i + 1, cur.n + 1):
                nxt = shift_ij(cur, i, j)
                if nxt.sets != cur.sets:
                    cur = nxt
                    changed = True
    return cur


def _lex_greedy_saturate(fam: Family, t: int) -> Family:
    current = list(fam.sets)
    present = set(current)
    for m in all_ksets(fam.n, fam.k, fam.ground()):
        if m in present:
            continue
        if all((m & f).bit_count() >= t for f in current):
            current.append(m)
            present.add(m)
    return Family.from_masks(fam.n, fam.k, current, fam.excluded)


def saturate(fam: Family, t: int, mode: str = "lex_greedy") -> Family:
    """Extend fam to a maximal t-intersecting superset, deterministically.

    lex_greedy scans all k-sets in lex order and adds every compatible one.
    shift_alternate alternates make_shifted and the greedy saturation until
    the family is simultaneously shifted and saturated; this terminates since
    saturation strictly grows the family and shifting strictly decreases the
    element sum, and both are bounded.
    """
    if mode not in SATURATION_MODES:
        raise ParameterError(f"unknown saturation mode {mode!r}")
    if not fam.sets:
        raise PreconditionError("cannot saturate the empty family")
    if not is_t_intersecting(fam, t):
        raise PreconditionError("input family is not t-intersecting")
    if mode == "lex_greedy":
        return _lex_greedy_saturate(fam, t)
    cur = fam
    while True:
        cur = _lex_greedy_saturate(make_shifted(cur), t)
        if is_shifted(cur):
            return cur


def is_saturated(fam: Family, t: int) -> bool:
    """Defining oracle: no addable k-set remains (full scan)."""
    present = set(fam.sets)
    for m in all_ksets(fam.n, fam.k, fam.ground()):
        if m in present:
            continue
        if all((m & f).bit_count() >= t for f in fam.sets):
            return False
    return True
