"""t-transversals, minimal bases, covering numbers, generated families,
and sunflower detection."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Family,
    ParameterError,
    PreconditionError,
    all_ksets,
    elements,
    is_t_intersecting,
)
from .transforms import is_saturated, is_shifted


@dataclass(frozen=True)
class TransversalReport:
    t: int
    transversals: tuple[int, ...]  # all T with |T| <= k, |T cap F| >= t for all F
    basis: tuple[int, ...]         # containment-minimal transversals
    tau: int | None                # min |T|, None when no transversal exists


def transversal_report(fam: Family, t: int) -> TransversalReport:
    """Exhaustive subset-tree search for t-transversals of size <= k.

    A partial set is extended only while it can still reach threshold t
    against every member using the at most k - |T| elements left to add.
    """
    if not fam.sets:
        raise PreconditionError("transversals of the empty family are vacuous")
    if not (1 <= t <= fam.k):
        raise ParameterError(f"t={t} out of range 1..k={fam.k}")
    verts = elements(fam.ground())
    k = fam.k
    found: list[int] = []

    def extend(start: int, mask: int, size: int) -> None:
        if all((mask & f).bit_count() >= t for f in fam.sets):
            found.append(mask)
            # supersets are transversals too; keep scanning for completeness
        if size == k:
            return
        budget = k - size
        for idx in range(start, len(verts)):
            v = verts[idx]
            nxt = mask | (1 << (v - 1))
            if all((nxt & f).bit_count() + budget - 1 >= t for f in fam.sets):
                extend(idx + 1, nxt, size + 1)

    extend(0, 0, 0)
    found = [m for m in found if m]
    basis = tuple(sorted(
        (m for m in found
         if not any(o != m and o & m == o for o in found)),
    ))
    tau = min((m.bit_count() for m in found), default=None)
    return TransversalReport(t=t, transversals=tuple(sorted(found)),
                             basis=basis, tau=tau)


def generated_family(gens, n: int, k: int) -> Family:
    """<G>: all k-sets of [n] containing some generator."""
    masks = []
    for g in gens:
        if g.bit_count() > k:
            raise ParameterError(
                f"generator {elements(g)} larger than uniformity {k}")
    gens = list(gens)
    for m in all_ksets(n, k):
        if any(m & g == g for g in gens):
            masks.append(m)
    return Family.from_masks(n, k, masks)


def is_sunflower(gens) -> int | None:
    """The common core C when all pairwise intersections agree, else None."""
    gens = list(gens)
    if len(gens) < 2:
        raise ParameterError("a sunflower needs at least 2 members")
    core = gens[0] & gens[1]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if gens[i] & gens[j] != core:
                return None
    return core


@dataclass(frozen=True)
class BasisLemmaReport:
    lemma31: bool | None  # basis t-intersecting and <B> = F (saturated only)
    lemma32: bool | None  # basis inside 2^[2k-t] (shifted saturated only)
    claim54: bool | None  # |union B_0| <= k+1 (tau_t = t+1, B_0 nonempty)


def check_basis_lemmas(fam: Family, t: int) -> BasisLemmaReport:
    rep = transversal_report(fam, t)
    # n >= 2k-t keeps the t-intersecting property non-vacuous; below that
    # every family qualifies and the basis lemmas break down.
    saturated = (fam.n >= 2 * fam.k - t
                 and is_saturated(fam, t) and is_t_intersecting(fam, t))

    lemma31: bool | None = None
    if saturated:
        basis_fams_t_intersecting = all(
            (a & b).bit_count() >= t
            for i, a in enumerate(rep.basis) for b in rep.basis[i + 1:])
        regen = generated_family(rep.basis, fam.n, fam.k)
        lemma31 = basis_fams_t_intersecting and regen.sets == fam.sets

    lemma32: bool | None = None
    if saturated and is_shifted(fam):
        window = (1 << (2 * fam.k - t)) - 1
        lemma32 = all(b & ~window == 0 for b in rep.basis)

    claim54: bool | None = None
    b0 = [b for b in rep.basis if b.bit_count() == t + 1]
    has_t_member = any(b.bit_count() == t for b in rep.basis)
    if saturated and rep.tau == t + 1 and b0 and not has_t_member:
        union = 0
        for b in b0:
            union |= b
        claim54 = union.bit_count() <= fam.k + 1
    return BasisLemmaReport(lemma31=lemma31, lemma32=lemma32, claim54=claim54)
