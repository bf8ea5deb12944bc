"""Exhaustive enumeration of maximal t-intersecting families at desk scale.

Maximal t-intersecting k-uniform families are exactly the maximal cliques of
the compatibility graph whose vertices are all k-sets of [n] (in lex order)
with an edge when two sets share at least t elements.  The enumerator is
Bron-Kerbosch with pivoting over bitset adjacency rows; candidate/excluded
sets are ints over C(n,k) bits.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .bounds import BoundSpec, evaluate, binom
from .core import (
    Family,
    ParameterError,
    all_ksets,
    degree_sequence,
    elements,
)
from .transforms import is_shifted
from .transversal import transversal_report

ENUMERATION_GUARD = 10_000
CANONICAL_GUARD = 12
# extremal witness classes reported per verification; canonicalization is
# factorial in n, so the list is truncated rather than exhaustive
WITNESS_CLASS_CAP = 16


def _compatibility_graph(n: int, k: int, t: int):
    verts = list(all_ksets(n, k))
    m = len(verts)
    adj = [0] * m
    for i in range(m):
        vi = verts[i]
        row = 0
        for j in range(m):
            if i != j and (vi & verts[j]).bit_count() >= t:
                row |= 1 << j
        adj[i] = row
    return verts, adj


def _bk_pivot(adj, r: int, p: int, x: int, out: list[int]) -> None:
    if p == 0 and x == 0:
        out.append(r)
        return
    # pivot: vertex of P|X with most neighbours inside P
    px = p | x
    best, best_cnt = -1, -1
    scan = px
    while scan:
        low = scan & -scan
        v = low.bit_length() - 1
        cnt = (adj[v] & p).bit_count()
        if cnt > best_cnt:
            best, best_cnt = v, cnt
        scan ^= low
    cand = p & ~adj[best]
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        nv = adj[v]
        _bk_pivot(adj, r | low, p & nv, x & nv, out)
        p &= ~low
        x |= low
        cand ^= low
    return


def _top_level_branches(adj, m: int):
    """The first level of the pivoted recursion, as independent subproblems.

    Processing branch i with P stripped of branches 0..i-1 and X grown by
    them reproduces the sequential semantics, so the union over branches is
    exactly the full clique set regardless of how branches are distributed.
    """
    p = (1 << m) - 1
    x = 0
    best, best_cnt = -1, -1
    for v in range(m):
        cnt = (adj[v] & p).bit_count()
        if cnt > best_cnt:
            best, best_cnt = v, cnt
    cand = p & ~adj[best]
    branches = []
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        nv = adj[v]
        branches.append((low, p & nv, x & nv))
        p &= ~low
        x |= low
        cand ^= low
    return branches


def _run_branches(args):
    adj, branches = args
    out: list[int] = []
    for r, p, x in branches:
        _bk_pivot(adj, r, p, x, out)
    return out


def check_guard(n: int, k: int) -> None:
    size = binom(n, k)
    if size > ENUMERATION_GUARD:
        raise ParameterError(
            f"C({n},{k}) = {size} exceeds the enumeration guard of "
            f"{ENUMERATION_GUARD} k-sets")


def enumerate_maximal(n: int, k: int, t: int = 1, workers: int = 1):
    """Yield every maximal t-intersecting family over [n] exactly once.

    Deterministic order for workers=1; for workers > 1 the emitted multiset
    is identical (top-level branch partitioning only).
    """
    check_guard(n, k)
    if not (1 <= t <= k):
        raise ParameterError(f"t={t} out of range 1..k={k}")
    verts, adj = _compatibility_graph(n, k, t)
    m = len(verts)
    if m == 0:
        return
    if workers <= 1:
        cliques: list[int] = []
        _bk_pivot(adj, 0, (1 << m) - 1, 0, cliques)
    else:
        branches = _top_level_branches(adj, m)
        chunks = [branches[i::workers] for i in range(workers)]
        chunks = [c for c in chunks if c]
        cliques = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_branches, [(adj, c) for c in chunks]):
                cliques.extend(part)
    for clique in cliques:
        masks = []
        scan = clique
        while scan:
            low = scan & -scan
            masks.append(verts[low.bit_length() - 1])
            scan ^= low
        yield Family.from_masks(n, k, masks)


def brute_force_maximal(n: int, k: int, t: int = 1) -> list[Family]:
    """Independent oracle: filter all subfamilies of all k-sets.

    Only usable for tiny C(n,k); intended for oracle-equivalence tests.
    """
    verts = list(all_ksets(n, k))
    m = len(verts)
    if m > 20:
        raise ParameterError(f"brute force limited to C(n,k) <= 20, got {m}")
    families = []
    for bits in range(1, 1 << m):
        chosen = [verts[i] for i in range(m) if bits >> i & 1]
        ok = all((a & b).bit_count() >= t
                 for i, a in enumerate(chosen) for b in chosen[i + 1:])
        if not ok:
            continue
        maximal = all(
            any((v & c).bit_count() < t for c in chosen)
            for v in verts if v not in chosen)
        if maximal:
            families.append(Family.from_masks(n, k, chosen))
    return families


def canonical_form(fam: Family) -> tuple[int, ...]:
    """Lex-least sorted mask tuple over all vertex relabelings.

    Exact isomorphism certificate; factorial in n, guarded at n <= 12.  The
    permutation loop is pruned by fixing the image degree multiset first:
    only bijections between equal-degree classes can produce the minimum
    among relabelings that realize the invariant degree partition, but since
    the minimal encoding need not respect degree order we fall back to the
    full loop and simply short-circuit on the running best.
    """
    n = fam.n
    if n > CANONICAL_GUARD:
        raise ParameterError(f"canonical_form limited to n <= {CANONICAL_GUARD}")
    set_elems = [elements(m) for m in fam.sets]
    best: tuple[int, ...] | None = None
    for perm in permutations(range(n)):
        enc = sorted(
            sum(1 << perm[e - 1] for e in es) for es in set_elems)
        enc = tuple(enc)
        if best is None or enc < best:
            best = enc
    return best if best is not None else ()


def canonical_family(fam: Family) -> Family:
    return Family.from_masks(fam.n, fam.k, canonical_form(fam))


@dataclass
class SearchReport:
    n: int
    k: int
    t: int
    restrict: str
    per_index_max: dict[int, int]
    witnesses: dict[int, Family]
    families_enumerated: int
    isomorphism_classes: int | None
    exhaustive: bool
    wall_time: float


def max_degree_profile(n: int, k: int, t: int = 1, restrict: str = "all",
                       workers: int = 1,
                       count_classes: bool = False) -> SearchReport:
    """Per-index maxima of d_i over all maximal t-intersecting families.

    restrict='shifted' keeps only shifted families; sound for shifted-family
    theorems because shifted saturated families are maximal and the filter
    is exact.  Degree monotonicity under set addition makes maximal families
    sufficient for upper-bound extraction.
    """
    if restrict not in ("all", "shifted"):
        raise ParameterError(f"unknown restriction {restrict!r}")
    start = time.monotonic()
    per_index: dict[int, int] = {}
    witnesses: dict[int, Family] = {}
    count = 0
    forms = set() if count_classes else None
    for fam in enumerate_maximal(n, k, t, workers=workers):
        if restrict == "shifted" and not is_shifted(fam):
            continue
        count += 1
        ds = degree_sequence(fam).sorted
        for i, di in enumerate(ds, start=1):
            if di > per_index.get(i, -1):
                per_index[i] = di
                witnesses[i] = fam
        if forms is not None:
            forms.add(canonical_form(fam))
    return SearchReport(
        n=n, k=k, t=t, restrict=restrict,
        per_index_max=per_index,
        witnesses=witnesses,
        families_enumerated=count,
        isomorphism_classes=len(forms) if forms is not None else None,
        exhaustive=True,
        wall_time=time.monotonic() - start,
    )


@dataclass
class VerifyReport:
    id: str
    n: int
    k: int
    t: int
    verdict: str  # pass | fail | inapplicable
    index: int | None
    observed: int | None
    bound: int | None
    strict: bool
    extremal_witnesses: tuple[tuple[int, ...], ...]
    detail: str = ""


def verify_theorem(theorem_id: str, n: int, k: int, t: int | None = None,
                   ell: int | None = None, workers: int = 1) -> VerifyReport:
    """Compare enumerated per-index maxima against a theorem's exact bound."""
    t_eff = t if t is not None else 1
    spec = BoundSpec(theorem_id, n, k, t=t, ell=ell,
                     tau=None if theorem_id != "PROP51" else 0)
    if theorem_id == "PROP51":
        # applicability depends on per-family tau; checked family by family
        res = evaluate(BoundSpec(theorem_id, n, k, t=t_eff, tau=t_eff + 2))
        hypothesis_ok = n >= binom(t_eff + 2, 2) * k * k
    else:
        res = evaluate(spec)
        hypothesis_ok = res.applicable
    if not hypothesis_ok:
        return VerifyReport(theorem_id, n, k, t_eff, "inapplicable", None,
                            None, res.bound, res.strict, (), detail=res.reason)
    check_guard(n, k)

    restrict = "shifted" if theorem_id == "SHIFTED" else "all"
    bound = res.bound
    strict = res.strict

    if theorem_id in ("EKR", "HM", "F87", "COR12"):
        return _verify_size_style(theorem_id, n, k, t_eff, ell, res, workers)

    if theorem_id in ("PROP45", "PROP51"):
        return _verify_tau_style(theorem_id, n, k, t_eff, res, workers)

    kind, index = res.target
    observed = -1
    extremal: list[tuple[int, ...]] = []
    seen_forms: set[tuple[int, ...]] = set()
    for fam in enumerate_maximal(n, k, t_eff, workers=workers):
        if restrict == "shifted" and not is_shifted(fam):
            continue
        ds = degree_sequence(fam).sorted
        if index > len(ds):
            continue
        di = ds[index - 1]
        if di > observed:
            observed = di
            extremal = []
            seen_forms = set()
        if di == observed and di == bound and fam.n <= 8 \
                and len(seen_forms) < WITNESS_CLASS_CAP:
            form = canonical_form(fam)
            if form not in seen_forms:
                seen_forms.add(form)
                extremal.append(form)
    holds = observed < bound if strict else observed <= bound
    return VerifyReport(theorem_id, n, k, t_eff,
                        "pass" if holds else "fail",
                        index, observed, bound, strict, tuple(extremal))


def _verify_size_style(theorem_id, n, k, t, ell, res, workers):
    """Size/d_1 bounds with per-family hypothesis filters."""
    bound = res.bound
    observed = -1
    extremal: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    ground = (1 << n) - 1
    d1_cap = None
    if theorem_id == "F87":
        d1_cap = binom(n - 1, k - 1) - binom(n - ell - 1, k - 1)
    for fam in enumerate_maximal(n, k, t, workers=workers):
        ds = degree_sequence(fam)
        if theorem_id in ("HM", "COR12"):
            total = ground
            for m in fam.sets:
                total &= m
            if total:  # trivial (star-like); hypothesis excludes it
                continue
            value = len(fam) if theorem_id == "HM" else ds.sorted[0]
        elif theorem_id == "F87":
            if ds.sorted[0] > d1_cap:
                continue
            value = len(fam)
        else:  # EKR
            value = len(fam)
        if value > observed:
            observed = value
            extremal = []
            seen = set()
        if value == observed and value == bound and n <= 8 \
                and len(seen) < WITNESS_CLASS_CAP:
            form = canonical_form(fam)
            if form not in seen:
                seen.add(form)
                extremal.append(form)
    verdict = "pass" if observed <= bound else "fail"
    return VerifyReport(theorem_id, n, k, t, verdict, None, observed, bound,
                        res.strict, tuple(extremal))


def _verify_tau_style(theorem_id, n, k, t, res, workers):
    """Bounds conditioned on the covering number of each family."""
    bound = res.bound
    observed = -1
    index_used = None
    checked = 0
    for fam in enumerate_maximal(n, k, t, workers=workers):
        tau = transversal_report(fam, t).tau
        if theorem_id == "PROP45":
            if tau != 2:
                continue
            index = 2 * k + 1
        else:  # PROP51
            if tau is None or tau < t + 2:
                continue
            index = 1 + tau
        ds = degree_sequence(fam).sorted
        if index > len(ds):
            continue
        checked += 1
        di = ds[index - 1]
        if di > observed:
            observed = di
            index_used = index
    if checked == 0:
        return VerifyReport(theorem_id, n, k, t, "inapplicable", None, None,
                            bound, res.strict, (),
                            detail="no enumerated family meets the tau hypothesis")
    holds = observed < bound
    return VerifyReport(theorem_id, n, k, t, "pass" if holds else "fail",
                        index_used, observed, bound, res.strict, ())


@dataclass
class ProbeReport:
    id: str
    n: int
    k: int
    t: int
    families_enumerated: int
    evidence: dict
    verdict_note: str


def conjecture_probe(probe_id: str, n: int, k: int, t: int | None = None,
                     workers: int = 1) -> ProbeReport:
    """Evidence reports for the open conjectures; never asserts pass/fail."""
    if probe_id not in ("C71", "C72"):
        raise ParameterError(f"unknown probe id {probe_id!r}")
    check_guard(n, k)
    t_eff = t if t is not None else 1
    count = 0
    if probe_id == "C71":
        threshold = binom(n - 2, k - 2)
        min_count = None
        for fam in enumerate_maximal(n, k, 1, workers=workers):
            count += 1
            ds = degree_sequence(fam).per_vertex
            low = sum(1 for v in ds.values() if v <= threshold)
            if min_count is None or low < min_count:
                min_count = low
        target = n - 2 * k
        evidence = {
            "degree_threshold": threshold,
            "min_low_degree_vertices": min_count,
            "conjectured_at_least": target,
        }
        note = (f"min count {min_count} vs conjectured n-2k = {target}; "
                "report only, no assertion")
    else:
        bound = binom(n - t_eff - 1, k - t_eff - 1)
        max_dk2 = None
        for fam in enumerate_maximal(n, k, t_eff, workers=workers):
            count += 1
            ds = degree_sequence(fam).sorted
            if k + 2 <= len(ds):
                di = ds[k + 1]
                if max_dk2 is None or di > max_dk2:
                    max_dk2 = di
        evidence = {
            "index": k + 2,
            "max_degree_at_index": max_dk2,
            "conjectured_bound": bound,
        }
        note = (f"max d_{k + 2} = {max_dk2} vs conjectured bound {bound}; "
                "report only, no assertion")
    return ProbeReport(probe_id, n, k, t_eff, count, evidence, note)
