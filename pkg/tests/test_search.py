from itertools import permutations

import pytest

from degree_forge.bounds import binom
from degree_forge.constructions import ConstructionSpec, build
from degree_forge.core import (
    Family,
    ParameterError,
    all_ksets,
    degree_sequence,
    elements,
    is_t_intersecting,
    link,
    mask_of,
)
from degree_forge.search import (
    brute_force_maximal,
    canonical_form,
    conjecture_probe,
    enumerate_maximal,
    max_degree_profile,
    verify_theorem,
)
from degree_forge.transversal import transversal_report


def is_maximal(fam, t):
    present = set(fam.sets)
    return all(
        any((v & m).bit_count() < t for m in fam.sets)
        for v in all_ksets(fam.n, fam.k) if v not in present)


class TestEnumerateMaximal:
    def test_oracle_equivalence_5_2(self):
        got = {f.sets for f in enumerate_maximal(5, 2, 1)}
        oracle = {f.sets for f in brute_force_maximal(5, 2, 1)}
        assert got == oracle
        assert len(got) == 15
        sizes = sorted(len(s) for s in got)
        assert sizes == [3] * 10 + [4] * 5  # 10 triangles, 5 stars

    def test_oracle_equivalence_4_2(self):
        got = {f.sets for f in enumerate_maximal(4, 2, 1)}
        oracle = {f.sets for f in brute_force_maximal(4, 2, 1)}
        assert got == oracle
        triangle = Family.from_sets(4, 2, [(1, 2), (1, 3), (2, 3)])
        assert triangle.sets in got

    def test_oracle_equivalence_6_3_t2(self):
        got = {f.sets for f in enumerate_maximal(6, 3, 2)}
        oracle = {f.sets for f in brute_force_maximal(6, 3, 2)}
        assert got == oracle

    def test_membership_spot_checks_7_3(self):
        fams = list(enumerate_maximal(7, 3, 1))
        sets_of = {f.sets for f in fams}
        star = build(ConstructionSpec("star", 7, 3, 1))
        h2 = build(ConstructionSpec("H_ell", 7, 3, 2))
        assert star.sets in sets_of
        assert h2.sets in sets_of
        # the Fano plane: 7 sets, every degree 3
        fano = [f for f in fams
                if len(f) == 7 and set(degree_sequence(f).sorted) == {3}]
        assert fano

    def test_every_family_maximal_and_intersecting(self):
        for n, k, t in [(5, 2, 1), (6, 3, 1), (6, 3, 2)]:
            for fam in enumerate_maximal(n, k, t):
                assert is_t_intersecting(fam, t)
                assert is_maximal(fam, t), (n, k, t)

    def test_worker_count_independence(self):
        base = {f.sets for f in enumerate_maximal(5, 2, 1, workers=1)}
        for w in (2, 3):
            assert {f.sets for f in enumerate_maximal(5, 2, 1, workers=w)} == base

    def test_guard(self):
        with pytest.raises(ParameterError):
            next(enumerate_maximal(30, 8, 1))
        with pytest.raises(ParameterError):
            next(enumerate_maximal(5, 2, 3))


class TestCanonicalForm:
    def test_star_relabeling(self):
        a = build(ConstructionSpec("star", 7, 3, 1))
        b = Family.from_masks(
            7, 3, (m for m in all_ksets(7, 3) if m & mask_of([4])))
        assert canonical_form(a) == canonical_form(b)

    def test_h2_under_permutation(self):
        h2 = build(ConstructionSpec("H_ell", 7, 3, 2))
        perm = (3, 5, 1, 7, 2, 6, 4)
        image = Family.from_masks(
            7, 3,
            (mask_of(perm[e - 1] for e in elements(m)) for m in h2.sets))
        assert canonical_form(h2) == canonical_form(image)

    def test_star_vs_h2_differ(self):
        star = build(ConstructionSpec("star", 7, 3, 1))
        h2 = build(ConstructionSpec("H_ell", 7, 3, 2))
        assert canonical_form(star) != canonical_form(h2)

    def test_invariant_under_every_permutation_small(self):
        fam = Family.from_sets(5, 2, [(1, 2), (2, 4), (4, 5)])
        base = canonical_form(fam)
        for perm in permutations(range(1, 6)):
            image = Family.from_masks(
                5, 2,
                (mask_of(perm[e - 1] for e in elements(m)) for m in fam.sets))
            assert canonical_form(image) == base

    def test_guard(self):
        with pytest.raises(ParameterError):
            canonical_form(Family.from_sets(13, 2, [(1, 2)]))


class TestMaxDegreeProfile:
    def test_7_3_maxima(self):
        rep = max_degree_profile(7, 3, 1)
        assert rep.per_index_max[2] == 9
        assert rep.per_index_max[3] == 9
        assert rep.per_index_max[7] <= 5
        assert canonical_form(rep.witnesses[2]) == \
            canonical_form(build(ConstructionSpec("H_ell", 7, 3, 2)))
        vals = [rep.per_index_max[i] for i in sorted(rep.per_index_max)]
        assert vals == sorted(vals, reverse=True)

    def test_shifted_restriction_7_4_t2(self):
        rep = max_degree_profile(7, 4, 2, restrict="shifted")
        assert rep.per_index_max[7] <= binom(4, 1)
        assert rep.families_enumerated > 0

    def test_unknown_restriction(self):
        with pytest.raises(ParameterError):
            max_degree_profile(5, 2, 1, restrict="odd")


class TestVerifyTheorem:
    def test_hz_7_3_pass_with_star_equality(self):
        rep = verify_theorem("HZ", 7, 3)
        assert rep.verdict == "pass"
        assert rep.observed == rep.bound == 5
        star_form = canonical_form(build(ConstructionSpec("star", 7, 3, 1)))
        assert star_form in rep.extremal_witnesses

    def test_d2_7_3_unique_extremal_class(self):
        rep = verify_theorem("D2", 7, 3)
        assert rep.verdict == "pass"
        assert rep.observed == rep.bound == 9
        h2_form = canonical_form(build(ConstructionSpec("H_ell", 7, 3, 2)))
        assert rep.extremal_witnesses == (h2_form,)

    def test_d4_7_3_inapplicable(self):
        assert verify_theorem("D4", 7, 3).verdict == "inapplicable"

    def test_ekr_5_2(self):
        rep = verify_theorem("EKR", 5, 2)
        assert rep.verdict == "pass"
        assert rep.observed == rep.bound == binom(4, 1)

    def test_hm_6_3(self):
        rep = verify_theorem("HM", 7, 3)
        assert rep.verdict == "pass"
        assert rep.observed <= binom(6, 2) - binom(3, 2) + 1

    def test_prop45_7_3(self):
        rep = verify_theorem("PROP45", 7, 3)
        assert rep.verdict == "pass"
        assert rep.strict


@pytest.fixture(scope="module")
def maximal_7_3():
    return list(enumerate_maximal(7, 3, 1))


class TestProofInternalInvariants:
    """Family-level checks of the counting steps behind the degree bounds."""

    def test_degree_split_proposition(self, maximal_7_3):
        # u of max degree; any v with d(v) > C(n-2,k-2) and few sets in the
        # (no-u, with-v) cell forces that cell to hold a majority of F(no-u)
        n, k = 7, 3
        hit = 0
        for fam in maximal_7_3:
            ds = degree_sequence(fam)
            u = ds.permutation[0]
            bu = mask_of([u])
            f_not_u = len(link(fam, 0, bu))
            for v in range(1, n + 1):
                if v == u or ds.per_vertex[v] <= binom(n - 2, k - 2):
                    continue
                buv = mask_of([u, v])
                cell = len(link(fam, mask_of([v]), buv))
                if cell <= binom(n - 4, k - 2):
                    assert 2 * cell > f_not_u, (fam.as_tuples(), u, v)
                    hit += 1
        assert hit > 0

    def test_tau2_strict_degree_bound(self, maximal_7_3):
        n, k = 7, 3
        hit = 0
        for fam in maximal_7_3:
            if transversal_report(fam, 1).tau != 2:
                continue
            hit += 1
            assert degree_sequence(fam).d(2 * k + 1) < binom(n - 2, k - 2)
        assert hit > 0

    def test_size_or_degree_dichotomy(self, maximal_7_3):
        n, k = 7, 3
        cap = binom(n - 2, k - 2) + 2 * binom(n - 3, k - 2)
        for fam in maximal_7_3:
            ds = degree_sequence(fam)
            assert ds.d(2 * k + 1) <= binom(n - 2, k - 2) or len(fam) <= cap

    def test_triple_link_conditional(self, maximal_7_3):
        # whenever the (no-u, with-v) cell is large, some third vertex w
        # splits the family with all four cell bounds holding
        n, k = 7, 3
        premise = 5 * binom(n - 4, k - 3)
        for fam in maximal_7_3:
            ds = degree_sequence(fam)
            u = ds.permutation[0]
            bu = mask_of([u])
            for v in range(1, n + 1):
                if v == u:
                    continue
                cell = len(link(fam, mask_of([v]), bu | mask_of([v])))
                if cell < premise:
                    continue
                found = False
                for w in range(1, n + 1):
                    if w in (u, v):
                        continue
                    tri = mask_of([u, v, w])
                    if len(link(fam, 0, tri)) <= binom(n - 7, k - 4) and all(
                            len(link(fam, mask_of([x]), tri))
                            <= binom(n - 4, k - 3) for x in (u, v, w)):
                        found = True
                        break
                assert found, (fam.as_tuples(), u, v)


class TestProbes:
    def test_c71_7_3(self):
        rep = conjecture_probe("C71", 7, 3)
        assert rep.evidence["min_low_degree_vertices"] >= 7 - 6
        assert rep.families_enumerated > 0
        assert "report only" in rep.verdict_note

    def test_c72_7_4_t2(self):
        rep = conjecture_probe("C72", 7, 4, t=2)
        assert rep.evidence["index"] == 6
        assert rep.evidence["conjectured_bound"] == binom(4, 1)
        assert rep.evidence["max_degree_at_index"] is not None

    def test_reproducible(self):
        assert conjecture_probe("C71", 6, 2) == conjecture_probe("C71", 6, 2)

    def test_unknown_id(self):
        with pytest.raises(ParameterError):
            conjecture_probe("C99", 7, 3)
