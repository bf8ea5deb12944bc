import pytest

from degree_forge.bounds import (
    BOUND_IDS,
    SWEEP_IDS,
    BoundSpec,
    binom,
    evaluate,
    inequality_sweep,
)
from degree_forge.constructions import ConstructionSpec, closed_form
from degree_forge.core import ParameterError


class TestBinom:
    def test_examples(self):
        assert binom(5, 2) == 10
        assert binom(4, 7) == 0
        assert binom(0, 0) == 1
        assert binom(6, -1) == 0
        assert binom(-2, 0) == 0

    def test_pascal_identity_full_grid(self):
        for n in range(1, 81):
            for k in range(0, n + 1):
                assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


class TestEvaluate:
    def test_d2_example(self):
        res = evaluate(BoundSpec("D2", 7, 3))
        assert res.applicable and res.bound == 9
        assert res.target == ("d", 2)

    def test_d2k1_hypothesis_arithmetic(self):
        assert not evaluate(BoundSpec("D2K1", 8, 3)).applicable
        res = evaluate(BoundSpec("D2K1", 9, 3))
        assert res.applicable and res.target == ("d", 7)

    def test_hz_example(self):
        res = evaluate(BoundSpec("HZ", 7, 3))
        assert res.applicable and res.bound == 5 and res.target == ("d", 7)

    def test_strictness_flags(self):
        assert evaluate(BoundSpec("PROP45", 7, 3)).strict
        assert evaluate(BoundSpec("PROP51", 100, 3, t=1, tau=3)).strict
        assert not evaluate(BoundSpec("D2", 7, 3)).strict

    def test_d8k3_ceiling_index(self):
        assert evaluate(BoundSpec("D8K3", 8, 3)).target == ("d", 8)
        assert evaluate(BoundSpec("D8K3", 11, 4)).target == ("d", 11)
        assert not evaluate(BoundSpec("D8K3", 7, 3)).applicable

    def test_missing_parameters(self):
        with pytest.raises(ParameterError):
            evaluate(BoundSpec("TINT", 50, 3))
        with pytest.raises(ParameterError):
            evaluate(BoundSpec("DLL", 100, 5))
        with pytest.raises(ParameterError):
            evaluate(BoundSpec("nope", 7, 3))

    def test_every_id_evaluates(self):
        for sid in BOUND_IDS:
            res = evaluate(BoundSpec(sid, 200, 5, t=2, ell=4, tau=4))
            assert res.bound is not None

    def test_d2_bound_matches_h2_degree(self):
        for n in range(7, 14):
            for k in range(3, min(5, (n - 1) // 2) + 1):
                res = evaluate(BoundSpec("D2", n, k))
                cf = closed_form(ConstructionSpec("H_ell", n, k, 2))
                assert res.bound == cf.degree_profile[2], (n, k)

    def test_dll_bound_matches_h_ell_degree(self):
        for k in range(4, 6):
            for ell in range(4, k + 1):
                n = 2 * ell * ell * k + 1
                res = evaluate(BoundSpec("DLL", n, k, ell=ell))
                cf = closed_form(ConstructionSpec("H_ell", n, k, ell))
                assert res.applicable
                assert res.bound == cf.degree_profile[ell + 1], (n, k, ell)

    def test_f87_bound_matches_h_ell_size(self):
        for n in range(7, 12):
            for k in range(3, min(5, (n - 1) // 2) + 1):
                for ell in range(2, k + 1):
                    res = evaluate(BoundSpec("F87", n, k, ell=ell))
                    assert res.bound == closed_form(
                        ConstructionSpec("H_ell", n, k, ell)).size

    def test_ekr_star_size(self):
        res = evaluate(BoundSpec("EKR", 9, 4, t=2))
        assert res.applicable and res.bound == binom(7, 2)
        assert not evaluate(BoundSpec("EKR", 8, 4, t=2)).applicable


class TestSweeps:
    def test_i41_clean_on_hypothesis_range(self):
        rep = inequality_sweep("I41", {"k": (3, 12),
                                       "n": (lambda e: 6 * e["k"] - 9,
                                             lambda e: 6 * e["k"] + 30)})
        assert rep.passed and not rep.violations
        assert rep.points_checked == 10 * 40

    def test_i47_clean(self):
        rep = inequality_sweep("I47", {"k": (3, 12),
                                       "n": (lambda e: 2 * e["k"] + 1,
                                             lambda e: 6 * e["k"] - 10)})
        assert rep.passed
        assert rep.points_checked > 0

    def test_i53_example_point(self):
        rep = inequality_sweep("I53", {"t": (1, 1), "r": (3, 3),
                                       "k": (3, 3), "n": (27, 27)})
        assert rep.passed and rep.points_checked == 1

    def test_lvsh4_crossover_point(self):
        rep = inequality_sweep("LvsH4", {"k": (10, 10), "n": (27, 27)})
        assert rep.passed and rep.points_checked == 1
        cf_l = closed_form(ConstructionSpec("L_r", 27, 10, 3))
        cf_h = closed_form(ConstructionSpec("H_ell", 27, 10, 3))
        assert cf_l.degree_profile[4] > cf_h.degree_profile[4]

    def test_lvsh5_range(self):
        rep = inequality_sweep("LvsH5", {"k": (4, 14),
                                         "n": (lambda e: 2 * e["k"] + 1,
                                               lambda e: 4 * e["k"] - 5)})
        assert rep.passed
        assert rep.points_checked > 0

    def test_out_of_hypothesis_points_not_violations(self):
        rep = inequality_sweep("I41", {"k": (3, 3), "n": (3, 8)})
        assert rep.points_checked == 0
        assert rep.out_of_hypothesis == 6
        assert rep.passed

    def test_missing_axis(self):
        with pytest.raises(ParameterError):
            inequality_sweep("I41", {"k": (3, 5)})

    def test_unknown_id(self):
        with pytest.raises(ParameterError):
            inequality_sweep("I99", {"k": (3, 3), "n": (9, 9)})

    def test_sweep_ids_complete(self):
        assert set(SWEEP_IDS) == {"I41", "I47", "I53", "LvsH4", "LvsH5"}
