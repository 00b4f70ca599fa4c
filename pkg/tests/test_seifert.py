import math
import random

import pytest

from concordance.errors import (DimensionMismatch, InvalidDeterminant,
                                InvalidSeifertMatrix, SingularEvaluation)
from concordance.laurent import parse_poly
from concordance.seifert import (SeifertMatrix, alexander, arf,
                                 is_algebraically_slice_genus1,
                                 levine_tristram, surgery_curve_classes)
from helpers import (alexander_raw, brute_force_isotropics, democratic_arf,
                     is_unit_multiple, mat_mul, random_unimodular,
                     random_valid_2x2, random_valid_genus2,
                     random_valid_seifert)

R = SeifertMatrix.from_rows([[3, 2], [1, 0]])
TREFOIL = SeifertMatrix.from_rows([[-1, 1], [0, -1]])
FIGURE8 = SeifertMatrix.from_rows([[1, 1], [0, -1]])
UNKNOT = SeifertMatrix(())


class TestValidation:
    def test_rejects_non_square(self):
        with pytest.raises(InvalidSeifertMatrix):
            SeifertMatrix.from_rows([[1, 2, 3], [4, 5, 6]])

    def test_rejects_odd_dimension(self):
        with pytest.raises(InvalidSeifertMatrix):
            SeifertMatrix.from_rows([[1]])

    def test_rejects_bad_intersection_form(self):
        with pytest.raises(InvalidSeifertMatrix):
            SeifertMatrix.from_rows([[1, 0], [0, 1]])  # det(V - V^T) = 0

    def test_empty_matrix_is_unknot(self):
        assert UNKNOT.genus == 0

    def test_mirror_and_transpose_stay_valid(self):
        for v in (R, TREFOIL, FIGURE8):
            assert v.mirror().dim == 2
            assert v.transpose().dim == 2


class TestAlexander:
    def test_base_knot(self):
        assert alexander(R) == parse_poly("-2t + 5 - 2t^-1")

    def test_trefoil(self):
        assert alexander(TREFOIL) == parse_poly("t - 1 + t^-1")

    def test_unknot(self):
        assert alexander(UNKNOT) == parse_poly("1")

    def test_value_one_at_one(self):
        rng = random.Random(3)
        for _ in range(200):
            v = random_valid_2x2(rng)
            assert alexander(v).eval_int(1) == 1

    def test_matches_permutation_determinant(self):
        rng = random.Random(5)
        for _ in range(100):
            v = random_valid_2x2(rng)
            assert is_unit_multiple(alexander(v), alexander_raw(v))
        for _ in range(15):
            v = random_valid_genus2(rng)
            got = alexander(v)
            assert is_unit_multiple(got, alexander_raw(v))
            assert got.eval_int(1) == 1
            assert got.is_palindromic()

    def test_genus3_matches_permutation_determinant(self):
        rng = random.Random(6)
        for _ in range(5):
            v = random_valid_seifert(rng, genus=3, bound=2)
            got = alexander(v)
            assert is_unit_multiple(got, alexander_raw(v))
            assert got.eval_int(1) == 1
            assert got.is_palindromic()

    def test_invariant_under_unimodular_congruence(self):
        # U^T V U presents the same form in a new basis; the normalized
        # polynomial must not notice
        rng = random.Random(8)
        for _ in range(100):
            v = random_valid_2x2(rng)
            u = random_unimodular(rng)
            ut = [list(row) for row in zip(*u)]
            conjugated = SeifertMatrix.from_rows(
                mat_mul(mat_mul(ut, [list(r) for r in v.entries]), u))
            assert alexander(conjugated) == alexander(v)
            assert arf(conjugated) == arf(v)


class TestArf:
    def test_trefoil_nonzero(self):
        assert alexander(TREFOIL).eval_int(-1) == -3  # -3 = 5 mod 8
        assert arf(TREFOIL) == 1

    def test_base_knot_zero(self):
        assert alexander(R).eval_int(-1) == 9  # 9 = 1 mod 8
        assert arf(R) == 0

    def test_unknot(self):
        assert arf(UNKNOT) == 0

    def test_figure8(self):
        assert arf(FIGURE8) == 1

    def test_matches_quadratic_refinement(self):
        rng = random.Random(11)
        for _ in range(300):
            v = random_valid_2x2(rng)
            assert arf(v) == democratic_arf(v)

    def test_guard_rejects_non_knot_polynomial(self, monkeypatch):
        # unreachable through the validated constructor; force the branch
        import concordance.seifert as module
        monkeypatch.setattr(module, "alexander",
                            lambda v: parse_poly("t - 3 + t^-1"))
        with pytest.raises(InvalidDeterminant):
            arf(TREFOIL)


class TestLevineTristram:
    def test_trefoil_at_pi(self):
        # 2(V + V^T) = [[-4, 2], [2, -4]], eigenvalues -2 and -6
        assert levine_tristram(TREFOIL, math.pi) == -2

    def test_base_knot_at_pi(self):
        # 2(V + V^T) = [[12, 6], [6, 0]] has negative determinant
        assert levine_tristram(R, math.pi) == 0

    def test_unknot(self):
        assert levine_tristram(UNKNOT, 1.0) == 0

    def test_trefoil_step_function(self):
        assert levine_tristram(TREFOIL, math.pi / 4) == 0
        assert levine_tristram(TREFOIL, math.pi / 2) == -2
        assert levine_tristram(TREFOIL, 2 * math.pi - 0.3) == 0

    def test_jump_point_raises(self):
        with pytest.raises(SingularEvaluation):
            levine_tristram(TREFOIL, math.pi / 3)

    def test_tolerance_widens_the_guard(self):
        theta = math.pi / 3 + 1e-4
        assert levine_tristram(TREFOIL, theta) == -2
        with pytest.raises(SingularEvaluation) as info:
            levine_tristram(TREFOIL, theta, tolerance=1e-2)
        assert info.value.theta == pytest.approx(theta)

    def test_domain_check(self):
        with pytest.raises(ValueError):
            levine_tristram(TREFOIL, 0.0)
        with pytest.raises(ValueError):
            levine_tristram(TREFOIL, 2 * math.pi)

    def test_conjugation_symmetry(self):
        rng = random.Random(13)
        done = 0
        while done < 200:
            v = random_valid_2x2(rng)
            theta = rng.uniform(0.05, math.pi - 0.05)
            try:
                left = levine_tristram(v, theta)
                right = levine_tristram(v, 2 * math.pi - theta)
            except SingularEvaluation:
                continue
            assert left == right
            done += 1

    def test_mirror_negates(self):
        rng = random.Random(17)
        done = 0
        while done < 200:
            v = random_valid_2x2(rng)
            theta = rng.uniform(0.05, 2 * math.pi - 0.05)
            try:
                sig = levine_tristram(v, theta)
                mirrored = levine_tristram(v.mirror(), theta)
            except SingularEvaluation:
                continue
            assert mirrored == -sig
            done += 1

    def test_genus2_block_sum_adds(self):
        # exercises the eigenvalue branch against the 2x2 closed form
        rng = random.Random(19)
        done = 0
        while done < 50:
            v1 = random_valid_2x2(rng)
            v2 = random_valid_2x2(rng)
            block = [[0] * 4 for _ in range(4)]
            for i in range(2):
                for j in range(2):
                    block[i][j] = v1.entries[i][j]
                    block[i + 2][j + 2] = v2.entries[i][j]
            big = SeifertMatrix.from_rows(block)
            theta = rng.uniform(0.05, 2 * math.pi - 0.05)
            try:
                total = levine_tristram(big, theta)
                parts = levine_tristram(v1, theta) + levine_tristram(v2, theta)
            except SingularEvaluation:
                continue
            assert total == parts
            done += 1

    def test_genus2_symmetry(self):
        rng = random.Random(23)
        done = 0
        while done < 30:
            v = random_valid_genus2(rng)
            theta = rng.uniform(0.05, math.pi - 0.05)
            try:
                left = levine_tristram(v, theta)
                right = levine_tristram(v, 2 * math.pi - theta)
            except SingularEvaluation:
                continue
            assert left == right
            assert left % 2 == 0
            done += 1


class TestSurgeryCurves:
    def test_base_knot(self):
        assert surgery_curve_classes(R) == [(0, 1), (1, -1)]

    def test_figure8_empty(self):
        # discriminant 5 is not a square
        assert surgery_curve_classes(FIGURE8) == []

    def test_degenerate_product_form(self):
        v = SeifertMatrix.from_rows([[0, 1], [0, 0]])
        assert surgery_curve_classes(v) == [(0, 1), (1, 0)]

    def test_trefoil_not_slice(self):
        assert surgery_curve_classes(TREFOIL) == []

    def test_odd_middle_coefficient(self):
        # V12 - V21 = +-1 forces V12 + V21 odd, so the discriminant is odd
        # and the coincident-root case can never arise for a valid matrix
        rng = random.Random(37)
        for _ in range(100):
            v = random_valid_2x2(rng)
            assert (v.entries[0][1] + v.entries[1][0]) % 2 == 1

    def test_requires_2x2(self):
        with pytest.raises(DimensionMismatch):
            surgery_curve_classes(UNKNOT)

    def test_matches_brute_force(self):
        # the returned list is complete, so the box search must find
        # exactly the returned classes that fit in the box
        rng = random.Random(29)
        nonempty = 0
        for _ in range(300):
            v = random_valid_2x2(rng)
            got = surgery_curve_classes(v)
            assert len(got) <= 2
            in_box = {c for c in got if max(abs(x) for x in c) <= 10}
            assert brute_force_isotropics(v) == in_box
            nonempty += bool(got)
        assert nonempty > 30

    def test_classes_are_primitive_isotropic(self):
        rng = random.Random(31)
        for _ in range(300):
            v = random_valid_2x2(rng)
            for (u, w) in surgery_curve_classes(v):
                assert math.gcd(u, w) == 1
                q = (v.entries[0][0] * u * u
                     + (v.entries[0][1] + v.entries[1][0]) * u * w
                     + v.entries[1][1] * w * w)
                assert q == 0
                assert u > 0 or (u == 0 and w > 0)

    def test_slice_flag(self):
        assert is_algebraically_slice_genus1(R)
        assert not is_algebraically_slice_genus1(FIGURE8)
        assert is_algebraically_slice_genus1(
            SeifertMatrix.from_rows([[0, 1], [0, 0]]))
