from fractions import Fraction as F

import pytest

from torsionforms import FAMILIES, PROVENANCE, SideConditionError, Witness, eval_AB, eval_FG, fg_forms

EXPECTED_DEGREES = {5: (4, 6, 2, 3), 7: (8, 12, 4, 6), 8: (8, 12, 4, 6), 9: (12, 18, 6, 9)}
EXPECTED_KSETS = {
    5: (F(1),),
    7: (F(1), F(1, 3)),
    8: (F(1), F(1, 2)),
    9: (F(1), F(1, 3)),
}
EXPECTED_SIGMA = {5: -1, 7: 1, 8: 1, 9: 1}


class TestFamilyTables:
    def test_degree_table(self):
        for n, fam in FAMILIES.items():
            assert fam.degrees == EXPECTED_DEGREES[n]
            assert fam.U.degree == fam.degrees[0]
            assert fam.V.degree == fam.degrees[1]
            for Xf in fam.point_x:
                assert Xf.degree == fam.degrees[2]
            for Yf in fam.point_y:
                assert Yf.degree == fam.degrees[3]

    def test_branch_sets(self):
        for n, fam in FAMILIES.items():
            assert fam.kset == EXPECTED_KSETS[n]

    def test_sigma_orientation_frozen(self):
        for n, fam in FAMILIES.items():
            assert fam.sigma == EXPECTED_SIGMA[n]

    def test_homogenization_identity_exact(self):
        # -27 U_n(sigma x, 1) == A_num(x) and (+-54) V_n(sigma x, 1) == B_num(x)
        for n, fam in FAMILIES.items():
            assert -27 * fam.U.dehomogenize(fam.sigma) == fam.tate_A_num
            assert fam.b_sign * 54 * fam.V.dehomogenize(fam.sigma) == fam.tate_B_num

    def test_form_anchor_values(self):
        assert FAMILIES[5].U(1, 1) == 16
        assert FAMILIES[5].V(1, 1) == 152
        assert FAMILIES[7].U(2, 1) == 129
        assert FAMILIES[7].V(2, 1) == 2241
        assert FAMILIES[8].U(3, 1) == 51361
        assert FAMILIES[8].V(3, 1) == -6826609
        assert FAMILIES[9].U(2, 1) == 657
        assert FAMILIES[9].V(2, 1) == 22329

    def test_b8_alpha10_term_is_zero(self):
        assert FAMILIES[8].tate_B_num.coeffs[10] == 0

    def test_provenance_notes_present(self):
        for key in (
            "main-disc-formula", "A8-p5q3", "B8-alpha10", "B8-v-bracket",
            "n8-z-system", "n9-point-y3", "disc-table-normalization",
        ):
            assert key in PROVENANCE and PROVENANCE[key]


class TestEvalAB:
    def test_order5_anchor(self):
        assert eval_AB(Witness(5, 1, 1, F(1))) == (-432, 8208)

    def test_order5_sign_pattern(self):
        # odd-degree terms cancel pairwise at |p| = |q| = 1 on both brackets
        assert eval_AB(Witness(5, 1, -1, F(1))) == (-432, 8208)
        assert eval_AB(Witness(5, 2, -1, F(1))) != eval_AB(Witness(5, 2, 1, F(1)))

    def test_branch_homogeneity_order7(self):
        A1, B1 = eval_AB(Witness(7, 2, 1, F(1)))
        A3, B3 = eval_AB(Witness(7, 2, 1, F(1, 3)))
        assert A1 == 81 * A3
        assert B1 == 729 * B3

    def test_branch_necessity_curves_from_witnesses(self):
        assert eval_AB(Witness(7, 2, 1, F(1, 3))) == (-43, 166)
        assert eval_AB(Witness(8, 6, 2, F(1, 2))) == (-22187952, 23592760704)
        assert eval_AB(Witness(9, 2, 1, F(1, 3))) == (-219, 1654)


class TestEvalFG:
    def test_scaling_of_anchor(self):
        assert eval_FG(Witness(5, 1, 1, F(1))) == (-432 * 1296, 8208 * 46656)

    def test_branch_constants(self):
        # (6k)^4 for k = 1/3 is 16, for k = 1/2 is 81
        assert fg_forms(7, F(1, 3))[0] == -27 * 16
        assert fg_forms(8, F(1, 2))[0] == -27 * 81
        assert fg_forms(9, F(1, 3))[1] == 54 * 64
        assert fg_forms(8, F(1, 2))[1] == -54 * 729

    def test_always_integral(self):
        for n, fam in FAMILIES.items():
            for k in fam.kset:
                cf, cg = fg_forms(n, k)
                assert isinstance(cf, int) and isinstance(cg, int)

    def test_invalid_branch_rejected(self):
        with pytest.raises(ValueError):
            fg_forms(7, F(1, 5))


class TestSideConditions:
    def test_zero_rejected_where_required(self):
        for n in (5, 7, 9):
            with pytest.raises(SideConditionError):
                Witness(n, 0, 1, F(1))
            with pytest.raises(SideConditionError):
                Witness(n, 1, 0, F(1))

    def test_p_equal_q_rejected(self):
        for n in (7, 8, 9):
            with pytest.raises(SideConditionError):
                Witness(n, 3, 3, F(1))

    def test_two_p_equal_q_rejected_for_order8(self):
        with pytest.raises(SideConditionError):
            Witness(8, 1, 2, F(1))
        Witness(7, 1, 2, F(1))  # fine for the other orders

    def test_k_outside_branch_set(self):
        with pytest.raises(SideConditionError):
            Witness(7, 2, 1, F(1, 2))
