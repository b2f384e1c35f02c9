import random
from fractions import Fraction

import pytest

from crystalball.cyclo import CycNum, embed_constant
from crystalball.matrices import (
    CapExceededError,
    Fp,
    GroupClosure,
    HermitianForm,
    SingularMatrixError,
    SquareMatrix,
    braid_length,
    element_order,
    find_isomorphism,
    gl2_f3,
    group_closure,
    preserves_form,
    projective_order,
    verify_relation,
)


def cyc(v) -> CycNum:
    return CycNum.rational(v)


def mat(rows) -> SquareMatrix:
    return SquareMatrix.from_rows([[cyc(x) if isinstance(x, (int, Fraction)) else x for x in r] for r in rows])


J = mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


class TestMatOps:
    def test_det_of_permutation_j(self):
        assert J.det() == cyc(1)

    def test_char_poly_identity(self):
        ident = SquareMatrix.identity(3, cyc(0))
        cp = ident.char_poly()
        # (lam - 1)^3 = lam^3 - 3 lam^2 + 3 lam - 1
        assert [c.as_rational() for c in cp.coeffs] == [-1, 3, -3, 1]

    def test_inverse_and_singular(self):
        m = mat([[1, 2], [3, 4]])
        assert m * m.inverse() == SquareMatrix.identity(2, cyc(0))
        with pytest.raises(SingularMatrixError):
            mat([[1, 2], [2, 4]]).inverse()

    def test_conj_transpose(self):
        i = embed_constant("i")
        m = SquareMatrix.from_rows([[cyc(1), i], [cyc(0), cyc(2)]])
        assert m.conj_transpose() == SquareMatrix.from_rows([[cyc(1), cyc(0)], [-i, cyc(2)]])

    def test_trace_and_pow(self):
        assert (J ** 3).is_identity()
        assert (J ** -1) == J * J
        assert J.trace() == cyc(0)


class TestHermitianForm:
    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            HermitianForm(mat([[0, 1], [2, 0]]))

    def test_signature_definite(self):
        h = HermitianForm(mat([[2, 0], [0, 3]]))
        assert h.signature() == (2, 0, 0)

    def test_signature_mixed_and_degenerate(self):
        assert HermitianForm(mat([[1, 0], [0, -1]])).signature() == (1, 1, 0)
        assert HermitianForm(mat([[1, 0], [0, 0]])).signature() == (1, 0, 1)
        assert HermitianForm(mat([[-2, 0, 0], [0, -3, 0], [0, 0, 5]])).signature() == (1, 2, 0)

    def test_signature_basis_change_invariance(self):
        rng = random.Random(41)
        isqrt2 = embed_constant("isqrt2")
        h = HermitianForm(mat([[2, 1, 0], [1, -1, 0], [0, 0, 3]]))
        sig = h.signature()
        found = 0
        while found < 20:
            entries = [
                rng.choice([cyc(-1), cyc(0), cyc(1), isqrt2])
                for _ in range(9)
            ]
            p = SquareMatrix(3, entries)
            if p.det().is_zero():
                continue
            found += 1
            moved = HermitianForm(p.conj_transpose() * h.matrix * p)
            assert moved.signature() == sig

    def test_scaling_breaks_form(self):
        h = HermitianForm(mat([[1, 0], [0, 1]]))
        assert not preserves_form(SquareMatrix.identity(2, cyc(0)).scale(cyc(2)), h)
        assert preserves_form(SquareMatrix.identity(2, cyc(0)), h)


class TestClosure:
    def test_identity_only(self):
        g = group_closure([SquareMatrix.identity(2, cyc(0))])
        assert len(g) == 1

    def test_cyclic_from_j(self):
        g = group_closure([J])
        assert len(g) == 3
        assert element_order(J) == 3

    def test_cap_exceeded(self):
        # a parabolic element generates an infinite cyclic group
        shear = mat([[1, 1], [0, 1]])
        with pytest.raises(CapExceededError):
            group_closure([shear], cap=50)

    def test_words_are_shortest(self):
        g = group_closure([J])
        assert g.word_of(SquareMatrix.identity(3, cyc(0))) == ()
        assert g.word_of(J) == (0,)

    def test_fingerprint_injective_on_closure(self):
        g = gl2_f3()
        mats = list(g)
        keys = {m.fingerprint() for m in mats}
        assert len(keys) == len(mats)
        for a in mats[:8]:
            for b in mats:
                assert (a.fingerprint() == b.fingerprint()) == (a == b)

    def test_lagrange_on_gl2f3(self):
        g = gl2_f3()
        for m in g:
            assert 48 % element_order(m) == 0


class TestRelations:
    def test_j_cubed(self):
        assert verify_relation([(0, 3)], [J])

    def test_projective_mode(self):
        w = mat([[0, -1], [1, 0]])  # order 4, square is -I
        assert not verify_relation([(0, 2)], [w])
        assert verify_relation([(0, 2)], [w], projective=True)

    def test_conjugation_invariance(self):
        rng = random.Random(5)
        gens = [mat([[0, -1], [1, 0]]), mat([[0, 1], [1, 0]])]
        word = [(0, 2), (1, 2)]
        base = verify_relation(word, gens)
        h = mat([[1, 2], [1, 3]])
        conj = [h * g * h.inverse() for g in gens]
        assert verify_relation(word, conj) == base


class TestBraid:
    def test_equal_arguments(self):
        assert braid_length(J, J) == 2

    def test_symmetry(self):
        a = mat([[0, -1], [1, 0]])
        b = mat([[1, 1], [0, 1]])
        assert braid_length(a, b, 12) == braid_length(b, a, 12)

    def test_commuting_pair(self):
        a = mat([[2, 0], [0, 3]])
        b = mat([[5, 0], [0, 7]])
        assert braid_length(a, b) == 2

    def test_none_when_no_relation(self):
        a = mat([[1, 1], [0, 1]])
        b = mat([[1, 0], [1, 1]])
        assert braid_length(a, b, 9) is None


class TestIsomorphism:
    def test_self_isomorphism(self):
        g = group_closure([J])
        assert find_isomorphism(g, g) is not None

    def test_c4_vs_klein_four(self):
        i_rot = mat([[0, -1], [1, 0]])  # order 4
        c4 = group_closure([i_rot])
        a = mat([[-1, 0], [0, 1]])
        b = mat([[1, 0], [0, -1]])
        klein = group_closure([a, b])
        assert len(c4) == len(klein) == 4
        assert find_isomorphism(c4, klein) is None

    def test_gl2f3_order(self):
        assert len(gl2_f3()) == 48
