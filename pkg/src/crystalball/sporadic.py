"""The sporadic triangle groups S(p, tau) and their Thompson 3,3,4;6
presentation, built from the explicit matrices

    R1 = [[u^2, tau, tau'], [0, ubar, 0], [0, 0, ubar]],   J = cyclic shift,

with u = e^(2 pi i / 3p), tau' = -u * conj(tau), and the circulant Hermitian
form with alpha = 2 - u^3 - ubar^3, beta = (ubar^2 - u) tau (the rescaled
zero-diagonal limit form when u = 1).  Everything is verified exactly over
Q(zeta_72); the module also carries the nondiscreteness witness for the
conjugate trace parameter at p = 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .cyclo import (
    CycNum,
    CycPoly,
    RatPoly,
    cyclotomic_factor_scan,
    embed_constant,
    galois_norm,
    is_irreducible,
    rotation_eigenvalue,
    DEFAULT_ORDER,
)
from .isometry import (
    IsometryClass,
    classify,
    eigenvalue_order_profile,
    goldman_f,
    is_complex_reflection,
)
from .matrices import (
    HermitianForm,
    SquareMatrix,
    braid_length,
    preserves_form,
    projective_order,
)

INFINITY = math.inf


def sigma1(order: int = DEFAULT_ORDER) -> CycNum:
    return embed_constant("sigma1", order)


def sigma1bar(order: int = DEFAULT_ORDER) -> CycNum:
    return embed_constant("sigma1bar", order)


@dataclass(frozen=True)
class SporadicGroupData:
    p: float
    tau: CycNum
    u: CycNum
    r1: SquareMatrix
    r2: SquareMatrix
    r3: SquareMatrix
    j: SquareMatrix
    form: HermitianForm

    @property
    def generators(self) -> tuple[SquareMatrix, SquareMatrix, SquareMatrix]:
        return self.r1, self.r2, self.r3


def build_sporadic(p, tau: CycNum, order: int = DEFAULT_ORDER) -> SporadicGroupData:
    """Construct the group data for S(p, tau) and verify its defining
    identities exactly (trace conditions, form invariance, the eigenvalue
    multiset of R1, and the cyclic symmetry of the form)."""
    if tau.order != order:
        raise ValueError("tau does not live in the configured field")
    u = rotation_eigenvalue(p, order)
    one = CycNum.one(order)
    zero = CycNum.zero(order)
    ubar = u.conj()
    tau_prime = -u * tau.conj()
    r1 = SquareMatrix.from_rows([
        [u * u, tau, tau_prime],
        [zero, ubar, zero],
        [zero, zero, ubar],
    ])
    j = SquareMatrix.from_rows([
        [zero, zero, one],
        [one, zero, zero],
        [zero, one, zero],
    ])
    if p == INFINITY:
        i = embed_constant("i", order)
        t, tb = tau, tau.conj()
        h = SquareMatrix.from_rows([
            [zero, -i * t, i * tb],
            [i * tb, zero, -i * t],
            [-i * t, i * tb, zero],
        ])
    else:
        alpha = 2 - u ** 3 - ubar ** 3
        beta = (ubar * ubar - u) * tau
        bb = beta.conj()
        h = SquareMatrix.from_rows([
            [alpha, beta, bb],
            [bb, alpha, beta],
            [beta, bb, alpha],
        ])
    form = HermitianForm(h)
    j_inv = j.inverse()
    r2 = j * r1 * j_inv
    r3 = j_inv * r1 * j
    data = SporadicGroupData(p, tau, u, r1, r2, r3, j, form)
    _verify_construction(data, tau_prime)
    return data


def _verify_construction(data: SporadicGroupData, tau_prime: CycNum) -> None:
    r1, j, h = data.r1, data.j, data.form
    order = data.tau.order
    assert (r1 * j).trace() == data.tau, "trace condition tr(R1 J) failed"
    assert (r1 * j.inverse()).trace() == tau_prime, "trace condition tr(R1 J^-1) failed"
    for m in (r1, data.r2, data.r3, j):
        assert preserves_form(m, h), "generator does not preserve the form"
    assert j.conj_transpose() * h.matrix * j == h.matrix
    # R1 has eigenvalues u^2, ubar, ubar
    u, ubar = data.u, data.u.conj()
    one = CycNum.one(order)
    lin_u2 = CycPoly(order, [-(u * u), one])
    lin_ub = CycPoly(order, [-ubar, one])
    assert r1.char_poly().monic() == lin_u2 * lin_ub * lin_ub, "R1 eigenvalue multiset"


def verify_r1j_order(data: SporadicGroupData, cap: int = 100) -> int:
    """Projective order of R1 J (smallest power that is scalar), plus the
    induced word identity J = R1R2R3R1R2R3R1R2 checked as exact matrices."""
    k = projective_order(data.r1 * data.j, cap)
    r1, r2, r3 = data.generators
    word = r1 * r2 * r3 * r1 * r2 * r3 * r1 * r2
    assert word == data.j, "J = R1R2R3R1R2R3R1R2 failed"
    return k


def classify_r1j(data: SporadicGroupData) -> IsometryClass:
    return classify(data.r1 * data.j, data.form)


# ---------------------------------------------------------------------------
# Thompson generators


@dataclass(frozen=True)
class ThompsonGeneratorsE1:
    r1: SquareMatrix
    r2: SquareMatrix
    r3: SquareMatrix

    @property
    def generators(self) -> tuple[SquareMatrix, SquareMatrix, SquareMatrix]:
        return self.r1, self.r2, self.r3


def thompson_change_of_generators(data: SporadicGroupData) -> ThompsonGeneratorsE1:
    """The re-generated set: with M1, M2, M3 the standard generators,
    R1 = (M3M1M2M1^-1) M3 (M3M1M2M1^-1)^-1, R2 = (M3M1) M2 (M3M1)^-1,
    R3 = M1."""
    m1, m2, m3 = data.r1, data.r2, data.r3
    c = m3 * m1 * m2 * m1.inverse()
    d = m3 * m1
    return ThompsonGeneratorsE1(
        r1=c * m3 * c.inverse(),
        r2=d * m2 * d.inverse(),
        r3=m1,
    )


def braid_profile(gens: ThompsonGeneratorsE1, max_k: int = 12):
    """(br(R2,R3), br(R3,R1), br(R1,R2), br(R1, R3^-1 R2 R3))."""
    r1, r2, r3 = gens.generators
    twisted = r3.inverse() * r2 * r3
    return (
        braid_length(r2, r3, max_k),
        braid_length(r3, r1, max_k),
        braid_length(r1, r2, max_k),
        braid_length(r1, twisted, max_k),
    )


def generators_are_reflections(data: SporadicGroupData, gens: ThompsonGeneratorsE1) -> bool:
    """Each Thompson generator is a complex reflection (unipotent for the
    p = infinity degeneration, where the repeated eigenvalue collides)."""
    if data.p == INFINITY:
        return all(
            classify(g, data.form).subtag == "unipotent"
            for g in gens.generators
        )
    return all(is_complex_reflection(g, data.form) for g in gens.generators)


def mutual_generation_words(data: SporadicGroupData, half_radius: int = 4):
    """Words in the Thompson generators for each standard generator, found by
    a meet-in-the-middle search over the ball of the given half radius.
    Certifies that the two generating sets span the same matrix group (the
    Thompson generators are words in the standard ones by construction).
    Returns a dict target-name -> word length."""
    gens = thompson_change_of_generators(data)
    letters = []
    for name, g in zip("ABC", gens.generators):
        letters.append((name, g))
        letters.append((name.lower(), g.inverse()))
    ball: dict = {}
    ident = SquareMatrix.identity(3, data.tau.ring_zero())
    ball[ident.fingerprint()] = ("", ident)
    frontier = [("", ident)]
    for _ in range(half_radius):
        nxt = []
        for w, m in frontier:
            for name, g in letters:
                if w and w[-1].swapcase() == name:
                    continue
                p = m * g
                k = p.fingerprint()
                if k not in ball:
                    ball[k] = (w + name, p)
                    nxt.append((w + name, p))
        frontier = nxt
    lengths = {}
    for target_name, target in (("M1", data.r1), ("M2", data.r2), ("M3", data.r3)):
        found = None
        for w1, m in ball.values():
            rest = m.inverse() * target
            hit = ball.get(rest.fingerprint())
            if hit is not None:
                cand = w1 + hit[0]
                if found is None or len(cand) < len(found):
                    found = cand
        if found is None:
            raise AssertionError(f"{target_name} not reachable at radius {2 * half_radius}")
        lengths[target_name] = len(found)
    return lengths


# ---------------------------------------------------------------------------
# the nondiscreteness witness for S(4, conj(sigma1))


@dataclass(frozen=True)
class WitnessReport:
    trace: CycNum
    trace_matches_closed_form: bool
    goldman_value: CycNum
    goldman_matches_closed_form: bool
    goldman_sign: int
    classification: IsometryClass
    char_poly_matches: bool
    unity_eigenvalue: CycNum
    unity_order: int
    residual_min_poly: RatPoly
    residual_degree: int
    residual_irreducible: bool
    residual_cyclotomic_factors: list
    quadratic_divides_min_poly: bool
    numeric_root_residuals: tuple
    counterpart_goldman_sign: int
    counterpart_classification: IsometryClass


def nondiscreteness_witness_s4bar(order: int = DEFAULT_ORDER) -> WitnessReport:
    """Assemble and check every ingredient of the witness that
    M = R3 R1 R2 J inside S(4, conj(sigma1)) is regular elliptic of infinite
    order, while its S(4, sigma1) counterpart is loxodromic."""
    if order % 24 != 0:
        raise ValueError("the witness needs sqrt2, sqrt3 and i: order divisible by 24")
    data = build_sporadic(4, sigma1bar(order), order)
    m = data.r3 * data.r1 * data.r2 * data.j
    assert m.det() == CycNum.one(order), "witness matrix is not unimodular"
    tau = m.trace()
    s2 = embed_constant("sqrt2", order)
    s3 = embed_constant("sqrt3", order)
    i = embed_constant("i", order)
    closed = (s3 + i) * (i - (1 + i) * s2) * Fraction(1, 2)
    f = goldman_f(tau)
    f_closed = CycNum.rational(88, order) - 64 * s2
    cls = classify(m, data.form)
    cp = m.char_poly().monic()
    expected_cp = CycPoly(order, [-CycNum.one(order), tau.conj(), -tau, CycNum.one(order)])
    unity_value = -(i + s3) * Fraction(1, 2)
    profile = cls.eigen_profile
    unity_entries = [e for e in profile if e.unity_order is not None]
    residual_entries = [e for e in profile if e.residual_norm is not None]
    assert len(unity_entries) == 1 and len(residual_entries) == 1, "unexpected spectrum shape"
    assert unity_entries[0].multiplicity == 1 and residual_entries[0].multiplicity == 2
    min_poly = residual_entries[0].residual_norm
    # the residual quadratic divides the rational minimal polynomial over the field
    quadratic = cp // CycPoly(order, [-unity_value, CycNum.one(order)])
    lifted = CycPoly.from_rational(min_poly, order)
    divides = (lifted % quadratic).is_zero()
    residuals = _numeric_quadratic_root_residuals(quadratic, min_poly)
    counterpart = build_sporadic(4, sigma1(order), order)
    mc = counterpart.r3 * counterpart.r1 * counterpart.r2 * counterpart.j
    from .cyclo import sign_of_real

    return WitnessReport(
        trace=tau,
        trace_matches_closed_form=(tau == closed),
        goldman_value=f,
        goldman_matches_closed_form=(f == f_closed),
        goldman_sign=sign_of_real(f),
        classification=cls,
        char_poly_matches=(cp == expected_cp),
        unity_eigenvalue=unity_entries[0].value,
        unity_order=unity_entries[0].unity_order,
        residual_min_poly=min_poly,
        residual_degree=min_poly.degree(),
        residual_irreducible=is_irreducible(min_poly),
        residual_cyclotomic_factors=cyclotomic_factor_scan(min_poly),
        quadratic_divides_min_poly=divides,
        numeric_root_residuals=residuals,
        counterpart_goldman_sign=sign_of_real(goldman_f(mc.trace())),
        counterpart_classification=classify(mc, counterpart.form, with_profile=False),
    )


def _numeric_quadratic_root_residuals(quadratic: CycPoly, min_poly: RatPoly, dps: int = 60):
    """|min_poly(root)| for both numeric roots of the quadratic; the spec's
    1e-30 cross-check of the symbolic descent."""
    with mpmath.workdps(dps):
        c0, c1, c2 = (co.approx(dps) for co in quadratic.coeffs)
        a, b, c = mpmath.mpc(c2), mpmath.mpc(c1), mpmath.mpc(c0)
        disc = mpmath.sqrt(b * b - 4 * a * c)
        roots = [(-b + disc) / (2 * a), (-b - disc) / (2 * a)]
        residuals = []
        for r in roots:
            acc = mpmath.mpc(0)
            for co in reversed(min_poly.coeffs):
                acc = acc * r + mpmath.mpf(co.numerator) / mpmath.mpf(co.denominator)
            residuals.append(abs(acc))
        return tuple(float(x) for x in residuals)
