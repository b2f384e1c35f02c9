"""Classification of isometries of a signature-(2,1) Hermitian form.

For a determinant-1 matrix with trace tau, the sign of Goldman's discriminant

    f(tau) = |tau|^4 - 8 Re(tau^3) + 18 |tau|^2 - 27

separates regular elliptic (f < 0) from loxodromic (f > 0); on the f = 0
wall the element has a repeated eigenvalue and is either elliptic
(diagonalizable; complex reflections are the geometrically relevant subcase)
or parabolic (unipotent when the characteristic polynomial is (lam-1)^3).
All decisions below are exact: the sign via certified enclosures, repeated
roots via polynomial gcds over the cyclotomic field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import (
    CycNum,
    CycPoly,
    RatPoly,
    cyclotomic_factor_scan,
    galois_norm,
    is_root_of_unity,
    sign_of_real,
)
from .matrices import HermitianForm, SquareMatrix, preserves_form

REGULAR_ELLIPTIC = "regular-elliptic"
ELLIPTIC_NON_REGULAR = "elliptic-non-regular"
COMPLEX_REFLECTION = "complex-reflection"
PARABOLIC = "parabolic"
LOXODROMIC = "loxodromic"
IDENTITY = "identity"
UNIPOTENT = "unipotent"
ELLIPTO_PARABOLIC = "ellipto-parabolic"


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True)
class ProfileEntry:
    """One block of the spectrum: either a linear factor with its root, or a
    residual factor irreducible over the scan (root-of-unity-free)."""

    value: CycNum | None
    residual_norm: RatPoly | None
    multiplicity: int
    unity_order: int | None


@dataclass(frozen=True)
class IsometryClass:
    tag: str
    subtag: str | None
    eigen_profile: tuple[ProfileEntry, ...]

    def is_regular_elliptic(self) -> bool:
        return self.tag == REGULAR_ELLIPTIC

    def finite_order(self) -> int | None:
        """Order implied by the eigenvalue profile: lcm of the root-of-unity
        orders when every eigenvalue is a root of unity, else None."""
        import math

        acc = 1
        for e in self.eigen_profile:
            if e.unity_order is None:
                return None
            acc = math.lcm(acc, e.unity_order)
        return acc


def goldman_f(tau: CycNum) -> CycNum:
    """The trace discriminant; exact, real (asserted)."""
    norm = tau * tau.conj()
    re_cubed = (tau ** 3 + tau.conj() ** 3) * Fraction(1, 2)
    f = norm * norm - 8 * re_cubed + 18 * norm - 27
    assert f.is_real()
    return f


def eigenvalue_order_profile(m: SquareMatrix) -> tuple[ProfileEntry, ...]:
    """Factor the characteristic polynomial as far as roots of unity allow;
    residual factors get a Galois-norm descent plus a cyclotomic scan, which
    certifies that none of their roots is a root of unity."""
    cp = m.char_poly()
    order = cp.order
    entries: list[ProfileEntry] = []
    residual = cp.monic()
    for j in range(order):
        z = CycNum.zeta_power(j, order)
        mult = 0
        while residual.degree() >= 1 and residual.evaluate(z).is_zero():
            residual = residual // CycPoly(order, [-z, CycNum.one(order)])
            mult += 1
        if mult:
            entries.append(ProfileEntry(z, None, mult, is_root_of_unity(z)))
    if residual.degree() >= 1:
        norm = galois_norm(residual).squarefree_part()
        assert cyclotomic_factor_scan(norm) == [], "residual factor has a root of unity"
        entries.append(ProfileEntry(None, norm, residual.degree(), None))
    entries.sort(key=lambda e: (e.value is None, e.unity_order or 0, e.value.serialize() if e.value else ""))
    return tuple(entries)


def _is_diagonalizable(m: SquareMatrix) -> bool:
    """Exact: the squarefree part of the characteristic polynomial must
    annihilate the matrix."""
    cp = m.char_poly()
    sf = cp.squarefree_part()
    ident = SquareMatrix.identity(m.dim, m.entries[0])
    acc = ident.scale(CycNum.zero(cp.order))
    for c in reversed(sf.coeffs):
        acc = acc * m + ident.scale(c)
    return all(e.is_zero() for e in acc.entries)


def _kernel_vector(m: SquareMatrix):
    """A nonzero kernel vector of a singular matrix, by exact elimination."""
    n = m.dim
    rows = [list(m.row(i)) for i in range(n)]
    zero = m.entries[0].ring_zero()
    one = m.entries[0].ring_one()
    pivots = {}
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, n):
            if not rows[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(n):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        raise ValueError("matrix is nonsingular")
    fc = free[0]
    vec = [zero] * n
    vec[fc] = one
    for c, pr in pivots.items():
        vec[c] = -rows[pr][fc]
    return tuple(vec)


def is_complex_reflection(m: SquareMatrix, h: HermitianForm) -> bool:
    """Double eigenvalue, diagonalizable, and the simple eigenvector has
    positive square norm for the form."""
    if not preserves_form(m, h):
        raise ClassificationError("matrix does not preserve the form")
    cp = m.char_poly()
    g = cp.gcd(cp.derivative())
    if g.degree() != 1:
        return False  # no double root (or triple root: not a reflection)
    if not _is_diagonalizable(m):
        return False
    double = -(g.monic().coeffs[0])
    simple = m.trace() - double - double
    ident = SquareMatrix.identity(m.dim, m.entries[0])
    v = _kernel_vector(m - ident.scale(simple))
    return sign_of_real(h.evaluate(v)) > 0


def classify(m: SquareMatrix, h: HermitianForm, normalize: bool = True,
             with_profile: bool = True) -> IsometryClass:
    """Full classification of a form-preserving matrix of determinant 1.

    With normalize=True a non-unimodular input is rescaled by an explicit
    root of unity s with s^3 det = 1 when one exists in the field; Goldman's
    discriminant is only meaningful for determinant-1 representatives.
    with_profile=False skips the eigenvalue order profile (whose Galois-norm
    descent is the only costly step).
    """
    if not preserves_form(m, h):
        raise ClassificationError("matrix does not preserve the form")
    det = m.det()
    if not det == CycNum.one(det.order):
        if not normalize:
            raise ClassificationError("determinant is not 1")
        m = _scale_to_det_one(m, det)
    profile = eigenvalue_order_profile(m) if with_profile else ()
    if m.is_identity():
        return IsometryClass(IDENTITY, None, profile)
    f = goldman_f(m.trace())
    sgn = sign_of_real(f)
    if sgn < 0:
        return IsometryClass(REGULAR_ELLIPTIC, None, profile)
    if sgn > 0:
        return IsometryClass(LOXODROMIC, None, profile)
    if _is_diagonalizable(m):
        sub = COMPLEX_REFLECTION if is_complex_reflection(m, h) else None
        return IsometryClass(ELLIPTIC_NON_REGULAR, sub, profile)
    cp = m.char_poly()
    one = CycNum.one(cp.order)
    unipotent_poly = CycPoly(cp.order, [-one, 3 * one, -3 * one, one])
    sub = UNIPOTENT if cp.monic() == unipotent_poly else ELLIPTO_PARABOLIC
    return IsometryClass(PARABOLIC, sub, profile)


def _scale_to_det_one(m: SquareMatrix, det: CycNum) -> SquareMatrix:
    order = det.order
    target = det.inverse()
    for j in range(order):
        s = CycNum.zeta_power(j, order)
        if s ** m.dim == target:
            return m.scale(s)
    raise ClassificationError(
        "no root-of-unity determinant normalizer exists in the field; "
        "classification would require the eigenvalue-profile fallback"
    )
