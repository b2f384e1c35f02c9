"""Exact 2x2 / 3x3 matrices over a duck-typed scalar ring, Hermitian forms,
finite matrix-group closure, relation and braid-length checks, and a
brute-force isomorphism search for small groups.

Scalars must provide +, -, *, unary -, `is_zero()`, `conj()`, `inverse()`,
`ring_zero()`, `ring_one()`, equality and hashing.  CycNum, the prime-field
scalar Fp below, and the quadratic scalar used by the torus module all
qualify, so the same closure machinery runs over Q(zeta_72), F_3 and
Q(i*sqrt2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cyclo import CycNum, CycPoly, sign_of_real


class SingularMatrixError(ZeroDivisionError):
    pass


class CapExceededError(RuntimeError):
    """Closure enumeration hit the cap: the generated group is larger than
    the cap, possibly infinite."""


class Fp:
    """Element of the prime field F_p (only p = 3 is used, for GL(2,3))."""

    __slots__ = ("p", "v")

    def __init__(self, v: int, p: int = 3):
        self.p = p
        self.v = v % p

    def __add__(self, o):
        return Fp(self.v + o.v, self.p)

    def __sub__(self, o):
        return Fp(self.v - o.v, self.p)

    def __mul__(self, o):
        return Fp(self.v * o.v, self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def is_zero(self):
        return self.v == 0

    def conj(self):
        return self

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return Fp(pow(self.v, self.p - 2, self.p), self.p)

    def ring_zero(self):
        return Fp(0, self.p)

    def ring_one(self):
        return Fp(1, self.p)

    def __eq__(self, o):
        return isinstance(o, Fp) and self.p == o.p and self.v == o.v

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"Fp({self.v})"


class SquareMatrix:
    """Immutable square matrix of dimension 2 or 3, row-major entries."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries):
        entries = tuple(entries)
        if dim not in (2, 3) or len(entries) != dim * dim:
            raise ValueError("dimension must be 2 or 3 with dim^2 entries")
        self.dim = dim
        self.entries = entries

    @staticmethod
    def from_rows(rows) -> SquareMatrix:
        rows = [list(r) for r in rows]
        return SquareMatrix(len(rows), [e for r in rows for e in r])

    @staticmethod
    def identity(dim: int, sample) -> SquareMatrix:
        one, zero = sample.ring_one(), sample.ring_zero()
        return SquareMatrix(dim, [one if i == j else zero for i in range(dim) for j in range(dim)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.dim + j]

    def row(self, i):
        return self.entries[i * self.dim:(i + 1) * self.dim]

    def __mul__(self, other: SquareMatrix) -> SquareMatrix:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        n = self.dim
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            for j in range(n):
                acc = a[i * n] * b[j]
                for k in range(1, n):
                    acc = acc + a[i * n + k] * b[k * n + j]
                out.append(acc)
        return SquareMatrix(n, out)

    def __add__(self, other: SquareMatrix) -> SquareMatrix:
        return SquareMatrix(self.dim, [x + y for x, y in zip(self.entries, other.entries)])

    def __sub__(self, other: SquareMatrix) -> SquareMatrix:
        return SquareMatrix(self.dim, [x - y for x, y in zip(self.entries, other.entries)])

    def __neg__(self) -> SquareMatrix:
        return SquareMatrix(self.dim, [-x for x in self.entries])

    def scale(self, c) -> SquareMatrix:
        return SquareMatrix(self.dim, [c * x for x in self.entries])

    def __eq__(self, other) -> bool:
        return isinstance(other, SquareMatrix) and self.dim == other.dim and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.dim, self.entries))

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(repr(e) for e in self.row(i)) for i in range(self.dim))
        return f"SquareMatrix({self.dim}, [{rows}])"

    def transpose(self) -> SquareMatrix:
        n = self.dim
        return SquareMatrix(n, [self.entries[j * n + i] for i in range(n) for j in range(n)])

    def conj_transpose(self) -> SquareMatrix:
        n = self.dim
        return SquareMatrix(n, [self.entries[j * n + i].conj() for i in range(n) for j in range(n)])

    def trace(self):
        n = self.dim
        acc = self.entries[0]
        for i in range(1, n):
            acc = acc + self.entries[i * n + i]
        return acc

    def det(self):
        e = self.entries
        if self.dim == 2:
            return e[0] * e[3] - e[1] * e[2]
        return (e[0] * (e[4] * e[8] - e[5] * e[7])
                - e[1] * (e[3] * e[8] - e[5] * e[6])
                + e[2] * (e[3] * e[7] - e[4] * e[6]))

    def adjugate(self) -> SquareMatrix:
        e = self.entries
        if self.dim == 2:
            return SquareMatrix(2, [e[3], -e[1], -e[2], e[0]])
        cof = [
            e[4] * e[8] - e[5] * e[7], -(e[1] * e[8] - e[2] * e[7]), e[1] * e[5] - e[2] * e[4],
            -(e[3] * e[8] - e[5] * e[6]), e[0] * e[8] - e[2] * e[6], -(e[0] * e[5] - e[2] * e[3]),
            e[3] * e[7] - e[4] * e[6], -(e[0] * e[7] - e[1] * e[6]), e[0] * e[4] - e[1] * e[3],
        ]
        return SquareMatrix(3, cof)

    def inverse(self) -> SquareMatrix:
        d = self.det()
        if d.is_zero():
            raise SingularMatrixError("matrix is singular")
        return self.adjugate().scale(d.inverse())

    def char_poly_coeffs(self) -> tuple:
        """Monic characteristic polynomial det(lambda*I - M), constant first."""
        one = self.entries[0].ring_one()
        if self.dim == 2:
            return (self.det(), -self.trace(), one)
        e = self.entries
        minors = ((e[4] * e[8] - e[5] * e[7])
                  + (e[0] * e[8] - e[2] * e[6])
                  + (e[0] * e[4] - e[1] * e[3]))
        return (-self.det(), minors, -self.trace(), one)

    def char_poly(self) -> CycPoly:
        coeffs = self.char_poly_coeffs()
        order = coeffs[0].order
        return CycPoly(order, coeffs)

    def is_scalar(self) -> bool:
        n = self.dim
        c = self.entries[0]
        for i in range(n):
            for j in range(n):
                x = self.entries[i * n + j]
                if i == j:
                    if not (x == c):
                        return False
                elif not x.is_zero():
                    return False
        return True

    def is_identity(self) -> bool:
        return self.is_scalar() and self.entries[0] == self.entries[0].ring_one()

    def __pow__(self, k: int) -> SquareMatrix:
        if k < 0:
            return self.inverse() ** (-k)
        result = SquareMatrix.identity(self.dim, self.entries[0])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def fingerprint(self):
        """Canonical hashable key; exact, no floats involved."""
        return (self.dim, self.entries)

    def projective_fingerprint(self):
        """Key invariant under scalar rescaling: normalise by the inverse of
        the first nonzero entry."""
        for e in self.entries:
            if not e.is_zero():
                inv = e.inverse()
                return (self.dim, tuple(inv * x for x in self.entries))
        raise ValueError("zero matrix has no projective class")

    def apply(self, vec):
        n = self.dim
        return tuple(
            _dot(self.row(i), vec)
            for i in range(n)
        )


def _dot(row, vec):
    acc = row[0] * vec[0]
    for a, b in zip(row[1:], vec[1:]):
        acc = acc + a * b
    return acc


class HermitianForm:
    """A matrix H with H* = H (checked exactly on construction)."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: SquareMatrix):
        if not (matrix.conj_transpose() == matrix):
            raise ValueError("matrix is not Hermitian")
        self.matrix = matrix

    @property
    def dim(self) -> int:
        return self.matrix.dim

    def evaluate(self, v) -> CycNum:
        """v* H v, a real scalar."""
        hv = self.matrix.apply(v)
        acc = v[0].conj() * hv[0]
        for a, b in zip(v[1:], hv[1:]):
            acc = acc + a.conj() * b
        return acc

    def signature(self) -> tuple[int, int, int]:
        """(n_plus, n_minus, n_zero), via Descartes' rule on the
        characteristic polynomial: Hermitian matrices are real-rooted, so the
        sign-variation count of the coefficient sequence is exact."""
        coeffs = self.matrix.char_poly_coeffs()
        signs = [sign_of_real(c) for c in coeffs]
        n_zero = 0
        for s in signs:
            if s == 0:
                n_zero += 1
            else:
                break
        pos = _sign_variations(signs)
        neg_signs = [s if k % 2 == 0 else -s for k, s in enumerate(signs)]
        neg = _sign_variations(neg_signs)
        assert pos + neg + n_zero == self.matrix.dim
        return pos, neg, n_zero


def _sign_variations(signs) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def preserves_form(m: SquareMatrix, h: HermitianForm) -> bool:
    """True iff M* H M = H exactly."""
    return m.conj_transpose() * h.matrix * m == h.matrix


# ---------------------------------------------------------------------------
# group closure


@dataclass
class GroupClosure:
    """A finite matrix group enumerated breadth-first from generators.

    `elements` maps fingerprints to matrices; `words` holds one shortest
    generator word per element (generator indices, 0-based), with ties broken
    by enumeration order, which makes reports deterministic.
    """

    generators: list[SquareMatrix]
    elements: dict = field(repr=False)
    words: dict = field(repr=False)
    order: int = 0

    def __post_init__(self):
        self.order = len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements.values())

    def __contains__(self, m: SquareMatrix) -> bool:
        return m.fingerprint() in self.elements

    def word_of(self, m: SquareMatrix):
        return self.words[m.fingerprint()]


def group_closure(generators, cap: int = 10000) -> GroupClosure:
    """Breadth-first closure of the generated matrix group.

    Deterministic: elements are discovered in (word length, generator index)
    order.  Raises CapExceededError beyond `cap` elements, which doubles as
    the non-finiteness detector for lattice generators.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    ident = SquareMatrix.identity(gens[0].dim, gens[0].entries[0])
    elements = {ident.fingerprint(): ident}
    words = {ident.fingerprint(): ()}
    frontier = [ident]
    while frontier:
        next_frontier = []
        for m in frontier:
            w = words[m.fingerprint()]
            for gi, g in enumerate(gens):
                p = m * g
                k = p.fingerprint()
                if k not in elements:
                    if len(elements) >= cap:
                        raise CapExceededError(f"closure exceeded cap {cap}; group may be infinite")
                    elements[k] = p
                    words[k] = w + (gi,)
                    next_frontier.append(p)
        frontier = next_frontier
    # closure under generator products from the identity is automatically
    # closed under multiplication and inverses for finite groups
    return GroupClosure(gens, elements, words)


def element_order(m: SquareMatrix, cap: int = 1000) -> int:
    p = m
    for k in range(1, cap + 1):
        if p.is_identity():
            return k
        p = p * m
    raise CapExceededError(f"element order exceeds {cap}")


def projective_order(m: SquareMatrix, cap: int = 1000) -> int:
    p = m
    for k in range(1, cap + 1):
        if p.is_scalar():
            return k
        p = p * m
    raise CapExceededError(f"projective order exceeds {cap}")


def verify_relation(word, generators, projective: bool = False) -> bool:
    """Evaluate a word given as a sequence of (generator index, exponent)
    pairs; True iff it is the identity (a scalar, in projective mode)."""
    gens = list(generators)
    acc = SquareMatrix.identity(gens[0].dim, gens[0].entries[0])
    for idx, exp in word:
        acc = acc * (gens[idx] ** exp)
    return acc.is_scalar() if projective else acc.is_identity()


def braid_length(a: SquareMatrix, b: SquareMatrix, max_k: int = 20) -> int | None:
    """Smallest k <= max_k with the two length-k alternating products equal:
    alt(a,b,k) = abab... (k factors) versus alt(b,a,k).  None if no k works.

    For even k this is the usual (ab)^(k/2) = (ba)^(k/2) condition; the
    alternating convention extends it to odd k.
    """
    if max_k < 2:
        raise ValueError("max_k must be at least 2")
    pa = a
    pb = b
    for k in range(2, max_k + 1):
        nxt_a = b if k % 2 == 0 else a
        nxt_b = a if k % 2 == 0 else b
        pa = pa * nxt_a
        pb = pb * nxt_b
        if pa == pb:
            return k
    return None


# ---------------------------------------------------------------------------
# isomorphism search


def find_isomorphism(g1: GroupClosure, g2: GroupClosure, cap: int = 500):
    """Brute-force generator-image search for an isomorphism g1 -> g2.

    Image tuples must preserve generator orders and pairwise product orders;
    surviving candidates are extended along g1's stored words and verified as
    bijective homomorphisms on all |G|^2 products.  Returns the list of
    generator images, or None.
    """
    if len(g1) != len(g2) or len(g1) > cap:
        return None
    gens1 = g1.generators
    orders1 = [element_order(g) for g in gens1]
    pair_orders = {}
    for i, j in itertools.combinations(range(len(gens1)), 2):
        pair_orders[(i, j)] = element_order(gens1[i] * gens1[j])
    by_order: dict[int, list[SquareMatrix]] = {}
    for m in g2:
        by_order.setdefault(element_order(m), []).append(m)
    pools = [by_order.get(o, []) for o in orders1]
    elems1 = list(g1)
    for images in itertools.product(*pools):
        if any(element_order(images[i] * images[j]) != o for (i, j), o in pair_orders.items()):
            continue
        if not _spans(images, len(g2)):
            continue
        phi = {}
        ok = True
        for m in elems1:
            img = _eval_word(g1.word_of(m), images)
            phi[m.fingerprint()] = img
        if len({im.fingerprint() for im in phi.values()}) != len(g1):
            continue
        for m in elems1:
            if not ok:
                break
            pm = phi[m.fingerprint()]
            for n in elems1:
                if not (pm * phi[n.fingerprint()] == phi[(m * n).fingerprint()]):
                    ok = False
                    break
        if ok:
            return list(images)
    return None


def _eval_word(word, images):
    acc = SquareMatrix.identity(images[0].dim, images[0].entries[0])
    for gi in word:
        acc = acc * images[gi]
    return acc


def _spans(images, target: int) -> bool:
    try:
        return len(group_closure(list(images), cap=target)) == target
    except CapExceededError:
        return False


# ---------------------------------------------------------------------------
# GL(2, F_3)


def gl2_f3() -> GroupClosure:
    """GL(2, F_3) of order 48, generated over the 3-element prime field."""
    one, zero, two = Fp(1), Fp(0), Fp(2)
    a = SquareMatrix(2, [one, one, zero, one])
    b = SquareMatrix(2, [two, zero, zero, one])
    c = SquareMatrix(2, [zero, two, one, zero])
    g = group_closure([a, b, c], cap=64)
    assert len(g) == 48
    return g
