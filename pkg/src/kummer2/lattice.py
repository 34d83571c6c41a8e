"""Integral lattices given by Gram matrices; discriminant forms and even overlattices.

Sign conventions are explicit: curve lattices are negative definite, so the
root-lattice constructors take ``sign="negative"`` by default.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Optional

from . import intmat
from .f2quad import F2QuadForm


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class Lattice:
    """Symmetric integer Gram matrix with optional basis labels.

    ``span=True`` marks a possibly degenerate matrix (e.g. raw intersection
    matrices of curve configurations); lattice-theoretic operations refuse it.
    """

    gram: tuple
    labels: Optional[tuple] = None
    span: bool = False

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(row) != n for row in g):
            raise LatticeError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise LatticeError("Gram matrix must be symmetric")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != n:
                raise LatticeError("label count does not match rank")
        if not self.span and n and intmat.determinant(g) == 0:
            raise LatticeError("degenerate Gram matrix; use span=True or lattice_generated_by")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def matrix(self):
        return [list(r) for r in self.gram]

    @property
    def det(self) -> int:
        return intmat.determinant(self.gram)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def to_json(self) -> str:
        return json.dumps({"labels": list(self.labels) if self.labels else None,
                           "gram": [list(r) for r in self.gram]})

    @classmethod
    def from_json(cls, text: str) -> "Lattice":
        d = json.loads(text)
        return cls(d["gram"], d.get("labels"))


def _require_nondegenerate(L: Lattice):
    if L.span:
        raise LatticeError("operation needs a nondegenerate lattice (reduce the span first)")


# constructors

def _cartan_from_edges(n, edges, sign):
    s = -1 if sign == "negative" else 1
    if sign not in ("negative", "positive"):
        raise LatticeError(f"unknown sign {sign!r}")
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2 * s
    for i, j in edges:
        g[i][j] = g[j][i] = -s
    return g


def dynkin_edges(kind: str, n: int):
    kind = kind.upper()
    if kind == "A":
        if n < 1:
            raise LatticeError("A_n needs n >= 1")
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D":
        if n < 4:
            raise LatticeError("D_n needs n >= 4")
        # chain 0..n-2, extra node n-1 attached to n-3
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E":
        if n not in (6, 7, 8):
            raise LatticeError("E_n needs n in 6..8")
        # chain 0..n-2, extra node n-1 attached to 2
        return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    raise LatticeError(f"unknown Dynkin type {kind!r}")


def root_lattice(kind: str, n: int = None, sign: str = "negative") -> Lattice:
    """A_n, D_n, E_n Cartan Gram matrix; ``kind`` may be ``"D4"`` with n omitted."""
    if n is None:
        kind, n = kind[0], int(kind[1:])
    edges = dynkin_edges(kind, n)
    labels = tuple(f"{kind.upper()}{n}.{i}" for i in range(n))
    return Lattice(_cartan_from_edges(n, edges, sign), labels)


def hyperbolic_U() -> Lattice:
    return Lattice([[0, 1], [1, 0]], ("U.e", "U.f"))


def direct_sum(lattices) -> Lattice:
    lattices = list(lattices)
    n = sum(L.rank for L in lattices)
    g = [[0] * n for _ in range(n)]
    labels = []
    off = 0
    for L in lattices:
        for i in range(L.rank):
            for j in range(L.rank):
                g[off + i][off + j] = L.gram[i][j]
        labels.extend(L.labels or [f"b{off + i}" for i in range(L.rank)])
        off += L.rank
    return Lattice(g, tuple(labels))


def parse_lattice_name(token: str) -> Lattice:
    """``U``, ``A2``, ``D4``, ``E8`` (negative definite root lattices), ``A1+`` for positive."""
    token = token.strip()
    if token.upper() == "U":
        return hyperbolic_U()
    sign = "positive" if token.endswith("+") else "negative"
    token = token.rstrip("+-")
    return root_lattice(token[0], int(token[1:]), sign)


# invariants

def smith_normal_form(m):
    """Elementary divisors (nonzero, d1 | d2 | ...) and the transforms ``(U, V)``."""
    D, U, V = intmat.smith_normal_form([list(r) for r in m])
    return [d for d in D if d], (U, V)


def signature(L: Lattice):
    _require_nondegenerate(L)
    pos, neg, zero = intmat.congruence_inertia(L.gram)
    if zero:
        raise LatticeError("degenerate lattice")  # pragma: no cover
    return pos, neg


@dataclass
class DiscriminantGroup:
    """L*/L with generators given in rational coordinates of the basis of L."""

    elementary_divisors: list
    generators: list
    q_values: list  # Fractions in [0, 2)
    b_matrix: list  # Fractions in [0, 1)
    gram: tuple = field(repr=False, default=())

    @property
    def order(self) -> int:
        out = 1
        for d in self.elementary_divisors:
            out *= d
        return out

    def q(self, x) -> Fraction:
        return _mod(intmat.bilinear(self.gram, x, x), 2)

    def b(self, x, y) -> Fraction:
        return _mod(intmat.bilinear(self.gram, x, y), 1)

    def combine(self, coeffs):
        """Rational vector sum(c_i g_i)."""
        n = len(self.gram)
        v = [Fraction(0)] * n
        for c, g in zip(coeffs, self.generators):
            if c:
                v = [a + c * b for a, b in zip(v, g)]
        return v

    def elements(self):
        for coeffs in product(*(range(d) for d in self.elementary_divisors)):
            yield coeffs, self.combine(coeffs)

    def is_alternating(self) -> bool:
        k = len(self.generators)
        return (all(self.b_matrix[i][i] == 0 for i in range(k)) and
                all(_mod(2 * self.b_matrix[i][j], 1) == 0 for i in range(k) for j in range(i)))

    def q_integral(self) -> bool:
        k = len(self.generators)
        return (all(v.denominator == 1 for v in self.q_values) and
                all((2 * self.b_matrix[i][j]).denominator == 1
                    for i in range(k) for j in range(i)))


def _mod(x, m):
    x = Fraction(x)
    return x - m * (x // m)


def discriminant_group(L: Lattice) -> DiscriminantGroup:
    _require_nondegenerate(L)
    if not L.is_even():
        raise LatticeError("discriminant quadratic form needs an even lattice")
    D, U, V = intmat.smith_normal_form(L.matrix())
    gens, divs = [], []
    n = L.rank
    for i, d in enumerate(D):
        if d > 1:
            divs.append(d)
            gens.append([Fraction(V[r][i], d) for r in range(n)])
    G = L.gram
    q = [_mod(intmat.bilinear(G, g, g), 2) for g in gens]
    b = [[_mod(intmat.bilinear(G, g, h), 1) for h in gens] for g in gens]
    return DiscriminantGroup(divs, gens, q, b, G)


def is_2_elementary(L: Lattice) -> bool:
    divs, _ = smith_normal_form(L.gram)
    return all(d in (1, 2) for d in divs)


def artin_sigma(L: Lattice) -> int:
    """Half the number of elementary divisors equal to 2."""
    if not is_2_elementary(L):
        raise LatticeError("lattice is not 2-elementary")
    divs, _ = smith_normal_form(L.gram)
    twos = sum(1 for d in divs if d == 2)
    if twos % 2:
        raise LatticeError("odd 2-rank; the discriminant form cannot be alternating")
    return twos // 2


def discriminant_form_f2(L: Lattice) -> F2QuadForm:
    """q_L on (Z/2)^{2 sigma} as a quadratic form over F_2 (basis = SNF generators)."""
    if not is_2_elementary(L):
        raise LatticeError("lattice is not 2-elementary")
    A = discriminant_group(L)
    if not A.is_alternating():
        raise LatticeError("discriminant bilinear form is not alternating")
    k = len(A.generators)
    rows = []
    for i in range(k):
        row = (int(A.q_values[i]) & 1) << i
        for j in range(i + 1, k):
            if _mod(2 * A.b_matrix[i][j], 2) == 1:
                row |= 1 << j
        rows.append(row)
    return F2QuadForm(k, tuple(rows))


def nikulin_constraints(r: int, sigma: int) -> bool:
    """Arithmetic existence conditions for even indefinite 2-elementary (r, sigma), alternating case."""
    if r < 2 or sigma < 0 or 2 * sigma > r or r % 4 != 2:
        return False
    if sigma == 0 or 2 * sigma == r:
        return r % 8 == 2
    return True


# spans and overlattices

def lattice_from_vectors(gram, vectors, labels=None) -> Lattice:
    """Nondegenerate lattice spanned by integer ``vectors`` modulo the radical."""
    G = [list(r) for r in gram]
    if not vectors:
        return Lattice([], ())
    Vt = intmat.transpose([list(v) for v in vectors])  # columns are the vectors
    H = intmat.matmul(intmat.matmul(intmat.transpose(Vt), G), Vt)
    return reduce_span(H, labels)


def reduce_span(H, labels=None) -> Lattice:
    """Quotient of Z^n with form H by its radical, as a nondegenerate lattice."""
    n = len(H)
    if n == 0:
        return Lattice([], ())
    D, U, V = intmat.smith_normal_form([list(r) for r in H])
    r = sum(1 for d in D if d)
    if r == n:
        return Lattice(H, labels)
    # the last n - r columns of V span the integral radical; the first r a complement
    B = [[V[i][j] for j in range(r)] for i in range(n)]
    G2 = intmat.matmul(intmat.matmul(intmat.transpose(B), H), B)
    return Lattice(G2, tuple(f"v{j}" for j in range(r)))


@dataclass
class GlueGroup:
    """Subgroup of a 2-elementary discriminant group, as F_2 coordinate vectors."""

    vectors: list  # tuples of 0/1 of length = number of discriminant generators

    @property
    def dim(self) -> int:
        return _f2_rank(self.vectors)


def _f2_rank(vectors):
    rows = [int("".join(str(int(x) & 1) for x in reversed(v)), 2) for v in vectors]
    basis = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


def overlattice_from_glue(L: Lattice, H) -> Lattice:
    """Even overlattice L' = L + lifts of H, for H totally singular in L*/L.

    ``H`` is a :class:`GlueGroup` or a list of F_2 vectors in the basis of
    the discriminant group's generators.
    """
    _require_nondegenerate(L)
    vecs = list(H.vectors if isinstance(H, GlueGroup) else H)
    if not vecs:
        return L
    A = discriminant_group(L)
    if any(d != 2 for d in A.elementary_divisors):
        raise LatticeError("gluing is implemented for 2-elementary lattices")
    lifts = [A.combine([int(c) & 1 for c in v]) for v in vecs]
    # every element of H must be singular
    dim = _f2_rank(vecs)
    for coeffs in product((0, 1), repeat=len(vecs)):
        x = [Fraction(0)] * L.rank
        for c, w in zip(coeffs, lifts):
            if c:
                x = [a + b for a, b in zip(x, w)]
        if A.q(x) != 0:
            raise LatticeError("glue group is not totally singular")
    den = lcm(*(f.denominator for w in lifts for f in w))
    n = L.rank
    cols = [[den * int(i == j) for i in range(n)] for j in range(n)]
    cols += [[int(f * den) for f in w] for w in lifts]
    M = intmat.transpose(cols)
    basis = intmat.column_basis(M)
    B = [[Fraction(basis[j][i], den) for j in range(n)] for i in range(n)]
    G2 = intmat.matmul(intmat.matmul(intmat.transpose(B), L.matrix()), B)
    if any(x.denominator != 1 for row in G2 for x in row):
        raise LatticeError("overlattice is not integral")  # pragma: no cover
    L2 = Lattice([[int(x) for x in row] for row in G2])
    if not L2.is_even():
        raise LatticeError("overlattice is not even")  # pragma: no cover
    if L.det != L2.det * 4 ** dim:
        raise LatticeError("index bookkeeping failed")  # pragma: no cover
    return L2


def summary(L: Lattice) -> dict:
    """Rank, det, signature, elementary divisors, sigma and alternating flag."""
    divs, _ = smith_normal_form(L.gram)
    out = {"rank": L.rank, "det": L.det, "signature": list(signature(L)),
           "elementary_divisors": [d for d in divs if d > 1], "even": L.is_even()}
    two_el = all(d in (1, 2) for d in divs)
    out["two_elementary"] = two_el
    out["sigma"] = None
    out["alternating"] = None
    if L.is_even():
        A = discriminant_group(L)
        out["alternating"] = A.is_alternating()
        if two_el and sum(1 for d in divs if d == 2) % 2 == 0:
            out["sigma"] = artin_sigma(L)
    return out
