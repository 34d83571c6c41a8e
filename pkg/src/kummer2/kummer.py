"""Diagonal 2-closed vector fields on C x C and the quotient Z = (C x C)/G.

A vector field is given by seven scalars

    delta = (l4 x^4 + l2 x^2 + l0) d/dx + (m4 y^4 + m2 y^2 + m0) d/dy
            + tau (x d/dx + y d/dy),

with x = u^-1 and y = v^-1 the coordinates at infinity of the two cuspidal
curves.  All polynomials in this module are in x (resp. y).

"Algebraically closed" counts are obtained by enlarging GF(2^k) until the
enumerated solutions agree with the number of distinct roots predicted by
gcd/radical computations, which do not depend on the field.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .gf2k import (F2, FieldElement, FieldSpec, MultiPoly, UniPoly, additive_solve,
                   derivation, distinct_root_count, embedding, extension_degrees,
                   poly_gcd, roots, tjurina_number)
from .liealg import GroupType, LieElement, ProductLieElement, classify_line

COEFF_NAMES = ("lam4", "lam2", "lam0", "mu4", "mu2", "mu0", "tau")
STABILITY_CAP = 12


class KummerError(ValueError):
    pass


@dataclass(frozen=True)
class DeltaField:
    lam4: FieldElement
    lam2: FieldElement
    lam0: FieldElement
    mu4: FieldElement
    mu2: FieldElement
    mu0: FieldElement
    tau: FieldElement

    def __post_init__(self):
        F = self.lam4.spec
        if any(c.spec != F for c in self.coefficients()):
            raise KummerError("coefficients from different fields")
        if self.P().is_zero() or self.Q().is_zero():
            raise KummerError("action is not faithful on both factors (P or Q vanishes)")

    @classmethod
    def from_bits(cls, field: FieldSpec, *bits):
        if len(bits) != 7:
            raise KummerError("need seven coefficients (lam4, lam2, lam0, mu4, mu2, mu0, tau)")
        return cls(*(field.element(b) for b in bits))

    @classmethod
    def parse(cls, field: FieldSpec, text: str):
        """``"1,0,0,1,0,0,1"`` -- seven hex literals."""
        parts = [p.strip() for p in text.split(",")]
        return cls.from_bits(field, *(int(p, 16) for p in parts))

    @property
    def field(self) -> FieldSpec:
        return self.lam4.spec

    def coefficients(self):
        return (self.lam4, self.lam2, self.lam0, self.mu4, self.mu2, self.mu0, self.tau)

    def P(self) -> UniPoly:
        return UniPoly(self.field, (self.lam0, self.tau, self.lam2, 0, self.lam4))

    def Q(self) -> UniPoly:
        return UniPoly(self.field, (self.mu0, self.tau, self.mu2, 0, self.mu4))

    def as_lie_pair(self) -> ProductLieElement:
        """The same vector field as an element of (a x| b) + (a x| b)."""
        return ProductLieElement(LieElement((self.lam4, self.lam2, self.lam0), self.tau),
                                 LieElement((self.mu4, self.mu2, self.mu0), self.tau))

    @property
    def group_type(self) -> GroupType:
        return classify_line(self.as_lie_pair())

    def embed(self, big: FieldSpec) -> "DeltaField":
        table = embedding(self.field, big)
        return DeltaField(*(FieldElement(big, table[c.bits]) for c in self.coefficients()))

    def hex(self):
        return ",".join(f"{c.bits:x}" for c in self.coefficients())


@dataclass(frozen=True)
class RationalPoint:
    alpha: FieldElement
    beta: FieldElement


@dataclass(frozen=True)
class FixedScheme:
    field: FieldSpec
    points: tuple  # ((x, mult), (y, mult)) pairs
    length: int


@dataclass
class SurfaceReport:
    group_type: str
    normal: bool
    fixed_length: Optional[int] = None
    m: Optional[int] = None
    point_count: Optional[int] = None
    artin_sigma: Optional[int] = None
    singularities: Optional[list] = None
    k3: bool = False
    extras: dict = dc_field(default_factory=dict)

    KEYS = ("group_type", "normal", "fixed_length", "m", "point_count",
            "artin_sigma", "singularities", "k3")

    def to_dict(self):
        d = {k: getattr(self, k) for k in self.KEYS}
        if self.singularities is not None:
            d["singularities"] = [[t, n] for t, n in self.singularities]
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=False)

    def singularity_string(self):
        return singularity_string(self.singularities or [])


def singularity_string(sing) -> str:
    return "+".join(f"{n}{t}" if n != 1 else t for t, n in sing)


def is_normal(delta: DeltaField) -> bool:
    return bool(delta.lam4) and bool(delta.mu4)


def _require_normal(delta):
    if not is_normal(delta):
        raise KummerError("quotient is not normal (lam4 or mu4 vanishes)")


def fixed_scheme(delta: DeltaField, field: FieldSpec = None) -> FixedScheme:
    """Pairs of roots of P and Q over ``field`` with multiplicities; length should be 16."""
    _require_normal(delta)
    if field is not None and field != delta.field:
        delta = delta.embed(field)
    rp, rq = roots(delta.P()), roots(delta.Q())
    if sum(m for _, m in rp) < 4 or sum(m for _, m in rq) < 4:
        raise KummerError(
            f"{delta.field} does not split P and Q; try a larger extension degree")
    pts = tuple((a, b) for a in rp for b in rq)
    return FixedScheme(delta.field, pts, sum(a[1] * b[1] for a, b in pts))


def alpha_polynomial(delta: DeltaField) -> UniPoly:
    """gcd of lam4 X^4 + mu4 X and lam2 X^2 + mu2 X (its roots are the admissible alphas)."""
    F = delta.field
    e1 = UniPoly(F, (0, delta.mu4, 0, 0, delta.lam4))
    e2 = UniPoly(F, (0, delta.mu2, delta.lam2))
    if e2.is_zero():
        return e1.monic()
    return poly_gcd(e1, e2)


def beta_kernel_size(delta: DeltaField) -> int:
    """Distinct roots of lam4 X^4 + lam2 X^2 + tau X over an algebraic closure."""
    F = delta.field
    return distinct_root_count(UniPoly(F, (0, delta.tau, delta.lam2, 0, delta.lam4)))


def verify_point(delta: DeltaField, alpha: FieldElement, beta: FieldElement) -> bool:
    """Check P(alpha v + beta) == alpha Q(v) as polynomials in v.

    A point over an extension field is checked against the embedded vector field.
    """
    if alpha.spec != beta.spec:
        raise KummerError("alpha and beta lie in different fields")
    if alpha.spec != delta.field:
        delta = delta.embed(alpha.spec)
    F = delta.field
    sub = UniPoly(F, (beta, alpha))
    return delta.P().compose(sub) == delta.Q() * alpha


def _points_over(delta: DeltaField):
    F = delta.field
    l4, l2, m4, m2 = delta.lam4.bits, delta.lam2.bits, delta.mu4.bits, delta.mu2.bits
    pts, alphas = [], []
    for a in range(F.order):
        a2 = F.mul(a, a)
        if F.mul(l4, F.mul(a2, a2)) ^ F.mul(m4, a):
            continue
        if F.mul(l2, a2) ^ F.mul(m2, a):
            continue
        alpha = FieldElement(F, a)
        alphas.append(alpha)
        c = delta.lam0 + delta.mu0 * alpha
        for beta in additive_solve(delta.lam4, delta.lam2, delta.tau, c):
            pts.append(RationalPoint(alpha, beta))
    return alphas, pts


def rational_points(delta: DeltaField, field: FieldSpec = None):
    """Solutions (alpha, beta) of the three-equation system and the exponent m.

    Returns ``(points, m)``.  Points live in the smallest field among
    GF(2^(k d)), d in (1, 2, 3, 4, 6, 12), k d <= 12, where the enumerated
    counts reach the algebraically closed counts.
    """
    _require_normal(delta)
    start = field or delta.field
    if start.k % delta.field.k:
        raise KummerError(f"{delta.field} does not embed in {start}")
    n_alpha = alpha_polynomial(delta).degree  # separable because mu4 != 0
    n_beta = beta_kernel_size(delta)
    for K in extension_degrees(start.k, max(STABILITY_CAP, start.k)):
        big = start if K == start.k else FieldSpec.default(K)
        d = delta.embed(big)
        alphas, pts = _points_over(d)
        if len(alphas) == n_alpha and len(pts) == n_alpha * n_beta:
            for p in pts:
                if not verify_point(d, p.alpha, p.beta):
                    raise KummerError(f"substitution identity fails at {p}")  # pragma: no cover
            m = n_alpha.bit_length() - 1
            return pts, m
    raise KummerError(
        f"solution counts did not stabilise below GF(2^{STABILITY_CAP}) starting from {start}")


def point_count_formula(delta: DeltaField, m: int) -> int:
    if not 0 <= m <= 2:
        raise KummerError("m must lie in 0..2")
    if delta.group_type is GroupType.MU2:
        return 2 ** (2 + m)
    if delta.lam2:
        return 2 ** (1 + m)
    return 2 ** m


def is_k3(delta: DeltaField) -> bool:
    """Minimal resolution is K3 iff normal and lam2, mu2 do not both vanish (always for Mu2)."""
    if not is_normal(delta):
        return False
    return delta.group_type is GroupType.MU2 or bool(delta.lam2) or bool(delta.mu2)


def artin_invariant(delta: DeltaField, m: int = None) -> int:
    """sigma = 3 - m, from 10 = 2 sigma + 2(2 + m)."""
    _require_normal(delta)
    if delta.group_type is not GroupType.MU2:
        raise KummerError("the Artin invariant formula covers the Mu2 case only")
    if m is None:
        _, m = rational_points(delta)
    # disc(trivial lattice) = -2^10, index 2^(2+m)
    sigma2 = 10 - 2 * (2 + m)
    return sigma2 // 2


def classify_singularities(delta: DeltaField):
    """Singularities of Z as ``[(tag, count), ...]`` plus the K3 flag.

    Fixed points are counted through distinct roots of P and Q; the point
    over the singular points of both factors is always a D4.
    """
    _require_normal(delta)
    n_fixed = distinct_root_count(delta.P()) * distinct_root_count(delta.Q())
    gt = delta.group_type
    if gt is GroupType.MU2:
        if n_fixed != 16:
            raise KummerError("Mu2 fixed scheme should be reduced")  # pragma: no cover
        return [("A1", 16), ("D4", 1)], True
    if n_fixed == 4:
        return [("D4", 5)], True
    if n_fixed == 2:
        return [("D8", 2), ("D4", 1)], True
    return [("Elliptic", 1), ("D4", 1)], False


def alpha2_rule(delta: DeltaField) -> str:
    """The coefficient-level decision rule for Alpha2 singularities."""
    nz = bool(delta.lam2) + bool(delta.mu2)
    return {2: "4D4", 1: "2D8", 0: "Elliptic"}[nz]


# invariant ring

def _coefficient_polys(delta, F, variables):
    if delta is None:
        return {n: MultiPoly.var(F, variables, n) for n in COEFF_NAMES}
    return {n: MultiPoly.const(F, variables, getattr(delta, n)) for n in COEFF_NAMES}


def invariant_ring_data(delta: DeltaField = None):
    """Generators a, b, c of the ring of invariants and the derivation, as polynomials.

    With ``delta=None`` the seven coefficients are indeterminates over F_2.
    """
    if delta is None:
        F, variables = F2, ("x", "y") + COEFF_NAMES
    else:
        F, variables = delta.field, ("x", "y")
    k = _coefficient_polys(delta, F, variables)
    x, y = MultiPoly.var(F, variables, "x"), MultiPoly.var(F, variables, "y")
    P0 = k["lam4"] * x ** 4 + k["lam2"] * x ** 2 + k["lam0"]
    Q0 = k["mu4"] * y ** 4 + k["mu2"] * y ** 2 + k["mu0"]
    a, b = x ** 2, y ** 2
    c = k["tau"] * x * y + Q0 * x + P0 * y
    d = {"x": P0 + k["tau"] * x, "y": Q0 + k["tau"] * y}
    return {"a": a, "b": b, "c": c, "derivation": d, "coeffs": k}


RELATION_TERMS = ("c^2", "tau^2ab", "Qa", "Pb")


def relation_terms(a, b, c, k):
    return {
        "c^2": c ** 2,
        "tau^2ab": k["tau"] ** 2 * a * b,
        "Qa": (k["mu4"] ** 2 * b ** 4 + k["mu2"] ** 2 * b ** 2 + k["mu0"] ** 2) * a,
        "Pb": (k["lam4"] ** 2 * a ** 4 + k["lam2"] ** 2 * a ** 2 + k["lam0"] ** 2) * b,
    }


def invariant_relation_check(delta: DeltaField = None, omit=()) -> bool:
    """Relation vanishes identically and delta kills a, b, c.

    ``omit`` drops named relation terms (mutation control).
    """
    data = invariant_ring_data(delta)
    a, b, c = data["a"], data["b"], data["c"]
    terms = relation_terms(a, b, c, data["coeffs"])
    rel = MultiPoly(a.field, a.variables)
    for name, t in terms.items():
        if name not in omit:
            rel = rel + t
    if not rel.is_zero():
        return False
    d = data["derivation"]
    return all(derivation(g, d).is_zero() for g in (a, b, c))


def chart_equation(delta: DeltaField) -> MultiPoly:
    """c^2 + tau^2 ab + (mu4^2 b^4 + mu2^2 b^2 + mu0^2) a + (lam4^2 a^4 + ...) b in k[a, b, c]."""
    F = delta.field
    variables = ("a", "b", "c")
    a, b, c = MultiPoly.gens(F, variables)
    k = {n: MultiPoly.const(F, variables, getattr(delta, n)) for n in COEFF_NAMES}
    return sum(relation_terms(a, b, c, k).values(), MultiPoly(F, variables))


def tjurina_total_chart(delta: DeltaField):
    """Total Tjurina number of the chart equation; 32 = 16 x tau(A1) for normal Mu2 fields."""
    _require_normal(delta)
    if delta.group_type is not GroupType.MU2:
        raise KummerError("chart total is defined for the Mu2 case")
    return tjurina_number(chart_equation(delta))


def surface_report(delta: DeltaField, field: FieldSpec = None) -> SurfaceReport:
    gt = delta.group_type.value
    if not is_normal(delta):
        return SurfaceReport(group_type=gt, normal=False, k3=False)
    sing, k3 = classify_singularities(delta)
    pts, m = rational_points(delta, field)
    fixed_length = 4 * 4  # deg P * deg Q, each a quartic since lam4 mu4 != 0
    sigma = artin_invariant(delta, m) if gt == GroupType.MU2.value else None
    if len(pts) != point_count_formula(delta, m):
        raise KummerError("point count disagrees with the case formula")  # pragma: no cover
    return SurfaceReport(group_type=gt, normal=True, fixed_length=fixed_length, m=m,
                         point_count=len(pts), artin_sigma=sigma, singularities=sing, k3=k3)


def m_witnesses(field: FieldSpec = None):
    """Mu2 vector fields over GF(16) realising m = 0, 1, 2."""
    F = field or FieldSpec.parse("gf16:0x13")
    t = F.exp(1)
    omega = F.exp((F.order - 1) // 3)
    return {
        0: DeltaField.from_bits(F, 1, 1, 0, 1, t, 0, 1),
        1: DeltaField.from_bits(F, 1, 1, 0, 1, omega, 0, 1),
        2: DeltaField.from_bits(F, 1, 0, 0, 1, 0, 0, 1),
    }


def random_mu2_delta(field: FieldSpec, rng: random.Random) -> DeltaField:
    """Random normal Mu2 vector field (lam4, mu4, tau nonzero)."""
    nz = lambda: rng.randrange(1, field.order)  # noqa: E731
    anyv = lambda: rng.randrange(field.order)  # noqa: E731
    return DeltaField.from_bits(field, nz(), anyv(), anyv(), nz(), anyv(), anyv(), nz())
