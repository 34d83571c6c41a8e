"""Dual graphs of (-2)-curve configurations, fibre recognition and the numeric checks
behind the thirty-curve characterisation of Km(C x C).

Graph text format, one declaration per line::

    curve <label> [self=<int>]
    meet <label> <label> [<mult>]

``#`` starts a comment.  Self-intersection defaults to -2.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from . import intmat
from .gf2k import MultiPoly, tjurina_number
from .lattice import (Lattice, artin_sigma, direct_sum, discriminant_form_f2,
                      hyperbolic_U, is_2_elementary, lattice_from_vectors, reduce_span,
                      root_lattice)
from .f2quad import arf_invariant, totally_singular_subspaces


class GraphError(ValueError):
    pass


@dataclass
class CurveGraph:
    vertices: list
    self_int: dict = field(default_factory=dict)
    edges: dict = field(default_factory=dict)  # frozenset({u, v}) -> multiplicity

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate curve labels")
        for v in self.vertices:
            self.self_int.setdefault(v, -2)
        for pair, m in self.edges.items():
            if len(pair) != 2:
                raise GraphError("loops are not allowed")
            if m < 1:
                raise GraphError("intersection multiplicity must be positive")
            if not pair <= set(self.vertices):
                raise GraphError(f"edge {sorted(pair)} uses an undeclared curve")

    # construction / serialisation

    @classmethod
    def parse(cls, text: str) -> "CurveGraph":
        vertices, self_int, edges = [], {}, {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "curve" and len(parts) in (2, 3):
                vertices.append(parts[1])
                if len(parts) == 3:
                    if not parts[2].startswith("self="):
                        raise GraphError(f"line {lineno}: expected self=<int>")
                    self_int[parts[1]] = int(parts[2][5:])
            elif parts[0] == "meet" and len(parts) in (3, 4):
                if parts[1] == parts[2]:
                    raise GraphError(f"line {lineno}: a curve cannot meet itself")
                key = frozenset(parts[1:3])
                edges[key] = edges.get(key, 0) + (int(parts[3]) if len(parts) == 4 else 1)
            else:
                raise GraphError(f"line {lineno}: cannot parse {raw!r}")
        return cls(vertices, self_int, edges)

    def to_text(self) -> str:
        out = []
        for v in self.vertices:
            s = self.self_int[v]
            out.append(f"curve {v}" + ("" if s == -2 else f" self={s}"))
        order = {v: i for i, v in enumerate(self.vertices)}
        for pair in sorted(self.edges, key=lambda p: sorted(order[x] for x in p)):
            a, b = sorted(pair, key=order.get)
            m = self.edges[pair]
            out.append(f"meet {a} {b}" + ("" if m == 1 else f" {m}"))
        return "\n".join(out) + "\n"

    def copy(self):
        return CurveGraph(list(self.vertices), dict(self.self_int), dict(self.edges))

    def add_edge(self, a, b, mult=1):
        g = self.copy()
        key = frozenset((a, b))
        g.edges[key] = g.edges.get(key, 0) + mult
        g.__post_init__()
        return g

    # intersection data

    def meet(self, a, b) -> int:
        if a == b:
            return self.self_int[a]
        return self.edges.get(frozenset((a, b)), 0)

    def neighbours(self, v):
        return [w for w in self.vertices if w != v and self.meet(v, w)]

    def degree(self, v) -> int:
        return sum(self.edges.get(frozenset((v, w)), 0) for w in self.vertices if w != v)

    def intersection_matrix(self):
        return [[self.meet(a, b) for b in self.vertices] for a in self.vertices]

    def subgraph(self, labels) -> "CurveGraph":
        labels = [v for v in self.vertices if v in set(labels)]
        s = set(labels)
        return CurveGraph(labels, {v: self.self_int[v] for v in labels},
                          {p: m for p, m in self.edges.items() if p <= s})

    def components(self, labels=None):
        labels = list(self.vertices if labels is None else labels)
        left = set(labels)
        comps = []
        for v in labels:
            if v not in left:
                continue
            stack, comp = [v], []
            left.discard(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for w in self.neighbours(x):
                    if w in left:
                        left.discard(w)
                        stack.append(w)
            comps.append(comp)
        return comps

    def vector(self, d) -> list:
        d = _as_divisor(d)
        unknown = set(d) - set(self.vertices)
        if unknown:
            raise GraphError(f"divisor uses unknown curves {sorted(unknown)}")
        return [d.get(v, 0) for v in self.vertices]


def _as_divisor(d):
    if isinstance(d, Divisor):
        return d.multiplicities
    if isinstance(d, str):
        return {d: 1}
    return dict(d)


@dataclass(frozen=True)
class Divisor:
    multiplicities: dict

    @classmethod
    def parse(cls, text: str) -> "Divisor":
        """``"C0 + 2E0 + E1"`` or ``"2C0 - C1 - C2"``."""
        mult = defaultdict(int)
        text = text.replace("-", "+-")
        for tok in text.split("+"):
            tok = tok.strip()
            if not tok:
                continue
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("-").strip()
            i = 0
            while i < len(tok) and tok[i].isdigit():
                i += 1
            coeff = int(tok[:i]) if i else 1
            label = tok[i:].lstrip("*").strip()
            mult[label] += sign * coeff
        return cls({k: v for k, v in mult.items() if v})

    def support(self):
        return [k for k, v in self.multiplicities.items() if v]

    def __add__(self, other):
        out = defaultdict(int, self.multiplicities)
        for k, v in other.multiplicities.items():
            out[k] += v
        return Divisor({k: v for k, v in out.items() if v})

    def __str__(self):
        return " + ".join((f"{v}{k}" if v != 1 else k) for k, v in self.multiplicities.items())


@dataclass(frozen=True)
class FiberType:
    family: str  # "I", "I*" or "unrecognized"
    n: Optional[int] = None

    @property
    def symbol(self) -> str:
        if self.family == "I":
            return f"I{self.n}"
        if self.family == "I*":
            return f"I{self.n}*"
        return "unrecognized"

    def __str__(self):
        return self.symbol

    def component_count(self):
        return self.n if self.family == "I" else self.n + 5

    def root_block(self) -> Optional[Lattice]:
        """Root lattice spanned by the components missing a section."""
        if self.family == "I":
            return root_lattice("A", self.n - 1) if self.n >= 2 else None
        if self.family == "I*":
            return root_lattice("D", self.n + 4)
        raise GraphError("no root lattice for an unrecognised fibre")


UNRECOGNIZED = FiberType("unrecognized")


# built-in configurations

def _load(name):
    return CurveGraph.parse(resources.files("kummer2.data").joinpath(name).read_text())


def builtin_figure1() -> CurveGraph:
    return _load("figure1.curves")


def builtin_figure2() -> CurveGraph:
    return _load("figure2.curves")


def gram_from_graph(g: CurveGraph) -> Lattice:
    return Lattice(g.intersection_matrix(), tuple(g.vertices), span=True)


def lattice_generated_by(g: CurveGraph) -> Lattice:
    """Nondegenerate lattice spanned by the curves (intersection matrix modulo its radical)."""
    return reduce_span(g.intersection_matrix())


def intersection_number(g: CurveGraph, d1, d2) -> int:
    return intmat.bilinear(g.intersection_matrix(), g.vector(d1), g.vector(d2))


def intersection_vector(g: CurveGraph, d) -> list:
    """(d . C) for every vertex C, in vertex order."""
    return intmat.matvec(g.intersection_matrix(), g.vector(d))


# fibres

def is_fiber(g: CurveGraph, d) -> FiberType:
    """Kodaira type of an effective divisor, recognised combinatorially (I_n, I_n*)."""
    mult = {k: v for k, v in _as_divisor(d).items() if v}
    if not mult:
        raise GraphError("empty divisor")
    if any(v < 0 for v in mult.values()):
        return UNRECOGNIZED
    supp = [v for v in g.vertices if v in mult]
    if len(supp) != len(mult):
        raise GraphError("divisor uses unknown curves")
    if len(g.components(supp)) != 1:
        return UNRECOGNIZED
    # numerically trivial on its own components
    if any(intersection_number(g, mult, c) for c in supp):
        return UNRECOGNIZED
    sub = g.subgraph(supp)
    deg = {v: sub.degree(v) for v in supp}
    if all(m == 1 for m in mult.values()):
        if len(supp) >= 2 and all(deg[v] == 2 for v in supp):
            n_edges = sum(sub.edges.values())
            if n_edges == len(supp):
                return FiberType("I", len(supp))
        return UNRECOGNIZED
    if set(mult.values()) != {1, 2}:
        return UNRECOGNIZED
    reduced = [v for v in supp if mult[v] == 1]
    double = [v for v in supp if mult[v] == 2]
    if len(reduced) != 4 or any(deg[v] != 1 for v in reduced):
        return UNRECOGNIZED
    if sum(sub.edges.values()) != len(supp) - 1 or any(m != 1 for m in sub.edges.values()):
        return UNRECOGNIZED  # not a simple tree
    chain = g.subgraph(double)
    if len(chain.components()) != 1 or any(chain.degree(v) > 2 for v in double):
        return UNRECOGNIZED
    n = len(double) - 1
    if n == 0:
        return FiberType("I*", 0)
    ends = [v for v in double if chain.degree(v) == 1]
    for e in ends:
        if sum(1 for w in reduced if sub.meet(e, w)) != 2:
            return UNRECOGNIZED
    return FiberType("I*", n)


def _disjoint(g, d1, d2):
    s1, s2 = set(_as_divisor(d1)), set(_as_divisor(d2))
    return not (s1 & s2) and not any(g.meet(a, b) for a in s1 for b in s2)


def trivial_lattice(g: CurveGraph, fibers, section: str) -> Lattice:
    """Lattice generated by a section, one fibre class and the fibre components missing the section."""
    fibers = [_as_divisor(f) for f in fibers]
    if not fibers:
        raise GraphError("need at least one fibre")
    for f in fibers:
        if intersection_number(g, f, section) != 1:
            raise GraphError(f"{section} is not a section for fibre {Divisor(f)}")
    for i, f in enumerate(fibers):
        for f2 in fibers[i + 1:]:
            if not _disjoint(g, f, f2):
                raise GraphError("fibres are not pairwise disjoint")
    vecs = [g.vector(section), g.vector(fibers[0])]
    for f in fibers:
        for c in f:
            if g.meet(c, section) == 0:
                vecs.append(g.vector(c))
    return lattice_from_vectors(g.intersection_matrix(), vecs)


def trivial_lattice_blocks(fiber_types) -> Lattice:
    """U + the root lattices of the fibre types, the expected shape of the trivial lattice."""
    blocks = [hyperbolic_U()]
    for t in fiber_types:
        b = t.root_block()
        if b is not None:
            blocks.append(b)
    return direct_sum(blocks)


def sec6_fiber_bound(rho: int = 22, cycle_length: int = 16):
    """Largest component count s of the fibre holding E0..E3 and the allowed I_n* range.

    rank T >= (cycle_length - 1) + (s - 1) + 2 must stay <= rho.
    """
    s_max = rho - (cycle_length - 1) - 2 + 1
    return {"s_max": s_max, "rank_lower_bound": f"s+{cycle_length}",
            "In_star_max_n": s_max - 5}


# ADE bookkeeping

def ade_type_of_component(g: CurveGraph, comp) -> str:
    sub = g.subgraph(comp)
    n = len(comp)
    if any(m != 1 for m in sub.edges.values()) or sum(sub.edges.values()) != n - 1:
        raise GraphError("component is not a simply-laced tree")
    if any(sub.self_int[v] != -2 for v in comp):
        raise GraphError("ADE types need (-2)-curves")
    deg = {v: sub.degree(v) for v in comp}
    branch = [v for v in comp if deg[v] >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or deg[branch[0]] > 3:
        raise GraphError("not an ADE diagram")
    c = branch[0]
    arms = []
    for start in sub.neighbours(c):
        length, prev, cur = 1, c, start
        while True:
            nxt = [w for w in sub.neighbours(cur) if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    raise GraphError("not an ADE diagram")


def ade_type(g: CurveGraph, labels) -> str:
    """Configuration string such as ``"16A1+D4"``."""
    counts = defaultdict(int)
    for comp in g.components(labels):
        counts[ade_type_of_component(g, comp)] += 1

    def key(t):
        return ("ADE".index(t[0]), int(t[1:]))

    return "+".join(f"{counts[t]}{t}" if counts[t] > 1 else t for t in sorted(counts, key=key))


# named divisors on the thirty-curve graph

def fibers_f():
    """The five I0* fibres of the first fibration (C'1 is a section)."""
    out = [Divisor({"C0": 1, "E0": 2, "E1": 1, "E2": 1, "E3": 1})]
    for i in range(1, 5):
        d = {f"C{i}": 2}
        d.update({f"E{i}{j}": 1 for j in range(1, 5)})
        out.append(Divisor(d))
    return out


def fibers_f_prime():
    out = [Divisor({"Cp0": 1, "E0": 2, "E1": 1, "E2": 1, "E3": 1})]
    for j in range(1, 5):
        d = {f"Cp{j}": 2}
        d.update({f"E{i}{j}": 1 for i in range(1, 5)})
        out.append(Divisor(d))
    return out


I16_CYCLE = Divisor({**{e: 1 for e in ("E11", "E14", "E41", "E42", "E22", "E23", "E33", "E34")},
                     **{f"C{i}": 1 for i in range(1, 5)},
                     **{f"Cp{i}": 1 for i in range(1, 5)}})
I8_CYCLE = Divisor.parse("C1 + E13 + Cp3 + E43 + C4 + E42 + Cp2 + E12")
WHITE_VERTICES = [f"E{i}{j}" for i in range(1, 5) for j in range(1, 5)] + ["E0", "E1", "E2", "E3"]
CONTRACTED_A1 = [f"C{i}" for i in range(1, 5)] + [f"Cp{i}" for i in range(1, 5)]
CONTRACTED_D4 = ["E0", "E1", "E2", "E3"]


def a1_equation():
    return MultiPoly.parse("z^2 + x*y", ("x", "y", "z"))


def d4_equation():
    """The simply connected D4 in characteristic 2."""
    return MultiPoly.parse("z^2 + x^2*y + x*y^2", ("x", "y", "z"))


def contraction_check_sec6(g: CurveGraph) -> dict:
    """Eight disjoint curves C_i, C'_i plus the D4 star E0..E3: 12 curves, Tjurina total 24."""
    report = {"checks": {}}
    checks = report["checks"]
    present = all(v in g.vertices for v in CONTRACTED_A1 + CONTRACTED_D4)
    checks["curves_present"] = present
    if not present:
        report["pass"] = False
        return report
    checks["eight_pairwise_disjoint"] = all(
        g.meet(a, b) == 0 for i, a in enumerate(CONTRACTED_A1) for b in CONTRACTED_A1[i + 1:])
    try:
        star = ade_type(g, CONTRACTED_D4)
    except GraphError:
        star = None
    checks["star_is_D4"] = star == "D4"
    checks["star_disjoint_from_eight"] = all(
        g.meet(a, b) == 0 for a in CONTRACTED_A1 for b in CONTRACTED_D4)
    try:
        contracted_type = ade_type(g, CONTRACTED_A1 + CONTRACTED_D4)
    except GraphError:
        contracted_type = None
    t_a1, t_d4 = tjurina_number(a1_equation()), tjurina_number(d4_equation())
    report.update({
        "contracted": len(CONTRACTED_A1) + len(CONTRACTED_D4),
        "contracted_type": contracted_type,
        "tjurina_A1": t_a1, "tjurina_D4": t_d4,
        "tjurina_total": len(CONTRACTED_A1) * t_a1 + t_d4,
    })
    checks["twelve_curves"] = report["contracted"] == 12
    checks["tjurina_total_24"] = report["tjurina_total"] == 24
    report["pass"] = all(checks.values())
    return report


# check suites

def figure1_report(g: CurveGraph = None) -> dict:
    g = g or builtin_figure1()
    M = g.intersection_matrix()
    L = lattice_generated_by(g)
    q = discriminant_form_f2(L)
    T = trivial_lattice(g, fibers_f(), "Cp1")
    sigma = artin_sigma(L)
    index_sq = T.det // L.det
    m = None
    for mm in range(3):
        if index_sq == (2 ** (2 + mm)) ** 2:
            m = mm
    out = {
        "vertices": len(g.vertices), "edges": sum(g.edges.values()),
        "rank": intmat.rank(M), "span_det": L.det, "two_elementary": is_2_elementary(L),
        "sigma": sigma, "even": L.is_even(), "discriminant_arf": arf_invariant(q),
        "singular_lines": len(totally_singular_subspaces(q, 1)),
        "trivial_rank": T.rank, "trivial_det": T.det, "index_m": m,
        "index_relation": 10 == 2 * sigma + 2 * (2 + (m if m is not None else -99)),
        "white_vertices_type": ade_type(g, WHITE_VERTICES),
    }
    out["pass"] = (out["vertices"] == 30 and out["edges"] == 45 and out["rank"] == 22
                   and out["span_det"] == -2 ** 6 and out["sigma"] == 3
                   and out["trivial_det"] == -2 ** 10 and out["trivial_rank"] == 22
                   and out["index_relation"] and out["singular_lines"] == 27)
    return out


def figure2_report(g: CurveGraph = None) -> dict:
    g = g or builtin_figure2()
    M = g.intersection_matrix()
    L = lattice_generated_by(g)
    out = {"vertices": len(g.vertices), "edges": sum(g.edges.values()),
           "rank": intmat.rank(M), "span_det": L.det, "even": L.is_even(),
           "two_elementary": is_2_elementary(L), "sigma": None,
           "star_E0": sorted(g.neighbours("E0"))}
    if out["two_elementary"]:
        try:
            out["sigma"] = artin_sigma(L)
        except ValueError:
            pass
    out["pass"] = out["vertices"] == 26 and set(out["star_E0"]) == {"E1", "E2", "E3", "C0", "Cp0"}
    return out


def sec4_report(g: CurveGraph = None) -> dict:
    g = g or builtin_figure1()
    f1 = Divisor.parse("2C1 + E11 + E12 + E13 + E14")
    f1p = Divisor.parse("2Cp1 + E11 + E21 + E31 + E41")
    v1 = intersection_vector(g, Divisor.parse("2C0 - C1 - C2 - C3 - C4"))
    v2 = intersection_vector(g, Divisor.parse("2Cp0 - Cp1 - Cp2 - Cp3 - Cp4"))
    types_f = [str(is_fiber(g, d)) for d in fibers_f()]
    types_fp = [str(is_fiber(g, d)) for d in fibers_f_prime()]
    sections = all(intersection_number(g, f, f"Cp{j}") == 1
                   for f in fibers_f() for j in range(1, 5))
    disjoint = all(_disjoint(g, a, b) for fam in (fibers_f(), fibers_f_prime())
                   for i, a in enumerate(fam) for b in fam[i + 1:])
    T = trivial_lattice(g, fibers_f(), "Cp1")
    expected = trivial_lattice_blocks([is_fiber(g, d) for d in fibers_f()])
    out = {
        "intersection_f_fprime": intersection_number(g, f1, f1p),
        "intersection_vectors_equal": v1 == v2,
        "fiber_types_f": types_f, "fiber_types_f_prime": types_fp,
        "sections_Cpj": sections, "fibers_disjoint": disjoint,
        "trivial_rank": T.rank, "trivial_det": T.det,
        "expected_U_D4^5_det": expected.det,
        "white_vertices_type": ade_type(g, WHITE_VERTICES),
    }
    out["pass"] = (out["intersection_f_fprime"] == 2 and v1 == v2 and sections and disjoint
                   and all(t == "I0*" for t in types_f + types_fp)
                   and T.det == expected.det == -2 ** 10 and T.rank == 22
                   and out["white_vertices_type"] == "16A1+D4")
    return out


def sec6_report(g: CurveGraph = None) -> dict:
    g = g or builtin_figure1()
    out = contraction_check_sec6(g)
    out["I16_type"] = str(is_fiber(g, I16_CYCLE))
    out["I8_type"] = str(is_fiber(g, I8_CYCLE))
    out["cycle_avoids_E0_E3"] = not (set(I16_CYCLE.support()) & set(CONTRACTED_D4))
    out["bound"] = sec6_fiber_bound()
    out["pass"] = (out["pass"] and out["I16_type"] == "I16" and out["I8_type"] == "I8"
                   and out["cycle_avoids_E0_E3"] and out["bound"]["s_max"] == 6
                   and out["bound"]["In_star_max_n"] == 1)
    return out
