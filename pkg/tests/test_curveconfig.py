import pytest

from kummer2 import intmat
from kummer2.curveconfig import (CONTRACTED_A1, I8_CYCLE, I16_CYCLE, WHITE_VERTICES, CurveGraph,
                                 Divisor, FiberType, GraphError, ade_type, builtin_figure1,
                                 builtin_figure2, contraction_check_sec6, fibers_f,
                                 fibers_f_prime, figure1_report, figure2_report, gram_from_graph,
                                 intersection_number, intersection_vector, is_fiber,
                                 lattice_generated_by, sec4_report, sec6_fiber_bound, sec6_report,
                                 trivial_lattice, trivial_lattice_blocks)
from kummer2.f2quad import totally_singular_subspaces
from kummer2.lattice import artin_sigma, discriminant_form_f2, is_2_elementary

G1 = builtin_figure1()


def test_figure1_shape():
    assert len(G1.vertices) == 30
    assert sum(G1.edges.values()) == 45
    assert all(m == 1 for m in G1.edges.values())
    for i in range(1, 5):
        for j in range(1, 5):
            e = f"E{i}{j}"
            assert sorted(G1.neighbours(e)) == sorted([f"C{i}", f"Cp{j}"])


def test_figure1_adjacency_list():
    expected = {frozenset(p) for p in
                [("E0", "E1"), ("E0", "E2"), ("E0", "E3"), ("E0", "C0"), ("E0", "Cp0")]
                + [("C0", f"Cp{j}") for j in range(1, 5)]
                + [("Cp0", f"C{i}") for i in range(1, 5)]
                + [(f"C{i}", f"E{i}{j}") for i in range(1, 5) for j in range(1, 5)]
                + [(f"Cp{j}", f"E{i}{j}") for i in range(1, 5) for j in range(1, 5)]}
    assert set(G1.edges) == expected


def test_handshake():
    assert sum(G1.degree(v) for v in G1.vertices) == 2 * 45


def test_figure2_shape():
    g = builtin_figure2()
    assert len(g.vertices) == 26
    assert set(g.neighbours("E0")) == {"E1", "E2", "E3", "C0", "Cp0"}
    rep = figure2_report(g)
    assert rep["rank"] == intmat.rank(g.intersection_matrix())


def test_text_round_trip():
    for g in (G1, builtin_figure2()):
        assert CurveGraph.parse(g.to_text()) == g


def test_parse_errors():
    with pytest.raises(GraphError):
        CurveGraph.parse("curve A\nmeet A A\n")
    with pytest.raises(GraphError):
        CurveGraph.parse("curve A\nmeet A B\n")
    with pytest.raises(GraphError):
        CurveGraph.parse("curve A\ncurve A\n")
    with pytest.raises(GraphError):
        CurveGraph.parse("line A\n")


def test_parse_self_intersection_and_multiplicity():
    g = CurveGraph.parse("# comment\ncurve A self=-1\ncurve B\nmeet A B 2\n")
    assert g.intersection_matrix() == [[-1, 2], [2, -2]]


def test_gram_examples():
    L = gram_from_graph(G1)
    assert L.rank == 30 and L.span
    assert intmat.rank(L.matrix()) == 22
    assert gram_from_graph(CurveGraph.parse("curve A\n")).gram == ((-2,),)
    assert gram_from_graph(CurveGraph.parse("curve A\ncurve B\n")).gram == ((-2, 0), (0, -2))


def test_span_lattice_figure1():
    L = lattice_generated_by(G1)
    assert L.rank == 22 and L.det == -2 ** 6
    assert L.is_even() and is_2_elementary(L) and artin_sigma(L) == 3
    q = discriminant_form_f2(L)
    assert len(totally_singular_subspaces(q, 1)) == 27


def test_span_single_vertex():
    assert lattice_generated_by(CurveGraph.parse("curve A\n")).det == -2


def test_fibre_types_eq5_eq6():
    for d in fibers_f() + fibers_f_prime():
        assert is_fiber(G1, d) == FiberType("I*", 0)
        assert intersection_number(G1, d, d) == 0


def test_fibres_disjoint_within_each_fibration():
    for fam in (fibers_f(), fibers_f_prime()):
        for i, a in enumerate(fam):
            for b in fam[i + 1:]:
                assert not set(a.support()) & set(b.support())
                assert intersection_number(G1, a, b) == 0


def test_cycles():
    assert str(is_fiber(G1, I16_CYCLE)) == "I16"
    assert str(is_fiber(G1, I8_CYCLE)) == "I8"
    assert not set(I16_CYCLE.support()) & {"E0", "E1", "E2", "E3"}


def test_fibre_recognition_negative_cases():
    assert str(is_fiber(G1, Divisor.parse("C1 + E11"))) == "unrecognized"
    assert str(is_fiber(G1, Divisor.parse("C1 + Cp1"))) == "unrecognized"  # disconnected
    assert str(is_fiber(G1, Divisor.parse("2C0 + E0"))) == "unrecognized"
    with pytest.raises(GraphError):
        is_fiber(G1, Divisor({}))


def test_fibre_recognition_synthetic():
    two_cycle = CurveGraph.parse("curve A\ncurve B\nmeet A B 2\n")
    assert str(is_fiber(two_cycle, Divisor.parse("A + B"))) == "I2"
    # D~5: chain of two double curves, two reduced ends on each
    d5 = CurveGraph.parse("\n".join(["curve a", "curve b", "curve c", "curve d", "curve e",
                                     "curve f", "meet a c", "meet b c", "meet c d",
                                     "meet d e", "meet d f"]))
    assert str(is_fiber(d5, Divisor.parse("a + b + 2c + 2d + e + f"))) == "I1*"


def test_section_property():
    for f in fibers_f():
        for j in range(1, 5):
            assert intersection_number(G1, f, f"Cp{j}") == 1


def test_trivial_lattice():
    T = trivial_lattice(G1, fibers_f(), "Cp1")
    assert T.rank == 22 == 5 * 4 + 2
    assert T.det == -2 ** 10
    expected = trivial_lattice_blocks([FiberType("I*", 0)] * 5)
    assert expected.det == T.det and expected.rank == T.rank
    T1 = trivial_lattice(G1, fibers_f()[:1], "Cp1")
    assert T1.det == -4 and T1.rank == 6


def test_trivial_lattice_index_relation():
    T = trivial_lattice(G1, fibers_f(), "Cp1")
    L = lattice_generated_by(G1)
    assert T.det // L.det == (2 ** (2 + 0)) ** 2


def test_trivial_lattice_bad_section():
    with pytest.raises(GraphError):
        trivial_lattice(G1, fibers_f(), "C1")
    with pytest.raises(GraphError):
        trivial_lattice(G1, [fibers_f()[1], fibers_f()[1]], "Cp1")


def test_trivial_lattice_blocks():
    assert trivial_lattice_blocks([FiberType("I", 16)]).rank == 17
    assert abs(trivial_lattice_blocks([FiberType("I", 16), FiberType("I*", 1)]).det) == 16 * 4


def test_sec6_rank_bound():
    b = sec6_fiber_bound()
    assert b["s_max"] == 6 and b["In_star_max_n"] == 1
    # the largest allowed I_n* fibre (n = 1, s = 6 components) together with I16 fits into rank 22
    assert trivial_lattice_blocks([FiberType("I", 16), FiberType("I*", 1)]).rank == 22


def test_intersection_numbers():
    f1 = Divisor.parse("2C1 + E11 + E12 + E13 + E14")
    f1p = Divisor.parse("2Cp1 + E11 + E21 + E31 + E41")
    assert intersection_number(G1, f1, f1p) == 2
    assert intersection_number(G1, "C1", "Cp2") == 0


def test_intersection_vectors():
    v = intersection_vector(G1, Divisor.parse("2C0 - C1 - C2 - C3 - C4"))
    w = intersection_vector(G1, Divisor.parse("2Cp0 - Cp1 - Cp2 - Cp3 - Cp4"))
    assert v == w
    assert intersection_vector(G1, Divisor({})) == [0] * 30
    M = G1.intersection_matrix()
    assert intersection_vector(G1, "E23") == M[G1.vertices.index("E23")]


def test_divisor_parse():
    d = Divisor.parse("2C0 - C1 + E0")
    assert d.multiplicities == {"C0": 2, "C1": -1, "E0": 1}
    with pytest.raises(GraphError):
        G1.vector(Divisor.parse("Z9"))


def test_contraction_check():
    rep = contraction_check_sec6(G1)
    assert rep["pass"] and rep["contracted"] == 12 and rep["tjurina_total"] == 24
    assert rep["contracted_type"] == "8A1+D4"


def test_contraction_check_mutation():
    g = G1.add_edge("C1", "C2")
    rep = contraction_check_sec6(g)
    assert not rep["pass"] and not rep["checks"]["eight_pairwise_disjoint"]


def test_contraction_check_missing_structure():
    rep = contraction_check_sec6(CurveGraph.parse("curve A\n"))
    assert rep["pass"] is False


def test_ade_types():
    assert ade_type(G1, WHITE_VERTICES) == "16A1+D4"
    assert ade_type(G1, CONTRACTED_A1) == "8A1"
    chain = CurveGraph.parse("curve a\ncurve b\ncurve c\nmeet a b\nmeet b c\n")
    assert ade_type(chain, chain.vertices) == "A3"
    e6 = CurveGraph.parse("\n".join([f"curve {x}" for x in "abcdef"]
                                    + ["meet a b", "meet b c", "meet c d", "meet d e", "meet c f"]))
    assert ade_type(e6, e6.vertices) == "E6"
    with pytest.raises(GraphError):
        ade_type(G1, I16_CYCLE.support())


def test_reports_pass():
    for rep in (figure1_report(), figure2_report(), sec4_report(), sec6_report()):
        assert rep["pass"]


def test_figure1_report_values():
    rep = figure1_report()
    assert (rep["rank"], rep["span_det"], rep["sigma"], rep["singular_lines"]) == (22, -64, 3, 27)
    assert rep["index_m"] == 0 and rep["index_relation"]
