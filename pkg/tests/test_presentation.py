"""Presentations, marker sets, gentle structure, Brauer graphs."""

from importlib.resources import files

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biserial import (
    AlgebraPresentation,
    LineCyclePair,
    ParseError,
    Path,
    PresentationError,
    Quiver,
    brauer_algebra,
    brauer_tau_finite,
    emit_presentation,
    from_line_cycle_pair,
    gentle_subideal,
    is_gentle,
    marker_sets,
    parse_brauer_graph,
    parse_presentation,
    presentations_isomorphic,
    separated_tau_finite,
    to_line_cycle_pair,
    truncate,
    validate_special_biserial,
)
from oracles import marker_sets_brute

CORPUS = files("biserial").joinpath("corpus")


def load(name):
    return parse_presentation(CORPUS.joinpath(name).read_text())


@pytest.fixture(scope="module")
def rectangle():
    return load("rectangle_special.alg")


@pytest.fixture(scope="module")
def rectangle_gentle():
    return load("rectangle_gentle.alg")


@pytest.fixture(scope="module")
def two_loops():
    return load("two_loops.alg")


# -- parsing ------------------------------------------------------------------


@pytest.mark.parametrize(
    "name",
    [
        "rectangle_gentle.alg",
        "rectangle_special.alg",
        "cyclic_A3.alg",
        "two_loops.alg",
    ],
)
def test_emit_parse_round_trip(name):
    pres = load(name)
    text = emit_presentation(pres)
    again = parse_presentation(text)
    assert emit_presentation(again) == text
    assert again.name == pres.name
    assert again.quiver == pres.quiver
    assert again.zero == pres.zero
    assert again.equal == pres.equal


def test_parse_defaults_and_comments():
    pres = parse_presentation(
        """
        # a loop with a cutoff
        vertices v
        arrow x : v -> v   # the loop
        nilpotent 3
        """
    )
    assert pres.name == "A"
    assert pres.nilpotency == 3
    assert pres.path_is_nonzero(("x", "x"))
    assert not pres.path_is_nonzero(("x", "x", "x"))


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("arrow a : 1 -> 2", "unknown vertex"),
        ("vertices 1\nvertices 1", "duplicate"),
        ("vertices 1 2\narrow a : 1 -> 3", "unknown"),
        ("vertices 1 2\narrow a : 1 -> 2\nzero a*b", "unknown"),
        ("vertices 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\nzero a*b", "composable"),
        ("vertices 1\nnilpotent x", "nilpotent"),
        ("vertices 1 2\narrow a : 1 -> 2\nequal a = a*a", "composable"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_presentation(text)
    assert fragment in str(exc.value).lower()


def test_nonparallel_binomial_rejected():
    with pytest.raises(ParseError):
        parse_presentation(
            "vertices 1 2 3\n"
            "arrow a : 1 -> 2\n"
            "arrow b : 2 -> 3\n"
            "equal a = a*b\n"
        )


def test_opposite_is_an_involution(rectangle):
    double = rectangle.opposite().opposite()
    assert double.quiver == rectangle.quiver
    assert set(double.zero) == set(rectangle.zero)


# -- validation ---------------------------------------------------------------


@pytest.mark.parametrize(
    "name",
    ["rectangle_gentle.alg", "rectangle_special.alg", "cyclic_A3.alg", "two_loops.alg"],
)
def test_corpus_is_special_biserial(name):
    report = validate_special_biserial(load(name))
    assert report.ok, report.to_json()


def test_three_arrows_out_is_flagged():
    pres = parse_presentation(
        "vertices 1 2\n"
        "arrow a : 1 -> 2\narrow b : 1 -> 2\narrow c : 1 -> 2\n"
    )
    report = validate_special_biserial(pres)
    assert not report.ok
    assert any(issue.clause == "b" for issue in report.issues)


def test_live_double_composition_is_flagged():
    # two compositions through the middle vertex, no relation kills either
    pres = parse_presentation(
        "vertices 1 2 3 4\n"
        "arrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 2 -> 4\n"
    )
    report = validate_special_biserial(pres)
    assert not report.ok
    assert {issue.clause for issue in report.issues} == {"d"}


# -- marker sets: the worked eight-vertex example -----------------------------


def path_strings(paths):
    return sorted(str(p) for p in paths)


def test_rectangle_marker_sets(rectangle):
    ms = marker_sets(rectangle)
    assert path_strings(ms.mp_star) == [
        "d1*d2*d3",
        "d2*d3*d4",
        "d3*d4",
        "d4",
    ]
    assert path_strings(ms.mp_costar) == [
        "d1",
        "d1*d2",
        "d1*d2*d3",
        "d2*d3*d4",
    ]
    assert path_strings(ms.mp) == ["d1*d2*d3", "d2*d3*d4"]
    assert path_strings(ms.ovmp_star) == path_strings(ms.mp_star) + [
        "e_2",
        "e_7",
        "e_8",
    ]
    assert path_strings(ms.ovmp_costar) == path_strings(ms.mp_costar) + [
        "e_1",
        "e_2",
        "e_7",
    ]
    assert path_strings(ms.ovmp) == ["d1*d2*d3", "d2*d3*d4", "e_2", "e_7"]
    # three rotation classes of three based cycles each
    assert len(ms.cyc_classes) == 3
    assert sorted(len(c) for c in ms.cyc_classes) == [3, 3, 3]
    flat = {str(c) for c in ms.cyc}
    assert flat == {
        "a1*a2*a3", "a2*a3*a1", "a3*a1*a2",
        "b1*b2*b3", "b2*b3*b1", "b3*b1*b2",
        "c1*c2*c3", "c2*c3*c1", "c3*c1*c2",
    }


def test_two_loops_marker_sets(two_loops):
    ms = marker_sets(two_loops)
    assert ms.mp_star == ()
    assert ms.mp_costar == ()
    assert ms.ovmp == ()
    assert {str(c) for c in ms.cyc} == {"x*y", "y*x"}


def test_cyclic_quiver_marker_sets():
    ms = marker_sets(load("cyclic_A3.alg"))
    assert ms.mp_star == ()
    assert path_strings(ms.ovmp) == ["e_1", "e_2", "e_3"]
    assert len(ms.cyc_classes) == 1
    assert len(ms.cyc_classes[0]) == 3


@pytest.mark.parametrize(
    "name, max_len",
    [
        ("rectangle_special.alg", 9),
        ("rectangle_gentle.alg", 9),
        ("two_loops.alg", 8),
        ("cyclic_A3.alg", 7),
    ],
)
def test_marker_sets_against_brute_force(name, max_len):
    pres = load(name)
    plus = pres.string_completion()
    arrows = {a.name: (a.source, a.target) for a in plus.quiver.arrows}
    relations = list(plus.monomial_relations())
    brute = marker_sets_brute(arrows, relations, max_len, plus.nilpotency)
    ms = marker_sets(pres)
    assert {p.arrows for p in ms.mp_star} == brute["mp_star"]
    assert {p.arrows for p in ms.mp_costar} == brute["mp_costar"]
    assert {p.arrows for p in ms.mp} == brute["mp"]
    assert {c.arrows for c in ms.cyc} == brute["cyc"]


def test_marker_sets_invariant_under_completion(rectangle):
    ms = marker_sets(rectangle)
    ms_plus = marker_sets(rectangle.string_completion())
    assert path_strings(ms.mp) == path_strings(ms_plus.mp)
    assert path_strings(ms.ovmp_star) == path_strings(ms_plus.ovmp_star)
    assert {str(c) for c in ms.cyc} == {str(c) for c in ms_plus.cyc}


def test_marker_sets_json_shape(two_loops):
    data = marker_sets(two_loops).to_json()
    assert set(data) == {
        "mp_star", "mp_costar", "mp", "ovmp_star", "ovmp_costar", "ovmp", "cyc",
    }
    assert data["cyc"] == [[["x", "y"], ["y", "x"]]]


# -- gentle algebras ----------------------------------------------------------


def test_gentle_detection(rectangle, rectangle_gentle, two_loops):
    assert is_gentle(rectangle_gentle)[0]
    assert is_gentle(two_loops)[0]
    ok, witnesses = is_gentle(rectangle)
    assert not ok
    assert witnesses


def test_gentle_subideal_of_the_rectangle(rectangle, rectangle_gentle):
    sub = gentle_subideal(rectangle)
    assert {z.arrows for z in sub.zero} == {
        z.arrows for z in rectangle_gentle.zero
    }
    assert is_gentle(sub)[0]


def test_gentle_subideal_keeps_only_forced_pairs():
    # a relation at a non-branching vertex is not forced into the subideal
    pres = parse_presentation(
        "vertices 1 2 3\n"
        "arrow a : 1 -> 2\narrow b : 2 -> 3\n"
        "zero a*b\n"
    )
    sub = gentle_subideal(pres)
    assert sub.zero == ()
    assert is_gentle(sub)[0]


def test_truncation_kills_all_cycles(rectangle):
    for level in (1, 2):
        cut = truncate(rectangle, level)
        ms = marker_sets(cut)
        assert ms.cyc == ()
        powers = {z.arrows for z in cut.zero} - {z.arrows for z in rectangle.zero}
        assert len(powers) == 9
        assert {len(w) for w in powers} == {3 * level}


# -- line/cycle normal form ---------------------------------------------------


def test_rectangle_line_cycle_pair(rectangle_gentle):
    pair = to_line_cycle_pair(rectangle_gentle)
    assert sorted(pair.components) == [
        ("cycle", 3), ("cycle", 3), ("cycle", 3), ("line", 5),
    ]
    assert len(pair.glue) == 6
    back = from_line_cycle_pair(pair)
    assert presentations_isomorphic(back, rectangle_gentle)


def test_two_loops_line_cycle_pair(two_loops):
    pair = to_line_cycle_pair(two_loops)
    assert pair.components == (("cycle", 2),)
    assert len(pair.glue) == 1
    assert presentations_isomorphic(from_line_cycle_pair(pair), two_loops)


def test_line_cycle_pair_validation():
    with pytest.raises(PresentationError):
        LineCyclePair((("line", 1),), (((0, 0), (0, 0)),))
    with pytest.raises(PresentationError):
        LineCyclePair((("line", 2), ("line", 1)), (((0, 0), (1, 0)),))
    with pytest.raises(PresentationError):
        LineCyclePair((("line", 2),), (((0, 0), (0, 5)),))


def test_special_presentation_has_no_line_cycle_pair(rectangle):
    with pytest.raises(PresentationError):
        to_line_cycle_pair(rectangle)


@st.composite
def line_cycle_pairs(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    components = []
    for _ in range(n):
        kind = draw(st.sampled_from(["line", "cycle"]))
        size = draw(st.integers(min_value=1, max_value=4))
        components.append((kind, size))
    slots = []
    for index, (kind, size) in enumerate(components):
        if kind == "line" and size == 1:
            continue
        slots.extend((index, pos) for pos in range(size))
    draw_count = draw(st.integers(min_value=0, max_value=len(slots) // 2))
    shuffled = draw(st.permutations(slots))
    glue = []
    for k in range(draw_count):
        glue.append(tuple(sorted(shuffled[2 * k : 2 * k + 2])))
    return LineCyclePair(tuple(components), tuple(sorted(glue)))


@given(line_cycle_pairs())
@settings(max_examples=60, deadline=None)
def test_line_cycle_round_trip(pair):
    pres = from_line_cycle_pair(pair)
    assert is_gentle(pres)[0]
    again = from_line_cycle_pair(to_line_cycle_pair(pres))
    assert presentations_isomorphic(again, pres)


# -- Brauer graphs ------------------------------------------------------------


def brauer(name):
    return parse_brauer_graph(CORPUS.joinpath(name).read_text())


def test_brauer_triangle_is_finite():
    graph = brauer("brauer_triangle.bg")
    assert brauer_tau_finite(graph)
    pres = brauer_algebra(graph)
    assert validate_special_biserial(pres).ok
    assert len(pres.equal) == 3


def test_brauer_square_is_infinite():
    graph = brauer("brauer_square.bg")
    assert not brauer_tau_finite(graph)


def test_brauer_single_edge():
    graph = brauer("brauer_edge.bg")
    assert brauer_tau_finite(graph)
    warnings = graph.admissibility_warnings()
    assert len(warnings) == 2
    report = validate_special_biserial(brauer_algebra(graph))
    assert not report.ok


def test_brauer_default_orders():
    graph = parse_brauer_graph(
        "vertex u mult 1\nvertex v mult 1\nvertex w mult 1\n"
        "edge e1 : u v\nedge e2 : v w\nedge e3 : w u\n"
    )
    assert brauer_tau_finite(graph)
    assert presentations_isomorphic(
        brauer_algebra(graph), brauer_algebra(brauer("brauer_triangle.bg"))
    )


def test_brauer_even_odd_cycles():
    pentagon = parse_brauer_graph(
        "\n".join(f"vertex v{i} mult 1" for i in range(5))
        + "\n"
        + "\n".join(f"edge e{i} : v{i} v{(i + 1) % 5}" for i in range(5))
        + "\n"
    )
    assert brauer_tau_finite(pentagon)
    with_tail = parse_brauer_graph(
        "\n".join(f"vertex v{i} mult 1" for i in range(6))
        + "\n"
        + "\n".join(f"edge e{i} : v{i} v{(i + 1) % 5}" for i in range(5))
        + "\nedge tail : v0 v5\n"
    )
    assert brauer_tau_finite(with_tail)
    loop = parse_brauer_graph(
        "vertex u mult 2\nedge e : u u\norder u : e e\n"
    )
    assert brauer_tau_finite(loop)
    doubled = parse_brauer_graph(
        "vertex u mult 1\nvertex v mult 1\n"
        "edge e : u v\nedge f : u v\n"
    )
    assert not brauer_tau_finite(doubled)
    theta = parse_brauer_graph(
        "vertex u mult 1\nvertex v mult 1\n"
        "edge e : u v\nedge f : u v\nedge g : u v\n"
    )
    assert not brauer_tau_finite(theta)


# -- separated quiver ---------------------------------------------------------


def test_separated_quiver_requires_radical_square_zero(rectangle):
    with pytest.raises(PresentationError):
        separated_tau_finite(rectangle)


def test_separated_quiver_finiteness():
    finite = parse_presentation(
        "vertices 1 2\narrow a : 1 -> 1\narrow b : 1 -> 2\n"
        "zero a*a\nzero a*b\n"
    )
    assert separated_tau_finite(finite)
    kronecker = parse_presentation(
        "vertices 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\n"
    )
    assert not separated_tau_finite(kronecker)
    # an alternating cycle through four vertices
    cycle = parse_presentation(
        "vertices 1 2 3 4\n"
        "arrow a : 1 -> 2\narrow b : 3 -> 2\narrow c : 3 -> 4\narrow d : 1 -> 4\n"
    )
    assert not separated_tau_finite(cycle)
