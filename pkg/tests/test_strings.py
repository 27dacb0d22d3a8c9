"""Walk combinatorics: strings, bands, their modules, homs and translates."""

from fractions import Fraction
from importlib.resources import files

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biserial import (
    AlgebraPresentation,
    BandWord,
    ModuleDescriptor,
    Path,
    PresentationError,
    Quiver,
    StringWord,
    ar_translate,
    band_module,
    canonical_subsets,
    dim_vector,
    enumerate_bands,
    enumerate_strings,
    hom_basis,
    hom_dim,
    is_band,
    is_brick,
    is_string,
    module_from_json,
    modules_isomorphic,
    parse_presentation,
    pin_module,
    string_module,
    submodule_dim_vectors,
    truncate,
)
from biserial.presentation import Arrow, brauer_algebra, parse_brauer_graph
from biserial.strings import (
    letter_from_json,
    letter_to_json,
    pin_radical_string,
    pin_sides,
    pin_top_string,
    projective_string,
    string_from_json,
    walk_from_path,
)
from oracles import reduced_walks, word_alive

CORPUS = files("biserial").joinpath("corpus")


def load(name):
    return parse_presentation(CORPUS.joinpath(name).read_text())


def make_pres(vertices, arrows, name="test"):
    quiver = Quiver(list(vertices), [Arrow(n, s, t) for n, s, t in arrows])
    return AlgebraPresentation(quiver, name=name)


@pytest.fixture(scope="module")
def rect_sp():
    return load("rectangle_special.alg")


@pytest.fixture(scope="module")
def rect_gentle():
    return load("rectangle_gentle.alg")


@pytest.fixture(scope="module")
def two_loops():
    return load("two_loops.alg")


@pytest.fixture(scope="module")
def brauer():
    graph = parse_brauer_graph(CORPUS.joinpath("brauer_triangle.bg").read_text())
    return brauer_algebra(graph)


@pytest.fixture(scope="module")
def a3():
    return make_pres(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], "A3")


WORKED_LETTERS = (("b1", 1), ("b2", 1), ("c1", -1), ("d3", 1), ("d4", 1))
WORKED_BAND = (("c2", -1), ("c1", -1), ("d3", 1), ("d4", 1))


# -- words and serialization ---------------------------------------------------


def test_letter_json_roundtrip():
    assert letter_to_json(("a1", 1)) == "a1"
    assert letter_to_json(("a1", -1)) == "~a1"
    for token in ("a1", "~a1", "u_2", "~u_2"):
        assert letter_to_json(letter_from_json(token)) == token


def test_string_json_roundtrip():
    word = StringWord(WORKED_LETTERS)
    assert string_from_json(word.to_json()) == word
    trivial = StringWord.trivial("7")
    data = trivial.to_json()
    assert data == {"string": [], "vertex": "7"}
    assert string_from_json(data) == trivial
    assert str(trivial) == "e_7"
    module = module_from_json({"string": ["b1", "~c1"]})
    assert module.kind == "string"
    assert module.string.letters == (("b1", 1), ("c1", -1))


def test_word_shape_guard():
    with pytest.raises(ValueError):
        StringWord(())
    with pytest.raises(ValueError):
        StringWord(WORKED_LETTERS, vertex="3")


def test_worked_string(rect_sp):
    quiver = rect_sp.quiver
    s = StringWord(WORKED_LETTERS)
    assert is_string(rect_sp, s)
    assert s.vertices(quiver) == ("3", "4", "6", "5", "7", "8")
    assert s.source(quiver) == "3" and s.target(quiver) == "8"
    assert s.canonical() == s
    assert s.inverse().canonical() == s
    module = string_module(rect_sp, s)
    assert dim_vector(rect_sp, module) == {
        "1": 0, "2": 0, "3": 1, "4": 1, "5": 1, "6": 1, "7": 1, "8": 1,
    }
    assert s in enumerate_strings(rect_sp, 5)


def test_string_rejections(rect_sp, rect_gentle):
    diagonal = StringWord(tuple((f"d{k}", 1) for k in range(1, 5)))
    assert not is_string(rect_sp, diagonal)
    assert not is_string(rect_sp, diagonal.inverse())
    assert is_string(rect_gentle, diagonal)
    assert not is_string(rect_sp, StringWord((("a2", 1), ("b2", 1))))
    assert not is_string(rect_sp, StringWord((("a1", 1), ("a1", -1))))
    assert not is_string(rect_sp, StringWord((("a1", 1), ("b1", 1))))
    assert not is_string(rect_sp, StringWord((("zz", 1),)))
    assert is_string(rect_sp, StringWord.trivial("4"))
    assert not is_string(rect_sp, StringWord.trivial("9"))


def test_substring_and_positions(rect_sp):
    quiver = rect_sp.quiver
    s = StringWord(WORKED_LETTERS)
    assert s.substring(quiver, 3, 6).letters == (("c1", -1), ("d3", 1), ("d4", 1))
    cut = s.substring(quiver, 3, 3)
    assert cut.is_trivial and cut.vertex == "6"
    assert s.substring(quiver, 1, 6) == s
    with pytest.raises(ValueError):
        s.substring(quiver, 4, 3)
    with pytest.raises(ValueError):
        s.position_vertex(quiver, 7)


# -- bands ---------------------------------------------------------------------


def test_worked_band(rect_sp):
    quiver = rect_sp.quiver
    b = BandWord(WORKED_BAND)
    assert is_band(rect_sp, b)
    assert b.vertices(quiver) == ("8", "6", "5", "7")
    canonical = b.canonical()
    assert canonical.letters == (("c1", -1), ("d3", 1), ("d4", 1), ("c2", -1))
    assert canonical.vertices(quiver) == ("6", "5", "7", "8")
    module = band_module(rect_sp, b, jordan_size=2, eigenvalue=Fraction(3, 2))
    assert dim_vector(rect_sp, module) == {
        "1": 0, "2": 0, "3": 0, "4": 0, "5": 2, "6": 2, "7": 2, "8": 2,
    }
    assert canonical in enumerate_bands(rect_sp, 4)
    again = module_from_json(module.to_json())
    assert modules_isomorphic(rect_sp, module, again)


def test_band_substring_wraps(rect_sp):
    quiver = rect_sp.quiver
    b = BandWord(WORKED_BAND).canonical()
    assert b.substring(quiver, 4, 2).letters == (("c2", -1), ("c1", -1))
    piece = b.substring(quiver, 2, 2)
    assert piece.is_trivial and piece.vertex == "5"


def test_band_rejections(rect_sp, two_loops):
    assert not is_band(two_loops, BandWord((("x", 1), ("y", 1))))
    mixed = BandWord((("x", -1), ("y", 1)))
    assert is_band(two_loops, mixed)
    assert not is_band(two_loops, BandWord(mixed.letters * 2))
    with pytest.raises(PresentationError):
        band_module(two_loops, mixed, eigenvalue=0)
    with pytest.raises(PresentationError):
        band_module(two_loops, mixed, jordan_size=0)
    with pytest.raises(PresentationError):
        band_module(rect_sp, BandWord((("a1", 1), ("a2", 1), ("a3", 1))))


ETA1 = (
    ("d2", -1), ("d1", -1), ("a1", 1), ("a2", 1),
    ("b1", -1), ("b3", -1), ("c2", 1), ("c3", 1),
)
ETA3 = (
    ("d4", -1), ("d3", -1), ("d2", -1), ("d1", -1),
    ("a1", 1), ("a2", 1), ("b1", -1), ("b3", -1), ("c2", 1),
)


def _band_oracle_canonical(walk):
    def inv(w):
        return tuple((n, -e) for n, e in reversed(w))

    cands = []
    for w in (tuple(walk), inv(walk)):
        cands.extend(w[k:] + w[:k] for k in range(len(w)))
    return min(cands)


def _runs_alive(letters, relations):
    runs = []
    for name, eps in letters:
        if runs and runs[-1][0] == eps:
            runs[-1][1].append(name)
        else:
            runs.append((eps, [name]))
    for eps, names in runs:
        word = tuple(names) if eps == 1 else tuple(reversed(names))
        if not word_alive(word, relations):
            return False
    return True


def oracle_band_classes(pres, max_len):
    """Rotation classes of cyclic reduced walks whose square stays alive."""
    arrows = {a.name: (a.source, a.target) for a in pres.quiver.arrows}
    relations = [tuple(w) for w in pres.string_completion().monomial_relations()]
    out = set()
    for walk in reduced_walks(arrows, relations, max_len):
        (n0, e0), (nl, el) = walk[0], walk[-1]
        src = arrows[n0][0] if e0 == 1 else arrows[n0][1]
        tgt = arrows[nl][1] if el == 1 else arrows[nl][0]
        if src != tgt or len({e for _, e in walk}) != 2:
            continue
        if nl == n0 and el == -e0:
            continue
        w = tuple(walk)
        if any(
            len(w) % d == 0 and w == w[:d] * (len(w) // d)
            for d in range(1, len(w))
        ):
            continue
        if not _runs_alive(w + w, relations):
            continue
        out.add(_band_oracle_canonical(w))
    return out


def test_rectangle_band_inventory(rect_gentle, rect_sp):
    for letters in (ETA1, WORKED_BAND, ETA3):
        assert is_band(rect_gentle, BandWord(letters))
    assert is_band(rect_sp, BandWord(ETA1))
    assert not is_band(rect_sp, BandWord(ETA3))

    found = enumerate_bands(rect_gentle, 9)
    assert {b.letters for b in found} == oracle_band_classes(rect_gentle, 9)
    lengths = sorted(len(b) for b in found)
    assert lengths == [4, 6, 6, 7, 7, 8, 8, 9, 9, 9, 9, 9, 9, 9]

    special = enumerate_bands(rect_sp, 9)
    assert {b.letters for b in special} == oracle_band_classes(rect_sp, 9)
    assert sorted(len(b) for b in special) == [4, 6, 6, 7, 7, 8, 8, 9, 9, 9, 9, 9, 9]
    gone = {b.letters for b in found} - {b.letters for b in special}
    assert gone == {BandWord(ETA3).canonical().letters}


def test_two_loop_bands_match_oracle(two_loops):
    found = enumerate_bands(two_loops, 6)
    assert {b.letters for b in found} == oracle_band_classes(two_loops, 6)
    assert BandWord((("x", -1), ("y", 1))) in found


# -- enumeration against the raw walk oracle -----------------------------------


@pytest.mark.parametrize(
    "name,max_len",
    [
        ("rectangle_special.alg", 4),
        ("rectangle_gentle.alg", 4),
        ("two_loops.alg", 6),
        ("cyclic_A3.alg", 5),
    ],
)
def test_enumerate_strings_matches_walks(name, max_len):
    pres = load(name)
    arrows = {a.name: (a.source, a.target) for a in pres.quiver.arrows}
    relations = [tuple(w) for w in pres.string_completion().monomial_relations()]
    walks = reduced_walks(arrows, relations, max_len)
    classes = {min(w, tuple((n, -e) for n, e in reversed(w))) for w in walks}
    mine = enumerate_strings(pres, max_len)
    trivials = [w for w in mine if w.is_trivial]
    assert len(trivials) == len(pres.quiver.vertices)
    assert {w.letters for w in mine if not w.is_trivial} == classes


def test_enumerate_strings_point():
    point = make_pres(["1"], [], "point")
    assert enumerate_strings(point, 3) == [StringWord.trivial("1")]
    assert enumerate_bands(point, 3) == []


# -- factor and submodule substrings, homs -------------------------------------


def test_fac_sub_arrow_module(rect_sp):
    module = string_module(rect_sp, StringWord((("a1", 1),)))
    # canonical orientation is ("a1", -1), so position 2 carries the top
    assert module.string.letters == (("a1", -1),)
    fac, sub = canonical_subsets(rect_sp, module)
    assert {(c.u, c.v) for c in fac} == {(1, 2), (2, 2)}
    assert {(c.u, c.v) for c in sub} == {(1, 1), (1, 2)}
    trivial_cut = next(c for c in fac if (c.u, c.v) == (2, 2))
    assert trivial_cut.word.is_trivial and trivial_cut.word.vertex == "1"
    assert trivial_cut.to_json() == {"u": 2, "v": 2, "string": [], "vertex": "1"}


def test_fac_sub_band_cuts(rect_sp):
    module = band_module(rect_sp, BandWord(WORKED_BAND))
    fac, sub = canonical_subsets(rect_sp, module)
    assert {(c.u, c.v) for c in fac} == {(1, 2), (1, 3), (2, 2), (2, 3)}
    assert {(c.u, c.v) for c in sub} == {(3, 1), (3, 4), (4, 1), (4, 4)}
    assert hom_basis(rect_sp, module, module) == []
    assert is_brick(rect_sp, module)
    with pytest.raises(PresentationError):
        canonical_subsets(
            rect_sp, band_module(rect_sp, BandWord(WORKED_BAND), jordan_size=2)
        )


def test_hom_small_cases(rect_sp):
    m = string_module(rect_sp, StringWord((("a1", 1),)))
    s1 = string_module(rect_sp, StringWord.trivial("1"))
    s2 = string_module(rect_sp, StringWord.trivial("2"))
    assert hom_dim(rect_sp, m, s1) == 1
    assert hom_dim(rect_sp, m, s2) == 0
    assert hom_dim(rect_sp, s2, m) == 1
    assert hom_dim(rect_sp, s1, m) == 0
    assert hom_dim(rect_sp, m, m) == 1 and is_brick(rect_sp, m)


def test_hom_pin_endomorphisms(brauer):
    pin = pin_module(brauer, "e1")
    assert hom_dim(brauer, pin, pin) == 2
    assert not is_brick(brauer, pin)
    top = string_module(brauer, pin_top_string(brauer, "e1"))
    assert hom_dim(brauer, pin, top) == 1


# -- pins ----------------------------------------------------------------------


def test_pin_structure(brauer):
    p, q = pin_sides(brauer, "e1")
    assert p.arrows == ("u_2", "u_1") and q.arrows == ("v_1", "v_2")
    assert pin_top_string(brauer, "e1").letters == (("u_2", -1), ("v_1", 1))
    assert pin_radical_string(brauer, "e1").letters == (("u_1", 1), ("v_2", -1))
    pin = pin_module(brauer, "e1")
    assert dim_vector(brauer, pin) == {"e1": 2, "e2": 1, "e3": 1}
    with pytest.raises(PresentationError):
        pin_module(brauer, "zz")


def test_pin_submodules(brauer):
    pin = pin_module(brauer, "e1")
    vectors = submodule_dim_vectors(brauer, pin)
    as_tuples = sorted(
        tuple(d[v] for v in sorted(brauer.quiver.vertices)) for d in vectors
    )
    assert as_tuples == [
        (0, 0, 0),
        (1, 0, 0),
        (1, 0, 1),
        (1, 1, 0),
        (1, 1, 1),
        (2, 1, 1),
    ]


def test_submodules_arrow_module(rect_sp):
    module = string_module(rect_sp, StringWord((("a1", 1),)))
    vectors = submodule_dim_vectors(rect_sp, module)
    as_tuples = sorted(
        tuple(d[v] for v in sorted(rect_sp.quiver.vertices)) for d in vectors
    )
    assert as_tuples == [
        (0, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0),
        (1, 1, 0, 0, 0, 0, 0, 0),
    ]


# -- the translate -------------------------------------------------------------


def test_translate_a2():
    a2 = make_pres(["1", "2"], [("a", "1", "2")], "A2")
    s1 = string_module(a2, StringWord.trivial("1"))
    s2 = string_module(a2, StringWord.trivial("2"))
    assert modules_isomorphic(a2, ar_translate(a2, s1), s2)
    assert ar_translate(a2, s2) is None
    proj = string_module(a2, StringWord((("a", 1),)))
    assert ar_translate(a2, proj) is None


def test_translate_a3(a3):
    m_a = string_module(a3, StringWord((("a", 1),)))
    m_b = string_module(a3, StringWord((("b", 1),)))
    tau = ar_translate(a3, m_a)
    assert modules_isomorphic(a3, tau, m_b)
    assert ar_translate(a3, m_b) is None
    s2 = string_module(a3, StringWord.trivial("2"))
    s3 = string_module(a3, StringWord.trivial("3"))
    assert modules_isomorphic(a3, ar_translate(a3, s2), s3)
    assert ar_translate(a3, s3) is None
    whole = string_module(a3, StringWord((("a", 1), ("b", 1))))
    assert ar_translate(a3, whole) is None


def test_translate_pin_top(brauer):
    pin = pin_module(brauer, "e1")
    assert ar_translate(brauer, pin) is None
    top = string_module(brauer, pin_top_string(brauer, "e1"))
    rad = string_module(brauer, pin_radical_string(brauer, "e1"))
    assert modules_isomorphic(brauer, ar_translate(brauer, top), rad)


def test_translate_band_fixed(rect_sp):
    module = band_module(rect_sp, BandWord(WORKED_BAND), eigenvalue=2)
    assert ar_translate(rect_sp, module) is module


def test_translate_needs_finite_dimension(rect_sp):
    simple = string_module(rect_sp, StringWord.trivial("1"))
    with pytest.raises(PresentationError):
        ar_translate(rect_sp, simple)
    trunc = truncate(rect_sp, 1)
    assert ar_translate(trunc, string_module(trunc, StringWord.trivial("7"))) is not None


def test_projective_strings(a3, brauer):
    assert projective_string(a3, "1").letters == (("a", 1), ("b", 1))
    assert projective_string(a3, "2").letters == (("b", 1),)
    assert projective_string(a3, "3").is_trivial
    assert projective_string(brauer, "e1") is None


# -- properties ----------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_string_clan_properties(data):
    pres = load("rectangle_special.alg")
    words = enumerate_strings(pres, 5)
    word = data.draw(st.sampled_from(words))
    assert is_string(pres, word)
    assert is_string(pres, word.inverse())
    assert word.canonical() == word.inverse().canonical()
    quiver = pres.quiver
    u = data.draw(st.integers(1, len(word) + 1))
    v = data.draw(st.integers(u, len(word) + 1))
    piece = word.substring(quiver, u, v)
    assert is_string(pres, piece)
    assert sorted(word.vertices(quiver)[u - 1 : v]) == sorted(
        piece.vertices(quiver) if not piece.is_trivial else (piece.vertex,)
    )


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_dim_vector_counts_positions(data):
    pres = load("rectangle_gentle.alg")
    words = [w for w in enumerate_strings(pres, 6) if not w.is_trivial]
    word = data.draw(st.sampled_from(words))
    module = string_module(pres, word)
    total = sum(dim_vector(pres, module).values())
    assert total == len(word) + 1
