"""Pairing, torsion membership, and cone enumeration checks."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biserial import (
    BandWord,
    ConeH,
    ConeUnion,
    K0Vector,
    StringWord,
    band_module,
    cone_dim,
    cone_from_generators,
    cone_intersect,
    cone_is_zero,
    cone_rays,
    dim_vector,
    enumerate_strings,
    euler_pair,
    membership,
    pin_module,
    string_module,
    submodule_dim_vectors,
    wall_contains,
)
from biserial.presentation import brauer_algebra, parse_brauer_graph
from oracles import subrep_dim_vectors
from test_reps import CORPUS
from test_strings import ETA1, WORKED_BAND, load, make_pres


@pytest.fixture(scope="module")
def rect_sp():
    return load("rectangle_special.alg")


@pytest.fixture(scope="module")
def rect_gentle():
    return load("rectangle_gentle.alg")


@pytest.fixture(scope="module")
def brauer():
    graph = parse_brauer_graph(CORPUS.joinpath("brauer_triangle.bg").read_text())
    return brauer_algebra(graph)


def eta1(quiver):
    return K0Vector.of(quiver, {"1": 1, "4": -1, "5": -1, "6": 1})


def eta2(quiver):
    return K0Vector.of(quiver, {"5": 1, "8": -1})


# -- vectors and the pairing ---------------------------------------------------


def test_pairing_is_dual_basis(rect_sp):
    quiver = rect_sp.quiver
    for v in quiver.vertices:
        theta = K0Vector.unit(quiver, v)
        for w in quiver.vertices:
            simple = dim_vector(rect_sp, string_module(rect_sp, StringWord.trivial(w)))
            assert euler_pair(theta, simple) == int(v == w)


def test_pairing_examples(rect_sp):
    quiver = rect_sp.quiver
    all_ones = {v: 1 for v in quiver.vertices}
    assert euler_pair(eta1(quiver), all_ones) == 0
    assert euler_pair(K0Vector.zero(quiver), {"3": 5, "7": 2}) == 0
    with pytest.raises(ValueError):
        euler_pair(eta1(quiver), {"nope": 1})


def test_vector_arithmetic_and_json(rect_sp):
    quiver = rect_sp.quiver
    a = eta1(quiver)
    b = eta2(quiver)
    assert (a + b) - b == a
    assert (-a).coords == tuple(-c for c in a.coords)
    assert a.scale(Fraction(1, 2)).coords[0] == Fraction(1, 2)
    assert K0Vector.from_json(a.scale("2/3").to_json()) == a.scale(Fraction(2, 3))
    assert K0Vector.of(quiver, {}).is_zero()
    with pytest.raises(ValueError):
        K0Vector.of(quiver, {"9": 1})
    with pytest.raises(ValueError):
        a + K0Vector(("x", "y"), (Fraction(0), Fraction(0)))


# -- membership ----------------------------------------------------------------


def test_wall_of_band_module(rect_sp):
    quiver = rect_sp.quiver
    band = band_module(rect_sp, BandWord(WORKED_BAND), 1, 1)
    flags = membership(rect_sp, eta2(quiver), band)
    assert flags.in_W and flags.in_ovT and flags.in_ovF
    assert not flags.in_T and not flags.in_F
    assert wall_contains(rect_sp, eta2(quiver), band)
    assert not wall_contains(rect_sp, K0Vector.unit(quiver, "5"), band)


def test_simple_at_its_projective_weight(rect_sp):
    quiver = rect_sp.quiver
    for v in quiver.vertices:
        simple = string_module(rect_sp, StringWord.trivial(v))
        flags = membership(rect_sp, K0Vector.unit(quiver, v), simple)
        assert flags.in_T and flags.in_ovT
        assert not flags.in_ovF and not flags.in_W


def test_wall_of_long_path_module(rect_gentle):
    quiver = rect_gentle.quiver
    word = StringWord((("d1", 1), ("d2", 1), ("d3", 1), ("d4", 1)))
    module = string_module(rect_gentle, word)
    assert wall_contains(rect_gentle, eta1(quiver), module)
    flags = membership(rect_gentle, eta2(quiver), module)
    assert flags.in_W


def _flags_from_vectors(theta, whole_dims, sub_dims):
    whole = euler_pair(theta, whole_dims)
    total = sum(whole_dims.values())
    values = [(euler_pair(theta, s), sum(s.values())) for s in sub_dims]
    max_sub = max(v for v, _ in values)
    return {
        "in_T": all(whole - v > 0 for v, t in values if t < total),
        "in_ovT": whole >= max_sub,
        "in_F": all(v < 0 for v, t in values if t > 0),
        "in_ovF": max_sub <= 0,
        "in_W": whole >= max_sub and max_sub <= 0,
    }


def _sample_modules(rect_sp, rect_gentle, brauer):
    out = []
    for pres, max_len in ((rect_sp, 3), (rect_gentle, 3)):
        for word in enumerate_strings(pres, max_len):
            out.append((pres, string_module(pres, word)))
    out.append((rect_sp, band_module(rect_sp, BandWord(WORKED_BAND), 1, 1)))
    out.append((rect_gentle, band_module(rect_gentle, BandWord(ETA1), 1, 1)))
    for v in ("e1", "e2", "e3"):
        out.append((brauer, pin_module(brauer, v)))
    for word in enumerate_strings(brauer, 2):
        out.append((brauer, string_module(brauer, word)))
    loops = load("two_loops.alg")
    for word in enumerate_strings(loops, 2):
        out.append((loops, string_module(loops, word)))
    return out


def test_membership_against_f2_oracle(rect_sp, rect_gentle, brauer):
    from biserial.reps import rep_of_module

    rng = random.Random(23)
    for pres, module in _sample_modules(rect_sp, rect_gentle, brauer):
        rep = rep_of_module(pres, module)
        arrows = {a.name: (a.source, a.target) for a in pres.quiver.arrows}
        vertices = sorted(pres.quiver.vertices)
        oracle_set, _ = subrep_dim_vectors(arrows, rep.dims, rep.maps)
        oracle_dims = [dict(zip(vertices, vec)) for vec in oracle_set]
        whole = dim_vector(pres, module)
        for _ in range(100):
            theta = K0Vector.of(
                pres.quiver, {v: rng.randint(-3, 3) for v in pres.quiver.vertices}
            )
            expected = _flags_from_vectors(theta, whole, oracle_dims)
            assert membership(pres, theta, module).to_json() == expected


def test_membership_lattice_implications(rect_sp, rect_gentle, brauer):
    rng = random.Random(5)
    for pres, module in _sample_modules(rect_sp, rect_gentle, brauer):
        for _ in range(20):
            theta = K0Vector.of(
                pres.quiver, {v: rng.randint(-4, 4) for v in pres.quiver.vertices}
            )
            flags = membership(pres, theta, module)
            assert not flags.in_T or flags.in_ovT
            assert not flags.in_F or flags.in_ovF
            assert flags.in_W == (flags.in_ovT and flags.in_ovF)
            assert not (flags.in_T and flags.in_ovF)


def test_directed_path_submodules_are_suffixes(rect_gentle):
    for word in enumerate_strings(rect_gentle, 4):
        if word.is_trivial:
            continue
        signs = {eps for _, eps in word.letters}
        if len(signs) != 1:
            continue
        letters = word.letters if signs == {1} else word.inverse().letters
        verts = StringWord(letters).vertices(rect_gentle.quiver)
        suffixes = []
        for start in range(len(verts) + 1):
            dims = {v: 0 for v in rect_gentle.quiver.vertices}
            for v in verts[start:]:
                dims[v] += 1
            suffixes.append(dims)
        found = submodule_dim_vectors(rect_gentle, string_module(rect_gentle, word))
        key = lambda d: tuple(sorted(d.items()))
        assert sorted(map(key, found)) == sorted(map(key, suffixes))


# -- cones ---------------------------------------------------------------------


def test_halfplane_ray():
    cone = ConeH(2, eq=[[1, 1]], ineq=[[1, 0]])
    assert cone.rays == ((1, -1),)
    assert cone.lineality == ()
    assert cone_dim(cone) == 1
    assert cone.contains([2, -2]) and not cone.contains([-1, 1])


@pytest.mark.parametrize("n", [1, 3])
def test_orthant_meets_tracefree_plane_in_zero(n):
    orthant = ConeH(n, ineq=[[int(i == j) for j in range(n)] for i in range(n)])
    plane = ConeH(n, eq=[[1] * n])
    met = cone_intersect(orthant, plane)
    assert cone_is_zero(met)
    assert met.contains([0] * n)
    assert not met.contains([1] + [0] * (n - 1))


def test_generator_round_trip_rectangle_rays(rect_sp):
    quiver = rect_sp.quiver
    rays = [
        [int(c) for c in eta1(quiver).coords],
        [int(c) for c in eta2(quiver).coords],
    ]
    cone = cone_from_generators(8, rays=rays)
    assert set(cone.rays) == {tuple(r) for r in rays}
    assert cone.lineality == ()
    assert cone.contains([a + 3 * b for a, b in zip(*rays)])
    assert not cone.contains([-a for a in rays[0]])


def test_generators_drop_redundant_rays():
    cone = cone_from_generators(2, rays=[[1, 0], [1, 1], [0, 1], [2, 2]])
    assert cone.rays == ((0, 1), (1, 0))
    halfplane = cone_from_generators(2, rays=[[1, 0]], lineality=[[0, 1]])
    assert halfplane.rays == ((1, 0),)
    assert halfplane.lineality == ((0, 1),)
    rays, lineality = cone_rays(halfplane)
    assert rays == ((1, 0),) and lineality == ((0, 1),)


def test_cone_json_round_trip():
    cone = ConeH(3, eq=[[1, 1, 1]], ineq=[[1, 0, 0], [0, 1, 0]])
    data = cone.to_json()
    assert data["rays"] and isinstance(data["rays"][0][0], int)
    again = ConeH.from_json(data)
    assert again.equivalent(cone)
    union = ConeUnion((cone, ConeH(3, ineq=[[0, 0, -1]])))
    assert union.contains([1, 0, -1])
    assert union.contains([5, 5, -10])
    assert not union.contains([0, 0, 1]) or cone.contains([0, 0, 1])
    rebuilt = ConeUnion.from_json(union.to_json())
    assert all(a.equivalent(b) for a, b in zip(rebuilt.pieces, union.pieces))


def test_cone_errors():
    with pytest.raises(ValueError):
        ConeH(2, ineq=[[1, 0, 0]])
    with pytest.raises(ValueError):
        cone_intersect(ConeH(2), ConeH(3))
    with pytest.raises(ValueError):
        ConeUnion((ConeH(2), ConeH(3)))


@settings(max_examples=60, deadline=None)
@given(
    st.integers(2, 4).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                min_size=0,
                max_size=4,
            ),
            st.lists(
                st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                min_size=0,
                max_size=5,
            ),
        )
    )
)
def test_double_description_round_trip(data):
    n, eq, ineq = data
    cone = ConeH(n, eq=eq, ineq=ineq)
    rays, lineality = cone.generators()
    for r in rays:
        assert cone.contains(r)
    for l in lineality:
        assert cone.contains(l) and cone.contains([-x for x in l])
    rebuilt = cone_from_generators(n, rays=rays, lineality=lineality)
    assert rebuilt.equivalent(cone)
    assert rebuilt.dim() == cone.dim()
    inside = [sum(2 * r[i] for r in rays) + sum(l[i] for l in lineality) for i in range(n)]
    assert cone.contains(inside)