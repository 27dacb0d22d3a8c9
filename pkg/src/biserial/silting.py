"""Two-term complexes of projectives and their silting combinatorics.

A two-term complex is stored as the pair of multisets ``p1`` (degree -1) and
``p0`` (degree 0) of projective vertices plus a differential matrix ``d`` whose
``(k, l)`` entry is an algebra element in ``e_{p0[k]} A e_{p1[l]}``, acting as
the component ``P_{p1[l]} -> P_{p0[k]}`` by left multiplication.  All homotopy
category computations happen over a truncated (finite-dimensional) algebra;
that loses nothing for presilting and g-vector questions.

Morphisms of complexes are pairs of algebra-valued matrices; hom spaces modulo
homotopy, endomorphism rings, and their radicals (via the characteristic-zero
trace form) reduce everything -- indecomposability certificates, minimal
approximations, mutation cones -- to exact rank computations over the
rationals.  Mutation builds an approximation cone and contracts it to two
terms by Gaussian elimination over the algebra, with an exhaustive
module-search fallback; Bongartz completion walks the g-vector fan; exchange
exploration is a plain BFS keyed by sorted g-vector matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import Algebra, Element
from .lattice import K0Vector, membership
from .linalg import nullspace, rank, solve, zeros
from .presentation import Path, path_from_json, path_to_json
from .reps import (
    Morphism,
    Rep,
    compose_morphisms,
    decompose_rep,
    direct_sum,
    h0_rep,
    hm1_nu_rep,
    hom_matrices,
    kernel_morphism,
    cokernel_morphism,
    module_presentation,
)
from .strings import ModuleDescriptor, enumerate_strings, pin_vertices


class SiltingError(RuntimeError):
    """A verified silting computation failed; the payload says where."""


def _coeff_json(value: Fraction):
    return int(value) if value.denominator == 1 else str(value)


AMatrix = list[list[Element]]


# -- two-term complexes -------------------------------------------------------


class TwoTermComplex:
    """A complex (P(p1) -> P(p0)) of projectives over a truncated algebra."""

    def __init__(
        self,
        alg: Algebra,
        p1: Sequence[str],
        p0: Sequence[str],
        d: Sequence[Sequence[Mapping[Path, Fraction]]],
    ) -> None:
        quiver = alg.presentation.quiver
        for v in (*p1, *p0):
            if not quiver.has_vertex(v):
                raise ValueError(f"unknown vertex {v!r}")
        if len(d) != len(p0) or any(len(row) != len(p1) for row in d):
            raise ValueError("differential shape does not match p0 x p1")
        entries: AMatrix = []
        for k, row in enumerate(d):
            out_row: list[Element] = []
            for l, cell in enumerate(row):
                entry: Element = {}
                for path, coeff in cell.items():
                    coeff = Fraction(coeff)
                    if not coeff:
                        continue
                    if alg.normal_form(path) != path:
                        raise ValueError(f"path {path} is not basic in the algebra")
                    if (
                        quiver.path_source(path) != p0[k]
                        or quiver.path_target(path) != p1[l]
                    ):
                        raise ValueError(
                            f"entry ({k},{l}) must lie in "
                            f"e_{p0[k]} A e_{p1[l]}, got {path}"
                        )
                    entry[path] = coeff
                out_row.append(entry)
            entries.append(out_row)
        self.alg = alg
        self.p1 = tuple(p1)
        self.p0 = tuple(p0)
        self.d = entries

    @property
    def quiver(self):
        return self.alg.presentation.quiver

    def is_zero(self) -> bool:
        return not self.p1 and not self.p0

    def g_vector(self) -> K0Vector:
        counts = {v: 0 for v in self.quiver.vertices}
        for v in self.p0:
            counts[v] += 1
        for v in self.p1:
            counts[v] -= 1
        return K0Vector.of(self.quiver, counts)

    def to_json(self) -> dict:
        return {
            "p1": list(self.p1),
            "p0": list(self.p0),
            "d": [
                [
                    [[_coeff_json(c), path_to_json(p)] for p, c in sorted(
                        cell.items(), key=lambda item: item[0].sort_key()
                    )]
                    for cell in row
                ]
                for row in self.d
            ],
        }

    @staticmethod
    def from_json(alg: Algebra, data: Mapping) -> "TwoTermComplex":
        d = [
            [
                {path_from_json(p): Fraction(c) for c, p in cell}
                for cell in row
            ]
            for row in data["d"]
        ]
        return TwoTermComplex(alg, data["p1"], data["p0"], d)

    def __repr__(self) -> str:
        return f"TwoTermComplex(p1={list(self.p1)}, p0={list(self.p0)})"


def projective_complex(alg: Algebra, vertex: str) -> TwoTermComplex:
    """The stalk complex (0 -> P_vertex)."""
    return TwoTermComplex(alg, [], [vertex], [[]])


def shifted_projective(alg: Algebra, vertex: str) -> TwoTermComplex:
    """The shift P_vertex[1], concentrated in degree -1."""
    return TwoTermComplex(alg, [vertex], [], [])


def complex_sum(alg: Algebra, parts: Sequence[TwoTermComplex]) -> TwoTermComplex:
    p1 = [v for part in parts for v in part.p1]
    p0 = [v for part in parts for v in part.p0]
    d: list[list[Element]] = [[dict() for _ in p1] for _ in p0]
    row0 = col0 = 0
    for part in parts:
        for k, row in enumerate(part.d):
            for l, cell in enumerate(row):
                d[row0 + k][col0 + l] = dict(cell)
        row0 += len(part.p0)
        col0 += len(part.p1)
    return TwoTermComplex(alg, p1, p0, d)


def min_proj_presentation(alg: Algebra, module: ModuleDescriptor) -> TwoTermComplex:
    """The minimal projective presentation of a module, as a complex."""
    p1, p0, entries = module_presentation(alg, module)
    return TwoTermComplex(alg, p1, p0, entries)


def h0(U: TwoTermComplex) -> list[ModuleDescriptor]:
    """H^0 of the complex, decomposed into indecomposable descriptors."""
    rep = h0_rep(U.alg, list(U.p1), list(U.p0), U.d)
    return decompose_rep(U.alg.presentation, rep)


def hm1_nu(U: TwoTermComplex) -> list[ModuleDescriptor]:
    """H^{-1} of the Nakayama image of the complex, decomposed."""
    rep = hm1_nu_rep(U.alg, list(U.p1), list(U.p0), U.d)
    return decompose_rep(U.alg.presentation, rep)


def g_vector(U: TwoTermComplex) -> K0Vector:
    return U.g_vector()


# -- algebra-valued matrices --------------------------------------------------


def _amat_zero(nrows: int, ncols: int) -> AMatrix:
    return [[dict() for _ in range(ncols)] for _ in range(nrows)]


def _amat_mul(alg: Algebra, a: AMatrix, b: AMatrix) -> AMatrix:
    nrows = len(a)
    inner = len(b)
    ncols = len(b[0]) if b else 0
    out = _amat_zero(nrows, ncols)
    for i in range(nrows):
        assert len(a[i]) == inner, "algebra matrix shape mismatch"
        for j in range(ncols):
            acc: Element = {}
            for t in range(inner):
                acc = alg.add(acc, alg.mul(a[i][t], b[t][j]))
            out[i][j] = acc
    return out


def _amat_neg(alg: Algebra, a: AMatrix) -> AMatrix:
    return [[alg.scale(-1, cell) for cell in row] for row in a]


class _Layout:
    """Coordinates for algebra-valued matrices of a fixed shape.

    A slot is (row index, column index, basis path); a matrix with entry
    (k, l) in e_{rows[k]} A e_{cols[l]} flattens to one rational vector.
    """

    def __init__(self, alg: Algebra, rows: Sequence[str], cols: Sequence[str]):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.slots: list[tuple[int, int, Path]] = []
        self.index: dict[tuple[int, int, Path], int] = {}
        for k, rv in enumerate(self.rows):
            for l, cv in enumerate(self.cols):
                for path in alg.pair_basis(rv, cv):
                    self.index[(k, l, path)] = len(self.slots)
                    self.slots.append((k, l, path))

    @property
    def dim(self) -> int:
        return len(self.slots)

    def to_vec(self, mat: AMatrix) -> list[Fraction]:
        vec = [Fraction(0)] * self.dim
        for k, row in enumerate(mat):
            for l, cell in enumerate(row):
                for path, coeff in cell.items():
                    vec[self.index[(k, l, path)]] = coeff
        return vec

    def to_mat(self, vec: Sequence[Fraction]) -> AMatrix:
        mat = _amat_zero(len(self.rows), len(self.cols))
        for value, (k, l, path) in zip(vec, self.slots):
            if value:
                mat[k][l][path] = Fraction(value)
        return mat

    def basis_matrices(self) -> Iterable[AMatrix]:
        for k, l, path in self.slots:
            mat = _amat_zero(len(self.rows), len(self.cols))
            mat[k][l][path] = Fraction(1)
            yield mat


# -- hom spaces in the homotopy category --------------------------------------


def _same_algebra(U: TwoTermComplex, V: TwoTermComplex) -> Algebra:
    if U.alg is not V.alg:
        raise ValueError("complexes live over different algebras")
    return U.alg


def hom_shift_dim(U: TwoTermComplex, V: TwoTermComplex) -> int:
    """dim Hom(U, V[1]) in the homotopy category.

    Every degree-(-1) map U^{-1} -> V^0 is a chain map to the shift; it is
    null-homotopic exactly when it has the form g d_U + d_V h.
    """
    alg = _same_algebra(U, V)
    target = _Layout(alg, V.p0, U.p1)
    if target.dim == 0:
        return 0
    span: list[list[Fraction]] = []
    for g in _Layout(alg, V.p0, U.p0).basis_matrices():
        span.append(target.to_vec(_amat_mul(alg, g, U.d)))
    for h in _Layout(alg, V.p1, U.p1).basis_matrices():
        span.append(target.to_vec(_amat_mul(alg, V.d, h)))
    return target.dim - rank(span)


ChainMap = tuple[AMatrix, AMatrix]  # (degree -1 component, degree 0 component)


def _identity_chain_map(alg: Algebra, U: TwoTermComplex) -> ChainMap:
    one1 = _amat_zero(len(U.p1), len(U.p1))
    for l, v in enumerate(U.p1):
        one1[l][l] = alg.element(Path.trivial(v))
    one0 = _amat_zero(len(U.p0), len(U.p0))
    for k, v in enumerate(U.p0):
        one0[k][k] = alg.element(Path.trivial(v))
    return one1, one0


def _compose_chain_maps(alg: Algebra, g: ChainMap, f: ChainMap) -> ChainMap:
    """g after f, both as left-multiplication matrix pairs."""
    return _amat_mul(alg, g[0], f[0]), _amat_mul(alg, g[1], f[1])


class _HomSpace:
    """Hom(U, V) modulo homotopy with concrete chain-map lifts.

    ``lifts`` are chain maps whose classes form a basis; arbitrary chain maps
    project onto that basis by solving against lifts plus null-homotopic
    generators.
    """

    def __init__(self, alg: Algebra, U: TwoTermComplex, V: TwoTermComplex):
        self.alg = alg
        self.U = U
        self.V = V
        self.lay1 = _Layout(alg, V.p1, U.p1)
        self.lay0 = _Layout(alg, V.p0, U.p0)
        cond = _Layout(alg, V.p0, U.p1)
        n1 = self.lay1.dim
        total = n1 + self.lay0.dim
        columns: list[list[Fraction]] = []
        for h in self.lay1.basis_matrices():
            columns.append(cond.to_vec(_amat_neg(alg, _amat_mul(alg, V.d, h))))
        for g in self.lay0.basis_matrices():
            columns.append(cond.to_vec(_amat_mul(alg, g, U.d)))
        rows = [[columns[j][i] for j in range(total)] for i in range(cond.dim)]
        chain_vectors = nullspace(rows, ncols=total)
        nulls: list[list[Fraction]] = []
        for s in _Layout(alg, V.p1, U.p0).basis_matrices():
            f1 = _amat_mul(alg, s, U.d)
            f0 = _amat_mul(alg, V.d, s)
            nulls.append(self.lay1.to_vec(f1) + self.lay0.to_vec(f0))
        self.null_vectors = nulls
        self.lift_vectors: list[list[Fraction]] = []
        span = [list(v) for v in nulls]
        base_rank = rank(span)
        for vec in chain_vectors:
            if rank(span + [vec]) > base_rank:
                span.append(vec)
                base_rank += 1
                self.lift_vectors.append(vec)
        self._solver_rows = None

    @property
    def dim(self) -> int:
        return len(self.lift_vectors)

    def lifts(self) -> list[ChainMap]:
        return [self._unflatten(vec) for vec in self.lift_vectors]

    def _unflatten(self, vec: Sequence[Fraction]) -> ChainMap:
        n1 = self.lay1.dim
        return self.lay1.to_mat(vec[:n1]), self.lay0.to_mat(vec[n1:])

    def coordinates(self, f: ChainMap) -> list[Fraction]:
        """Coefficients of the homotopy class of ``f`` on the lift basis."""
        vec = self.lay1.to_vec(f[0]) + self.lay0.to_vec(f[1])
        columns = self.lift_vectors + self.null_vectors
        if self._solver_rows is None:
            total = self.lay1.dim + self.lay0.dim
            self._solver_rows = [
                [col[i] for col in columns] for i in range(total)
            ]
        sol = solve(self._solver_rows, vec)
        if sol is None:
            raise SiltingError("not a chain map between the given complexes")
        return sol[: self.dim]


def _end_radical(alg: Algebra, U: TwoTermComplex) -> tuple[_HomSpace, list[list[Fraction]]]:
    """End(U) modulo homotopy plus its Jacobson radical.

    The radical is the kernel of the trace form of the regular representation,
    which is the whole story in characteristic zero.
    """
    ends = _HomSpace(alg, U, U)
    n = ends.dim
    if n == 0:
        return ends, []
    lifts = ends.lifts()
    left_mult = []
    for f in lifts:
        cols = [ends.coordinates(_compose_chain_maps(alg, f, g)) for g in lifts]
        left_mult.append([[cols[j][i] for j in range(n)] for i in range(n)])
    traces = [sum(mat[i][i] for i in range(n)) for mat in left_mult]
    gram = zeros(n, n)
    for i, f in enumerate(lifts):
        for j in range(i, n):
            prod = ends.coordinates(_compose_chain_maps(alg, f, lifts[j]))
            value = sum(c * t for c, t in zip(prod, traces))
            gram[i][j] = value
            gram[j][i] = value
    radical = nullspace(gram, ncols=n)
    return ends, radical


def is_indecomposable_complex(U: TwoTermComplex) -> bool:
    """Local-endomorphism-ring certificate: dim rad End = dim End - 1."""
    ends, radical = _end_radical(U.alg, U)
    return ends.dim > 0 and len(radical) == ends.dim - 1


def complexes_isomorphic(U: TwoTermComplex, V: TwoTermComplex) -> bool:
    """Isomorphism test for indecomposable presilting complexes.

    Rigid two-term complexes with equal g-vectors are isomorphic, so the
    g-vector plus the indecomposability certificate decides.
    """
    _same_algebra(U, V)
    if U.g_vector() != V.g_vector():
        return False
    return is_indecomposable_complex(U) and is_indecomposable_complex(V)


# -- silting objects ----------------------------------------------------------


class SiltingObject:
    """A basic presilting object, stored as indecomposable summands."""

    def __init__(
        self,
        alg: Algebra,
        summands: Sequence[TwoTermComplex],
        verify: bool = True,
    ) -> None:
        self.alg = alg
        self.summands = [s for s in summands if not s.is_zero()]
        for s in self.summands:
            if s.alg is not alg:
                raise ValueError("summand lives over a different algebra")
        self._g = [s.g_vector() for s in self.summands]
        if verify:
            self.verify()

    def verify(self) -> None:
        seen = set()
        for s, g in zip(self.summands, self._g):
            if not is_indecomposable_complex(s):
                raise SiltingError(f"summand {s!r} is not indecomposable")
            if g.coords in seen:
                raise SiltingError("summands are not pairwise non-isomorphic")
            seen.add(g.coords)
        for a in self.summands:
            for b in self.summands:
                if hom_shift_dim(a, b):
                    raise SiltingError(
                        f"Hom({a!r}, {b!r}[1]) is nonzero: not presilting"
                    )

    def __len__(self) -> int:
        return len(self.summands)

    def g_vectors(self) -> list[K0Vector]:
        return list(self._g)

    def g_matrix(self) -> list[list[int]]:
        return [[int(c) for c in g.coords] for g in self._g]

    def key(self) -> str:
        """Canonical label: the sorted integer g-vector matrix."""
        rows = sorted(tuple(int(c) for c in g.coords) for g in self._g)
        return ";".join(",".join(str(c) for c in row) for row in rows)

    def contains(self, U: TwoTermComplex) -> bool:
        target = U.g_vector().coords
        return any(g.coords == target for g in self._g)

    def to_json(self) -> dict:
        return {
            "summands": [s.to_json() for s in self.summands],
            "g_matrix": self.g_matrix(),
        }

    @staticmethod
    def from_json(alg: Algebra, data: Mapping) -> "SiltingObject":
        summands = [TwoTermComplex.from_json(alg, s) for s in data["summands"]]
        return SiltingObject(alg, summands)

    def __repr__(self) -> str:
        return f"SiltingObject({self.key()})"


def _summand_list(arg) -> list[TwoTermComplex]:
    if isinstance(arg, SiltingObject):
        return list(arg.summands)
    if isinstance(arg, TwoTermComplex):
        return [arg]
    return [u for u in arg if not u.is_zero()]


def is_presilting(arg) -> bool:
    """Does Hom(U, U[1]) vanish for the direct sum of the given summands?"""
    summands = _summand_list(arg)
    return all(
        hom_shift_dim(a, b) == 0 for a in summands for b in summands
    )


def is_silting(arg) -> bool:
    """Presilting with as many non-isomorphic indecomposables as vertices."""
    summands = _summand_list(arg)
    if not summands:
        return False
    alg = summands[0].alg
    for s in summands:
        if not is_indecomposable_complex(s):
            raise SiltingError(
                "is_silting needs the summand decomposition; "
                f"{s!r} is not indecomposable"
            )
    distinct = {s.g_vector().coords for s in summands}
    n = len(alg.presentation.quiver.vertices)
    return len(distinct) == n and is_presilting(summands)


def algebra_silting(alg: Algebra) -> SiltingObject:
    """The silting object A = (0 -> P_1) + ... in vertex order."""
    quiver = alg.presentation.quiver
    return SiltingObject(
        alg, [projective_complex(alg, v) for v in quiver.vertices], verify=False
    )


def shifted_algebra_silting(alg: Algebra) -> SiltingObject:
    """The shift A[1], the other canonical silting object."""
    quiver = alg.presentation.quiver
    return SiltingObject(
        alg, [shifted_projective(alg, v) for v in quiver.vertices], verify=False
    )


# -- contracting cones: Gaussian elimination over the algebra -----------------


def _find_unit(alg: Algebra, rows: list[str], cols: list[str], mat: AMatrix):
    for i, rv in enumerate(rows):
        for j, cv in enumerate(cols):
            if rv != cv or not mat[i][j]:
                continue
            inv = alg.invert_local(rv, mat[i][j])
            if inv is not None:
                return i, j, inv
    return None


def _delete(items: list, index: int) -> None:
    del items[index]


def _minimize_two_term(
    alg: Algebra, p1: list[str], p0: list[str], d: AMatrix
) -> tuple[list[str], list[str], AMatrix]:
    """Split off all contractible (P = P) summands of a two-term complex."""
    p1, p0 = list(p1), list(p0)
    d = [[dict(cell) for cell in row] for row in d]
    while True:
        hit = _find_unit(alg, p0, p1, d)
        if hit is None:
            return p1, p0, d
        k, l, inv = hit
        for l2 in range(len(p1)):
            if l2 == l or not d[k][l2]:
                continue
            c = alg.mul(inv, d[k][l2])
            for r in range(len(p0)):
                d[r][l2] = alg.add(d[r][l2], alg.scale(-1, alg.mul(d[r][l], c)))
        for k2 in range(len(p0)):
            if k2 == k or not d[k2][l]:
                continue
            c = alg.mul(d[k2][l], inv)
            d[k2][l] = alg.add(d[k2][l], alg.scale(-1, alg.mul(c, d[k][l])))
        _delete(d, k)
        _delete(p0, k)
        for row in d:
            _delete(row, l)
        _delete(p1, l)


def _consume_first(
    alg: Algebra,
    va: list[str],
    vb: list[str],
    vc: list[str],
    dab: AMatrix,
    dbc: AMatrix,
):
    """Contract (P(va) -> P(vb) -> P(vc)) to two terms by eliminating va.

    Row operations on vb transform dbc columns along; returns
    (vb, vc, dbc) once va is gone, or None when no unit pivot remains.
    """
    va, vb, vc = list(va), list(vb), list(vc)
    dab = [[dict(cell) for cell in row] for row in dab]
    dbc = [[dict(cell) for cell in row] for row in dbc]
    while va:
        hit = _find_unit(alg, vb, va, dab)
        if hit is None:
            return None
        i, j, inv = hit
        for j2 in range(len(va)):
            if j2 == j or not dab[i][j2]:
                continue
            c = alg.mul(inv, dab[i][j2])
            for r in range(len(vb)):
                dab[r][j2] = alg.add(
                    dab[r][j2], alg.scale(-1, alg.mul(dab[r][j], c))
                )
        for i2 in range(len(vb)):
            if i2 == i or not dab[i2][j]:
                continue
            c = alg.mul(dab[i2][j], inv)
            dab[i2][j] = alg.add(dab[i2][j], alg.scale(-1, alg.mul(c, dab[i][j])))
            for r in range(len(vc)):
                dbc[r][i] = alg.add(dbc[r][i], alg.mul(dbc[r][i2], c))
        _delete(dab, i)
        for row in dbc:
            _delete(row, i)
        _delete(vb, i)
        for row in dab:
            _delete(row, j)
        _delete(va, j)
    return vb, vc, dbc


def _consume_last(
    alg: Algebra,
    va: list[str],
    vb: list[str],
    vc: list[str],
    dab: AMatrix,
    dbc: AMatrix,
):
    """Contract (P(va) -> P(vb) -> P(vc)) to two terms by eliminating vc."""
    va, vb, vc = list(va), list(vb), list(vc)
    dab = [[dict(cell) for cell in row] for row in dab]
    dbc = [[dict(cell) for cell in row] for row in dbc]
    while vc:
        hit = _find_unit(alg, vc, vb, dbc)
        if hit is None:
            return None
        k, l, inv = hit
        for k2 in range(len(vc)):
            if k2 == k or not dbc[k2][l]:
                continue
            c = alg.mul(dbc[k2][l], inv)
            for s in range(len(vb)):
                dbc[k2][s] = alg.add(
                    dbc[k2][s], alg.scale(-1, alg.mul(c, dbc[k][s]))
                )
        for l2 in range(len(vb)):
            if l2 == l or not dbc[k][l2]:
                continue
            c = alg.mul(inv, dbc[k][l2])
            for k2 in range(len(vc)):
                dbc[k2][l2] = alg.add(
                    dbc[k2][l2], alg.scale(-1, alg.mul(dbc[k2][l], c))
                )
            for j in range(len(va)):
                dab[l][j] = alg.add(dab[l][j], alg.mul(c, dab[l2][j]))
        _delete(dbc, k)
        _delete(vc, k)
        for row in dbc:
            _delete(row, l)
        _delete(dab, l)
        _delete(vb, l)
    return va, vb, dab


# -- approximations and mutation ----------------------------------------------


def _radical_maps(
    alg: Algebra,
    source: TwoTermComplex,
    target: TwoTermComplex,
    same: bool,
    cache: dict,
) -> list[ChainMap]:
    """A spanning set of the radical of Hom(source, target) mod homotopy."""
    if not same:
        key = (id(source), id(target))
        if key not in cache:
            cache[key] = _HomSpace(alg, source, target).lifts()
        return cache[key]
    key = ("rad", id(source))
    if key not in cache:
        ends, radical = _end_radical(alg, source)
        lifts = ends.lifts()
        maps = []
        for coeffs in radical:
            f1 = _amat_zero(len(source.p1), len(source.p1))
            f0 = _amat_zero(len(source.p0), len(source.p0))
            for c, (g1, g0) in zip(coeffs, lifts):
                if not c:
                    continue
                for k, row in enumerate(g1):
                    for l, cell in enumerate(row):
                        f1[k][l] = alg.add(f1[k][l], alg.scale(c, cell))
                for k, row in enumerate(g0):
                    for l, cell in enumerate(row):
                        f0[k][l] = alg.add(f0[k][l], alg.scale(c, cell))
            maps.append((f1, f0))
        cache[key] = maps
    return cache[key]


def _approximation_parts(
    alg: Algebra,
    X: TwoTermComplex,
    others: Sequence[TwoTermComplex],
    left: bool,
) -> list[tuple[TwoTermComplex, ChainMap]]:
    """Component maps of a minimal left (or right) add(others)-approximation.

    Multiplicities come from the hom space into each summand modulo the maps
    that factor through the radical of add(others).
    """
    cache: dict = {}
    parts: list[tuple[TwoTermComplex, ChainMap]] = []
    homs = {}
    for j, T in enumerate(others):
        homs[j] = (
            _HomSpace(alg, X, T) if left else _HomSpace(alg, T, X)
        )
    for j, T in enumerate(others):
        space = homs[j]
        if space.dim == 0:
            continue
        radical_image: list[list[Fraction]] = []
        for j2, T2 in enumerate(others):
            if homs[j2].dim == 0:
                continue
            if left:
                rads = _radical_maps(alg, T2, T, same=j2 == j, cache=cache)
                composites = [
                    _compose_chain_maps(alg, r, g)
                    for g in homs[j2].lifts()
                    for r in rads
                ]
            else:
                rads = _radical_maps(alg, T, T2, same=j2 == j, cache=cache)
                composites = [
                    _compose_chain_maps(alg, g, r)
                    for g in homs[j2].lifts()
                    for r in rads
                ]
            radical_image.extend(space.coordinates(f) for f in composites)
        span = [list(v) for v in radical_image]
        base_rank = rank(span)
        lifts = space.lifts()
        for idx in range(space.dim):
            unit_vec = [Fraction(1 if t == idx else 0) for t in range(space.dim)]
            if rank(span + [unit_vec]) > base_rank:
                span.append(unit_vec)
                base_rank += 1
                parts.append((T, lifts[idx]))
    return parts


def _cone_left(
    alg: Algebra, X: TwoTermComplex, others: Sequence[TwoTermComplex]
):
    """Cone of a minimal left approximation, contracted to two terms."""
    parts = _approximation_parts(alg, X, others, left=True)
    e_p1 = [v for T, _ in parts for v in T.p1]
    e_p0 = [v for T, _ in parts for v in T.p0]
    va = list(X.p1)
    vb = list(X.p0) + e_p1
    vc = list(e_p0)
    dab = _amat_zero(len(vb), len(va))
    for k, row in enumerate(X.d):
        for l, cell in enumerate(row):
            dab[k][l] = dict(cell)
    row0 = len(X.p0)
    for T, (f1, _) in parts:
        for k, row in enumerate(f1):
            for l, cell in enumerate(row):
                dab[row0 + k][l] = dict(cell)
        row0 += len(T.p1)
    dbc = _amat_zero(len(vc), len(vb))
    row0 = 0
    col0 = len(X.p0)
    for T, (_, f0) in parts:
        for k, row in enumerate(f0):
            for l, cell in enumerate(row):
                dbc[row0 + k][l] = alg.scale(-1, cell)
        for k, row in enumerate(T.d):
            for l, cell in enumerate(row):
                dbc[row0 + k][col0 + l] = dict(cell)
        row0 += len(T.p0)
        col0 += len(T.p1)
    contracted = _consume_first(alg, va, vb, vc, dab, dbc)
    if contracted is None:
        return None
    p1, p0, d = _minimize_two_term(alg, *contracted)
    return TwoTermComplex(alg, p1, p0, d)


def _cone_right(
    alg: Algebra, X: TwoTermComplex, others: Sequence[TwoTermComplex]
):
    """Co-cone of a minimal right approximation, contracted to two terms."""
    parts = _approximation_parts(alg, X, others, left=False)
    e_p1 = [v for T, _ in parts for v in T.p1]
    e_p0 = [v for T, _ in parts for v in T.p0]
    va = list(e_p1)
    vb = e_p0 + list(X.p1)
    vc = list(X.p0)
    dab = _amat_zero(len(vb), len(va))
    row0 = 0
    col0 = 0
    for T, _ in parts:
        for k, row in enumerate(T.d):
            for l, cell in enumerate(row):
                dab[row0 + k][col0 + l] = dict(cell)
        row0 += len(T.p0)
        col0 += len(T.p1)
    col0 = 0
    for T, (f1, _) in parts:
        for k, row in enumerate(f1):
            for l, cell in enumerate(row):
                dab[len(e_p0) + k][col0 + l] = dict(cell)
        col0 += len(T.p1)
    dbc = _amat_zero(len(vc), len(vb))
    col0 = 0
    for T, (_, f0) in parts:
        for k, row in enumerate(f0):
            for l, cell in enumerate(row):
                dbc[k][col0 + l] = alg.scale(-1, cell)
        col0 += len(T.p0)
    for k, row in enumerate(X.d):
        for l, cell in enumerate(row):
            dbc[k][len(e_p0) + l] = dict(cell)
    contracted = _consume_last(alg, va, vb, vc, dab, dbc)
    if contracted is None:
        return None
    p1, p0, d = _minimize_two_term(alg, *contracted)
    return TwoTermComplex(alg, p1, p0, d)


def _complement_search(
    alg: Algebra, X: TwoTermComplex, others: Sequence[TwoTermComplex]
):
    """Exhaustive fallback: scan indecomposable candidates for the second
    completion of the almost-complete part."""
    pres = alg.presentation
    x_coords = X.g_vector().coords
    candidates: list[TwoTermComplex] = []
    for v in pres.quiver.vertices:
        candidates.append(projective_complex(alg, v))
        candidates.append(shifted_projective(alg, v))
    dim_bound = sum(
        len(alg.pair_basis(v, w))
        for v in pres.quiver.vertices
        for w in pres.quiver.vertices
    )
    modules = [
        ModuleDescriptor("pin", pin=v) for v in pin_vertices(pres)
    ] + [
        ModuleDescriptor("string", string=word)
        for word in enumerate_strings(pres, max_len=dim_bound)
    ]
    for module in modules:
        candidates.append(min_proj_presentation(alg, module))
    for Z in candidates:
        if Z.g_vector().coords == x_coords:
            continue
        if any(Z.g_vector().coords == T.g_vector().coords for T in others):
            continue
        try:
            cand = SiltingObject(alg, list(others) + [Z])
        except SiltingError:
            continue
        if len(cand) == len(pres.quiver.vertices):
            return Z
    return None


def mutate(T: SiltingObject, k: int) -> SiltingObject:
    """The unique other silting object sharing all summands except the k-th.

    Tries the left-approximation cone, then the right-approximation co-cone
    (one of the two stays two-term), then an exhaustive module search.
    """
    alg = T.alg
    n = len(alg.presentation.quiver.vertices)
    if len(T) != n:
        raise SiltingError("mutation needs a silting object")
    X = T.summands[k]
    others = [s for i, s in enumerate(T.summands) if i != k]
    for builder in (_cone_left, _cone_right):
        Z = builder(alg, X, others)
        if Z is None or Z.is_zero():
            continue
        if Z.g_vector().coords == X.g_vector().coords:
            continue
        try:
            cand = SiltingObject(alg, others + [Z])
        except SiltingError:
            continue
        if len(cand) == n:
            return cand
    Z = _complement_search(alg, X, others)
    if Z is None:
        raise SiltingError(
            f"no second completion found for summand {k} of {T!r}; "
            "this is a bug, record the instance"
        )
    return SiltingObject(alg, others + [Z])


# -- Bongartz completion ------------------------------------------------------


_PRIMES = (1, 2, 3, 5, 7, 11, 13)


def _express(target: Sequence[Fraction], T: SiltingObject) -> list[Fraction]:
    """Coordinates of ``target`` in the g-vector basis of ``T``."""
    rows = [
        [Fraction(g.coords[i]) for g in T.g_vectors()]
        for i in range(len(target))
    ]
    sol = solve(rows, list(target))
    if sol is None:
        raise SiltingError("silting g-vectors failed to span; bug")
    return sol


def bongartz_completion(U) -> SiltingObject:
    """The Bongartz completion: the silting object whose positive cone
    contains [U] + epsilon [A] for small epsilon.

    Walks from A, expressing the perturbed target in the current silting
    basis and mutating at the most negative coordinate; epsilon is shrunk
    through a few primes whenever the walk lands on a face.
    """
    summands = _summand_list(U)
    if not summands:
        if isinstance(U, SiltingObject):
            return algebra_silting(U.alg)
        raise ValueError("empty input needs an algebra; pass a SiltingObject")
    alg = summands[0].alg
    part = SiltingObject(alg, summands)
    quiver = alg.presentation.quiver
    n = len(quiver.vertices)
    base = K0Vector.zero(quiver)
    for g in part.g_vectors():
        base = base + g
    ones = K0Vector.of(quiver, {v: 1 for v in quiver.vertices})
    height = max(abs(c) for c in base.coords) if not base.is_zero() else Fraction(0)
    eps0 = Fraction(1, 2 * (1 + int(height)) * n)
    l1 = sum(abs(c) for c in base.coords)
    cap = 10 * n * (1 + int(l1))
    trace: list[str] = []
    for prime in _PRIMES:
        eps = eps0 / prime
        target = (base + ones.scale(eps)).coords
        T = algebra_silting(alg)
        steps = 0
        degenerate = False
        while steps <= cap:
            coords = _express(target, T)
            if any(c == 0 for c in coords):
                degenerate = True
                break
            if all(c > 0 for c in coords):
                if all(T.contains(s) for s in part.summands):
                    return T
                degenerate = True  # epsilon too large: wrong chamber
                break
            worst = min(range(n), key=lambda i: (coords[i], i))
            T = mutate(T, worst)
            trace.append(T.key())
            steps += 1
        if degenerate:
            continue
        raise SiltingError(
            f"Bongartz walk exceeded {cap} mutations; trace: {trace[-10:]}"
        )
    raise SiltingError(
        "Bongartz walk kept hitting faces after all perturbations; "
        f"trace: {trace[-10:]}"
    )


# -- semibricks ---------------------------------------------------------------


def _module_end_radical(reps: Rep) -> list[Morphism]:
    """Radical endomorphisms of a representation, by the trace-form kernel."""
    basis = hom_matrices(reps, reps)
    n = len(basis)
    if n == 0:
        return []
    vertices = sorted(reps.dims)

    def flatten(f: Morphism) -> list[Fraction]:
        out: list[Fraction] = []
        for v in vertices:
            for row in f[v]:
                out.extend(row)
        return out

    columns = [flatten(f) for f in basis]
    rows = [[col[i] for col in columns] for i in range(len(columns[0]))]

    def coords(f: Morphism) -> list[Fraction]:
        sol = solve(rows, flatten(f))
        if sol is None:
            raise SiltingError("endomorphism outside its own hom space; bug")
        return sol

    left = []
    for f in basis:
        cols = [coords(compose_morphisms(g, f)) for g in basis]
        left.append([[cols[j][i] for j in range(n)] for i in range(n)])
    traces = [sum(m[i][i] for i in range(n)) for m in left]
    gram = zeros(n, n)
    for i, f in enumerate(basis):
        for j in range(i, n):
            prod = coords(compose_morphisms(basis[j], f))
            value = sum(c * t for c, t in zip(prod, traces))
            gram[i][j] = value
            gram[j][i] = value
    out: list[Morphism] = []
    for vec in nullspace(gram, ncols=n):
        f = {v: zeros(reps.dims[v], reps.dims[v]) for v in reps.dims}
        for c, g in zip(vec, basis):
            if not c:
                continue
            for v in reps.dims:
                for a in range(reps.dims[v]):
                    for b in range(reps.dims[v]):
                        f[v][a][b] += c * g[v][a][b]
        out.append(f)
    return out


def semibricks(U) -> tuple[list[ModuleDescriptor], list[ModuleDescriptor]]:
    """The labelling semibricks (S_U, S'_U) of a presilting object.

    S_U: each H^0(U_i) modulo the images of all radical maps from H^0(U);
    S'_U: dually, intersected kernels inside H^{-1}(nu U_i).  Each summand
    must contribute on at least one side.
    """
    summands = _summand_list(U)
    if not summands:
        return [], []
    alg = summands[0].alg
    pres = alg.presentation
    h0s = [h0_rep(alg, list(s.p1), list(s.p0), s.d) for s in summands]
    hm1s = [hm1_nu_rep(alg, list(s.p1), list(s.p0), s.d) for s in summands]
    bricks: list[ModuleDescriptor] = []
    cobricks: list[ModuleDescriptor] = []
    for i in range(len(summands)):
        brick = None
        if h0s[i].total_dim:
            stacked = _stack_sources(pres, h0s, i)
            coker, _ = cokernel_morphism(h0s[i], stacked)
            if coker.total_dim:
                pieces = decompose_rep(pres, coker)
                if len(pieces) != 1:
                    raise SiltingError("semibrick quotient is not a brick; bug")
                brick = pieces[0]
                bricks.append(brick)
        cobrick = None
        if hm1s[i].total_dim:
            kernel = _stack_targets(pres, hm1s, i)
            if kernel.total_dim:
                pieces = decompose_rep(pres, kernel)
                if len(pieces) != 1:
                    raise SiltingError("semibrick kernel is not a brick; bug")
                cobrick = pieces[0]
                cobricks.append(cobrick)
        if brick is None and cobrick is None:
            raise SiltingError(
                "a presilting summand produced no brick on either side; bug"
            )
    return bricks, cobricks


def _stack_sources(pres, h0s: list[Rep], i: int) -> Morphism:
    """All radical maps into h0s[i], merged into one morphism for cokernels."""
    target = h0s[i]
    maps: list[tuple[Rep, Morphism]] = []
    for j, source in enumerate(h0s):
        if source.total_dim == 0:
            continue
        fam = (
            _module_end_radical(target) if j == i else hom_matrices(source, target)
        )
        maps.extend((source, f) for f in fam)
    if not maps:
        return {v: zeros(0, target.dims[v]) for v in pres.quiver.vertices}
    big, offsets = direct_sum(pres, [source for source, _ in maps])
    f = {v: zeros(big.dims[v], target.dims[v]) for v in pres.quiver.vertices}
    for t, (source, part) in enumerate(maps):
        for v in pres.quiver.vertices:
            base = offsets[t][v]
            for a in range(source.dims[v]):
                for b in range(target.dims[v]):
                    f[v][base + a][b] = part[v][a][b]
    return f


def _stack_targets(pres, hm1s: list[Rep], i: int) -> Rep:
    """Intersected kernels of all radical maps out of hm1s[i]."""
    source = hm1s[i]
    maps: list[tuple[Rep, Morphism]] = []
    for j, target in enumerate(hm1s):
        if target.total_dim == 0:
            continue
        fam = (
            _module_end_radical(source) if j == i else hom_matrices(source, target)
        )
        maps.extend((target, f) for f in fam)
    if not maps:
        return source
    big, offsets = direct_sum(pres, [target for target, _ in maps])
    f = {v: zeros(source.dims[v], big.dims[v]) for v in pres.quiver.vertices}
    for t, (target, part) in enumerate(maps):
        for v in pres.quiver.vertices:
            base = offsets[t][v]
            for a in range(source.dims[v]):
                for b in range(target.dims[v]):
                    f[v][a][base + b] = part[v][a][b]
    kernel, _ = kernel_morphism(source, f)
    return kernel


# -- exchange quiver ----------------------------------------------------------


@dataclass
class ExchangeGraph:
    """A BFS fragment of the exchange quiver; arrows are left mutations."""

    vertices: dict[str, SiltingObject]
    arrows: list[tuple[str, str]]
    complete: bool

    def component_count(self) -> int:
        parent = {k: k for k in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.arrows:
            parent[find(a)] = find(b)
        return len({find(k) for k in self.vertices})

    def to_json(self) -> dict:
        return {
            "vertices": {k: s.to_json() for k, s in sorted(self.vertices.items())},
            "arrows": sorted(self.arrows),
            "complete": self.complete,
        }


def _is_left_mutation(T: SiltingObject, other_theta: K0Vector, bricks) -> bool:
    """Is the neighbour a left mutation of T?  True when some brick of S_T
    leaves the numerical torsion class of the neighbour."""
    pres = T.alg.presentation
    for brick in bricks:
        flags = membership(pres, other_theta, brick)
        if not flags.in_ovT:
            return True
    return False


def exchange_explore(
    alg: Algebra,
    depth_bound: int,
    seeds: Sequence[SiltingObject] | None = None,
) -> ExchangeGraph:
    """BFS of the exchange quiver out to a mutation depth.

    Vertices are keyed by sorted g-vector matrices; an arrow T -> T' records
    that T' is a left mutation of T, decided through semibrick membership.
    """
    if seeds is None:
        seeds = [algebra_silting(alg), shifted_algebra_silting(alg)]
    n = len(alg.presentation.quiver.vertices)
    quiver = alg.presentation.quiver
    vertices: dict[str, SiltingObject] = {}
    depth: dict[str, int] = {}
    bricks_of: dict[str, list[ModuleDescriptor]] = {}
    theta_of: dict[str, K0Vector] = {}
    arrows: set[tuple[str, str]] = set()
    queue: list[str] = []
    for seed in seeds:
        key = seed.key()
        if key not in vertices:
            vertices[key] = seed
            depth[key] = 0
            queue.append(key)
    complete = True
    head = 0
    while head < len(queue):
        key = queue[head]
        head += 1
        T = vertices[key]
        at_bound = depth[key] >= depth_bound
        for k in range(n):
            neighbour = mutate(T, k)
            nkey = neighbour.key()
            if nkey not in vertices:
                if at_bound:
                    complete = False
                    continue
                vertices[nkey] = neighbour
                depth[nkey] = depth[key] + 1
                queue.append(nkey)
            if (key, nkey) in arrows or (nkey, key) in arrows:
                continue
            for vkey in (key, nkey):
                if vkey not in theta_of:
                    total = K0Vector.zero(quiver)
                    for g in vertices[vkey].g_vectors():
                        total = total + g
                    theta_of[vkey] = total
                if vkey not in bricks_of:
                    bricks_of[vkey] = semibricks(vertices[vkey])[0]
            forward = _is_left_mutation(T, theta_of[nkey], bricks_of[key])
            backward = _is_left_mutation(
                vertices[nkey], theta_of[key], bricks_of[nkey]
            )
            if forward == backward:
                raise SiltingError(
                    f"mutation orientation between {key} and {nkey} is "
                    "ambiguous; bug"
                )
            arrows.add((key, nkey) if forward else (nkey, key))
    return ExchangeGraph(vertices=vertices, arrows=sorted(arrows), complete=complete)
