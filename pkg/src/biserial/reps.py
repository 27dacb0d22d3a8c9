"""Exact matrix representations and the homological toolkit built on them.

A representation assigns a rational vector space to every vertex and a
matrix to every arrow, acting on row vectors.  Everything downstream --
hom spaces, kernels, projective covers, minimal presentations, the
Nakayama functor and the translate -- is exact linear algebra over the
basis of paths provided by :class:`biserial.algebra.Algebra`.

Morphisms are plain ``{vertex: matrix}`` dictionaries whose block at a
vertex maps the source fiber into the target fiber.
"""

from __future__ import annotations

from fractions import Fraction

from biserial.algebra import Algebra, Element
from biserial.linalg import (
    frac_rows,
    invert,
    mat_mul,
    nullspace,
    rank,
    rref,
    zeros,
)
from biserial.presentation import AlgebraPresentation, Path, PresentationError
from biserial.strings import (
    BandWord,
    ModuleDescriptor,
    dim_vector,
    enumerate_bands,
    enumerate_strings,
    pin_sides,
    pin_vertices,
)

Matrix = list[list[Fraction]]
Morphism = dict[str, Matrix]


class Rep:
    """A representation: fiber dimensions and one matrix per arrow."""

    def __init__(
        self,
        pres: AlgebraPresentation,
        dims: dict[str, int],
        maps: dict[str, Matrix] | None = None,
    ) -> None:
        self.pres = pres
        self.quiver = pres.quiver
        self.dims = {v: int(dims.get(v, 0)) for v in self.quiver.vertices}
        self.maps: dict[str, Matrix] = {}
        maps = maps or {}
        for arrow in self.quiver.arrows:
            block = maps.get(arrow.name)
            if block is None:
                block = zeros(self.dims[arrow.source], self.dims[arrow.target])
            else:
                block = frac_rows(block)
            assert len(block) == self.dims[arrow.source]
            assert all(len(row) == self.dims[arrow.target] for row in block)
            self.maps[arrow.name] = block

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> dict[str, int]:
        return dict(self.dims)

    def act(self, vertex: str, vec: list[Fraction], path: Path) -> tuple[str, list[Fraction]]:
        """Apply a path to a row vector sitting at ``vertex``."""
        here = vertex
        out = list(vec)
        for name in path.arrows:
            arrow = self.quiver.arrow(name)
            assert arrow.source == here
            out = mat_mul([out], self.maps[name])[0] if out else [
                Fraction(0)
            ] * self.dims[arrow.target]
            here = arrow.target
        return here, out


def _alternating_rotation(letters):
    """Rotate a cyclic word so it opens with a descending run.

    Raises when all letters share one sign, since such a cycle bounds no
    module at all.
    """
    signs = [eps for _, eps in letters]
    if -1 not in signs or 1 not in signs:
        raise PresentationError("the cycle has no peak/valley structure")
    shift = next(
        k for k in range(len(letters)) if signs[k] == -1 and signs[k - 1] == 1
    )
    return letters[shift:] + letters[:shift]


def rep_of_module(pres: AlgebraPresentation, module: ModuleDescriptor) -> Rep:
    """The defining matrices of a string, band, or pin module."""
    quiver = pres.quiver
    if module.kind == "string":
        word = module.string
        verts = word.vertices(quiver)  # type: ignore[union-attr]
        dims = {v: 0 for v in quiver.vertices}
        index = []
        for v in verts:
            index.append(dims[v])
            dims[v] += 1
        rep = Rep(pres, dims)
        for k, (name, eps) in enumerate(word.letters):  # type: ignore[union-attr]
            if eps == 1:
                rep.maps[name][index[k]][index[k + 1]] = Fraction(1)
            else:
                rep.maps[name][index[k + 1]][index[k]] = Fraction(1)
        return rep
    if module.kind == "band":
        m = module.jordan_size
        lam = module.eigenvalue
        letters = _alternating_rotation(module.band.canonical().letters)  # type: ignore[union-attr]
        verts = BandWord(letters).vertices(quiver)
        dims = {v: 0 for v in quiver.vertices}
        start = []
        for v in verts:
            start.append(dims[v])
            dims[v] += m
        rep = Rep(pres, dims)
        l = len(letters)

        def put(name, row0, col0, jordan):
            for i in range(m):
                rep.maps[name][row0 + i][col0 + i] = (
                    lam if jordan else Fraction(1)
                )
                if jordan and i + 1 < m:
                    rep.maps[name][row0 + i][col0 + i + 1] = Fraction(1)

        # the closing letter of the last ascending run carries the Jordan
        # block, matching where the presentation puts its eigenvalue
        for k, (name, eps) in enumerate(letters):
            nxt = (k + 1) % l
            last = k == l - 1
            if eps == 1:
                put(name, start[k], start[nxt], last)
            else:
                put(name, start[nxt], start[k], last)
        return rep
    # pin: the trivial path, the proper prefixes of both sides, one socle
    p, q = pin_sides(pres, module.pin)  # type: ignore[arg-type]
    dims = {v: 0 for v in quiver.vertices}
    slots: dict[tuple, tuple[str, int]] = {}

    def reserve(key, vertex):
        slots[key] = (vertex, dims[vertex])
        dims[vertex] += 1

    reserve(("e",), module.pin)
    for tag, side in (("p", p), ("q", q)):
        here = module.pin
        for k, name in enumerate(side.arrows[:-1]):
            here = quiver.arrow(name).target
            reserve((tag, k + 1), here)
    reserve(("soc",), quiver.path_target(p))
    rep = Rep(pres, dims)

    def link(src_key, name, dst_key):
        sv, si = slots[src_key]
        dv, di = slots[dst_key]
        arrow = quiver.arrow(name)
        assert (arrow.source, arrow.target) == (sv, dv)
        rep.maps[name][si][di] = Fraction(1)

    for tag, side in (("p", p), ("q", q)):
        a = len(side)
        link(("e",), side.arrows[0], ("soc",) if a == 1 else (tag, 1))
        for k in range(1, a - 1):
            link((tag, k), side.arrows[k], (tag, k + 1))
        if a > 1:
            link((tag, a - 1), side.arrows[-1], ("soc",))
    return rep


def projective_rep(alg: Algebra, vertex: str) -> Rep:
    """P_vertex with fibers spanned by the paths out of ``vertex``."""
    pres = alg.presentation
    dims = {v: len(alg.pair_basis(vertex, v)) for v in pres.quiver.vertices}
    rep = Rep(pres, dims)
    for arrow in pres.quiver.arrows:
        src = alg.pair_basis(vertex, arrow.source)
        dst = alg.pair_basis(vertex, arrow.target)
        step = Path((arrow.name,))
        for i, path in enumerate(src):
            image = alg.multiply_paths(path, step)
            if image is not None:
                rep.maps[arrow.name][i][dst.index(image)] = Fraction(1)
    return rep


def injective_rep(alg: Algebra, vertex: str) -> Rep:
    """I_vertex, spanned by duals of the paths into ``vertex``.

    An arrow acts on a dual basis path by stripping itself off the
    front; socle classes are handled by testing products in the algebra.
    """
    pres = alg.presentation
    dims = {v: len(alg.pair_basis(v, vertex)) for v in pres.quiver.vertices}
    rep = Rep(pres, dims)
    for arrow in pres.quiver.arrows:
        src = alg.pair_basis(arrow.source, vertex)
        dst = alg.pair_basis(arrow.target, vertex)
        step = Path((arrow.name,))
        for i, path in enumerate(src):
            for j, rest in enumerate(dst):
                if alg.multiply_paths(step, rest) == path:
                    rep.maps[arrow.name][i][j] = Fraction(1)
    return rep


def direct_sum(
    pres: AlgebraPresentation, parts: list[Rep]
) -> tuple[Rep, list[dict[str, int]]]:
    """Direct sum with per-summand fiber offsets."""
    dims = {v: 0 for v in pres.quiver.vertices}
    offsets = []
    for part in parts:
        offsets.append(dict(dims))
        for v in pres.quiver.vertices:
            dims[v] += part.dims[v]
    total = Rep(pres, dims)
    for arrow in pres.quiver.arrows:
        for part, off in zip(parts, offsets):
            r0 = off[arrow.source]
            c0 = off[arrow.target]
            block = part.maps[arrow.name]
            for i, row in enumerate(block):
                for j, val in enumerate(row):
                    if val:
                        total.maps[arrow.name][r0 + i][c0 + j] = val
    return total, offsets


# -- morphisms ----------------------------------------------------------------


def hom_matrices(a: Rep, b: Rep) -> list[Morphism]:
    """A basis of the space of module morphisms a -> b."""
    quiver = a.quiver
    offsets = {}
    nvars = 0
    for v in quiver.vertices:
        offsets[v] = nvars
        nvars += a.dims[v] * b.dims[v]
    if nvars == 0:
        return []

    def var(v, i, j):
        return offsets[v] + i * b.dims[v] + j

    rows = []
    for arrow in quiver.arrows:
        s, t = arrow.source, arrow.target
        amat, bmat = a.maps[arrow.name], b.maps[arrow.name]
        for i in range(a.dims[s]):
            for j in range(b.dims[t]):
                row = [Fraction(0)] * nvars
                for k in range(a.dims[t]):
                    row[var(t, k, j)] += amat[i][k]
                for k in range(b.dims[s]):
                    row[var(s, i, k)] -= bmat[k][j]
                if any(row):
                    rows.append(row)
    out = []
    for vec in nullspace(rows, ncols=nvars):
        blocks = {}
        for v in quiver.vertices:
            blocks[v] = [
                [
                    vec[var(v, i, j)]
                    for j in range(b.dims[v])
                ]
                for i in range(a.dims[v])
            ]
        out.append(blocks)
    return out


def hom_dim_reps(a: Rep, b: Rep) -> int:
    return len(hom_matrices(a, b))


def compose_morphisms(f: Morphism, g: Morphism) -> Morphism:
    """Apply f, then g (row-vector convention: blocks multiply as F·G)."""
    return {v: mat_mul(f[v], g[v]) for v in f}


def _coords_in_rows(basis_rows: list[list[Fraction]], vec: list[Fraction]):
    """Coordinates of vec in the span of basis_rows (must succeed)."""
    if not basis_rows:
        assert all(x == 0 for x in vec), "vector outside the zero space"
        return []
    aug = [list(row) + [x] for row, x in zip(zip(*basis_rows), vec)]
    red, pivots = rref(aug)
    n = len(basis_rows)
    sol = [Fraction(0)] * n
    for i, pc in enumerate(pivots):
        assert pc != n, "vector outside the span"
        sol[pc] = red[i][n]
    return sol


def kernel_morphism(a: Rep, f: Morphism) -> tuple[Rep, Morphism]:
    """(K, inclusion K -> a) for the kernel of a morphism out of ``a``."""
    pres = a.pres
    basis = {}
    for v in pres.quiver.vertices:
        block = f[v]
        if a.dims[v] == 0:
            basis[v] = []
            continue
        if not block or not block[0]:
            basis[v] = [
                [Fraction(int(i == j)) for j in range(a.dims[v])]
                for i in range(a.dims[v])
            ]
            continue
        cols = [list(col) for col in zip(*block)]
        basis[v] = nullspace(cols, ncols=a.dims[v])
    k = Rep(pres, {v: len(basis[v]) for v in pres.quiver.vertices})
    for arrow in pres.quiver.arrows:
        s, t = arrow.source, arrow.target
        for i, vec in enumerate(basis[s]):
            image = mat_mul([vec], a.maps[arrow.name])[0] if vec else []
            if a.dims[t]:
                k.maps[arrow.name][i] = _coords_in_rows(
                    basis[t], image or [Fraction(0)] * a.dims[t]
                )
    incl = {v: [list(row) for row in basis[v]] for v in pres.quiver.vertices}
    return k, incl


def cokernel_morphism(b: Rep, f: Morphism) -> tuple[Rep, Morphism]:
    """(C, projection b -> C) for the cokernel of a morphism into ``b``."""
    pres = b.pres
    reduced = {}
    spare = {}
    for v in pres.quiver.vertices:
        red, pivots = rref(f[v]) if f[v] and f[v][0] else ([], [])
        reduced[v] = (red, pivots)
        spare[v] = [c for c in range(b.dims[v]) if c not in pivots]
    c = Rep(pres, {v: len(spare[v]) for v in pres.quiver.vertices})

    def project(v, vec):
        red, pivots = reduced[v]
        out = list(vec)
        for i, pc in enumerate(pivots):
            if out[pc]:
                coef = out[pc]
                out = [x - coef * y for x, y in zip(out, red[i])]
        return [out[idx] for idx in spare[v]]

    proj = {}
    for v in pres.quiver.vertices:
        proj[v] = [
            project(v, [Fraction(int(k == j)) for k in range(b.dims[v])])
            for j in range(b.dims[v])
        ]
    for arrow in pres.quiver.arrows:
        s, t = arrow.source, arrow.target
        for i, col in enumerate(spare[s]):
            moved = b.maps[arrow.name][col]
            c.maps[arrow.name][i] = project(t, moved)
    return c, proj


def radical_rows(r: Rep, vertex: str) -> list[list[Fraction]]:
    rows = []
    for arrow in r.quiver.in_arrows(vertex):
        rows.extend(row for row in r.maps[arrow.name] if any(row))
    return rows


def top_lifts(r: Rep) -> list[tuple[str, list[Fraction]]]:
    """One lift per top basis class, ordered by vertex then coordinate."""
    lifts = []
    for v in r.quiver.vertices:
        red, pivots = rref(radical_rows(r, v)) if r.dims[v] else ([], [])
        for c in range(r.dims[v]):
            if c not in pivots:
                vec = [Fraction(int(k == c)) for k in range(r.dims[v])]
                lifts.append((v, vec))
    return lifts


def projective_cover(
    alg: Algebra, r: Rep
) -> tuple[list[str], Rep, Morphism, list[dict[str, int]]]:
    """(vertices, free module, covering morphism, summand offsets)."""
    pres = alg.presentation
    lifts = top_lifts(r)
    verts = [v for v, _ in lifts]
    parts = [projective_rep(alg, v) for v in verts]
    free, offsets = direct_sum(pres, parts)
    cover = {
        w: zeros(free.dims[w], r.dims[w]) for w in pres.quiver.vertices
    }
    for idx, (v, vec) in enumerate(lifts):
        for w in pres.quiver.vertices:
            for j, path in enumerate(alg.pair_basis(v, w)):
                _, image = r.act(v, vec, path)
                row = offsets[idx][w] + j
                cover[w][row] = image
    for w in pres.quiver.vertices:
        assert rank(cover[w]) == r.dims[w], "cover failed to surject"
    return verts, free, cover, offsets


# -- minimal presentations ----------------------------------------------------


def min_presentation_data(
    alg: Algebra, r: Rep
) -> tuple[list[str], list[str], list[list[Element]]]:
    """(p1, p0, entries) with entries[k][l] in e_{p0[k]} A e_{p1[l]}."""
    pres = alg.presentation
    p0, free0, cover0, off0 = projective_cover(alg, r)
    kernel, incl = kernel_morphism(free0, cover0)
    p1, free1, cover1, off1 = projective_cover(alg, kernel)
    d = compose_morphisms(cover1, incl)
    entries: list[list[Element]] = [
        [dict() for _ in p1] for _ in p0
    ]
    for l, j_vertex in enumerate(p1):
        gen_row = d[j_vertex][off1[l][j_vertex]]
        for k, i_vertex in enumerate(p0):
            paths = alg.pair_basis(i_vertex, j_vertex)
            base = off0[k][j_vertex]
            entry: Element = {}
            for t, path in enumerate(paths):
                coeff = gen_row[base + t]
                if coeff:
                    assert not path.is_trivial, "presentation is not minimal"
                    entry[path] = coeff
            entries[k][l] = entry
    return p1, p0, entries


def band_presentation_data(
    pres: AlgebraPresentation, band: BandWord, eigenvalue: Fraction
) -> tuple[list[str], list[str], list[list[Element]]]:
    """The standard presentation of a simple band module, rotated to the
    alternating form b = p1^{-1} q1 ... pm^{-1} qm."""
    rotated = _alternating_rotation(band.canonical().letters)
    runs: list[tuple[int, list[str]]] = []
    for name, eps in rotated:
        if runs and runs[-1][0] == eps:
            runs[-1][1].append(name)
        else:
            runs.append((eps, [name]))
    assert len(runs) % 2 == 0 and runs[0][0] == -1
    descents = [Path(tuple(reversed(names))) for eps, names in runs[0::2]]
    ascents = [Path(tuple(names)) for eps, names in runs[1::2]]
    m = len(descents)
    quiver = pres.quiver
    p0 = [quiver.path_source(p) for p in descents]  # peaks i_k
    p1 = [quiver.path_target(q) for q in ascents]  # valleys j_k
    entries: list[list[Element]] = [[dict() for _ in range(m)] for _ in range(m)]
    for k in range(m):
        entries[k][k][ascents[k]] = (
            entries[k][k].get(ascents[k], Fraction(0)) + Fraction(1)
        )
        # the eigenvalue multiplies the last descent so that the cokernel
        # carries it on the closing letter, exactly as rep_of_module does
        p_coeff = Fraction(eigenvalue) if k == m - 1 else Fraction(1)
        entries[k][(k - 1) % m][descents[k]] = (
            entries[k][(k - 1) % m].get(descents[k], Fraction(0)) - p_coeff
        )
    return p1, p0, entries


def module_presentation(
    alg: Algebra, module: ModuleDescriptor
) -> tuple[list[str], list[str], list[list[Element]]]:
    """Minimal projective presentation of a module, as (p1, p0, entries)."""
    pres = alg.presentation
    if module.kind == "pin":
        return [], [module.pin], [[]]
    if module.kind == "band" and module.jordan_size == 1:
        return band_presentation_data(pres, module.band, module.eigenvalue)  # type: ignore[arg-type]
    return min_presentation_data(alg, rep_of_module(pres, module))


# -- between projectives: algebra entries <-> matrices ------------------------


def entries_to_morphism(
    alg: Algebra,
    p1: list[str],
    p0: list[str],
    entries: list[list[Element]],
) -> tuple[Rep, Rep, Morphism]:
    """Realize algebra-entry data as free modules and a morphism."""
    pres = alg.presentation
    free1, off1 = direct_sum(pres, [projective_rep(alg, v) for v in p1])
    free0, off0 = direct_sum(pres, [projective_rep(alg, v) for v in p0])
    f = {w: zeros(free1.dims[w], free0.dims[w]) for w in pres.quiver.vertices}
    for l, j_vertex in enumerate(p1):
        for k, i_vertex in enumerate(p0):
            for x, coeff in entries[k][l].items():
                # phi_x : P_{j} -> P_{i}, y -> x.y on the path bases
                for w in pres.quiver.vertices:
                    src = alg.pair_basis(j_vertex, w)
                    dst = alg.pair_basis(i_vertex, w)
                    for t, y in enumerate(src):
                        image = alg.multiply_paths(x, y)
                        if image is not None:
                            row = off1[l][w] + t
                            col = off0[k][w] + dst.index(image)
                            f[w][row][col] += coeff
    return free1, free0, f


def nu_morphism(
    alg: Algebra,
    p1: list[str],
    p0: list[str],
    entries: list[list[Element]],
) -> tuple[Rep, Rep, Morphism]:
    """The Nakayama image of the differential, between injectives."""
    pres = alg.presentation
    inj1, off1 = direct_sum(pres, [injective_rep(alg, v) for v in p1])
    inj0, off0 = direct_sum(pres, [injective_rep(alg, v) for v in p0])
    f = {w: zeros(inj1.dims[w], inj0.dims[w]) for w in pres.quiver.vertices}
    for l, j_vertex in enumerate(p1):
        for k, i_vertex in enumerate(p0):
            for x, coeff in entries[k][l].items():
                # nu(phi_x) : I_j -> I_i sends q* to sum of p* with p.x = q
                for w in pres.quiver.vertices:
                    src = alg.pair_basis(w, j_vertex)
                    dst = alg.pair_basis(w, i_vertex)
                    for t, q in enumerate(src):
                        for u, p in enumerate(dst):
                            if alg.multiply_paths(p, x) == q:
                                row = off1[l][w] + t
                                col = off0[k][w] + u
                                f[w][row][col] += coeff
    return inj1, inj0, f


def h0_rep(alg: Algebra, p1, p0, entries) -> Rep:
    """H^0 of the 2-term complex: the cokernel of its differential."""
    _, free0, f = entries_to_morphism(alg, p1, p0, entries)
    coker, _ = cokernel_morphism(free0, f)
    return coker


def hm1_nu_rep(alg: Algebra, p1, p0, entries) -> Rep:
    """H^{-1} of the Nakayama image: the kernel of nu(differential)."""
    inj1, _, f = nu_morphism(alg, p1, p0, entries)
    kernel, _ = kernel_morphism(inj1, f)
    return kernel


def tau_rep(alg: Algebra, module: ModuleDescriptor) -> Rep:
    """The translate computed homologically from a minimal presentation."""
    p1, p0, entries = module_presentation(alg, module)
    return hm1_nu_rep(alg, p1, p0, entries)


# -- splitting off summands ---------------------------------------------------


def _blocks_invertible(f: Morphism, dims: dict[str, int]) -> bool:
    for v, n in dims.items():
        if n and rank(f[v]) != n:
            return False
    return True


def find_split(cand: Rep, whole: Rep) -> tuple[Morphism, Morphism] | None:
    """Morphisms exhibiting ``cand`` as a direct summand of ``whole``.

    Works whenever the candidate has local endomorphism ring (true for
    string, band, and pin modules): some pair of basis homs composing to
    an automorphism exists exactly when the candidate splits off.
    """
    into = hom_matrices(cand, whole)
    back = hom_matrices(whole, cand)
    for f in into:
        for g in back:
            if _blocks_invertible(compose_morphisms(f, g), cand.dims):
                return f, g
    return None


def split_complement(cand: Rep, whole: Rep, f: Morphism, g: Morphism) -> Rep:
    """The complement of the split summand given by (f, g)."""
    t = compose_morphisms(f, g)
    inv = {}
    for v in cand.quiver.vertices:
        inv[v] = invert(t[v]) if cand.dims[v] else []
    idem = compose_morphisms(compose_morphisms(g, inv), f)
    complement, _ = kernel_morphism(whole, idem)
    assert complement.total_dim == whole.total_dim - cand.total_dim
    return complement


def reps_isomorphic(cand: Rep, whole: Rep) -> bool:
    """Isomorphism test for an indecomposable candidate."""
    if cand.dims != whole.dims:
        return False
    return find_split(cand, whole) is not None


def matches_module(
    pres: AlgebraPresentation, module: ModuleDescriptor, r: Rep
) -> bool:
    return reps_isomorphic(rep_of_module(pres, module), r)


def decompose_rep(
    pres: AlgebraPresentation,
    r: Rep,
    extra_eigenvalues: tuple[Fraction, ...] = (),
) -> list[ModuleDescriptor]:
    """Split a representation into string/band/pin descriptors.

    Candidates are filtered by dimension vectors; eigenvalue probes for
    band summands are 1 and 2 plus any caller-supplied values.
    """
    remaining = r
    found: list[ModuleDescriptor] = []
    while remaining.total_dim:
        hit = None
        for cand in _summand_candidates(pres, remaining, extra_eigenvalues):
            crep = rep_of_module(pres, cand)
            split = find_split(crep, remaining)
            if split is not None:
                hit = (cand, crep, split)
                break
        if hit is None:
            raise PresentationError(
                "could not recognize an indecomposable summand of a "
                f"representation with dimensions {remaining.dims}"
            )
        cand, crep, (f, g) = hit
        found.append(cand)
        remaining = split_complement(crep, remaining, f, g)
    return found


def _summand_candidates(
    pres: AlgebraPresentation,
    r: Rep,
    extra_eigenvalues: tuple[Fraction, ...],
):
    total = r.total_dim
    bound = {v: r.dims[v] for v in r.quiver.vertices}

    def fits(module):
        dv = dim_vector(pres, module)
        return all(dv[v] <= bound[v] for v in bound)

    pins = []
    for v in pin_vertices(pres):
        pin = ModuleDescriptor("pin", pin=v)
        if fits(pin):
            pins.append((sum(dim_vector(pres, pin).values()), pin))
    for _, pin in sorted(pins, key=lambda x: -x[0]):
        yield pin
    words = enumerate_strings(pres, max_len=total - 1)
    for word in sorted(words, key=lambda w: -len(w)):
        module = ModuleDescriptor("string", string=word)
        if fits(module):
            yield module
    lambdas = [Fraction(1), Fraction(2)]
    for lam in extra_eigenvalues:
        lam = Fraction(lam)
        if lam and lam not in lambdas:
            lambdas.append(lam)
    for band in enumerate_bands(pres, max_len=total):
        for m in range(1, total // len(band) + 1):
            for lam in lambdas:
                module = ModuleDescriptor(
                    "band", band=band, jordan_size=m, eigenvalue=lam
                )
                if fits(module):
                    yield module
