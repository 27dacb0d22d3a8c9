"""Strings, bands, and the combinatorics of their modules.

A string is a reduced walk in the double quiver avoiding the monomial
relations of the completion in either direction; a band is a primitive
cyclic string whose square is again a string.  Modules attached to them
are handled as descriptors; matrices only appear in
:mod:`biserial.reps`.

The homomorphism bases, brick tests and Auslander–Reiten translates
computed here are purely combinatorial: factor and submodule substrings
are cut out by the sign conditions on the boundary letters, and the
translate follows the standard maximal-run case analysis over a
finite-dimensional algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from biserial.presentation import (
    AlgebraPresentation,
    MarkerSets,
    Path,
    PresentationError,
    Quiver,
    marker_sets,
)

Letter = tuple[str, int]


def letter_to_json(letter: Letter) -> str:
    name, eps = letter
    return name if eps == 1 else f"~{name}"


def letter_from_json(token: str) -> Letter:
    if token.startswith("~"):
        return (token[1:], -1)
    return (token, 1)


@dataclass(frozen=True)
class StringWord:
    """A signed walk; ``vertex`` is set exactly for the trivial walks."""

    letters: tuple[Letter, ...]
    vertex: str | None = None

    def __post_init__(self) -> None:
        if (self.vertex is None) == (len(self.letters) == 0):
            raise ValueError("vertex must be set exactly for trivial words")

    @staticmethod
    def trivial(vertex: str) -> "StringWord":
        return StringWord((), vertex)

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e_{self.vertex}"
        return "*".join(letter_to_json(x) for x in self.letters)

    def inverse(self) -> "StringWord":
        if self.is_trivial:
            return self
        return StringWord(
            tuple((name, -eps) for name, eps in reversed(self.letters))
        )

    def canonical(self) -> "StringWord":
        if self.is_trivial:
            return self
        return min(self, self.inverse(), key=lambda s: s.letters)

    def source(self, quiver: Quiver) -> str:
        return self.position_vertex(quiver, 1)

    def target(self, quiver: Quiver) -> str:
        return self.position_vertex(quiver, len(self) + 1)

    def position_vertex(self, quiver: Quiver, k: int) -> str:
        """Vertex at position ``k`` (1-based, up to l+1)."""
        if not 1 <= k <= len(self) + 1:
            raise ValueError(f"position {k} out of range")
        if self.is_trivial:
            return self.vertex  # type: ignore[return-value]
        if k <= len(self):
            name, eps = self.letters[k - 1]
            arrow = quiver.arrow(name)
            return arrow.source if eps == 1 else arrow.target
        name, eps = self.letters[-1]
        arrow = quiver.arrow(name)
        return arrow.target if eps == 1 else arrow.source

    def vertices(self, quiver: Quiver) -> tuple[str, ...]:
        return tuple(
            self.position_vertex(quiver, k) for k in range(1, len(self) + 2)
        )

    def substring(self, quiver: Quiver, u: int, v: int) -> "StringWord":
        """The walk from position ``u`` to position ``v`` (1-based, u <= v)."""
        if not 1 <= u <= v <= len(self) + 1:
            raise ValueError(f"bad substring bounds ({u}, {v})")
        if u == v:
            return StringWord.trivial(self.position_vertex(quiver, u))
        return StringWord(self.letters[u - 1 : v - 1])

    def concat(self, *others: "StringWord") -> "StringWord":
        letters = self.letters
        vertex = self.vertex
        for other in others:
            letters += other.letters
            if letters:
                vertex = None
        return StringWord(letters, vertex)

    def to_json(self) -> dict:
        data: dict = {"string": [letter_to_json(x) for x in self.letters]}
        if self.is_trivial:
            data["vertex"] = self.vertex
        return data


def walk_from_path(path: Path, eps: int = 1) -> StringWord:
    """A path as a walk: direct for eps=1, inverted for eps=-1."""
    if path.is_trivial:
        return StringWord.trivial(path.vertex)  # type: ignore[arg-type]
    if eps == 1:
        return StringWord(tuple((a, 1) for a in path.arrows))
    return StringWord(tuple((a, -1) for a in reversed(path.arrows)))


def string_from_json(data: dict) -> StringWord:
    letters = tuple(letter_from_json(x) for x in data["string"])
    if not letters:
        return StringWord.trivial(data["vertex"])
    return StringWord(letters)


def _letter_ends(quiver: Quiver, letter: Letter) -> tuple[str, str]:
    name, eps = letter
    arrow = quiver.arrow(name)
    if eps == 1:
        return arrow.source, arrow.target
    return arrow.target, arrow.source


def is_string(pres: AlgebraPresentation, word: StringWord) -> bool:
    """Whether the walk avoids inverses-next-to-each-other and relations."""
    quiver = pres.quiver
    if word.is_trivial:
        return quiver.has_vertex(word.vertex)  # type: ignore[arg-type]
    plus = pres.string_completion()
    for letter in word.letters:
        if not quiver.has_arrow(letter[0]):
            return False
    for k in range(len(word) - 1):
        (n1, e1), (n2, e2) = word.letters[k], word.letters[k + 1]
        if _letter_ends(quiver, (n1, e1))[1] != _letter_ends(quiver, (n2, e2))[0]:
            return False
        if n1 == n2 and e1 == -e2:
            return False
    for run, eps in _monotone_runs(word):
        names = run if eps == 1 else tuple(reversed(run))
        if not plus.path_is_nonzero(names):
            return False
    return True


def _monotone_runs(word: StringWord):
    """Maximal runs of letters with one sign, as (names, eps) pairs."""
    runs = []
    current: list[str] = []
    sign = 0
    for name, eps in word.letters:
        if eps == sign:
            current.append(name)
        else:
            if current:
                runs.append((tuple(current), sign))
            current = [name]
            sign = eps
    if current:
        runs.append((tuple(current), sign))
    return runs


def enumerate_strings(
    pres: AlgebraPresentation, max_len: int
) -> list[StringWord]:
    """All strings of length <= max_len, one representative per {s, s⁻¹}."""
    quiver = pres.quiver
    found: set[StringWord] = {
        StringWord.trivial(v) for v in quiver.vertices
    }
    frontier: list[StringWord] = []
    for arrow in quiver.arrows:
        for eps in (1, -1):
            word = StringWord(((arrow.name, eps),))
            if is_string(pres, word):
                frontier.append(word)
    letters = [(a.name, e) for a in quiver.arrows for e in (1, -1)]
    while frontier:
        found.update(w.canonical() for w in frontier)
        nxt = []
        for word in frontier:
            if len(word) >= max_len:
                continue
            tail = _letter_ends(quiver, word.letters[-1])[1]
            for letter in letters:
                if _letter_ends(quiver, letter)[0] != tail:
                    continue
                longer = StringWord(word.letters + (letter,))
                if is_string(pres, longer):
                    nxt.append(longer)
        frontier = nxt
    return sorted(
        (w for w in found if len(w) <= max_len),
        key=lambda w: (len(w), w.vertex or "", w.letters),
    )


@dataclass(frozen=True)
class BandWord:
    """A cyclic signed walk; isomorphic under rotation and inversion."""

    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("bands are nonempty")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "*".join(letter_to_json(x) for x in self.letters)

    def rotations(self) -> list["BandWord"]:
        l = len(self.letters)
        return [
            BandWord(self.letters[k:] + self.letters[:k]) for k in range(l)
        ]

    def inverse(self) -> "BandWord":
        return BandWord(
            tuple((name, -eps) for name, eps in reversed(self.letters))
        )

    def canonical(self) -> "BandWord":
        candidates = self.rotations() + self.inverse().rotations()
        return min(candidates, key=lambda b: b.letters)

    def as_string(self) -> StringWord:
        return StringWord(self.letters)

    def position_vertex(self, quiver: Quiver, k: int) -> str:
        k = (k - 1) % len(self.letters) + 1
        return _letter_ends(quiver, self.letters[k - 1])[0]

    def vertices(self, quiver: Quiver) -> tuple[str, ...]:
        return tuple(
            self.position_vertex(quiver, k)
            for k in range(1, len(self.letters) + 1)
        )

    def substring(self, quiver: Quiver, u: int, v: int) -> StringWord:
        """The cyclic substring from position u to position v (wrapping)."""
        l = len(self.letters)
        if not (1 <= u <= l and 1 <= v <= l):
            raise ValueError(f"bad band substring bounds ({u}, {v})")
        if u == v:
            return StringWord.trivial(self.position_vertex(quiver, u))
        span = (v - u) % l
        doubled = self.letters + self.letters
        return StringWord(doubled[u - 1 : u - 1 + span])

    def to_json(self) -> dict:
        return {"band": [letter_to_json(x) for x in self.letters]}


def band_from_json(data: dict) -> BandWord:
    return BandWord(tuple(letter_from_json(x) for x in data["band"]))


def _is_primitive_letters(letters: tuple[Letter, ...]) -> bool:
    l = len(letters)
    for d in range(1, l):
        if l % d == 0 and letters == letters[:d] * (l // d):
            return False
    return True


def is_band(pres: AlgebraPresentation, band: BandWord) -> bool:
    """Whether the cyclic walk is a band.

    Besides the square being a string and primitivity, letters of both
    signs are required: a one-directional cycle carries no module, since
    its loop parameter would have to be invertible and nilpotent at once.
    """
    signs = {eps for _, eps in band.letters}
    if len(signs) != 2:
        return False
    doubled = StringWord(band.letters + band.letters)
    return is_string(pres, doubled) and _is_primitive_letters(band.letters)


def enumerate_bands(pres: AlgebraPresentation, max_len: int) -> list[BandWord]:
    """All bands of length <= max_len, one per rotation-inversion class."""
    quiver = pres.quiver
    found: set[BandWord] = set()
    for word in enumerate_strings(pres, max_len):
        if word.is_trivial:
            continue
        if word.source(quiver) != word.target(quiver):
            continue
        band = BandWord(word.letters)
        if is_band(pres, band):
            found.add(band.canonical())
    return sorted(found, key=lambda b: (len(b), b.letters))


# -- modules ------------------------------------------------------------------


@dataclass(frozen=True)
class ModuleDescriptor:
    """A string module, band module, or projective-injective pin."""

    kind: str
    string: StringWord | None = None
    band: BandWord | None = None
    jordan_size: int = 1
    eigenvalue: Fraction = Fraction(1)
    pin: str | None = None

    def __str__(self) -> str:
        if self.kind == "string":
            return f"M({self.string})"
        if self.kind == "band":
            return f"M({self.band}, {self.jordan_size}, {self.eigenvalue})"
        return f"P_{self.pin}"

    def to_json(self) -> dict:
        if self.kind == "string":
            return self.string.to_json()  # type: ignore[union-attr]
        if self.kind == "band":
            data = self.band.to_json()  # type: ignore[union-attr]
            data["m"] = self.jordan_size
            data["lambda"] = str(self.eigenvalue)
            return data
        return {"pin": self.pin}


def module_from_json(data: dict) -> ModuleDescriptor:
    if "string" in data:
        return ModuleDescriptor("string", string=string_from_json(data))
    if "band" in data:
        return ModuleDescriptor(
            "band",
            band=band_from_json(data),
            jordan_size=int(data.get("m", 1)),
            eigenvalue=Fraction(data.get("lambda", "1")),
        )
    if "pin" in data:
        return ModuleDescriptor("pin", pin=data["pin"])
    raise ValueError(f"not a module: {data!r}")


def string_module(pres: AlgebraPresentation, word: StringWord) -> ModuleDescriptor:
    if not is_string(pres, word):
        raise PresentationError(f"{word} is not a string here")
    return ModuleDescriptor("string", string=word.canonical())


def band_module(
    pres: AlgebraPresentation,
    band: BandWord,
    jordan_size: int = 1,
    eigenvalue: Fraction | int = 1,
) -> ModuleDescriptor:
    eigenvalue = Fraction(eigenvalue)
    if not eigenvalue:
        raise PresentationError("band modules need a nonzero eigenvalue")
    if jordan_size < 1:
        raise PresentationError("Jordan size must be positive")
    if not is_band(pres, band):
        raise PresentationError(f"{band} is not a band here")
    return ModuleDescriptor(
        "band",
        band=band.canonical(),
        jordan_size=jordan_size,
        eigenvalue=eigenvalue,
    )


def pin_sides(pres: AlgebraPresentation, vertex: str) -> tuple[Path, Path]:
    """The two identified maximal paths out of a pin vertex."""
    for p, q in pres.equal:
        if pres.quiver.path_source(p) == vertex:
            return tuple(sorted((p, q), key=lambda x: x.arrows))  # type: ignore[return-value]
    raise PresentationError(f"vertex {vertex} carries no identified path pair")


def pin_module(pres: AlgebraPresentation, vertex: str) -> ModuleDescriptor:
    pin_sides(pres, vertex)
    return ModuleDescriptor("pin", pin=vertex)


def pin_top_string(pres: AlgebraPresentation, vertex: str) -> StringWord:
    """The string of P/soc P for the pin at ``vertex``."""
    p, q = pin_sides(pres, vertex)
    left = Path(p.arrows[:-1]) if len(p) > 1 else Path.trivial(vertex)
    right = Path(q.arrows[:-1]) if len(q) > 1 else Path.trivial(vertex)
    return walk_from_path(left, -1).concat(walk_from_path(right, 1))


def pin_radical_string(pres: AlgebraPresentation, vertex: str) -> StringWord:
    """The string of rad P for the pin at ``vertex``."""
    p, q = pin_sides(pres, vertex)
    first = (
        Path(p.arrows[1:])
        if len(p) > 1
        else Path.trivial(pres.quiver.path_target(p))
    )
    second = (
        Path(q.arrows[1:])
        if len(q) > 1
        else Path.trivial(pres.quiver.path_target(q))
    )
    return walk_from_path(first, 1).concat(walk_from_path(second, -1))


def dim_vector(pres: AlgebraPresentation, module: ModuleDescriptor) -> dict[str, int]:
    quiver = pres.quiver
    dims = {v: 0 for v in quiver.vertices}
    if module.kind == "string":
        for v in module.string.vertices(quiver):  # type: ignore[union-attr]
            dims[v] += 1
    elif module.kind == "band":
        for v in module.band.vertices(quiver):  # type: ignore[union-attr]
            dims[v] += module.jordan_size
    else:
        p, q = pin_sides(pres, module.pin)  # type: ignore[arg-type]
        dims[module.pin] += 1  # type: ignore[index]
        for path in (p, q):
            walked = module.pin
            for name in path.arrows:
                walked = quiver.arrow(name).target
                dims[walked] += 1
        dims[quiver.path_target(p)] -= 1  # the two sides share their socle
    return dims


# -- factor and submodule substrings ------------------------------------------


@dataclass(frozen=True)
class Substring:
    """A substring with its cut positions (u, v)."""

    u: int
    v: int
    word: StringWord

    def to_json(self) -> dict:
        return {"u": self.u, "v": self.v, **self.word.to_json()}


def _string_fac_sub(
    quiver: Quiver, word: StringWord
) -> tuple[tuple[Substring, ...], tuple[Substring, ...]]:
    l = len(word)

    def eps(k: int) -> int:
        if k == 0 or k == l + 1:
            return 0
        return word.letters[k - 1][1]

    fac = []
    sub = []
    for u in range(1, l + 2):
        for v in range(u, l + 2):
            piece = None
            if eps(u - 1) in (-1, 0) and eps(v) in (1, 0):
                piece = word.substring(quiver, u, v)
                fac.append(Substring(u, v, piece))
            if eps(u - 1) in (1, 0) and eps(v) in (-1, 0):
                piece = piece if piece is not None else word.substring(quiver, u, v)
                sub.append(Substring(u, v, piece))
    return tuple(fac), tuple(sub)


def _band_fac_sub(
    quiver: Quiver, band: BandWord
) -> tuple[tuple[Substring, ...], tuple[Substring, ...]]:
    l = len(band)

    def eps(k: int) -> int:
        return band.letters[(k - 1) % l][1]

    fac = []
    sub = []
    for u in range(1, l + 1):
        for v in range(1, l + 1):
            if eps(u - 1) == -1 and eps(v) == 1:
                fac.append(Substring(u, v, band.substring(quiver, u, v)))
            if eps(u - 1) == 1 and eps(v) == -1:
                sub.append(Substring(u, v, band.substring(quiver, u, v)))
    return tuple(fac), tuple(sub)


def canonical_subsets(
    pres: AlgebraPresentation, module: ModuleDescriptor
) -> tuple[tuple[Substring, ...], tuple[Substring, ...]]:
    """(fac M, sub M) per the sign conditions on boundary letters."""
    quiver = pres.quiver
    if module.kind == "string":
        return _string_fac_sub(quiver, module.string)  # type: ignore[arg-type]
    if module.kind == "band":
        if module.jordan_size != 1:
            raise PresentationError(
                "factor/submodule substrings cover Jordan size 1 only"
            )
        return _band_fac_sub(quiver, module.band)  # type: ignore[arg-type]
    fac, _ = _string_fac_sub(quiver, pin_top_string(pres, module.pin))  # type: ignore[arg-type]
    _, sub = _string_fac_sub(quiver, pin_radical_string(pres, module.pin))  # type: ignore[arg-type]
    return fac, sub


def modules_isomorphic(
    pres: AlgebraPresentation, first: ModuleDescriptor, second: ModuleDescriptor
) -> bool:
    if first.kind != second.kind:
        return False
    if first.kind == "string":
        return first.string.canonical() == second.string.canonical()  # type: ignore[union-attr]
    if first.kind == "band":
        return (
            first.band.canonical() == second.band.canonical()  # type: ignore[union-attr]
            and first.jordan_size == second.jordan_size
            and first.eigenvalue == second.eigenvalue
        )
    return first.pin == second.pin


def hom_basis(
    pres: AlgebraPresentation, first: ModuleDescriptor, second: ModuleDescriptor
) -> list[tuple[Substring, Substring]]:
    """Pairs (factor substring, submodule substring) with matching words."""
    for mod in (first, second):
        if mod.kind == "band" and mod.jordan_size != 1:
            raise PresentationError("hom bases cover Jordan size 1 only")
    fac, _ = canonical_subsets(pres, first)
    _, sub = canonical_subsets(pres, second)
    pairs = []
    for f in fac:
        key = f.word.canonical()
        for s in sub:
            if s.word.canonical() == key:
                pairs.append((f, s))
    return pairs


def hom_dim(
    pres: AlgebraPresentation, first: ModuleDescriptor, second: ModuleDescriptor
) -> int:
    extra = (
        1
        if first.kind != "string" and modules_isomorphic(pres, first, second)
        else 0
    )
    return len(hom_basis(pres, first, second)) + extra


def is_brick(pres: AlgebraPresentation, module: ModuleDescriptor) -> bool:
    return hom_dim(pres, module, module) == 1


# -- Auslander-Reiten translate -----------------------------------------------


def pin_vertices(pres: AlgebraPresentation) -> tuple[str, ...]:
    return tuple(
        sorted({pres.quiver.path_source(p) for p, _ in pres.equal})
    )


def projective_string(
    pres: AlgebraPresentation,
    vertex: str,
    markers: MarkerSets | None = None,
) -> StringWord | None:
    """The string of the projective at ``vertex``; None at pin vertices.

    Only meaningful over a finite-dimensional algebra, where each arrow
    heads a unique maximal nonzero path.
    """
    if vertex in pin_vertices(pres):
        return None
    ms = markers if markers is not None else marker_sets(pres)
    if ms.cyc:
        raise PresentationError(
            "projectives are strings only over a finite-dimensional algebra"
        )
    chains = []
    for arrow in pres.quiver.out_arrows(vertex):
        heads = [w for w in ms.mp_star if w.arrows[0] == arrow.name]
        assert len(heads) == 1, f"expected one maximal path through {arrow.name}"
        chains.append(heads[0])
    if not chains:
        return StringWord.trivial(vertex)
    if len(chains) == 1:
        return walk_from_path(chains[0], 1)
    first, second = sorted(chains, key=lambda w: w.arrows)
    return walk_from_path(first, -1).concat(walk_from_path(second, 1))


def _continuation_arrow(
    pres: AlgebraPresentation,
    plus: AlgebraPresentation,
    stem: Path,
    excluded: str | None,
):
    """The unique arrow extending ``stem`` to a nonzero path, if any."""
    candidates = []
    for arrow in pres.quiver.out_arrows(pres.quiver.path_target(stem)):
        if arrow.name == excluded:
            continue
        if plus.path_is_nonzero(stem.arrows + (arrow.name,)):
            candidates.append(arrow)
    assert len(candidates) <= 1, f"forked continuation after {stem}"
    return candidates[0] if candidates else None


def _hook_path(
    pres: AlgebraPresentation, ms: MarkerSets, beta
) -> Path:
    """The left-maximal path into target(beta) not arriving along beta."""
    target = beta.target
    candidates = [
        t
        for t in ms.ovmp_costar
        if pres.quiver.path_target(t) == target
        and (t.is_trivial or t.arrows[-1] != beta.name)
    ]
    assert len(candidates) == 1, f"hook at {target} not unique"
    return candidates[0]


def _translate_string(
    pres: AlgebraPresentation, word: StringWord
) -> ModuleDescriptor | None:
    quiver = pres.quiver
    ms = marker_sets(pres)
    if ms.cyc:
        raise PresentationError(
            "the translate needs a finite-dimensional algebra; truncate first"
        )
    plus = pres.string_completion()
    s = word.canonical()
    l = len(s)

    if l == 0:
        vertex = s.vertex
        betas = sorted(quiver.out_arrows(vertex), key=lambda a: a.name)  # type: ignore[arg-type]
        if not betas:
            return None  # a simple at a sink is projective
        hooks = [_hook_path(pres, ms, b) for b in betas]
        if len(betas) == 1:
            return string_module(pres, walk_from_path(hooks[0], 1))
        glued = (
            walk_from_path(hooks[0], 1)
            .concat(StringWord(((betas[0].name, -1),)))
            .concat(StringWord(((betas[1].name, 1),)))
            .concat(walk_from_path(hooks[1], -1))
        )
        return string_module(pres, glued)

    l1 = 0
    while l1 < l and s.letters[l1][1] == -1:
        l1 += 1
    l2 = 0
    while l2 < l and s.letters[l - 1 - l2][1] == 1:
        l2 += 1
    assert l1 + l2 != l - 1, "runs cannot cover all letters but one"

    if l1:
        p1 = Path(tuple(s.letters[k][0] for k in range(l1 - 1, -1, -1)))
    else:
        p1 = Path.trivial(s.source(quiver))
    if l2:
        p2 = Path(tuple(s.letters[k][0] for k in range(l - l2, l)))
    else:
        p2 = Path.trivial(s.target(quiver))
    beta1 = _continuation_arrow(
        pres, plus, p1, s.letters[0][0] if l1 == 0 else None
    )
    beta2 = _continuation_arrow(
        pres, plus, p2, s.letters[-1][0] if l2 == 0 else None
    )
    assert (beta1 is None) == (p1 in set(ms.ovmp_star))
    assert (beta2 is None) == (p2 in set(ms.ovmp_star))

    if beta1 is None and beta2 is None:
        if l1 + l2 == l:
            key = s.canonical()
            for vertex in quiver.vertices:
                proj = projective_string(pres, vertex, ms)
                if proj is not None and proj.canonical() == key:
                    return None
            for vertex in pin_vertices(pres):
                if pin_top_string(pres, vertex).canonical() == key:
                    return string_module(pres, pin_radical_string(pres, vertex))
            raise PresentationError(f"{s} is maximal yet not a projective top")
        return string_module(pres, s.substring(quiver, l1 + 2, l - l2))

    if beta1 is None:
        hook2 = walk_from_path(_hook_path(pres, ms, beta2), -1)
        step2 = StringWord(((beta2.name, 1),))
        if l1 == l:
            return string_module(pres, hook2)
        body = s.substring(quiver, l1 + 2, l + 1)
        return string_module(pres, body.concat(step2, hook2))

    if beta2 is None:
        hook1 = walk_from_path(_hook_path(pres, ms, beta1), 1)
        step1 = StringWord(((beta1.name, -1),))
        if l2 == l:
            return string_module(pres, hook1)
        body = s.substring(quiver, 1, l - l2)
        return string_module(pres, hook1.concat(step1, body))

    hook1 = walk_from_path(_hook_path(pres, ms, beta1), 1)
    hook2 = walk_from_path(_hook_path(pres, ms, beta2), -1)
    glued = hook1.concat(
        StringWord(((beta1.name, -1),)),
        s,
        StringWord(((beta2.name, 1),)),
        hook2,
    )
    return string_module(pres, glued)


def ar_translate(
    pres: AlgebraPresentation, module: ModuleDescriptor
) -> ModuleDescriptor | None:
    """The Auslander-Reiten translate; None stands for the zero module.

    Band modules are fixed points; pins and other projectives go to zero.
    """
    if module.kind == "band":
        return module
    if module.kind == "pin":
        return None
    return _translate_string(pres, module.string)  # type: ignore[arg-type]


# -- submodule dimension vectors ----------------------------------------------

_SUBSET_CAP = 22


def _closed_subsets(letters: tuple[Letter, ...], cyclic: bool) -> list[tuple[int, ...]]:
    """Position subsets closed under the arrow actions, as sorted tuples."""
    n = len(letters) if cyclic else len(letters) + 1
    if n > _SUBSET_CAP:
        raise PresentationError(f"too many positions ({n}) to enumerate submodules")
    edges = []  # (k, k') meaning k in S forces k' in S (0-based)
    for k, (_, eps) in enumerate(letters):
        nxt = (k + 1) % n if cyclic else k + 1
        if eps == 1:
            edges.append((k, nxt))
        else:
            edges.append((nxt, k))
    out = []
    for bits in range(1 << n):
        if all(not (bits >> a) & 1 or (bits >> b) & 1 for a, b in edges):
            out.append(tuple(k for k in range(n) if (bits >> k) & 1))
    return out


def submodule_dim_vectors(
    pres: AlgebraPresentation, module: ModuleDescriptor
) -> list[dict[str, int]]:
    """Dimension vectors of all submodules (with multiplicity of vectors).

    Submodules of string and simple band modules are the position subsets
    closed under the arrow actions; a pin adds the whole module on top of
    the submodules of its radical.
    """
    quiver = pres.quiver
    if module.kind == "string":
        verts = module.string.vertices(quiver)  # type: ignore[union-attr]
        subsets = _closed_subsets(module.string.letters, cyclic=False)  # type: ignore[union-attr]
    elif module.kind == "band":
        if module.jordan_size != 1:
            raise PresentationError("submodule model covers Jordan size 1 only")
        verts = module.band.vertices(quiver)  # type: ignore[union-attr]
        subsets = _closed_subsets(module.band.letters, cyclic=True)  # type: ignore[union-attr]
    else:
        rad = pin_radical_string(pres, module.pin)  # type: ignore[arg-type]
        inner = submodule_dim_vectors(
            pres, ModuleDescriptor("string", string=rad)
        )
        return inner + [dim_vector(pres, module)]
    out = []
    for subset in subsets:
        dims = {v: 0 for v in quiver.vertices}
        for k in subset:
            dims[verts[k]] += 1
        out.append(dims)
    return out
