"""Exact arithmetic in finite-dimensional special biserial quotients.

The basis of such an algebra consists of the paths that survive in the
monomial quotient, together with one socle class for every binomial
relation ``p = q`` (whose two sides are identified).  For this to be the
complete answer the binomial sides must be two-sided maximal nonzero paths
with distinct first and last arrows — the shape projective-injective
socles actually take — and the constructor validates exactly that,
rejecting anything else.

Products are computed by normalising the concatenated word: a surviving
word stands for itself, a word equal to one side of a binomial stands for
its socle class, and everything else is zero.  Elements are sparse
``{Path: Fraction}`` dictionaries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from biserial.presentation import (
    AlgebraPresentation,
    Path,
    PresentationError,
    assert_special_biserial,
    _based_cycles,
    _chain_step,
)

Element = dict[Path, Fraction]


class Algebra:
    """Basis-level arithmetic for a finite-dimensional presentation."""

    def __init__(self, pres: AlgebraPresentation) -> None:
        assert_special_biserial(pres)
        if _based_cycles(pres):
            raise PresentationError(
                f"{pres.name} has repeatable cycles, hence is infinite-dimensional; "
                "truncate it first"
            )
        self.presentation = pres
        self.quiver = pres.quiver
        # the binomial sides themselves vanish in the monomial completion, so
        # questions about them are asked in the quotient by zero relations only
        self._zero_only = AlgebraPresentation(
            pres.quiver,
            zero=pres.zero,
            nilpotency=pres.nilpotency,
            name=pres.name,
        )
        self._validate_pins()

        words: set[tuple[str, ...]] = set()
        cap = self._chain_cap()
        for a in self.quiver.arrows:
            names = (a.name,)
            if not pres.path_is_nonzero(names):
                continue
            while True:
                words.add(names)
                nxt = _chain_step(pres, names)
                if nxt is None:
                    break
                names += (nxt,)
                if len(names) > cap:
                    raise RuntimeError(
                        "nonzero-path enumeration exceeded its safety bound"
                    )

        # identify the two sides of each binomial with one socle class
        self._canonical: dict[tuple[str, ...], Path] = {}
        for p, q in pres.equal:
            rep = Path(min(p.arrows, q.arrows))
            self._canonical[p.arrows] = rep
            self._canonical[q.arrows] = rep
            words.discard(p.arrows)
            words.discard(q.arrows)
            words.add(rep.arrows)
        for w in words:
            self._canonical.setdefault(w, Path(w))

        self._pair_basis: dict[tuple[str, str], list[Path]] = {}
        basis: list[Path] = [Path.trivial(v) for v in self.quiver.vertices]
        for v in self.quiver.vertices:
            self._pair_basis[(v, v)] = [Path.trivial(v)]
        for w in sorted(words, key=lambda w: (len(w), w)):
            path = Path(w)
            basis.append(path)
            key = (self.quiver.word_source(w), self.quiver.word_target(w))
            self._pair_basis.setdefault(key, []).append(path)
        self.basis: tuple[Path, ...] = tuple(basis)
        self.dim = len(basis)

    def _chain_cap(self) -> int:
        pres = self.presentation
        bound = max(pres.max_relation_length(), pres.nilpotency or 0)
        return (len(self.quiver.arrows) + 1) * (bound + 2) + 16

    def _validate_pins(self) -> None:
        pres = self.presentation
        quiver = self.quiver
        alive = self._zero_only.path_is_nonzero
        all_sides = [side for pair in pres.equal for side in pair]
        seen_sources: set[str] = set()
        seen_targets: set[str] = set()
        seen_pairs: set[frozenset[tuple[str, ...]]] = set()
        for p, q in pres.equal:
            pair = frozenset((p.arrows, q.arrows))
            if pair in seen_pairs:
                continue
            seen_pairs.add(pair)
            if p.arrows == q.arrows:
                raise PresentationError(f"binomial relation {p} = {q} is trivial")
            if p.arrows[0] == q.arrows[0] or p.arrows[-1] == q.arrows[-1]:
                raise PresentationError(
                    f"sides of {p} = {q} must use distinct first and last arrows"
                )
            for side in (p, q):
                if not alive(side):
                    raise PresentationError(
                        f"side {side} of a binomial relation vanishes; "
                        "drop or rewrite the relation"
                    )
            # an extension of the identified class must die monomially on at
            # least one of the two sides, otherwise it is not a socle class
            tail = quiver.path_target(p)
            for b in quiver.out_arrows(tail):
                if alive(p.arrows + (b.name,)) and alive(q.arrows + (b.name,)):
                    raise PresentationError(
                        f"the class {p} = {q} extends to a nonzero path through "
                        f"{b.name}; socle classes must be maximal"
                    )
            head = quiver.path_source(p)
            for b in quiver.in_arrows(head):
                if alive((b.name,) + p.arrows) and alive((b.name,) + q.arrows):
                    raise PresentationError(
                        f"the class {p} = {q} extends to a nonzero path through "
                        f"{b.name}; socle classes must be maximal"
                    )
            if head in seen_sources or tail in seen_targets:
                raise PresentationError(
                    f"two binomial relations share the vertex of {p} = {q}"
                )
            seen_sources.add(head)
            seen_targets.add(tail)
        for outer in all_sides:
            for inner in all_sides:
                if inner is outer or len(inner) >= len(outer):
                    continue
                window = len(inner)
                for k in range(len(outer) - window + 1):
                    if outer.arrows[k : k + window] == inner.arrows:
                        raise PresentationError(
                            f"binomial side {inner} occurs inside {outer}; "
                            "such nested relations are not supported"
                        )

    # -- words and basis ----------------------------------------------------

    def normal_form(self, word: Path | Iterable[str]) -> Path | None:
        """The basis element a path represents, or None when it vanishes."""
        if isinstance(word, Path):
            if word.is_trivial:
                return word
            names = word.arrows
        else:
            names = tuple(word)
            if not names:
                raise ValueError("use Path.trivial for length-0 words")
        return self._canonical.get(names)

    def pair_basis(self, source: str, target: str) -> tuple[Path, ...]:
        """Basis of the span of paths running from ``source`` to ``target``."""
        return tuple(self._pair_basis.get((source, target), ()))

    def multiply_paths(self, x: Path, y: Path) -> Path | None:
        if self.quiver.path_target(x) != self.quiver.path_source(y):
            return None
        if x.is_trivial:
            return self.normal_form(y)
        if y.is_trivial:
            return self.normal_form(x)
        return self.normal_form(x.arrows + y.arrows)

    # -- sparse elements ----------------------------------------------------

    def element(self, path: Path, coefficient: Fraction | int = 1) -> Element:
        return {path: Fraction(coefficient)}

    def add(self, *terms: Mapping[Path, Fraction]) -> Element:
        out: Element = {}
        for term in terms:
            for path, c in term.items():
                val = out.get(path, Fraction(0)) + c
                if val:
                    out[path] = val
                else:
                    out.pop(path, None)
        return out

    def scale(self, c: Fraction | int, term: Mapping[Path, Fraction]) -> Element:
        c = Fraction(c)
        if not c:
            return {}
        return {path: c * val for path, val in term.items()}

    def mul(
        self, left: Mapping[Path, Fraction], right: Mapping[Path, Fraction]
    ) -> Element:
        out: Element = {}
        for x, cx in left.items():
            for y, cy in right.items():
                z = self.multiply_paths(x, y)
                if z is None:
                    continue
                val = out.get(z, Fraction(0)) + cx * cy
                if val:
                    out[z] = val
                else:
                    out.pop(z, None)
        return out

    def invert_local(self, vertex: str, x: Mapping[Path, Fraction]) -> Element | None:
        """Inverse of an element of the local ring at a vertex, if a unit.

        Units are exactly the elements whose coefficient on the lazy path is
        nonzero; the rest of the element is nilpotent, so a finite geometric
        series inverts it.
        """
        e = Path.trivial(vertex)
        c0 = x.get(e, Fraction(0))
        if not c0:
            return None
        # x = c0 (e - n) with n nilpotent
        n = {p: -c / c0 for p, c in x.items() if p != e}
        inv = self.element(e)
        power = dict(n)
        while power:
            inv = self.add(inv, power)
            power = self.mul(power, n)
        return self.scale(Fraction(1, 1) / c0, inv)
