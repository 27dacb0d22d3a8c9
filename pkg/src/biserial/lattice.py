"""Grothendieck-group vectors, torsion membership, and exact cone geometry.

``K0Vector`` lives in K0(proj), with the indecomposable projectives as basis;
dimension vectors of modules (plain dicts, as produced by
:func:`biserial.strings.dim_vector`) live in K0(fd).  The pairing between the
two makes every ``theta`` a linear form on modules, and membership in the
numerical torsion classes reduces to scanning the submodule dimension
vectors.  Cones are kept in exact rational arithmetic with an incremental
double-description ray enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .linalg import rank
from .presentation import AlgebraPresentation, Quiver
from .strings import ModuleDescriptor, dim_vector, submodule_dim_vectors

Coordinates = tuple[Fraction, ...]

# A dimension vector is a plain mapping vertex -> multiplicity of the simple.
DimVector = Mapping[str, int]


def _coerce_fraction(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


def _json_number(value: Fraction):
    if value.denominator == 1:
        return int(value)
    return str(value)


@dataclass(frozen=True)
class K0Vector:
    """An element of K0(proj A) in the basis of indecomposable projectives."""

    basis: tuple[str, ...]
    coords: Coordinates

    def __post_init__(self):
        if len(self.basis) != len(self.coords):
            raise ValueError("coordinate length does not match the basis")
        object.__setattr__(
            self, "coords", tuple(_coerce_fraction(c) for c in self.coords)
        )

    @staticmethod
    def zero(quiver: Quiver) -> "K0Vector":
        return K0Vector(tuple(quiver.vertices), (Fraction(0),) * len(quiver.vertices))

    @staticmethod
    def unit(quiver: Quiver, vertex: str) -> "K0Vector":
        """The class of the projective at ``vertex``."""
        if vertex not in quiver.vertices:
            raise ValueError(f"unknown vertex {vertex!r}")
        return K0Vector(
            tuple(quiver.vertices),
            tuple(Fraction(int(v == vertex)) for v in quiver.vertices),
        )

    @staticmethod
    def of(quiver: Quiver, coefficients: Mapping[str, object]) -> "K0Vector":
        unknown = set(coefficients) - set(quiver.vertices)
        if unknown:
            raise ValueError(f"unknown vertices {sorted(unknown)}")
        return K0Vector(
            tuple(quiver.vertices),
            tuple(_coerce_fraction(coefficients.get(v, 0)) for v in quiver.vertices),
        )

    def _check_same_basis(self, other: "K0Vector") -> None:
        if self.basis != other.basis:
            raise ValueError("vectors live over different bases")

    def __add__(self, other: "K0Vector") -> "K0Vector":
        self._check_same_basis(other)
        return K0Vector(
            self.basis, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "K0Vector") -> "K0Vector":
        self._check_same_basis(other)
        return K0Vector(
            self.basis, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "K0Vector":
        return K0Vector(self.basis, tuple(-a for a in self.coords))

    def scale(self, factor) -> "K0Vector":
        f = _coerce_fraction(factor)
        return K0Vector(self.basis, tuple(f * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.basis, self.coords))

    def to_json(self) -> dict:
        return {
            "basis": list(self.basis),
            "coords": [_json_number(c) for c in self.coords],
        }

    @staticmethod
    def from_json(data: Mapping) -> "K0Vector":
        return K0Vector(tuple(data["basis"]), tuple(data["coords"]))


def euler_pair(theta: K0Vector, dims: DimVector) -> Fraction:
    """<theta, [M]> = sum of theta_i * dim_i over the vertices."""
    unknown = set(dims) - set(theta.basis)
    if unknown:
        raise ValueError(f"dimension vector uses unknown vertices {sorted(unknown)}")
    lookup = dict(zip(theta.basis, theta.coords))
    return sum(
        (lookup[v] * Fraction(n) for v, n in dims.items()), start=Fraction(0)
    )


# -- numerical torsion membership ---------------------------------------------


@dataclass(frozen=True)
class Membership:
    """Flags for the numerical torsion classes attached to theta."""

    in_T: bool
    in_ovT: bool
    in_F: bool
    in_ovF: bool
    in_W: bool

    def to_json(self) -> dict:
        return {
            "in_T": self.in_T,
            "in_ovT": self.in_ovT,
            "in_F": self.in_F,
            "in_ovF": self.in_ovF,
            "in_W": self.in_W,
        }


def membership(
    pres: AlgebraPresentation, theta: K0Vector, module: ModuleDescriptor
) -> Membership:
    """Exact membership in T, ovT, F, ovF, W for a module and a weight.

    Submodule dimension vectors come from the closed-position-subset model,
    so quotients are handled as complements; T and F exclude the zero
    quotient/submodule, the closures include it.
    """
    dims = dim_vector(pres, module)
    whole = euler_pair(theta, dims)
    total = sum(dims.values())
    sub_values = []
    proper_quotient_values = []
    for sub in submodule_dim_vectors(pres, module):
        value = euler_pair(theta, sub)
        sub_values.append((value, sum(sub.values())))
        if sum(sub.values()) < total:
            proper_quotient_values.append(whole - value)
    max_sub = max(value for value, _ in sub_values)
    in_ovT = whole >= max_sub
    in_ovF = max_sub <= 0
    in_T = all(value > 0 for value in proper_quotient_values)
    in_F = all(value < 0 for value, total in sub_values if total > 0)
    return Membership(
        in_T=in_T,
        in_ovT=in_ovT,
        in_F=in_F,
        in_ovF=in_ovF,
        in_W=in_ovT and in_ovF,
    )


def wall_contains(
    pres: AlgebraPresentation, theta: K0Vector, module: ModuleDescriptor
) -> bool:
    """Whether theta lies on the wall of the module (theta-semistability)."""
    return membership(pres, theta, module).in_W


# -- exact cones ---------------------------------------------------------------


def _primitive(row: Sequence) -> tuple[int, ...]:
    fracs = [_coerce_fraction(x) for x in row]
    denominator = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * denominator) for f in fracs]
    content = 0
    for x in ints:
        content = gcd(content, x)
    if content > 1:
        ints = [x // content for x in ints]
    return tuple(ints)


def _dot(a: Sequence[Fraction], b: Sequence) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), start=Fraction(0))


def _combine(a: Sequence[Fraction], ca: Fraction, b: Sequence[Fraction], cb: Fraction):
    return tuple(ca * x + cb * y for x, y in zip(a, b))


def _active_rows(processed, vector):
    return [row for row in processed if _dot(row, vector) == 0]


def _extreme_rays(processed, rays, ambient, lineality_dim):
    """Keep exactly the extreme rays of {x : processed rows hold}.

    A nonzero point spans an extreme ray iff the constraints active at it
    cut out a two-dimensional subspace together with the lineality space.
    """
    target = ambient - lineality_dim - 1
    kept = {}
    for ray in rays:
        if all(x == 0 for x in ray):
            continue
        if rank(_active_rows(processed, ray)) != target:
            continue
        kept.setdefault(_primitive(ray), None)
    return [tuple(Fraction(x) for x in key) for key in kept]


def double_description(
    ambient: int,
    eq: Iterable[Sequence] = (),
    ineq: Iterable[Sequence] = (),
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Extreme rays and a lineality basis of {x : eq x = 0, ineq x >= 0}.

    Constraints are inserted one at a time; as long as the lineality space
    is not contained in the new hyperplane it is cut down directly, and
    afterwards rays are split with the exact-rank adjacency test.
    """
    lineality = [
        tuple(Fraction(int(i == j)) for j in range(ambient)) for i in range(ambient)
    ]
    rays: list[tuple[Fraction, ...]] = []
    processed: list[tuple[Fraction, ...]] = []
    pending: list[tuple[Fraction, ...]] = []
    for row in eq:
        frow = tuple(Fraction(x) for x in _primitive(row))
        pending.append(frow)
        pending.append(tuple(-x for x in frow))
    for row in ineq:
        pending.append(tuple(Fraction(x) for x in _primitive(row)))

    for row in pending:
        if all(x == 0 for x in row):
            continue
        pivot = next((l for l in lineality if _dot(row, l) != 0), None)
        if pivot is not None:
            value = _dot(row, pivot)
            if value < 0:
                pivot = tuple(-x for x in pivot)
                value = -value
            lineality = [
                _combine(l, Fraction(1), pivot, -_dot(row, l) / value)
                for l in lineality
                if l is not pivot and not all(x == 0 for x in l)
            ]
            lineality = [l for l in lineality if any(x != 0 for x in l)]
            rays = [
                _combine(r, Fraction(1), pivot, -_dot(row, r) / value) for r in rays
            ] + [pivot]
        else:
            values = [( _dot(row, r), r) for r in rays]
            plus = [r for value, r in values if value > 0]
            zero = [r for value, r in values if value == 0]
            minus = [(value, r) for value, r in values if value < 0]
            if minus:
                fresh = []
                for rp in plus:
                    vp = _dot(row, rp)
                    for vm, rm in minus:
                        both = [
                            r
                            for r in _active_rows(processed, rp)
                            if _dot(r, rm) == 0
                        ]
                        if rank(both) == ambient - len(lineality) - 2:
                            fresh.append(_combine(rm, vp, rp, -vm))
                rays = plus + zero + fresh
        processed.append(row)
        rays = [
            tuple(Fraction(x) for x in r)
            for r in _extreme_rays(processed, rays, ambient, len(lineality))
        ]

    ray_ints = sorted(_primitive(r) for r in rays)
    lin_ints = _lineality_basis(lineality, ambient)
    return ray_ints, lin_ints


def _lineality_basis(vectors, ambient) -> list[tuple[int, ...]]:
    """Reduce spanning vectors of a linear space to a canonical basis."""
    basis: list[list[Fraction]] = []
    for vec in vectors:
        v = [Fraction(x) for x in vec]
        for b in basis:
            lead = next(i for i, x in enumerate(b) if x != 0)
            if v[lead]:
                factor = v[lead] / b[lead]
                v = [x - factor * y for x, y in zip(v, b)]
        if any(x != 0 for x in v):
            basis.append(v)
    basis.sort(key=lambda b: next(i for i, x in enumerate(b) if x != 0))
    for i in reversed(range(len(basis))):
        lead = next(j for j, x in enumerate(basis[i]) if x != 0)
        for k in range(i):
            if basis[k][lead]:
                factor = basis[k][lead] / basis[i][lead]
                basis[k] = [x - factor * y for x, y in zip(basis[k], basis[i])]
    return [_primitive(b) for b in basis]


class ConeH:
    """A rational polyhedral cone given by equalities and inequalities.

    The ray/lineality description is computed once at construction and
    cached; all queries afterwards are exact evaluations.
    """

    def __init__(
        self, ambient: int, eq: Iterable[Sequence] = (), ineq: Iterable[Sequence] = ()
    ) -> None:
        self.ambient = int(ambient)
        self.eq = tuple(
            _primitive(row) for row in eq if any(Fraction(x) != 0 for x in row)
        )
        self.ineq = tuple(
            _primitive(row) for row in ineq if any(Fraction(x) != 0 for x in row)
        )
        for row in self.eq + self.ineq:
            if len(row) != self.ambient:
                raise ValueError("constraint length does not match the ambient space")
        rays, lineality = double_description(self.ambient, self.eq, self.ineq)
        self.rays: tuple[tuple[int, ...], ...] = tuple(rays)
        self.lineality: tuple[tuple[int, ...], ...] = tuple(lineality)

    def contains(self, point) -> bool:
        vec = _point_coords(point, self.ambient)
        return all(_dot(row, vec) == 0 for row in self.eq) and all(
            _dot(row, vec) >= 0 for row in self.ineq
        )

    def is_zero(self) -> bool:
        return not self.rays and not self.lineality

    def dim(self) -> int:
        return rank([list(r) for r in self.rays + self.lineality])

    def generators(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
        return self.rays, self.lineality

    def issubset(self, other: "ConeH") -> bool:
        if self.ambient != other.ambient:
            raise ValueError("cones live in different ambient spaces")
        points = list(self.rays)
        for l in self.lineality:
            points.append(l)
            points.append(tuple(-x for x in l))
        return all(other.contains(p) for p in points)

    def equivalent(self, other: "ConeH") -> bool:
        return self.issubset(other) and other.issubset(self)

    def to_json(self) -> dict:
        return {
            "eq": [list(r) for r in self.eq],
            "ineq": [list(r) for r in self.ineq],
            "rays": [list(r) for r in self.rays],
            "lineality": [list(r) for r in self.lineality],
        }

    @staticmethod
    def from_json(data: Mapping) -> "ConeH":
        ambient = data.get("ambient")
        if ambient is None:
            rows = list(data.get("eq", [])) + list(data.get("ineq", []))
            if not rows:
                raise ValueError("cannot infer the ambient dimension")
            ambient = len(rows[0])
        return ConeH(ambient, data.get("eq", []), data.get("ineq", []))


def _point_coords(point, ambient: int) -> list[Fraction]:
    if isinstance(point, K0Vector):
        vec = [Fraction(x) for x in point.coords]
    else:
        vec = [_coerce_fraction(x) for x in point]
    if len(vec) != ambient:
        raise ValueError("point length does not match the ambient space")
    return vec


def cone_intersect(a: ConeH, b: ConeH) -> ConeH:
    if a.ambient != b.ambient:
        raise ValueError("cones live in different ambient spaces")
    return ConeH(a.ambient, a.eq + b.eq, a.ineq + b.ineq)


def cone_contains(cone: ConeH, point) -> bool:
    return cone.contains(point)


def cone_rays(cone: ConeH):
    return cone.generators()


def cone_is_zero(cone: ConeH) -> bool:
    return cone.is_zero()


def cone_dim(cone: ConeH) -> int:
    return cone.dim()


def cone_from_generators(
    ambient: int, rays: Iterable[Sequence] = (), lineality: Iterable[Sequence] = ()
) -> ConeH:
    """The cone spanned by rays (nonnegatively) and lineality (linearly).

    The facet description is obtained by enumerating the rays of the polar
    cone, so the result round-trips through double description.
    """
    ray_rows = [_primitive(r) for r in rays]
    lin_rows = [_primitive(l) for l in lineality]
    polar_rays, polar_lineality = double_description(
        ambient, eq=lin_rows, ineq=ray_rows
    )
    return ConeH(ambient, eq=polar_lineality, ineq=polar_rays)


@dataclass(frozen=True)
class ConeUnion:
    """A finite union of cones, tested piecewise."""

    pieces: tuple[ConeH, ...]

    def __post_init__(self):
        ambients = {piece.ambient for piece in self.pieces}
        if len(ambients) > 1:
            raise ValueError("pieces live in different ambient spaces")

    def contains(self, point) -> bool:
        return any(piece.contains(point) for piece in self.pieces)

    def is_zero(self) -> bool:
        return all(piece.is_zero() for piece in self.pieces)

    def to_json(self) -> dict:
        return {"pieces": [piece.to_json() for piece in self.pieces]}

    @staticmethod
    def from_json(data: Mapping) -> "ConeUnion":
        return ConeUnion(tuple(ConeH.from_json(p) for p in data["pieces"]))
