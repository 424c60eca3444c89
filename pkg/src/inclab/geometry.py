"""Exact geometry of points, integer vectors, and affine flats in R^d.

All coordinates are exact rationals (``fractions.Fraction``) or arbitrary
precision integers; nothing here ever touches floating point.  A flat is
stored by a consistent linear system ``A x = b``, never by a parametrization
and never in a canonical form: incidence tests and intersections are single
elimination passes, and set equality is decided by mutual containment.

Everything in this module is an immutable value after construction and all
operations are pure functions, so objects can be shared freely across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from random import Random
from typing import Iterable, Sequence

from . import linalg
from .errors import DegenerateRandomness, InvalidInput

RETRY_BUDGET = 32
EXTENSION_BOX = 10**6  # generic directions are drawn from [-B, B]^d


def _fractions(coords: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class IntVector:
    """An integer coordinate vector (lattice point / hyperplane normal)."""

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        cs = tuple(int(c) for c in coords)
        if len(cs) < 1:
            raise InvalidInput("vector needs at least one coordinate")
        object.__setattr__(self, "coords", cs)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def content(self) -> int:
        """gcd of all coordinates (0 for the zero vector)."""
        g = 0
        for c in self.coords:
            g = gcd(g, c)
        return g

    def sign_canonical(self) -> "IntVector":
        """The representative of {v, -v} whose first nonzero entry is > 0."""
        for c in self.coords:
            if c != 0:
                if c < 0:
                    return IntVector(tuple(-x for x in self.coords))
                return self
        return self

    def dot(self, other: "RatPoint | IntVector") -> Fraction | int:
        other_coords = other.coords
        if len(other_coords) != len(self.coords):
            raise InvalidInput("dimension mismatch in dot product")
        return sum(a * b for a, b in zip(self.coords, other_coords))


@dataclass(frozen=True)
class RatPoint:
    """A point of R^d with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        cs = _fractions(coords)
        if len(cs) < 1:
            raise InvalidInput("point needs at least one coordinate")
        object.__setattr__(self, "coords", cs)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def int_coords(self) -> tuple[int, ...] | None:
        """Integer view of the coordinates, or None if any is non-integral."""
        if all(c.denominator == 1 for c in self.coords):
            return tuple(c.numerator for c in self.coords)
        return None


def is_primitive(v: IntVector) -> bool:
    """True iff the coordinates of ``v`` have gcd 1.

    Equivalently: v is not a proper integer multiple of a shorter lattice
    vector.
    """
    if v.is_zero():
        raise InvalidInput("the zero vector is neither primitive nor imprimitive")
    return v.content() == 1


@dataclass(frozen=True)
class Flat:
    """An affine subspace of R^d given by a consistent system ``A x = b``.

    ``dim`` is cached at construction and always equals
    ``ambient_dim - rank(A)``.  An inconsistent system is rejected here;
    empty intersections are reported by :func:`intersect` as ``None``,
    never as a Flat.
    """

    ambient_dim: int
    equations: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    dim: int

    def __init__(self, ambient_dim: int, equations: Sequence[Sequence], rhs: Sequence):
        if ambient_dim < 1:
            raise InvalidInput("ambient dimension must be positive")
        eqs = tuple(_fractions(row) for row in equations)
        b = _fractions(rhs)
        if len(eqs) != len(b):
            raise InvalidInput("equation count does not match right-hand side")
        for row in eqs:
            if len(row) != ambient_dim:
                raise InvalidInput("equation width does not match ambient dimension")
        if eqs:
            solved = linalg.solve_affine([list(r) for r in eqs], list(b))
            if solved is None:
                raise InvalidInput("inconsistent system does not define a flat")
            d = ambient_dim - linalg.rank([list(r) for r in eqs])
        else:
            d = ambient_dim
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "equations", eqs)
        object.__setattr__(self, "rhs", b)
        object.__setattr__(self, "dim", d)

    def contains(self, p: RatPoint) -> bool:
        return contains(self, p)

    def solution(self) -> tuple[RatPoint, list[list[Fraction]]]:
        """One point on the flat plus a basis of its direction space."""
        if not self.equations:
            origin = RatPoint([Fraction(0)] * self.ambient_dim)
            basis = [
                [Fraction(int(i == j)) for j in range(self.ambient_dim)]
                for i in range(self.ambient_dim)
            ]
            return origin, basis
        solved = linalg.solve_affine(
            [list(r) for r in self.equations], list(self.rhs)
        )
        assert solved is not None  # construction guarantees consistency
        particular, basis = solved
        return RatPoint(particular), basis

    def integer_equations(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Each equation rescaled to a primitive integer coefficient row."""
        return [
            linalg.integer_row_and_offset(row, c)
            for row, c in zip(self.equations, self.rhs)
        ]


def make_hyperplane(normal: IntVector, offset: int | Fraction) -> Flat:
    """The hyperplane ``{x : <normal, x> = offset}``."""
    if normal.is_zero():
        raise InvalidInput("hyperplane normal must be nonzero")
    return Flat(
        normal.dim,
        [tuple(Fraction(c) for c in normal.coords)],
        [Fraction(offset)],
    )


def contains(f: Flat, p: RatPoint) -> bool:
    """Exact incidence test: does ``p`` satisfy every equation of ``f``?"""
    if f.ambient_dim != p.dim:
        raise InvalidInput(
            f"ambient dimension mismatch: flat in R^{f.ambient_dim}, point in R^{p.dim}"
        )
    for row, c in zip(f.equations, f.rhs):
        if sum(a * x for a, x in zip(row, p.coords)) != c:
            return False
    return True


def intersect(f1: Flat, f2: Flat) -> Flat | None:
    """Intersection of two flats; ``None`` when it is empty.

    The stacked system is reduced by exact elimination, so the dimension of
    the result is exactly ``d - rank`` of the combined constraints.
    """
    if f1.ambient_dim != f2.ambient_dim:
        raise InvalidInput("flats live in different ambient dimensions")
    stacked = [list(r) for r in f1.equations] + [list(r) for r in f2.equations]
    rhs = list(f1.rhs) + list(f2.rhs)
    if not stacked:
        return Flat(f1.ambient_dim, [], [])
    if linalg.solve_affine(stacked, rhs) is None:
        return None
    return Flat(f1.ambient_dim, stacked, rhs)


def flats_equal(f1: Flat, f2: Flat) -> bool:
    """Set equality, decided by mutual containment.

    The row spaces must coincide (equal ranks, and stacking adds no rank)
    and the flats must share a solution point.  This avoids comparing any
    canonical forms.
    """
    if f1.ambient_dim != f2.ambient_dim:
        raise InvalidInput("flats live in different ambient dimensions")
    r1 = f1.ambient_dim - f1.dim
    r2 = f2.ambient_dim - f2.dim
    if r1 != r2:
        return False
    stacked = [list(r) for r in f1.equations] + [list(r) for r in f2.equations]
    if stacked and linalg.rank(stacked) != r1:
        return False
    point, _ = f1.solution()
    return contains(f2, point)


# ---------------------------------------------------------------------------
# Complex hyperplanes and the coordinatewise real embedding
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComplexRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __add__(self, other: "ComplexRational") -> "ComplexRational":
        return ComplexRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexRational") -> "ComplexRational":
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "ComplexRational") -> "ComplexRational":
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


@dataclass(frozen=True)
class ComplexHyperplane:
    """The hyperplane ``{z in C^d : a_1 z_1 + ... + a_d z_d = b}``."""

    a: tuple[ComplexRational, ...]
    b: ComplexRational

    def __init__(self, a: Sequence[ComplexRational], b: ComplexRational):
        coeffs = tuple(a)
        if not coeffs:
            raise InvalidInput("complex hyperplane needs at least one coefficient")
        if all(c.is_zero() for c in coeffs):
            raise InvalidInput("complex hyperplane needs a nonzero coefficient")
        object.__setattr__(self, "a", coeffs)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return len(self.a)

    def contains(self, point: Sequence[ComplexRational]) -> bool:
        if len(point) != len(self.a):
            raise InvalidInput("dimension mismatch in complex incidence test")
        total = ComplexRational(0, 0)
        for coeff, z in zip(self.a, point):
            total = total + coeff * z
        return total.re == self.b.re and total.im == self.b.im


def embed_complex_point(point: Sequence[ComplexRational]) -> RatPoint:
    """The real image of a complex point: interleaved (re, im) coordinates."""
    coords: list[Fraction] = []
    for z in point:
        coords.append(z.re)
        coords.append(z.im)
    return RatPoint(coords)


def embed_complex_hyperplane(h: ComplexHyperplane) -> Flat:
    """Real image of a complex hyperplane: a (2d-2)-flat in R^{2d}.

    Splitting ``sum a_j z_j = b`` into real and imaginary parts gives the
    two defining equations.  Membership is preserved in both directions:
    a complex point lies on ``h`` exactly when its real image lies on the
    returned flat.
    """
    d = h.dim
    row_re: list[Fraction] = []
    row_im: list[Fraction] = []
    for coeff in h.a:
        row_re.extend([coeff.re, -coeff.im])
        row_im.extend([coeff.im, coeff.re])
    return Flat(2 * d, [row_re, row_im], [h.b.re, h.b.im])


# ---------------------------------------------------------------------------
# Generic extensions
# ---------------------------------------------------------------------------


def generic_extension(
    h: Flat,
    target_dim: int,
    ambient_dim: int,
    seed: int | Random,
    within: Flat | None = None,
    retry_budget: int = RETRY_BUDGET,
) -> Flat:
    """A random ``target_dim``-flat containing ``h``.

    Extension directions are drawn from a large integer box with seeded
    randomness.  When ``within`` is given (a flat containing ``h``), the
    draw is accepted only if the extension meets ``within`` exactly in
    ``h``; degenerate draws are retried, never emitted.
    """
    if ambient_dim != h.ambient_dim:
        raise InvalidInput("flat does not live in the stated ambient dimension")
    if not (h.dim < target_dim < ambient_dim):
        raise InvalidInput(
            f"target dimension must satisfy {h.dim} < k < {ambient_dim}, got {target_dim}"
        )
    if within is not None:
        if within.ambient_dim != ambient_dim:
            raise InvalidInput("guard flat lives in a different ambient dimension")
        meet = intersect(h, within)
        if meet is None or not flats_equal(meet, h):
            raise InvalidInput("guard flat must contain the flat being extended")
    rng = seed if isinstance(seed, Random) else Random(seed)
    base_point, base_dirs = h.solution()
    extra = target_dim - h.dim
    for _ in range(retry_budget):
        directions = [list(v) for v in base_dirs]
        for _ in range(extra):
            directions.append(
                [
                    Fraction(rng.randint(-EXTENSION_BOX, EXTENSION_BOX))
                    for _ in range(ambient_dim)
                ]
            )
        if linalg.rank(directions) != target_dim:
            continue
        normal_rows = linalg.nullspace(directions)
        rhs = [
            sum(a * x for a, x in zip(row, base_point.coords)) for row in normal_rows
        ]
        candidate = Flat(ambient_dim, normal_rows, rhs)
        if candidate.dim != target_dim:
            continue
        if within is not None:
            meet = intersect(candidate, within)
            if meet is None or not flats_equal(meet, h):
                continue
        return candidate
    raise DegenerateRandomness(
        f"no verified generic extension after {retry_budget} draws"
    )


# ---------------------------------------------------------------------------
# Collinearity
# ---------------------------------------------------------------------------


def find_collinear_triple(
    points: Sequence[RatPoint],
) -> tuple[int, int, int] | None:
    """Indices of three collinear points, or ``None`` if no triple exists.

    Exhaustive over all triples: for each anchor, directions to later points
    are reduced to a primitive representative; a repeated direction at one
    anchor is exactly a collinear triple through it, and every collinear
    triple repeats a direction at its lowest-index point.
    """
    n = len(points)
    for i in range(n):
        seen: dict[tuple[int, ...], int] = {}
        pi = points[i].coords
        for j in range(i + 1, n):
            delta = [a - b for a, b in zip(points[j].coords, pi)]
            key = tuple(linalg.clear_denominators(delta))
            if all(v == 0 for v in key):
                continue  # duplicate point: not a direction
            if key in seen:
                return (i, seen[key], j)
            seen[key] = j
    return None
