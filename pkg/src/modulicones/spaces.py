"""Boundary-divisor combinatorics of partially symmetrized pointed rational curves.

``SpaceId(n, m)`` denotes the quotient of the moduli space of stable
n-pointed rational curves by the symmetric group permuting the last ``n - m``
marked points; the first ``m`` points stay distinguished.  ``m = n`` and
``m = n - 1`` both describe the unquotiented space (permuting one point, or
none, does nothing).

A boundary divisor of such a space is the closure of the locus of curves with
two components.  It is recorded by a `BoundaryLabel`: how many marked points
sit on one component (``size``) together with which distinguished points are
among them (``marks``).  The same divisor can be named from either component,
so labels come in mirror pairs ``(size, marks)`` / ``(n - size, complement)``;
`canonical_label` picks the smaller ``size``, breaking ties by fewer marks and
then lexicographic marks.  That graded tie-break is what makes the computed
coordinate vectors match the ordered bases used throughout.

The divisor-class spaces are handled through `relations_and_basis`: for
``m <= 1`` the boundary classes are a basis; ``m = 2`` has one relation and
``m = 3`` has three, and `express_in_basis` reduces any formal boundary sum
modulo those relations.  Classes are kept in the "b" normalization, where the
class of index ``n - 2`` --- the branch divisor of the quotient map, over
which the symmetrization is simply ramified --- absorbs a factor of one half.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .linalg import Vec, solve, vec

FormalSum = Mapping["BoundaryLabel", Fraction]


@dataclass(frozen=True)
class SpaceId:
    """The quotient of n-pointed genus-zero moduli keeping ``m`` points marked."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValueError("n >= 4 required")
        if not 0 <= self.m <= self.n:
            raise ValueError(f"m must lie in 0..{self.n}, got {self.m}")

    @property
    def dim(self) -> int:
        return self.n - 3

    @property
    def is_fully_pointed(self) -> bool:
        return self.m >= self.n - 1

    @property
    def distinguished(self) -> frozenset[int]:
        return frozenset(range(1, self.m + 1))

    def __str__(self) -> str:
        return f"X({self.n},{self.m})"


def fully_pointed(n: int) -> SpaceId:
    return SpaceId(n, n)


@dataclass(frozen=True)
class BoundaryLabel:
    """Canonical name (size, marks) of a boundary divisor; see module docs."""

    size: int
    marks: frozenset[int]

    @property
    def key(self) -> tuple:
        return (self.size, len(self.marks), tuple(sorted(self.marks)))

    def __str__(self) -> str:
        if not self.marks:
            return f"D{self.size}"
        return f"D{self.size}_" + "".join(str(x) for x in sorted(self.marks))


def _is_valid(s: SpaceId, size: int, marks: frozenset[int]) -> bool:
    return (
        2 <= size <= s.n - 2
        and marks <= s.distinguished
        and len(marks) <= size
        and size - len(marks) <= s.n - s.m
        and s.m - len(marks) <= s.n - size
    )


def canonical_label(s: SpaceId, size: int, marks: Iterable[int]) -> BoundaryLabel:
    """The canonical representative among the label and its mirror."""
    marks = frozenset(marks)
    if not _is_valid(s, size, marks):
        raise ValueError(f"no boundary divisor ({size}, {sorted(marks)}) on {s}")
    a = BoundaryLabel(size, marks)
    b = BoundaryLabel(s.n - size, s.distinguished - marks)
    return a if a.key <= b.key else b


@lru_cache(maxsize=None)
def enumerate_boundaries(s: SpaceId) -> tuple[BoundaryLabel, ...]:
    """All boundary labels of the space, canonical and sorted."""
    out = set()
    for size in range(2, s.n - 1):
        for k in range(0, min(s.m, size) + 1):
            for marks in itertools.combinations(range(1, s.m + 1), k):
                fs = frozenset(marks)
                if _is_valid(s, size, fs):
                    out.add(canonical_label(s, size, fs))
    return tuple(sorted(out, key=lambda l: l.key))


@lru_cache(maxsize=None)
def _boundary_index(s: SpaceId) -> dict[BoundaryLabel, int]:
    return {label: i for i, label in enumerate(enumerate_boundaries(s))}


def sum_to_vector(s: SpaceId, formal: FormalSum) -> Vec:
    idx = _boundary_index(s)
    row = [Fraction(0)] * len(idx)
    for label, coeff in formal.items():
        row[idx[label]] += Fraction(coeff)
    return tuple(row)


# --------------------------------------------------------------------------
# relations between boundary classes
# --------------------------------------------------------------------------


def keel_relations(n: int) -> list[Vec]:
    """An independent spanning set of the relations among the boundary
    divisors of the fully pointed space, as vectors over its label list.

    Two four-point partition classes agree whenever they share a cross-ratio
    degeneration; the returned family fixes points 1, 2 and runs over the
    remaining choices, which is well known to cut the boundary count down to
    the rank of the divisor-class space.
    """
    s = fully_pointed(n)

    def partition_sum(inside: tuple[int, int], outside: tuple[int, int]) -> dict:
        rest = [x for x in range(1, n + 1) if x not in inside and x not in outside]
        acc: dict[BoundaryLabel, Fraction] = defaultdict(Fraction)
        for k in range(len(rest) + 1):
            for extra in itertools.combinations(rest, k):
                members = frozenset(inside) | frozenset(extra)
                acc[canonical_label(s, len(members), members)] += 1
        return acc

    relations = []
    for i, j in itertools.combinations(range(3, n + 1), 2):
        a = partition_sum((1, 2), (i, j))
        b = partition_sum((1, i), (2, j))
        relations.append(_sub_sums(s, a, b))
    for k in range(4, n + 1):
        a = partition_sum((1, 3), (2, k))
        b = partition_sum((1, k), (2, 3))
        relations.append(_sub_sums(s, a, b))
    return relations


def _sub_sums(s: SpaceId, a: FormalSum, b: FormalSum) -> Vec:
    out: dict[BoundaryLabel, Fraction] = defaultdict(Fraction, {k: Fraction(v) for k, v in a.items()})
    for label, coeff in b.items():
        out[label] -= coeff
    return sum_to_vector(s, out)


def _m2_relation_raw(n: int) -> Vec:
    """The single relation of an m = 2 space over its raw label list.

    In b-normalized coordinates it reads
    ``sum (n-i)(n-i-1) b_i == sum (i-1)(n-i-1) b*_i``; the raw vector halves
    the index n-2 coefficient of the unstarred family accordingly.
    """
    s = SpaceId(n, 2)
    acc: dict[BoundaryLabel, Fraction] = defaultdict(Fraction)
    for i in range(2, n - 1):
        wt = Fraction((n - i) * (n - i - 1))
        if i == n - 2:
            wt /= 2
        acc[canonical_label(s, i, {1, 2})] += wt
        acc[canonical_label(s, i, {1})] -= (i - 1) * (n - i - 1)
    return sum_to_vector(s, acc)


def _m3_relations_raw(n: int) -> list[Vec]:
    """The three relations of an m = 3 space over its raw label list."""
    s = SpaceId(n, 3)

    def add(acc, size, marks, coeff):
        acc[canonical_label(s, size, marks)] += coeff

    r1: dict[BoundaryLabel, Fraction] = defaultdict(Fraction)
    r2: dict[BoundaryLabel, Fraction] = defaultdict(Fraction)
    for i in range(2, n - 1):
        add(r1, i, {1, 2}, n - i - 1)
        add(r1, i, {1, 3}, -(n - i - 1))
        add(r2, i, {1, 3}, n - i - 1)
        add(r2, i, {2, 3}, -(n - i - 1))
    r3: dict[BoundaryLabel, Fraction] = defaultdict(Fraction)
    for i in range(3, n - 1):
        wt = Fraction((n - i) * (n - i - 1))
        if i == n - 2:
            # The fully marked label of index n-2 mirrors to the locus where
            # the two remaining points collide, a half class as in the m = 2
            # relation.
            wt /= 2
        add(r3, i, {1, 2, 3}, wt)
        add(r3, i, {1, 3}, -(i - 2) * (n - i - 1))
    for i in range(2, n - 2):
        add(r3, i, {1, 2}, (n - i - 1) * (n - i - 2))
        add(r3, i, {1}, -(i - 1) * (n - i - 2))
    return [sum_to_vector(s, r) for r in (r1, r2, r3)]


_M3_EXCLUDED_MARKS = ({1, 2}, {1, 3}, {2, 3})


@dataclass(frozen=True)
class BasisSpec:
    """Ordered basis of the divisor-class space, plus the relations (as
    vectors over the full boundary-label list) that were quotiented out."""

    space: SpaceId
    ordered_basis: tuple[str, ...]
    relations: tuple[Vec, ...]
    boundaries: tuple[BoundaryLabel, ...]


@lru_cache(maxsize=None)
def relations_and_basis(s: SpaceId) -> BasisSpec:
    if s.m > 3:
        raise ValueError(
            f"no boundary basis for {s}: with more than three distinguished "
            "points the boundary classes stop generating the effective cone"
        )
    boundaries = enumerate_boundaries(s)
    if s.n == 4 and s.m == 3:
        # Fully pointed projective line: the three boundary points are all
        # rationally equivalent, leaving a single class.
        r1, r2, _ = _m3_relations_raw(4)
        return BasisSpec(s, (str(boundaries[0]),), (r1, r2), boundaries)
    if s.m == 0:
        names = tuple(f"b{i}" for i in range(2, s.n // 2 + 1))
        return BasisSpec(s, names, (), boundaries)
    if s.m == 1:
        names = tuple(f"b{i}" for i in range(2, s.n - 1))
        return BasisSpec(s, names, (), boundaries)
    if s.m == 2:
        names = tuple(f"b{i}" for i in range(3, s.n - 1))
        names += tuple(f"b*{i}" for i in range(2, s.n - 1))
        return BasisSpec(s, names, (_m2_relation_raw(s.n),), boundaries)
    excluded = {canonical_label(s, 2, marks) for marks in _M3_EXCLUDED_MARKS}
    names = tuple(str(l) for l in boundaries if l not in excluded)
    return BasisSpec(s, names, tuple(_m3_relations_raw(s.n)), boundaries)


def picard_number(s: SpaceId) -> int:
    if s.m <= 3:
        return len(relations_and_basis(s).ordered_basis)
    if s.is_fully_pointed:
        return 2 ** (s.n - 1) - 1 - s.n * (s.n - 1) // 2
    return len(enumerate_boundaries(s)) - _relation_rank(s)


def _relation_rank(s: SpaceId) -> int:
    # General-m fallback: push the fully pointed relations down and measure.
    from .linalg import rank

    full = fully_pointed(s.n)
    rows = [
        sum_to_vector(s, quotient_pushforward_sum(full, _vector_to_sum(full, r), s))
        for r in keel_relations(s.n)
    ]
    return rank(rows)


def _vector_to_sum(s: SpaceId, row: Sequence) -> dict[BoundaryLabel, Fraction]:
    return {
        label: Fraction(c)
        for label, c in zip(enumerate_boundaries(s), row, strict=True)
        if c != 0
    }


# --------------------------------------------------------------------------
# divisor and curve classes
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DivisorClass:
    """Exact coordinates in the space's ordered divisor basis."""

    space: SpaceId
    coords: Vec

    def __post_init__(self) -> None:
        if len(self.coords) != picard_number(self.space):
            raise ValueError(
                f"{self.space} classes have {picard_number(self.space)} coordinates,"
                f" got {len(self.coords)}"
            )


@dataclass(frozen=True)
class CurveClass:
    """Exact coordinates in the dual of the space's ordered divisor basis."""

    space: SpaceId
    coords: Vec

    def __post_init__(self) -> None:
        if len(self.coords) != picard_number(self.space):
            raise ValueError(
                f"{self.space} curve classes have {picard_number(self.space)}"
                f" coordinates, got {len(self.coords)}"
            )


def pair(divisor: DivisorClass, curve: CurveClass) -> Fraction:
    """Intersection number, read off coordinatewise in dual bases."""
    if divisor.space != curve.space:
        raise ValueError("classes live on different spaces")
    return sum(a * b for a, b in zip(divisor.coords, curve.coords))


# --------------------------------------------------------------------------
# expressing boundary sums in a basis
# --------------------------------------------------------------------------


def _class_slot(s: SpaceId, label: BoundaryLabel) -> tuple[str, int]:
    """Which named class family a canonical label belongs to.

    For m <= 1 every label is some ``B_k``; for m = 2 the labels split into
    the ``B_k`` family (marks {1,2} or, mirrored, the empty set) and the
    starred family ``b*_k`` (marks {1} or, mirrored, {2}).
    """
    if s.m == 0:
        return "b", label.size
    if s.m == 1:
        return "b", label.size if label.marks else s.n - label.size
    if s.m == 2:
        if label.marks == frozenset({1, 2}):
            return "b", label.size
        if not label.marks:
            return "b", s.n - label.size
        if label.marks == frozenset({1}):
            return "b*", label.size
        return "b*", s.n - label.size
    raise AssertionError(f"no class families on {s}")


def express_in_basis(s: SpaceId, formal: FormalSum) -> DivisorClass:
    """Reduce a formal sum of boundary labels to basis coordinates.

    The sum is first b-normalized (index n-2 carries the half), then the
    relations are used to eliminate the non-basis classes: b_2 for m = 2, the
    three two-mark size-2 labels for m = 3.
    """
    n = s.n
    if s.m > 3:
        raise ValueError(f"no boundary basis for {s}")
    spec = relations_and_basis(s)
    if s.m <= 1:
        hi = n // 2 if s.m == 0 else n - 2
        coords = [Fraction(0)] * (hi - 1)
        for label, coeff in formal.items():
            _, k = _class_slot(s, label)
            coords[k - 2] += Fraction(coeff)
        # b-normalization: the branch-divisor index is n-2, which for m = 0
        # folds to index 2.
        coords[0 if s.m == 0 else n - 4] *= 2
        return DivisorClass(s, tuple(coords))
    if s.m == 2:
        b = [Fraction(0)] * (n - 3)  # b_2 .. b_{n-2}
        star = [Fraction(0)] * (n - 3)  # b*_2 .. b*_{n-2}
        for label, coeff in formal.items():
            family, k = _class_slot(s, label)
            (b if family == "b" else star)[k - 2] += Fraction(coeff)
        b[n - 4] *= 2
        # Eliminate b_2 through the single relation.
        t = b[0] / ((n - 2) * (n - 3))
        for i in range(3, n - 1):
            b[i - 2] -= t * (n - i) * (n - i - 1)
            star[i - 2] += t * (i - 1) * (n - i - 1)
        star[0] += t * 1 * (n - 3)
        return DivisorClass(s, tuple(b[1:] + star))
    # m == 3: solve for the multiples of the three relations that clear the
    # excluded labels, then read off the remaining coordinates.
    if n == 4:
        return DivisorClass(s, (sum(Fraction(c) for c in formal.values()),))
    boundaries = spec.boundaries
    idx = _boundary_index(s)
    row = list(sum_to_vector(s, formal))
    excluded = [idx[canonical_label(s, 2, marks)] for marks in _M3_EXCLUDED_MARKS]
    matrix = [[rel[e] for rel in spec.relations] for e in excluded]
    target = [-row[e] for e in excluded]
    t = solve(matrix, target)
    if t is None:
        raise AssertionError("relation rows no longer clear the excluded labels")
    for coeff, rel in zip(t, spec.relations):
        row = [x + coeff * y for x, y in zip(row, rel)]
    assert all(row[e] == 0 for e in excluded)
    # The double-undistinguished label is carried as a half class, as for
    # smaller m; its coordinate doubles when read against that basis vector.
    row[idx[canonical_label(s, 2, ())]] *= 2
    keep = [i for i in range(len(boundaries)) if i not in excluded]
    return DivisorClass(s, tuple(row[i] for i in keep))


def boundary_class(s: SpaceId, label: BoundaryLabel) -> DivisorClass:
    return express_in_basis(s, {label: Fraction(1)})


def b_normalize(s: SpaceId, coords: Sequence) -> Vec:
    """Coordinates against {B_i} -> coordinates against {b_i} (double the
    index n-2 entry; no-op where no unstarred family exists)."""
    return _renormalize(s, coords, 2)


def b_denormalize(s: SpaceId, coords: Sequence) -> Vec:
    """Inverse of `b_normalize` (halve the index n-2 entry)."""
    return _renormalize(s, coords, Fraction(1, 2))


def _renormalize(s: SpaceId, coords: Sequence, factor) -> Vec:
    row = list(vec(coords))
    if len(row) != picard_number(s):
        raise ValueError(f"expected {picard_number(s)} coordinates")
    if s.m > 3 or (s.n == 4 and s.m >= 2):
        return tuple(row)
    pos = {0: 0, 1: s.n - 4, 2: s.n - 5, 3: 0}[s.m]
    row[pos] *= factor
    return tuple(row)


# --------------------------------------------------------------------------
# quotient pushforward and forgetful pullback
# --------------------------------------------------------------------------


def _lift_to_pointed(src: SpaceId, label: BoundaryLabel) -> frozenset[int]:
    """A representative subset of {1..n} over the label, filling the
    undistinguished slots with the smallest free symmetrized points."""
    free = iter(range(src.m + 1, src.n + 1))
    extra = frozenset(itertools.islice(free, label.size - len(label.marks)))
    return label.marks | extra


def _pushforward_degree(s: SpaceId, members: frozenset[int]) -> Fraction:
    """Degree with which the pointed boundary divisor of the subset
    ``members`` maps onto its image in ``s``.

    The count is: permutations of the undistinguished points preserving the
    unordered side pair, divided by those that act trivially on the divisor.
    A side consisting of exactly two undistinguished points is rigid -- its
    transposition moves nothing -- and for m = 0 an even split can also be
    swapped wholesale.
    """
    n, dist = s.n, s.distinguished
    a = len(members - dist)
    b = (n - len(members)) - (s.m - len(members & dist))
    stab = factorial(a) * factorial(b)
    if s.m == 0 and 2 * len(members) == n:
        stab *= 2
    trivial = 1
    if len(members) == 2 and a == 2:
        trivial *= 2
    if n - len(members) == 2 and b == 2:
        trivial *= 2
    if s.m == 0 and n == 4:
        trivial *= 2  # the wholesale swap of a 2|2 split is also trivial
    return Fraction(stab, trivial)


def quotient_pushforward_sum(src: SpaceId, formal: FormalSum, dst: SpaceId) -> dict[BoundaryLabel, Fraction]:
    """Push a formal boundary sum along the further symmetrization map."""
    if dst.n != src.n or dst.m > src.m:
        raise ValueError(f"no symmetrization map {src} -> {dst}")
    out: dict[BoundaryLabel, Fraction] = defaultdict(Fraction)
    for label, coeff in formal.items():
        members = _lift_to_pointed(src, label)
        deg = _pushforward_degree(dst, members) / _pushforward_degree(src, members)
        image = canonical_label(dst, len(members), members & dst.distinguished)
        out[image] += Fraction(coeff) * deg
    return dict(out)


def quotient_pushforward(src: SpaceId, formal: FormalSum, dst: SpaceId) -> DivisorClass:
    return express_in_basis(dst, quotient_pushforward_sum(src, formal, dst))


def forgetful_pullback_sum(src: SpaceId, formal: FormalSum, dst: SpaceId) -> dict[BoundaryLabel, Fraction]:
    """Pull a formal boundary sum back along the map forgetting the
    distinguished points of ``dst`` beyond those of ``src``.

    One forgotten point at a time: a boundary divisor pulls back to the sum
    of the two boundary divisors distributing the extra point over the two
    components.
    """
    if dst.n - src.n != dst.m - src.m or dst.n < src.n:
        raise ValueError(f"no point-forgetting map {dst} -> {src}")
    cur_space, cur = src, dict(formal)
    while cur_space.n < dst.n:
        bigger = SpaceId(cur_space.n + 1, cur_space.m + 1)
        new_point = bigger.m
        out: dict[BoundaryLabel, Fraction] = defaultdict(Fraction)
        for label, coeff in cur.items():
            out[canonical_label(bigger, label.size, label.marks)] += coeff
            out[canonical_label(bigger, label.size + 1, label.marks | {new_point})] += coeff
        cur_space, cur = bigger, dict(out)
    return cur


def forgetful_pullback(src: SpaceId, formal: FormalSum, dst: SpaceId) -> DivisorClass:
    return express_in_basis(dst, forgetful_pullback_sum(src, formal, dst))


def relabel_sum(n: int, formal: FormalSum, swap: Mapping[int, int]) -> dict[BoundaryLabel, Fraction]:
    """Apply a marked-point permutation to a boundary sum on the fully
    pointed space (the permutation is given by its non-fixed values)."""
    s = fully_pointed(n)
    out: dict[BoundaryLabel, Fraction] = defaultdict(Fraction)
    for label, coeff in formal.items():
        members = frozenset(swap.get(x, x) for x in label.marks)
        out[canonical_label(s, len(members), members)] += Fraction(coeff)
    return dict(out)
