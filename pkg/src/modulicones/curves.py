"""One-parameter families, attaching maps, and divisor cones on the quotients.

The quotient spaces carry a small zoo of test curves: the families ``C_k``
swept out by moving the node of a two-component stable curve, and their
two-marked variants ``C*_i``.  Gluing a fixed curve onto a moving one gives
attaching maps between quotients, and the numerical classes of these curves
push forward along them by explicit triangular formulas.  A divisor class
is *nem* ("numerically eventually moving") when its restriction to every
prime divisor is numerically effective.  Pairing candidate divisors against
pushed curves that are nef inside their boundary divisor, together with
effectivity of restrictions to boundary divisors, pins the nem cone down to
a finite inequality description for ``m <= 1``; for ``m = 0`` its extremal
rays even admit a closed-form branching construction.

Everything here works in the coordinates fixed by
:func:`modulicones.spaces.relations_and_basis`: divisor classes as
coefficient vectors over the ``b``-basis, curve classes as vectors of
intersection numbers against it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .cones import Certificate, Cone, conic_combination, separating_functional
from .linalg import Vec, add, dot, is_zero_vec, primitive, scale, sub, vec, zero_vec
from .spaces import (
    BoundaryLabel,
    CurveClass,
    DivisorClass,
    FormalSum,
    SpaceId,
    boundary_class,
    canonical_label,
    enumerate_boundaries,
    express_in_basis,
    forgetful_pullback_sum,
    fully_pointed,
    picard_number,
    quotient_pushforward_sum,
    relabel_sum,
    relations_and_basis,
)

__all__ = [
    "AttachMapSpec",
    "LinearMap",
    "NamedClass",
    "attach_pushforward",
    "class_l7",
    "counterexample_ftau",
    "curve_ck",
    "curve_ck_star",
    "eff_cone",
    "eff_xn2_derivation",
    "extremal_ray_ri",
    "named_class",
    "nem_hrep",
    "nem_rays_inductive",
    "nem_xn1_decomposition",
    "nem_xn1_full_rows",
    "nem_xn1_subsumption",
]


# --------------------------------------------------------------------------
# coordinate bookkeeping


def _basis_index(s: SpaceId, name: str) -> int:
    try:
        return relations_and_basis(s).ordered_basis.index(name)
    except ValueError:
        raise ValueError(f"{s} has no basis class {name!r}") from None


def _unit(s: SpaceId, name: str, coeff: Fraction | int = 1) -> Vec:
    row = [Fraction(0)] * picard_number(s)
    row[_basis_index(s, name)] = Fraction(coeff)
    return tuple(row)


def _b_slot(s: SpaceId, i: int) -> str | None:
    """Basis name holding the class ``b_i``, after folding and zeroing.

    For ``m = 0`` the index folds (``b_i = b_{n-i}``); for ``m = 2`` the
    formal ``b_2`` is zero and ``None`` is returned.
    """
    if s.m == 0 and 2 * i > s.n:
        i = s.n - i
    if s.m == 2 and i == 2:
        return None
    return f"b{i}"


def _add_b(s: SpaceId, row: list[Fraction], i: int, coeff: Fraction) -> None:
    name = _b_slot(s, i)
    if name is not None:
        row[_basis_index(s, name)] += coeff


# --------------------------------------------------------------------------
# curve families


def curve_ck(s: SpaceId, k: int) -> CurveClass:
    """Class of the family moving one undistinguished point, ``1 <= k <= n-3``.

    The curve lives on a space with at most one distinguished point; ``C_1``
    on ``X(n, 1)`` is the fibre class of the map forgetting the point.
    """
    if s.m not in (0, 1):
        raise ValueError(f"curve C_k is defined for m <= 1, not {s}")
    if not 1 <= k <= s.n - 3:
        raise ValueError(f"k must lie in 1..{s.n - 3}, got {k}")
    row = [Fraction(0)] * picard_number(s)
    _add_b(s, row, k + 1, Fraction(s.n - k))
    if k >= 2:  # the pairing against b_1 is identically zero
        _add_b(s, row, k, Fraction(2 - s.n + k))
    return CurveClass(s, tuple(row))


def curve_ck_star(l: int, i: int) -> CurveClass:
    """Two-marked analogue ``C*_i`` on ``X(l+1, 2)``, for ``1 <= i <= l-2``."""
    if l < 4:
        raise ValueError(f"X({l + 1},2) carries no curve family C*_i")
    if not 1 <= i <= l - 2:
        raise ValueError(f"i must lie in 1..{l - 2}, got {i}")
    s = SpaceId(l + 1, 2)
    row = [Fraction(0)] * picard_number(s)
    _add_b(s, row, i + 1, Fraction(1))  # b_1 = b_2 = 0 handled by the slot map
    row[_basis_index(s, f"b*{i + 1}")] += Fraction(l - i)
    if i >= 2:  # b*_1 pairs to zero
        row[_basis_index(s, f"b*{i}")] += Fraction(1 - l + i)
    return CurveClass(s, tuple(row))


# --------------------------------------------------------------------------
# attaching maps


@dataclass(frozen=True)
class AttachMapSpec:
    """Which gluing map to push curves along.

    ``kind`` is one of ``"q"`` (one-marked moving curve glued into
    ``X(n, m)``, ``m <= 2``), ``"r"`` (two-marked into ``X(n, 2)``),
    ``"s"`` (two-marked into ``X(n, 1)``), or ``"pi_star"`` (divisor
    pullback along the forgetful map ``X(n, 1) -> X(n-1, 0)``).  ``l + 1``
    is the number of points on the moving component; ``pi_star`` takes no
    ``l``.
    """

    kind: str
    n: int
    l: int | None = None
    m: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("q", "r", "s", "pi_star"):
            raise ValueError(f"unknown attach map kind {self.kind!r}")
        if self.kind == "pi_star":
            if self.n < 5:
                raise ValueError("pi_star needs n >= 5")
            return
        if self.l is None:
            raise ValueError(f"kind {self.kind!r} requires l")
        if self.kind == "q":
            m = 1 if self.m is None else self.m
            if m not in (0, 1, 2):
                raise ValueError("q maps into a space with m <= 2")
            if not 3 <= self.l <= self.n - 2 or self.l > self.n - m:
                raise ValueError(
                    f"q requires 3 <= l <= n-2 and l <= n-m, got l={self.l}, "
                    f"n={self.n}, m={m}"
                )
        else:
            if not 3 <= self.l <= self.n - 2:
                raise ValueError(
                    f"{self.kind} requires 3 <= l <= n-2, got l={self.l}, n={self.n}"
                )

    @property
    def source(self) -> SpaceId:
        if self.kind == "pi_star":
            return SpaceId(self.n - 1, 0)
        assert self.l is not None
        return SpaceId(self.l + 1, 1 if self.kind == "q" else 2)

    @property
    def target(self) -> SpaceId:
        if self.kind == "q":
            return SpaceId(self.n, 1 if self.m is None else self.m)
        return SpaceId(self.n, 2 if self.kind == "r" else 1)


@dataclass(frozen=True)
class LinearMap:
    """Columns of a pushforward (or pullback), indexed by source basis name.

    ``source_names`` may be a subcolumn of the full source basis — the
    two-marked gluing into ``X(n, 2)`` is only ever needed on the starred
    block — so application takes coefficients aligned with those names.
    """

    spec: AttachMapSpec
    source: SpaceId
    target: SpaceId
    source_names: tuple[str, ...]
    columns: tuple[Vec, ...]

    def __call__(self, coefficients: Sequence[Fraction | int]) -> Vec:
        if len(coefficients) != len(self.source_names):
            raise ValueError(
                f"expected {len(self.source_names)} coefficients, "
                f"got {len(coefficients)}"
            )
        out = zero_vec(picard_number(self.target))
        for c, col in zip(coefficients, self.columns):
            if c:
                out = add(out, scale(Fraction(c), col))
        return out

    def column(self, name: str) -> Vec:
        return self.columns[self.source_names.index(name)]

    def push_curve(self, curve: CurveClass) -> CurveClass:
        if curve.space != self.source:
            raise ValueError(f"curve lives on {curve.space}, map starts at {self.source}")
        if len(self.source_names) != picard_number(self.source):
            raise ValueError("map is defined on a partial basis; apply it to coefficients")
        return CurveClass(self.target, self(curve.coords))

    def pull_divisor(self, divisor: DivisorClass) -> DivisorClass:
        if self.spec.kind != "pi_star":
            raise ValueError("only the forgetful pullback acts on divisors")
        if divisor.space != self.source:
            raise ValueError(
                f"divisor lives on {divisor.space}, map starts at {self.source}"
            )
        return DivisorClass(self.target, self(divisor.coords))


def attach_pushforward(spec: AttachMapSpec) -> LinearMap:
    """Linear data of the attaching map described by ``spec``.

    For kinds ``q``/``s`` the columns give pushforwards of the dual basis of
    curve coordinates; for ``r`` only the starred block is provided.  For
    ``pi_star`` the columns are divisor pullbacks.
    """
    if spec.kind == "q":
        return _q_map(spec)
    if spec.kind == "r":
        return _r_map(spec)
    if spec.kind == "s":
        return _s_map(spec)
    return _pi_star_map(spec)


def _q_map(spec: AttachMapSpec) -> LinearMap:
    n, l = spec.n, spec.l
    assert l is not None
    t = spec.target
    names, cols = [], []
    for k in range(1, l - 1):
        names.append(f"b{k + 1}")
        row = [Fraction(0)] * picard_number(t)
        _add_b(t, row, n - l + k, Fraction(1))
        _add_b(t, row, n - l, -Fraction((l - k - 1) * (l - k), l * (l - 1)))
        cols.append(tuple(row))
    return LinearMap(spec, spec.source, t, tuple(names), tuple(cols))


def _r_map(spec: AttachMapSpec) -> LinearMap:
    n, l = spec.n, spec.l
    assert l is not None
    t = spec.target
    names, cols = [], []
    for i in range(1, l - 1):
        names.append(f"b*{i + 1}")
        row = [Fraction(0)] * picard_number(t)
        row[_basis_index(t, f"b*{i + 1}")] += Fraction(1)
        _add_b(t, row, n - l + 1, Fraction(i * (l - i - 1), (l - 2) * (l - 1)))
        row[_basis_index(t, f"b*{l}")] -= Fraction(i, l - 1)
        cols.append(tuple(row))
    return LinearMap(spec, spec.source, t, tuple(names), tuple(cols))


def _s_map(spec: AttachMapSpec) -> LinearMap:
    n, l = spec.n, spec.l
    assert l is not None
    t = spec.target
    names, cols = [], []
    for i in range(2, l - 1):
        names.append(f"b{i + 1}")
        row = [Fraction(0)] * picard_number(t)
        _add_b(t, row, n - l + i, Fraction(1))
        _add_b(t, row, n - l + 1, -Fraction((l - i - 1) * (l - i), (l - 2) * (l - 1)))
        cols.append(tuple(row))
    for i in range(1, l - 1):
        names.append(f"b*{i + 1}")
        row = [Fraction(0)] * picard_number(t)
        _add_b(t, row, i + 1, Fraction(1))
        _add_b(t, row, n - l + 1, Fraction(i * (l - i - 1), (l - 2) * (l - 1)))
        _add_b(t, row, l, -Fraction(i, l - 1))
        cols.append(tuple(row))
    return LinearMap(spec, spec.source, t, tuple(names), tuple(cols))


def _pi_star_map(spec: AttachMapSpec) -> LinearMap:
    n = spec.n
    src, t = spec.source, spec.target
    names, cols = [], []
    for l in range(2, (n - 1) // 2 + 1):
        names.append(f"b{l}")
        row = [Fraction(0)] * picard_number(t)
        row[_basis_index(t, f"b{l + 1}")] += Fraction(1)
        if not (n % 2 == 1 and 2 * l == n - 1):  # the two sides coincide there
            row[_basis_index(t, f"b{n - l}")] += Fraction(1)
        cols.append(tuple(row))
    return LinearMap(spec, src, t, tuple(names), tuple(cols))


# --------------------------------------------------------------------------
# effective cones


def eff_cone(s: SpaceId) -> Cone:
    """Cone spanned by the boundary classes; the effective cone for m <= 2.

    For at most one distinguished point this cone is simplicial on the
    basis classes.  With three or more distinguished points the boundary
    classes stop spanning the effective cone, so no cone is offered.
    """
    if s.m > 2:
        raise ValueError(
            f"the boundary classes of {s} do not span its effective cone"
        )
    rays = []
    for label in enumerate_boundaries(s):
        rays.append(primitive(boundary_class(s, label).coords))
    return Cone.from_vrep(picard_number(s), tuple(dict.fromkeys(rays)))


def eff_xn2_derivation(n: int) -> tuple[dict[str, tuple[Vec, ...]], tuple[Certificate, ...]]:
    """Inequality families certifying ``b*_j >= 0`` over the two-marked cone.

    Returns the four families of valid inequalities (as functionals on
    divisor coordinates of ``X(n, 2)``) together with, for each
    ``2 <= j <= n-2``, a conic-combination certificate expressing the
    functional ``b*_j`` in terms of them.
    """
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    s = SpaceId(n, 2)
    dim = picard_number(s)

    def e(name: str, c: Fraction | int = 1) -> Vec:
        return _unit(s, name, c)

    fam1, fam2, fam3 = [], [], []
    for j in range(2, n - 1):
        row1 = add(
            add(e(f"b*{j}", (n - 4) * (n - 3)), e("b3", (j - 1) * (n - j - 2))),
            e(f"b*{n - 2}", -(n - 4) * (j - 1)),
        )
        row2 = add(
            add(e(f"b*{n - j}", (n - 4) * (n - 3)), e("b3", (j - 1) * (n - j - 2))),
            e("b*2", -(n - 4) * (j - 1)),
        )
        row3 = add(
            add(e(f"b*{j}", (n - 4) * (n - 3)), e("b3", (n - j - 1) * (j - 2))),
            e("b*2", -(n - 4) * (n - j - 1)),
        )
        fam1.append(row1)
        fam2.append(row2)
        fam3.append(row3)
    ineq4 = add(add(e("b*2"), e(f"b*{n - 2}")), e("b3", -1))

    certs = []
    for idx, j in enumerate(range(2, n - 1)):
        gens = (fam1[idx], fam3[idx], ineq4)
        target = e(f"b*{j}")
        cert = conic_combination(target, gens)
        if cert is None:
            raise ArithmeticError(
                f"b*_{j} is not a conic combination of the derived inequalities"
            )
        certs.append(cert)
    families = {
        "ineq1": tuple(fam1),
        "ineq2": tuple(fam2),
        "ineq3": tuple(fam3),
        "ineq4": (ineq4,),
    }
    return families, tuple(certs)


# --------------------------------------------------------------------------
# nem cones: inequality descriptions


def nem_hrep(s: SpaceId) -> Cone:
    """Cone of divisors with effective restriction to every prime divisor.

    Available for ``m = 0`` (n >= 6) and ``m = 1`` (n >= 5); the defining
    functionals are the classes of pushed test curves that are nef inside
    their boundary divisor, so each inequality is forced on the nem cone.
    """
    if s.m == 0:
        if s.n < 6:
            raise ValueError(f"need n >= 6 for the unpointed cone, got {s.n}")
        rows = []
        for i in range(2, s.n // 2):
            rows.append(add(_unit(s, f"b{i + 1}", s.n - i), _unit(s, f"b{i}", -(s.n - i - 2))))
            rows.append(add(_unit(s, f"b{i}", i + 1), _unit(s, f"b{i + 1}", -(i - 1))))
        return Cone.from_hrep(picard_number(s), tuple(rows))
    if s.m == 1:
        if s.n < 5:
            raise ValueError(f"need n >= 5 for the pointed cone, got {s.n}")
        return Cone.from_hrep(picard_number(s), _nem_xn1_reduced_rows(s.n))
    raise ValueError(f"no inequality description implemented for {s}")


def _nem_xn1_reduced_rows(n: int) -> tuple[Vec, ...]:
    """The (n-1)(n-4)/2 inequalities cutting out the pointed nem cone."""
    s = SpaceId(n, 1)
    rows = []
    for l in range(3, n - 1):
        rows.append(add(_unit(s, f"b{n - l + 1}", l), _unit(s, f"b{n - l}", -(l - 2))))
        for j in range(2, l):
            row = add(
                add(
                    _unit(s, f"b{n - l + 1}", (j - 1) * (l - j)),
                    _unit(s, f"b{j}", (l - 1) * (l - 2)),
                ),
                _unit(s, f"b{l}", -(j - 1) * (l - 2)),
            )
            rows.append(row)
    return tuple(rows)


def nem_xn1_full_rows(n: int) -> dict[tuple[int, int, int], Vec]:
    """The unreduced two-index family, keyed by ``(i, j, l)``.

    ``i = 1`` rows are the single-index family; ``i >= 2`` rows come from
    the two-marked gluings.  The reduced description keeps only ``i <= 2``.
    """
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    s = SpaceId(n, 1)
    rows: dict[tuple[int, int, int], Vec] = {}
    for l in range(3, n - 1):
        rows[(1, 0, l)] = add(
            _unit(s, f"b{n - l + 1}", l), _unit(s, f"b{n - l}", -(l - 2))
        )
        for i in range(2, l):
            for j in range(2, l):
                row = add(
                    add(
                        _unit(s, f"b{n - l + i - 1}", (l - 1) * (j - 1) * (l - j)),
                        _unit(s, f"b{j}", (l - 1) * (l - i) * (l - i + 1)),
                    ),
                    _unit(s, f"b{l}", -(j - 1) * (l - i) * (l - i + 1)),
                )
                rows[(i, j, l)] = row
    return rows


def nem_xn1_subsumption(n: int) -> dict[tuple[int, int, int], tuple[tuple[Fraction, tuple[int, int, int]], ...]]:
    """Exact rewriting of every ``i >= 3`` row in terms of lower rows.

    Each value lists ``(coefficient, key)`` pairs whose combination equals
    the keyed row, verifying that the reduced system loses nothing.  The
    coefficients are the closed-form ones used in the curve analysis.
    """
    rows = nem_xn1_full_rows(n)
    out: dict[tuple[int, int, int], tuple[tuple[Fraction, tuple[int, int, int]], ...]] = {}
    for (i, j, l), row in rows.items():
        if i < 3:
            continue
        a = Fraction((l - 1) * (j - 1) * (l - j), l - i + 2)
        b = Fraction(l - i, l - i + 2)
        combo = ((a, (1, 0, l - i + 2)), (b, (i - 1, j, l)))
        total = zero_vec(len(row))
        for coeff, key in combo:
            total = add(total, scale(coeff, rows[key]))
        if total != row:
            raise ArithmeticError(f"rewriting of row {(i, j, l)} failed")
        out[(i, j, l)] = combo
    return out


# --------------------------------------------------------------------------
# nem cones: extremal rays for m = 0


def nem_rays_inductive(n: int) -> tuple[Vec, ...]:
    """All extremal rays of the unpointed cone, by the branching rule.

    Starting from first entry 1, each next entry is the current one scaled
    by either ``(n-i-2)/(n-i)`` or ``(i+1)/(i-1)``; the ``2^(floor(n/2)-2)``
    resulting vectors, made primitive, are exactly the extremal rays.  For
    ``n = 5`` the picture degenerates to the single ray of a half-line.
    """
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    d = n // 2 - 1
    rays = []
    for choices in itertools.product((0, 1), repeat=d - 1):
        entries = [Fraction(1)]
        for i, pick in zip(range(2, d + 1), choices):
            ratio = Fraction(n - i - 2, n - i) if pick == 0 else Fraction(i + 1, i - 1)
            entries.append(entries[-1] * ratio)
        rays.append(primitive(tuple(entries)))
    return tuple(sorted(set(rays)))


def extremal_ray_ri(n: int, i: int) -> Vec:
    """The distinguished ray with a break at position ``i``.

    Entries to the right of the ``i``-th are forced by the lower bounds as
    equalities, entries to the left by the upper bounds.
    """
    if n < 6:
        raise ValueError(f"need n >= 6, got {n}")
    if not 2 <= i <= n // 2:
        raise ValueError(f"i must lie in 2..{n // 2}, got {i}")
    top = n // 2
    entries = {i: Fraction(1)}
    for j in range(i, top):  # rightward, lower bounds tight
        entries[j + 1] = entries[j] * Fraction(n - j - 2, n - j)
    for j in range(i - 1, 1, -1):  # leftward, upper bounds tight
        entries[j] = entries[j + 1] * Fraction(j - 1, j + 1)
    return primitive(tuple(entries[j] for j in range(2, top + 1)))


# --------------------------------------------------------------------------
# fibration structure of the pointed cone


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of splitting the pointed cone over the unpointed one.

    The face ``a_2 = 0`` should be exactly the pullback of the unpointed
    cone, with the balanced-coordinate constraint holding there, and every
    extremal ray off the face should have all coordinates positive (such
    divisor classes are big).
    """

    space: SpaceId
    face_rays: tuple[Vec, ...]
    pulled_rays: tuple[Vec, ...]
    off_face_rays: tuple[Vec, ...]
    face_matches: bool
    constraint_holds: bool
    off_face_positive: bool

    @property
    def ok(self) -> bool:
        return self.face_matches and self.constraint_holds and self.off_face_positive


def nem_xn1_decomposition(n: int) -> DecompositionReport:
    """Check that the pointed nem cone fibres over the unpointed one."""
    if n < 6:
        raise ValueError(f"need n >= 6 so that both cones exist, got {n}")
    s = SpaceId(n, 1)
    nem = nem_hrep(s)
    face, off_face = [], []
    for ray in nem.rays:
        (face if ray[0] == 0 else off_face).append(ray)

    pulled = []
    pi = attach_pushforward(AttachMapSpec("pi_star", n))
    for ray in nem_rays_inductive(n - 1):
        pulled.append(primitive(pi(ray)))

    constraint = all(
        ray[(n - l + 1) - 2] == ray[l - 2]
        for ray in face
        for l in range(3, n - 1)
    )
    positive = all(all(c > 0 for c in ray) for ray in off_face)
    return DecompositionReport(
        space=s,
        face_rays=tuple(sorted(face)),
        pulled_rays=tuple(sorted(set(pulled))),
        off_face_rays=tuple(sorted(off_face)),
        face_matches=sorted(face) == sorted(set(pulled)),
        constraint_holds=constraint,
        off_face_positive=positive,
    )


# --------------------------------------------------------------------------
# named divisor classes


@dataclass(frozen=True)
class NamedClass:
    """A divisor class singled out by the theory, with its defining sum."""

    name: str
    space: SpaceId
    terms: FormalSum

    def divisor(self) -> DivisorClass:
        return express_in_basis(self.space, self.terms)


def _ftau_sum() -> FormalSum:
    """Fibre-of-translates class on the six-point space, as boundary terms."""
    s = fully_pointed(6)
    plus = [(3, 6), (4, 6), (5, 6), (3, 4, 6), (3, 5, 6), (1, 2)]
    minus = [(1, 6), (2, 6), (1, 3, 6), (1, 4, 6), (2, 3, 6), (2, 4, 6)]
    terms: dict[BoundaryLabel, Fraction] = {}
    for marks in plus:
        terms[canonical_label(s, len(marks), marks)] = Fraction(1)
    for marks in minus:
        terms[canonical_label(s, len(marks), marks)] = Fraction(-1)
    return terms


def _l7_sum() -> FormalSum:
    """Fifteen-term boundary sum on the seven-point space."""
    s = fully_pointed(7)
    terms: dict[BoundaryLabel, Fraction] = {}
    for r in range(1, 5):
        for extra in itertools.combinations((3, 4, 5, 6), r):
            marks = (7,) + extra
            terms[canonical_label(s, len(marks), marks)] = Fraction(1)
    return terms


def named_class(name: str) -> NamedClass:
    """Look up one of the registered special classes by name."""
    if name == "F_tau":
        return NamedClass(name, fully_pointed(6), _ftau_sum())
    if name == "L_7":
        return NamedClass(name, fully_pointed(7), _l7_sum())
    raise KeyError(f"no registered class named {name!r}")


def counterexample_ftau(n: int) -> tuple[DivisorClass, Certificate]:
    """Effective class on ``X(n, 3)`` lying outside the boundary cone.

    Transports the six-point fibre class up to ``n`` points, pushes it down
    to three distinguished points, and certifies non-membership in the cone
    spanned by all boundary classes there.
    """
    if n < 6:
        raise ValueError(f"need n >= 6, got {n}")
    base = named_class("F_tau")
    sum6 = quotient_pushforward_sum(base.space, base.terms, SpaceId(6, 3))
    if n == 6:
        terms = sum6
    else:
        lifted = forgetful_pullback_sum(SpaceId(6, 3), sum6, SpaceId(n, n - 3))
        terms = quotient_pushforward_sum(SpaceId(n, n - 3), lifted, SpaceId(n, 3))
    s = SpaceId(n, 3)
    cls = express_in_basis(s, terms)
    gens = tuple(
        primitive(boundary_class(s, label).coords) for label in enumerate_boundaries(s)
    )
    cert = separating_functional(cls.coords, gens)
    if cert is None:
        raise ArithmeticError(
            f"the transported class unexpectedly lies in the boundary cone of {s}"
        )
    return cls, cert


def class_l7() -> tuple[NamedClass, DivisorClass]:
    """The seven-point extremal class and its one-marked quotient image.

    The class is symmetric in the first six points with the seventh one
    special, so the quotient keeping a distinguished point is taken after
    swapping points 1 and 7.
    """
    named = named_class("L_7")
    swapped = relabel_sum(7, named.terms, {1: 7, 7: 1})
    s = SpaceId(7, 1)
    pushed = quotient_pushforward_sum(fully_pointed(7), swapped, s)
    coords = express_in_basis(s, pushed).coords
    return named, DivisorClass(s, primitive(coords))
