"""Rational polyhedral cones with exact H- and V-representations.

A cone is stored through whichever representations it has been given or has
computed so far:

* H-representation -- inequality rows ``a`` with ``a @ x >= 0`` and equation
  rows ``e`` with ``e @ x == 0``;
* V-representation -- generating rays plus a basis of the lineality space.

Conversions run the double description method (`dual_description`) in exact
integer/rational arithmetic, with the lineality space handled by pivoting and
adjacency decided through the rank of the common tight rows.  Membership and
redundancy questions are answered by a phase-1 simplex that produces either
explicit nonnegative coefficients or a Farkas functional separating the point
from the cone.  Every `Certificate` is re-verified by direct arithmetic before
it is returned, so a bug in the pivoting can only surface as an exception,
never as a wrong answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import (
    IntVec,
    Vec,
    dot,
    primitive,
    rank,
    rref,
    scale,
    sub,
    vec,
)


def _primitive_or_none(v: Sequence) -> Optional[IntVec]:
    w = vec(v)
    return primitive(w) if any(w) else None


def _int_dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v, strict=True))


def _reduce_mod(lin_rref: Sequence[Vec], pivots: Sequence[int], v: Sequence[Fraction]) -> Vec:
    """Canonical representative of ``v`` modulo the row space of ``lin_rref``."""
    w = vec(v)
    for row, p in zip(lin_rref, pivots):
        if w[p] != 0:
            w = sub(w, scale(w[p], row))
    return w


# --------------------------------------------------------------------------
# certificates
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable witness for a cone query.

    ``membership``/``redundancy``: the target equals the nonnegative
    combination ``sum(c * generators[i] for i, c in coefficients)`` plus the
    (sign-free) combination recorded in ``lineality_coefficients``.
    ``non-membership``: ``functional`` is nonnegative on every generator,
    zero on the lineality space, and strictly negative on the target.
    """

    kind: str  # "membership" | "non-membership" | "redundancy"
    coefficients: tuple[tuple[int, Fraction], ...] = ()
    lineality_coefficients: tuple[tuple[int, Fraction], ...] = ()
    functional: Optional[IntVec] = None

    def __bool__(self) -> bool:
        return self.kind != "non-membership"

    def verify(self, target: Sequence, generators: Sequence[Sequence], lineality: Sequence[Sequence] = ()) -> bool:
        """Re-check the certificate against the query it came from."""
        t = vec(target)
        if self.kind == "non-membership":
            phi = self.functional
            return (
                all(dot(phi, g) >= 0 for g in generators)
                and all(dot(phi, l) == 0 for l in lineality)
                and dot(phi, t) < 0
            )
        acc = [Fraction(0)] * len(t)
        for i, c in self.coefficients:
            if c < 0:
                return False
            acc = [a + c * b for a, b in zip(acc, vec(generators[i]))]
        for i, c in self.lineality_coefficients:
            acc = [a + c * b for a, b in zip(acc, vec(lineality[i]))]
        return tuple(acc) == t


def _membership_certificate(
    kind: str,
    target: Vec,
    generators: list[Vec],
    lineality: list[Vec],
) -> Optional[Certificate]:
    columns = generators + [x for l in lineality for x in (l, scale(-1, l))]
    x, _ = _phase1(columns, target)
    if x is None:
        return None
    k = len(generators)
    coeffs = tuple((i, c) for i, c in enumerate(x[:k]) if c != 0)
    lin_coeffs = tuple(
        (j, c)
        for j, c in enumerate(x[k + 2 * j_] - x[k + 2 * j_ + 1] for j_ in range(len(lineality)))
        if c != 0
    )
    cert = Certificate(kind, coefficients=coeffs, lineality_coefficients=lin_coeffs)
    if not cert.verify(target, generators, lineality):
        raise AssertionError("simplex produced an invalid conic combination")
    return cert


def _separation_certificate(
    target: Vec,
    generators: list[Vec],
    lineality: list[Vec],
) -> Optional[Certificate]:
    columns = generators + [x for l in lineality for x in (l, scale(-1, l))]
    x, w = _phase1(columns, target)
    if x is not None:
        return None
    cert = Certificate("non-membership", functional=primitive(scale(-1, w)))
    if not cert.verify(target, generators, lineality):
        raise AssertionError("simplex produced an invalid separating functional")
    return cert


def conic_combination(
    target: Sequence,
    generators: Sequence[Sequence],
    lineality: Sequence[Sequence] = (),
) -> Optional[Certificate]:
    """Certificate expressing ``target`` as a nonnegative combination of the
    generators plus a lineality part, or None when no such expression exists."""
    return _membership_certificate(
        "membership", vec(target), [vec(g) for g in generators], [vec(l) for l in lineality]
    )


def separating_functional(
    target: Sequence,
    generators: Sequence[Sequence],
    lineality: Sequence[Sequence] = (),
) -> Optional[Certificate]:
    """Non-membership certificate for ``target`` against the generated cone,
    or None when the target lies inside."""
    return _separation_certificate(vec(target), [vec(g) for g in generators], [vec(l) for l in lineality])


# --------------------------------------------------------------------------
# phase-1 simplex
# --------------------------------------------------------------------------


def _phase1(columns: list[Vec], target: Vec) -> tuple[Optional[list[Fraction]], Optional[Vec]]:
    """Solve ``target = sum x_j * columns[j]`` with ``x >= 0``.

    Returns ``(x, None)`` when feasible.  When infeasible, returns
    ``(None, w)`` with ``w @ columns[j] <= 0`` for all j and ``w @ target > 0``
    (a Farkas certificate of infeasibility).
    """
    m = len(target)
    k = len(columns)
    signs = [-1 if t < 0 else 1 for t in target]
    tableau: list[list[Fraction]] = []
    for i in range(m):
        row = [signs[i] * c[i] for c in columns]
        row += [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        row.append(signs[i] * target[i])
        tableau.append(row)
    basis = list(range(k, k + m))
    # Reduced-cost row for "minimize the sum of slacks"; every basic variable
    # is a slack with cost 1, so the initial reduced cost of column j is its
    # cost minus the column sum.  The last entry tracks minus the objective.
    obj = [
        (Fraction(1) if k <= j < k + m else Fraction(0)) - sum(tableau[i][j] for i in range(m))
        for j in range(k + m + 1)
    ]
    while True:
        enter = next((j for j in range(k + m) if obj[j] < 0), None)  # Bland's rule
        if enter is None:
            break
        leave = None
        best: Optional[Fraction] = None
        for i in range(m):
            if tableau[i][enter] > 0:
                ratio = tableau[i][-1] / tableau[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise AssertionError("phase-1 objective is bounded below; no pivot row found")
        piv = tableau[leave][enter]
        tableau[leave] = [x / piv for x in tableau[leave]]
        pivot_row = tableau[leave]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [x - f * y for x, y in zip(tableau[i], pivot_row)]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, pivot_row)]
        basis[leave] = enter
    if obj[-1] == 0:  # objective value is zero: the system is feasible
        x = [Fraction(0)] * k
        for i, b in enumerate(basis):
            if b < k:
                x[b] = tableau[i][-1]
        return x, None
    # Dual solution read off the slack reduced costs, unflipped row by row.
    w = tuple(signs[i] * (Fraction(1) - obj[k + i]) for i in range(m))
    return None, w


# --------------------------------------------------------------------------
# double description
# --------------------------------------------------------------------------


def dual_description(
    dim: int,
    inequalities: Sequence[Sequence],
    equations: Sequence[Sequence] = (),
) -> tuple[list[IntVec], list[IntVec]]:
    """Extreme rays and lineality basis of ``{x : A x >= 0, E x == 0}``.

    Output is canonical: primitive integer rays in lexicographic order, plus
    the reduced-row-echelon basis of the lineality space scaled primitive.
    Equations are imposed first (as pairs of opposite inequalities), then the
    inequality rows in lexicographic order, which makes the whole run -- not
    just the result -- independent of the caller's row order.
    """
    rows: list[IntVec] = []
    for e in equations:
        p = _primitive_or_none(e)
        if p is not None:
            rows.append(p)
            rows.append(tuple(-x for x in p))
    ineq_rows = {p for a in inequalities if (p := _primitive_or_none(a)) is not None}
    rows.extend(sorted(ineq_rows))

    lin, lin_pivots = rref([[1 if j == i else 0 for j in range(dim)] for i in range(dim)])
    rays: list[IntVec] = []
    done: list[IntVec] = []
    masks: list[int] = []

    def tight_mask(r: IntVec) -> int:
        return sum(1 << t for t, row in enumerate(done) if _int_dot(row, r) == 0)

    for a in rows:
        lin_vals = [dot(a, l) for l in lin]
        hit = next((i for i, v in enumerate(lin_vals) if v != 0), None)
        if hit is not None:
            # The constraint cuts into the lineality space: the pivot vector
            # becomes an ordinary ray and everything else is projected onto
            # the hyperplane a @ x == 0 along it.
            l0, d0 = lin[hit], lin_vals[hit]
            if d0 < 0:
                l0, d0 = scale(-1, l0), -d0
            lin, lin_pivots = rref(
                [sub(l, scale(dot(a, l) / d0, l0)) for i, l in enumerate(lin) if i != hit]
            )
            new_rays = [sub(vec(r), scale(dot(a, r) / d0, l0)) for r in rays] + [l0]
            done.append(a)
            seen: dict[IntVec, None] = {}
            for r in new_rays:
                p = _primitive_or_none(_reduce_mod(lin, lin_pivots, r))
                if p is not None:
                    seen.setdefault(p)
            rays = list(seen)
            masks = [tight_mask(r) for r in rays]
            continue
        vals = [_int_dot(a, r) for r in rays]
        done.append(a)
        bit = 1 << (len(done) - 1)
        if all(v >= 0 for v in vals):
            masks = [mk | (bit if v == 0 else 0) for mk, v in zip(masks, vals)]
            continue
        plus = [i for i, v in enumerate(vals) if v > 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        adjacency_rank = dim - len(lin) - 2
        combos: dict[IntVec, None] = {}
        for i, j in itertools.product(plus, minus):
            common = masks[i] & masks[j]
            tight_rows = [done[t] for t in range(len(done) - 1) if common >> t & 1]
            if rank(tight_rows) != adjacency_rank:
                continue
            combo = tuple(vals[i] * rj - vals[j] * ri for ri, rj in zip(rays[i], rays[j]))
            p = _primitive_or_none(_reduce_mod(lin, lin_pivots, combo))
            if p is not None:
                combos.setdefault(p)
        kept = [(rays[i], masks[i]) for i in plus] + [(rays[i], masks[i] | bit) for i in zero]
        rays = [r for r, _ in kept] + list(combos)
        masks = [mk for _, mk in kept] + [tight_mask(r) for r in combos]

    # Final sweep: reduce modulo the final lineality, drop rays that are not
    # extreme (the tight rows of an extreme ray have rank exactly
    # codim(lineality) - 1), and sort into canonical order.
    extreme_rank = dim - len(lin) - 1
    final: set[IntVec] = set()
    for r in rays:
        p = _primitive_or_none(_reduce_mod(lin, lin_pivots, vec(r)))
        if p is None:
            continue
        tight = [row for row in done if _int_dot(row, p) == 0]
        if rank(tight) == extreme_rank:
            final.add(p)
    return sorted(final), sorted(primitive(l) for l in lin)


def facet_description(
    dim: int,
    rays: Sequence[Sequence],
    lineality: Sequence[Sequence] = (),
) -> tuple[list[IntVec], list[IntVec]]:
    """Irredundant H-representation of ``cone(rays) + span(lineality)``.

    Works on the polar dual: the facet normals of the cone are exactly the
    extreme rays of ``{y : y @ r >= 0 for all rays, y @ l == 0 on lineality}``,
    and the equations cutting out its span are that dual's lineality.
    """
    return dual_description(dim, rays, lineality)


# --------------------------------------------------------------------------
# the Cone class
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ConeComparison:
    """Outcome of `Cone.equals`: on failure, carries the first generator of
    one cone that the other cone fails to contain, with its certificate."""

    equal: bool
    witness: Optional[IntVec] = None
    certificate: Optional[Certificate] = None

    def __bool__(self) -> bool:
        return self.equal


@dataclass(frozen=True, eq=False)
class Cone:
    """A rational polyhedral cone; construct via `from_hrep` / `from_vrep`.

    Whichever representation is missing gets computed (and cached) on first
    property access.  Representations obtained by conversion are canonical --
    primitive, irredundant, lexicographically sorted -- while caller-supplied
    rows are kept as given up to primitive scaling, deduplication, and ray
    sorting; `canonical_vrep` never trusts caller-supplied rays.
    """

    ambient_dim: int
    _ineqs: Optional[tuple[IntVec, ...]] = None
    _eqs: Optional[tuple[IntVec, ...]] = None
    _rays: Optional[tuple[IntVec, ...]] = None
    _lineality: Optional[tuple[IntVec, ...]] = None
    _cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_hrep(
        cls,
        dim: int,
        inequalities: Sequence[Sequence],
        equations: Sequence[Sequence] = (),
    ) -> "Cone":
        return cls(
            dim,
            _ineqs=_clean_rows(dim, inequalities, "inequality"),
            _eqs=_clean_rows(dim, equations, "equation"),
        )

    @classmethod
    def from_vrep(
        cls,
        dim: int,
        rays: Sequence[Sequence],
        lineality: Sequence[Sequence] = (),
    ) -> "Cone":
        return cls(
            dim,
            _rays=tuple(sorted(_clean_rows(dim, rays, "ray"))),
            _lineality=_clean_rows(dim, lineality, "lineality vector"),
        )

    def __post_init__(self) -> None:
        if self._ineqs is None and self._rays is None:
            raise ValueError("a cone needs at least one representation")

    @property
    def has_hrep(self) -> bool:
        return self._ineqs is not None

    @property
    def has_vrep(self) -> bool:
        return self._rays is not None

    @property
    def inequalities(self) -> tuple[IntVec, ...]:
        self._ensure_hrep()
        return self._ineqs

    @property
    def equations(self) -> tuple[IntVec, ...]:
        self._ensure_hrep()
        return self._eqs

    @property
    def rays(self) -> tuple[IntVec, ...]:
        self._ensure_vrep()
        return self._rays

    @property
    def lineality(self) -> tuple[IntVec, ...]:
        self._ensure_vrep()
        return self._lineality

    def _ensure_hrep(self) -> None:
        if self._ineqs is None:
            ineqs, eqs = facet_description(self.ambient_dim, self._rays, self._lineality)
            object.__setattr__(self, "_ineqs", tuple(ineqs))
            object.__setattr__(self, "_eqs", tuple(eqs))

    def _ensure_vrep(self) -> None:
        if self._rays is None:
            rays, lin = dual_description(self.ambient_dim, self._ineqs, self._eqs)
            object.__setattr__(self, "_rays", tuple(rays))
            object.__setattr__(self, "_lineality", tuple(lin))
            self._cache["canonical_vrep"] = (self._rays, self._lineality)

    def canonical_vrep(self) -> tuple[tuple[IntVec, ...], tuple[IntVec, ...]]:
        """(extreme rays, lineality basis) in canonical form, input-independent."""
        if "canonical_vrep" not in self._cache:
            rays, lin = dual_description(self.ambient_dim, self.inequalities, self.equations)
            self._cache["canonical_vrep"] = (tuple(rays), tuple(lin))
        return self._cache["canonical_vrep"]

    def extreme_rays(self) -> tuple[IntVec, ...]:
        return self.canonical_vrep()[0]

    def dim(self) -> int:
        rays, lin = self.canonical_vrep()
        return rank(rays + lin)

    def is_full_dimensional(self) -> bool:
        return self.dim() == self.ambient_dim

    def is_simplicial(self) -> bool:
        """True when the stored generating rays are linearly independent (and
        there is no lineality), i.e. ray count equals the span's dimension."""
        return not self.lineality and rank(self.rays) == len(self.rays)

    def contains(self, point: Sequence) -> Certificate:
        """Membership certificate (nonnegative combination of the stored rays)
        or non-membership certificate (separating functional)."""
        v = vec(point)
        if len(v) != self.ambient_dim:
            raise ValueError(f"expected a vector of length {self.ambient_dim}, got {len(v)}")
        if self.has_hrep:
            for e in self._eqs:
                val = dot(e, v)
                if val != 0:
                    phi = primitive(e if val < 0 else scale(-1, e))
                    return Certificate("non-membership", functional=phi)
            for a in self._ineqs:
                if dot(a, v) < 0:
                    return Certificate("non-membership", functional=a)
            cert = conic_combination(v, self.rays, self.lineality)
            if cert is None:
                raise AssertionError("H-representation and V-representation disagree")
            return cert
        cert = conic_combination(v, self._rays, self._lineality)
        if cert is not None:
            return cert
        return separating_functional(v, self._rays, self._lineality)

    def _generators(self) -> list[IntVec]:
        return list(self.rays) + [g for l in self.lineality for g in (l, tuple(-x for x in l))]

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other._generators())

    def equals(self, other: "Cone") -> ConeComparison:
        """Equality by mutual containment of generators; on failure the result
        carries the offending generator and its non-membership certificate."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("cones live in different ambient dimensions")
        for a, b in ((self, other), (other, self)):
            for g in a._generators():
                cert = b.contains(g)
                if not cert:
                    return ConeComparison(False, witness=g, certificate=cert)
        return ConeComparison(True)

    def dual(self) -> "Cone":
        """Polar dual ``{y : y @ x >= 0 for all x in the cone}``.

        A purely formal role swap -- generator rows become inequality rows and
        vice versa -- so no conversion is triggered.
        """
        return Cone(
            self.ambient_dim,
            _ineqs=self._rays,
            _eqs=self._lineality,
            _rays=self._ineqs,
            _lineality=self._eqs,
        )

    def face(self, functional: Sequence) -> "Cone":
        """The face cut out by a supporting functional (nonnegative on the
        whole cone): the subcone of rays the functional annihilates."""
        f = vec(functional)
        for l in self.lineality:
            if dot(f, l) != 0:
                raise ValueError(f"functional is nonzero on lineality vector {l}")
        for r in self.rays:
            if dot(f, r) < 0:
                raise ValueError(f"functional is negative on ray {r}")
        kept = tuple(r for r in self.rays if dot(f, r) == 0)
        return Cone(self.ambient_dim, _rays=kept, _lineality=self._lineality)

    def minimal_hrep(self) -> tuple["Cone", tuple[tuple[IntVec, Certificate], ...]]:
        """Certified-irredundant H-representation of this cone."""
        kept, certs = minimal_hrep(self.inequalities, self.equations)
        return Cone.from_hrep(self.ambient_dim, kept, self.equations), certs

    def __repr__(self) -> str:  # pragma: no cover
        parts = [f"dim={self.ambient_dim}"]
        if self._ineqs is not None:
            parts.append(f"{len(self._ineqs)} ineqs, {len(self._eqs)} eqs")
        if self._rays is not None:
            parts.append(f"{len(self._rays)} rays, {len(self._lineality)} lineality")
        return f"Cone({', '.join(parts)})"


def hrep_to_vrep(c: Cone) -> Cone:
    """Copy of ``c`` carrying both its H-representation and the canonical
    V-representation computed from it."""
    rays, lin = dual_description(c.ambient_dim, c.inequalities, c.equations)
    return Cone(
        c.ambient_dim,
        _ineqs=c.inequalities,
        _eqs=c.equations,
        _rays=tuple(rays),
        _lineality=tuple(lin),
    )


def vrep_to_hrep(c: Cone) -> Cone:
    """Copy of ``c`` carrying both its V-representation and the minimal
    H-representation computed from it."""
    ineqs, eqs = facet_description(c.ambient_dim, c.rays, c.lineality)
    return Cone(
        c.ambient_dim,
        _ineqs=tuple(ineqs),
        _eqs=tuple(eqs),
        _rays=c.rays,
        _lineality=c.lineality,
    )


def minimal_hrep(
    inequalities: Sequence[Sequence],
    equations: Sequence[Sequence] = (),
) -> tuple[list[IntVec], tuple[tuple[IntVec, Certificate], ...]]:
    """Greedily drop redundant inequality rows, with certificates.

    A row is redundant exactly when it is a nonnegative combination of the
    other rows plus a linear combination of the equations (Farkas, using that
    finitely generated cones are closed).  Returns the kept rows and, for each
    removed row, a redundancy certificate over the *final* kept list -- the
    certificates are recomputed at the end so they never reference a row that
    was itself removed later.
    """
    eqs = [vec(e) for e in equations]
    kept: list[IntVec] = []
    seen: set[IntVec] = set()
    for row in inequalities:
        p = _primitive_or_none(row)
        if p is not None and p not in seen:
            seen.add(p)
            kept.append(p)
    removed: list[IntVec] = []
    for row in list(kept):
        others = [r for r in kept if r != row]
        if conic_combination(row, others, eqs) is not None:
            kept = others
            removed.append(row)
    certs = []
    for row in removed:
        cert = conic_combination(row, kept, eqs)
        if cert is None:
            raise AssertionError("removed row is no longer implied by the kept rows")
        certs.append((row, Certificate("redundancy", cert.coefficients, cert.lineality_coefficients)))
    return kept, tuple(certs)


def _clean_rows(dim: int, rows: Sequence[Sequence], what: str) -> tuple[IntVec, ...]:
    out: list[IntVec] = []
    seen: set[IntVec] = set()
    for row in rows:
        if len(row) != dim:
            raise ValueError(f"{what} has length {len(row)}, expected {dim}")
        p = _primitive_or_none(row)
        if p is not None and p not in seen:
            seen.add(p)
            out.append(p)
    return tuple(out)
