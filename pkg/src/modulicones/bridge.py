"""Transport into the classical coordinates of higher-genus moduli.

The even-point quotients sit inside the moduli of genus-``g`` stable curves
as the hyperelliptic locus (send a configuration to its degree-two admissible
cover), and the odd-point one-marked quotients map in by covering and then
attaching a fixed complementary-genus tail at the distinguished point.  Both
maps are linear on numerical classes, so the cone machinery of
:mod:`modulicones.curves` transports: dual-basis vectors go to combinations
of the standard classes ``lambda``, ``delta_irr``, ``delta_i`` (and ``omega``
on the pointed side), and inequality systems follow by applying the maps
row-wise.

Conventions, applied once at vector construction: ``delta_j`` folds to
``delta_{g-j}`` above ``floor(g/2)`` on the unpointed side, ``delta_0`` is
zero there and ``-omega`` on the pointed side, and for ``g = 2`` the class
``lambda`` is not independent — it is eliminated via
``(1/10) delta_irr + (1/5) delta_1``.

The genus-two pointed space gets special treatment (its own basis
``(Delta_irr, Delta_1, W)``): the seven-point one-marked quotient maps onto
it birationally, and the module ends with the transported cone comparisons
and the numerical data of the two extremal contractions used there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import fixtures
from .cones import Cone
from .linalg import Vec, add, dot, primitive, scale, vec, zero_vec
from .curves import curve_ck, nem_hrep
from .spaces import CurveClass, DivisorClass, SpaceId, relations_and_basis

__all__ = [
    "BridgeMap",
    "ComboWitness",
    "MoriData",
    "hyperelliptic_curve_image",
    "hyperelliptic_pullback_cone",
    "hyperelliptic_pushforward",
    "m21_cones",
    "m21_pushforward",
    "mg1_inequality_family",
    "mg_basis",
    "mg1_basis",
    "pointed_curve_image",
    "pointed_pushforward",
    "x71_mori_data",
]


def mg_basis(g: int) -> tuple[str, ...]:
    """Ordered divisor basis used for the genus-``g`` unpointed moduli."""
    if g < 2:
        raise ValueError(f"need g >= 2, got {g}")
    deltas = tuple(f"delta_{j}" for j in range(1, g // 2 + 1))
    if g == 2:
        return ("delta_irr",) + deltas
    return ("lambda", "delta_irr") + deltas


def mg1_basis(g: int) -> tuple[str, ...]:
    """Ordered divisor basis for the one-pointed genus-``g`` moduli."""
    if g < 2:
        raise ValueError(f"need g >= 2, got {g}")
    deltas = tuple(f"delta_{j}" for j in range(1, g))
    if g == 2:
        return ("delta_irr",) + deltas + ("omega",)
    return ("lambda", "delta_irr") + deltas + ("omega",)


def _assemble(
    names: tuple[str, ...],
    lam: Fraction,
    contributions: Mapping[str, Fraction],
    g: int,
) -> Vec:
    acc = {name: Fraction(0) for name in names}
    for name, coeff in contributions.items():
        acc[name] += coeff
    if g == 2:
        acc["delta_irr"] += lam / 10
        acc["delta_1"] += lam / 5
    else:
        acc["lambda"] += lam
    return vec(acc[name] for name in names)


Deltas = Iterable[tuple[int, Fraction]] | Mapping[int, "Fraction | int"] | None


def _delta_items(deltas: Deltas) -> Iterable[tuple[int, Fraction]]:
    if deltas is None:
        return ()
    if isinstance(deltas, Mapping):
        return tuple((j, Fraction(c)) for j, c in deltas.items())
    return tuple((j, Fraction(c)) for j, c in deltas)


def _mg_vec(g: int, lam=0, irr=0, deltas: Deltas = None) -> Vec:
    """A dual-coordinate vector on the unpointed side, conventions applied.

    ``deltas`` may repeat an index (pairs accumulate), and indices above the
    fold are reflected before assembly.
    """
    out: dict[str, Fraction] = {"delta_irr": Fraction(irr)}
    for j, coeff in _delta_items(deltas):
        if j == 0:
            continue  # delta_0 is zero here
        if not 0 < j < g:
            raise ValueError(f"delta index {j} out of range for genus {g}")
        jj = g - j if j > g // 2 else j
        out[f"delta_{jj}"] = out.get(f"delta_{jj}", Fraction(0)) + coeff
    return _assemble(mg_basis(g), Fraction(lam), out, g)


def _mg1_vec(g: int, lam=0, irr=0, omega=0, deltas: Deltas = None) -> Vec:
    """A dual-coordinate vector on the pointed side (``delta_0 = -omega``)."""
    out: dict[str, Fraction] = {"delta_irr": Fraction(irr), "omega": Fraction(omega)}
    for j, coeff in _delta_items(deltas):
        if j == 0:
            out["omega"] -= coeff
            continue
        if not 0 < j < g:
            raise ValueError(f"delta index {j} out of range for genus {g}")
        out[f"delta_{j}"] = out.get(f"delta_{j}", Fraction(0)) + coeff
    return _assemble(mg1_basis(g), Fraction(lam), out, g)


def _target_vec(target: str, g: int, **kw) -> Vec:
    return _mg_vec(g, **kw) if target == "mg" else _mg1_vec(g, **kw)


@dataclass(frozen=True)
class BridgeMap:
    """Linear map from quotient dual coordinates into moduli coordinates."""

    source: SpaceId
    source_names: tuple[str, ...]
    target_names: tuple[str, ...]
    columns: tuple[Vec, ...]

    def __call__(self, coefficients: Sequence[Fraction | int]) -> Vec:
        if len(coefficients) != len(self.columns):
            raise ValueError(
                f"expected {len(self.columns)} coefficients, got {len(coefficients)}"
            )
        out = zero_vec(len(self.target_names))
        for coeff, col in zip(coefficients, self.columns):
            if coeff:
                out = add(out, scale(Fraction(coeff), col))
        return out

    def column(self, name: str) -> Vec:
        try:
            return self.columns[self.source_names.index(name)]
        except ValueError:
            raise KeyError(f"{name!r} is not a dual-basis name of {self.source}") from None

    def push_curve(self, curve: CurveClass) -> Vec:
        if curve.space != self.source:
            raise ValueError(f"curve lives on {curve.space}, map starts at {self.source}")
        return self(curve.coords)


# --------------------------------------------------------------------------
# the hyperelliptic locus


def hyperelliptic_pushforward(g: int) -> BridgeMap:
    """Dual-basis transport along the degree-two admissible-cover map.

    The source is the ``2g+2``-point unpointed quotient.  Even dual classes
    land on ``2 delta_irr`` plus a ``lambda`` term, odd ones on half a
    ``delta`` plus a ``lambda`` term; both weights are symmetric under the
    source's index fold, which is what makes the map well defined on the
    folded basis.
    """
    if g < 2:
        raise ValueError(f"need g >= 2, got {g}")
    src = SpaceId(2 * g + 2, 0)
    names = relations_and_basis(src).ordered_basis
    cols = []
    for name in names:
        i = int(name[1:])
        if i % 2 == 0:
            j = i // 2
            cols.append(_mg_vec(g, lam=Fraction(j * (g + 1 - j), 4 * g + 2), irr=2))
        else:
            j = (i - 1) // 2
            cols.append(
                _mg_vec(
                    g,
                    lam=Fraction(j * (g - j), 4 * g + 2),
                    deltas={j: Fraction(1, 2)},
                )
            )
    return BridgeMap(src, names, mg_basis(g), tuple(cols))


def hyperelliptic_curve_image(g: int, k: int) -> Vec:
    """Direct image of the ``k``-th sliding-node family, in closed form.

    This is the independent route: the same class must come out of
    :func:`hyperelliptic_pushforward` composed with the folded family
    classes, and the test suite holds the two routes together.
    """
    if g < 2:
        raise ValueError(f"need g >= 2, got {g}")
    if not 1 <= k <= 2 * g - 1:
        raise ValueError(f"k must lie in 1..{2 * g - 1}, got {k}")
    if k % 2:
        j = (k - 1) // 2
        return _mg_vec(
            g,
            lam=Fraction(g - j, 2),
            irr=2 * (2 * g + 1 - 2 * j),
            deltas={j: Fraction(2 * j + 1 - 2 * g, 2)},
        )
    j = k // 2
    return _mg_vec(g, irr=4 * (j - g), deltas={j: Fraction(g + 1 - j)})


def hyperelliptic_pullback_cone(g: int) -> Cone:
    """Effective classes whose hyperelliptic restriction stays transportable.

    The ``2(g-1)`` inequalities pair a lower and an upper slope condition per
    index; each row is the image of the corresponding unpointed-cone row
    under :func:`hyperelliptic_pushforward`.
    """
    if g < 2:
        raise ValueError(f"need g >= 2, got {g}")
    rows = []
    for i in range(1, g):
        rows.append(
            _mg_vec(g, lam=i, irr=4 * (2 * i + 1), deltas={i: Fraction(-(2 * i - 1))})
        )
        rows.append(_mg_vec(g, irr=-4 * i, deltas={i: Fraction(i + 1)}))
    return Cone.from_hrep(len(mg_basis(g)), tuple(rows))


# --------------------------------------------------------------------------
# the pointed covers


def _check_pointed_params(g: int, n: int, target: str) -> None:
    if target not in ("mg", "mg1"):
        raise ValueError(f"target must be 'mg' or 'mg1', got {target!r}")
    if g < 2:
        raise ValueError(f"need g >= 2, got {g}")
    hi = g - 1 if target == "mg" else g
    if not 1 <= n <= hi:
        raise ValueError(f"need 1 <= n <= {hi} for target {target!r}, got {n}")


def pointed_pushforward(g: int, n: int, target: str = "mg") -> BridgeMap:
    """Transport from the ``2n+3``-point one-marked quotient.

    The map covers and then glues a fixed complementary tail at the marked
    point; ``target`` selects whether the tail itself carries the surviving
    marked point.  On the pointed target the boundary index ``g - n`` may
    degenerate to 0, which the coordinate conventions turn into ``-omega``.
    """
    _check_pointed_params(g, n, target)
    src = SpaceId(2 * n + 3, 1)
    names = relations_and_basis(src).ordered_basis
    cols = []
    for name in names:
        i = int(name[1:])
        if i % 2 == 0:
            j = (i - 2) // 2
            cols.append(
                _target_vec(
                    target,
                    g,
                    lam=Fraction(j * (n - j), 2 * (2 * n + 1)),
                    deltas=(
                        (g - n + j, Fraction(1, 2)),
                        (g - n, Fraction(-(n - j) * (2 * n + 1 - 2 * j), (2 * n + 1) * (n + 1))),
                    ),
                )
            )
        else:
            j = (i - 1) // 2
            cols.append(
                _target_vec(
                    target,
                    g,
                    lam=Fraction(j * (n + 1 - j), 2 * (2 * n + 1)),
                    irr=2,
                    deltas=(
                        (g - n, Fraction(-(2 * n + 1 - 2 * j) * (n + 1 - j), (2 * n + 1) * (n + 1))),
                    ),
                )
            )
    basis = mg_basis(g) if target == "mg" else mg1_basis(g)
    return BridgeMap(src, names, basis, tuple(cols))


def pointed_curve_image(g: int, n: int, k: int, target: str = "mg") -> Vec:
    """Direct image of the ``k``-th family under the pointed cover map.

    ``k = 1`` is the fibre family and is contracted up to a boundary
    correction; even and odd ``k`` follow the two displayed patterns.
    """
    _check_pointed_params(g, n, target)
    if not 1 <= k <= 2 * n:
        raise ValueError(f"k must lie in 1..{2 * n}, got {k}")
    if k == 1:
        return _target_vec(target, g, deltas={g - n: Fraction(-(n - 1))})
    if k % 2:
        j = (k - 1) // 2
        return _target_vec(
            target,
            g,
            irr=-4 * (n - j),
            deltas={g - n + j: Fraction(n + 1 - j)},
        )
    j = k // 2
    return _target_vec(
        target,
        g,
        lam=Fraction(n + 1 - j, 2),
        irr=2 * (2 * n + 3 - 2 * j),
        deltas={g - n + j - 1: Fraction(-(2 * n + 1 - 2 * j), 2)},
    )


# --------------------------------------------------------------------------
# the transported inequality families


@dataclass(frozen=True)
class ComboWitness:
    """Nonnegative multipliers certifying one transported positivity row.

    ``c1 * (row_a(1) + 2 row_b(1)) + c2 * ((2n-3) row_a(n-1) + n row_b(n-1))``
    equals ``2(5n^2-13n+6) * row`` exactly (``3 * row`` in the degenerate
    two-tail case, where the leading constant vanishes).
    """

    c1: Fraction
    c2: Fraction
    row: Vec


def _mg1_rows(g: int, n: int, target: str) -> dict[tuple, Vec]:
    rows: dict[tuple, Vec] = {}
    for k in range(1, n):
        rows[("a", k)] = _target_vec(
            target, g, irr=-4 * k, deltas={g - k: Fraction(k + 1)}
        )
        rows[("b", k)] = _target_vec(
            target, g, lam=k, irr=4 * (2 * k + 1), deltas={g - k: Fraction(-(2 * k - 1))}
        )
        for m in range(0, k):
            rows[("c", k, m)] = _target_vec(
                target,
                g,
                lam=k * m * (k - m),
                deltas=(
                    (g - k, Fraction((2 * m + 1) * (k - m))),
                    (g - n + m, Fraction(k * (2 * k + 1))),
                    (g - n + k, Fraction(-k * (2 * m + 1))),
                    (g - n, Fraction(-4 * k * (k - m))),
                ),
            )
            rows[("e", k, m)] = _target_vec(
                target,
                g,
                lam=k * (m + 1) * (k - m),
                irr=4 * k * (2 * k + 1),
                deltas=(
                    (g - k, Fraction((m + 1) * (2 * (k - m) - 1))),
                    (g - n, Fraction(-2 * k * (2 * (k - m) - 1))),
                    (g - n + k, Fraction(-2 * k * (m + 1))),
                ),
            )
        for m in range(0, k + 1):
            rows[("d", k, m)] = _target_vec(
                target,
                g,
                lam=m * (k + 1) * (k - m),
                irr=-4 * m * (2 * m + 1),
                deltas=(
                    (g - n + m, Fraction((k + 1) * (2 * k + 1))),
                    (g - n, Fraction(-(2 * k + 1) * (2 * (k - m) + 1))),
                ),
            )
    return rows


def mg1_inequality_family(
    g: int, n: int, target: str = "mg"
) -> tuple[Cone, dict[tuple[int, int], ComboWitness]]:
    """The five transported inequality families, with reduction witnesses.

    Returns the cone they cut out together with, per valid ``(k, m)``, the
    exact multiplier pair certifying that the combined slope rows dominate
    the positivity row ``4(2(k+m)+3) delta_irr + (k+1)(m+1) lambda``.  A
    failed identity raises :class:`ArithmeticError`; it would mean the rows
    were transcribed inconsistently.
    """
    _check_pointed_params(g, n, target)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    rows = _mg1_rows(g, n, target)
    dim = len(mg_basis(g) if target == "mg" else mg1_basis(g))
    cone = Cone.from_hrep(dim, tuple(rows.values()))

    witnesses: dict[tuple[int, int], ComboWitness] = {}
    for k in range(1, n):
        for m in range(0, k):
            if n == 2:
                c1, c2 = Fraction(1), Fraction(2)
            else:
                c1 = Fraction(
                    2 * n * (n - 1) * (2 * (k + m) + 3)
                    - 2 * (4 * n - 3) * (k + 1) * (m + 1)
                )
                c2 = Fraction(10 * (k + 1) * (m + 1) - 4 * (2 * (k + m) + 3))
            if c1 < 0 or c2 < 0:
                raise ArithmeticError(f"negative multiplier at (k, m) = {(k, m)}")
            combo = add(
                scale(c1, add(rows[("a", 1)], scale(Fraction(2), rows[("b", 1)]))),
                scale(
                    c2,
                    add(
                        scale(Fraction(2 * n - 3), rows[("a", n - 1)]),
                        scale(Fraction(n), rows[("b", n - 1)]),
                    ),
                ),
            )
            row = _target_vec(
                target, g, lam=(k + 1) * (m + 1), irr=4 * (2 * (k + m) + 3)
            )
            constant = Fraction(3) if n == 2 else Fraction(2 * (5 * n * n - 13 * n + 6))
            if combo != scale(constant, row):
                raise ArithmeticError(f"multiplier identity fails at (k, m) = {(k, m)}")
            witnesses[(k, m)] = ComboWitness(c1, c2, row)
    return cone, witnesses


# --------------------------------------------------------------------------
# the genus-two pointed space


def m21_pushforward(coords: Sequence[Fraction | int] | DivisorClass) -> Vec:
    """Push a seven-point one-marked class to ``(Delta_irr, Delta_1, W)``.

    The two-point class lands on the Weierstrass divisor, the three-point
    one is contracted, and the half-normalized five-point class accounts for
    the factor on ``Delta_irr``.
    """
    if isinstance(coords, DivisorClass):
        if coords.space != SpaceId(7, 1):
            raise ValueError(f"class lives on {coords.space}, map starts at X(7, 1)")
        coords = coords.coords
    if len(coords) != 4:
        raise ValueError(f"expected 4 coordinates, got {len(coords)}")
    x2, _, x4, x5 = (Fraction(c) for c in coords)
    return vec((x5 / 2, x4, x2))


def m21_cones() -> dict[str, Cone]:
    """The four cone players on the genus-two pointed space.

    ``eff`` is simplicial on the three basis divisors; ``push_nem`` and
    ``push_nef`` transport the computed seven-point cone and the recorded
    nef cone; ``nef`` is the recorded hull including the relative dualizing
    ray.
    """
    s = SpaceId(7, 1)
    pushed_nem = tuple(primitive(m21_pushforward(r)) for r in nem_hrep(s).rays)
    pushed_nef = tuple(primitive(m21_pushforward(r)) for r in fixtures.NEF_RAYS[s])
    return {
        "eff": Cone.from_vrep(3, (vec((1, 0, 0)), vec((0, 1, 0)), vec((0, 0, 1)))),
        "push_nem": Cone.from_vrep(3, pushed_nem),
        "push_nef": Cone.from_vrep(3, pushed_nef),
        "nef": Cone.from_vrep(3, (fixtures.M21_A, fixtures.M21_B, fixtures.M21_C)),
    }


@dataclass(frozen=True)
class MoriData:
    """Numerical shadow of the two extremal contractions of the 7-point map.

    ``contracted_curve`` slides the node of a three-point-side degeneration
    along the side carrying the mark and is the class killed by the cover
    map; ``extremal_curve`` slides it along the plain side and spans the
    extremal ray whose supporting face of the recorded nef cone is
    ``nef_face_rays``.
    """

    space: SpaceId
    canonical: Vec
    contracted_curve: CurveClass
    extremal_curve: CurveClass
    nef_face_rays: tuple[Vec, ...]


def x71_mori_data() -> MoriData:
    s = SpaceId(7, 1)
    canonical = vec((Fraction(-1, 3), 0, 0, Fraction(-4, 3)))
    contracted = CurveClass(s, vec((2, -1, 0, 1)))
    extremal = curve_ck(s, 3)
    face = tuple(
        sorted(r for r in fixtures.NEF_RAYS[s] if dot(r, extremal.coords) == 0)
    )
    return MoriData(s, canonical, contracted, extremal, face)
