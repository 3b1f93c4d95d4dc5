"""Command-line surface for the package.

Seven verbs::

    modulicones space          -- counts, ordered basis, relations
    modulicones cone           -- serialize a cone (PORTA text)
    modulicones member         -- membership query with a certificate
    modulicones push           -- transport a class along a named map
    modulicones counterexample -- the pushed fibre class and its functional
    modulicones verify-paper   -- run the numbered end-to-end checks
    modulicones export         -- write PORTA / JSON / LaTeX files

Every invocation is deterministic: identical flags produce byte-identical
output.  Exit codes: 0 when everything requested passed, 1 when a check or
membership query failed, 2 for unusable arguments or unsupported
combinations.  ``export`` resolves relative output paths against the
``MODULICONES_OUTDIR`` environment variable when it is set.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import fixtures, verify
from .bridge import (
    hyperelliptic_pullback_cone,
    hyperelliptic_pushforward,
    m21_cones,
    m21_pushforward,
    mg1_inequality_family,
    mg1_basis,
    mg_basis,
    pointed_pushforward,
)
from .cones import Cone
from .curves import counterexample_ftau, eff_cone, nem_hrep
from .linalg import primitive
from .porta import cone_json_dumps, latex_inequalities, latex_rays, porta_write
from .spaces import (
    SpaceId,
    boundary_class,
    enumerate_boundaries,
    picard_number,
    relations_and_basis,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _fmt(value: Fraction | int) -> str:
    return str(Fraction(value))


def _fmt_vec(coords: Sequence) -> str:
    return "(" + ", ".join(_fmt(c) for c in coords) + ")"


def _parse_coords(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse coordinates {text!r}: {exc}") from None


# --------------------------------------------------------------------------
# object selection shared by `cone`, `member`, and `export`


def _nef_fixture_cone(s: SpaceId) -> Cone:
    if s in fixtures.NEF_RAYS:
        return Cone.from_vrep(picard_number(s), fixtures.NEF_RAYS[s])
    if s == SpaceId(5, 2):
        return Cone.from_vrep(3, fixtures.NEF_X52_RAYS)
    raise ValueError(f"no recorded nef rays for {s}")


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join(f"--{name}" for name in missing)
        raise ValueError(f"--which {args.which} requires {flags}")


def _select_cone(args: argparse.Namespace) -> tuple[Cone, str]:
    """The cone named by ``--which`` plus a slug used for file names."""
    which = args.which
    if which in ("eff", "nem", "nef-fixture"):
        _require(args, "n", "m")
        s = SpaceId(args.n, args.m)
        if which == "eff":
            return eff_cone(s), f"eff-x{s.n}-{s.m}"
        if which == "nem":
            return nem_hrep(s), f"nem-x{s.n}-{s.m}"
        return _nef_fixture_cone(s), f"nef-fixture-x{s.n}-{s.m}"
    if which == "hyperelliptic":
        _require(args, "g")
        return hyperelliptic_pullback_cone(args.g), f"hyperelliptic-g{args.g}"
    if which == "mg1":
        _require(args, "g", "n")
        cone, _ = mg1_inequality_family(args.g, args.n, args.target)
        return cone, f"mg1-g{args.g}-n{args.n}-{args.target}"
    if which == "m21-mov":
        rays = m21_cones()["push_nem"].extreme_rays()
        return Cone.from_vrep(3, rays), "m21-mov"
    raise ValueError(f"unknown cone selector {which!r}")


def _serialize_cone(cone: Cone, rep: str) -> str:
    return porta_write(cone, "hrep" if rep == "hrep" else "vrep")


# --------------------------------------------------------------------------
# verbs


def _run_space(args: argparse.Namespace) -> int:
    s = SpaceId(args.n, args.m)
    print(f"space {s}")
    print(f"boundary divisors: {len(enumerate_boundaries(s))}")
    print(f"picard number: {picard_number(s)}")
    if s.m > 3:
        print("ordered basis: none (the boundary classes are not independent "
              "enough to provide one here)")
        return EXIT_OK
    spec = relations_and_basis(s)
    print("ordered basis: " + ", ".join(spec.ordered_basis))
    print(f"relations: {len(spec.relations)}")
    for row in spec.relations:
        terms = [
            f"{_fmt(c)} * {label}"
            for label, c in zip(spec.boundaries, row)
            if c != 0
        ]
        print("  0 = " + " + ".join(terms).replace("+ -", "- "))
    return EXIT_OK


def _run_cone(args: argparse.Namespace) -> int:
    cone, _ = _select_cone(args)
    sys.stdout.write(_serialize_cone(cone, args.rep))
    return EXIT_OK


def _run_member(args: argparse.Namespace) -> int:
    cone, _ = _select_cone(args)
    point = _parse_coords(args.coords)
    cert = cone.contains(point)
    if cert:
        print("member: yes")
        rays = cone.rays
        terms = [f"{_fmt(c)} * {_fmt_vec(rays[i])}" for i, c in cert.coefficients]
        print("combination: " + (" + ".join(terms) if terms else "0"))
        return EXIT_OK
    print("member: no")
    print(f"separating functional: {_fmt_vec(cert.functional)}")
    return EXIT_CHECK_FAILED


def _run_push(args: argparse.Namespace) -> int:
    coords = _parse_coords(args.coords)
    if args.map == "m21":
        image = m21_pushforward(coords)
        print("divisor class on the genus-two pointed space "
              f"({', '.join(fixtures.M21_BASIS)}): {_fmt_vec(image)}")
        return EXIT_OK
    if args.map == "hyperelliptic":
        _require(args, "g")
        bridge = hyperelliptic_pushforward(args.g)
        names = mg_basis(args.g)
    else:  # pointed
        _require(args, "g", "n")
        bridge = pointed_pushforward(args.g, args.n, args.target)
        names = mg_basis(args.g) if args.target == "mg" else mg1_basis(args.g)
    if len(coords) != len(bridge.columns):
        raise ValueError(
            f"the map from {bridge.source} takes {len(bridge.columns)} "
            f"coordinates, got {len(coords)}"
        )
    image = bridge(coords)
    print(f"curve class in the dual of ({', '.join(names)}): {_fmt_vec(image)}")
    return EXIT_OK


def _run_counterexample(args: argparse.Namespace) -> int:
    cls, cert = counterexample_ftau(args.n)
    s = cls.space
    gens = [
        primitive(boundary_class(s, label).coords)
        for label in enumerate_boundaries(s)
    ]
    print(f"space {s}")
    print(f"effective class outside the boundary cone: {_fmt_vec(cls.coords)}")
    print(f"separating functional: {_fmt_vec(cert.functional)}")
    print(f"certificate verified: {'yes' if cert.verify(cls.coords, gens) else 'NO'}")
    return EXIT_OK


def _run_verify(args: argparse.Namespace) -> int:
    groups = None
    if args.sections is not None:
        try:
            groups = [int(part) for part in args.sections.split(",") if part.strip()]
        except ValueError:
            raise ValueError(f"cannot parse section list {args.sections!r}") from None
    results = verify.run_checks(groups)
    if not results:
        raise ValueError(f"no checks match sections {args.sections!r}")
    for line in verify.report_lines(results):
        print(line)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed} passed, {failed} failed")
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


def _run_export(args: argparse.Namespace) -> int:
    cone, slug = _select_cone(args)
    if args.format == "porta":
        text = _serialize_cone(cone, args.rep)
        extension = ".ieq" if args.rep == "hrep" else ".poi"
    elif args.format == "json":
        if args.rep == "hrep":
            cone.inequalities  # populate the representation being exported
        else:
            cone.rays
        text = cone_json_dumps(cone)
        extension = ".json"
    else:  # latex
        text = latex_inequalities(cone) if args.rep == "hrep" else latex_rays(cone)
        extension = ".tex"
    name = args.out if args.out is not None else slug + extension
    if not os.path.isabs(name):
        name = os.path.join(os.environ.get("MODULICONES_OUTDIR", "."), name)
    with open(name, "w", encoding="ascii") as handle:
        handle.write(text)
    print(name)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser


def _add_space_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int, default=None, help="number of points")
    sub.add_argument("--m", type=int, default=None, help="number kept distinguished")


def _add_cone_flags(sub: argparse.ArgumentParser, whiches: tuple[str, ...]) -> None:
    sub.add_argument("--which", required=True, choices=whiches)
    _add_space_flags(sub)
    sub.add_argument("--g", type=int, default=None, help="genus of the target")
    sub.add_argument(
        "--target",
        choices=("mg", "mg1"),
        default="mg",
        help="unpointed or one-pointed moduli target (default mg)",
    )


_CONE_WHICHES = ("eff", "nem", "nef-fixture", "hyperelliptic", "mg1", "m21-mov")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modulicones",
        description="Exact cones of divisors on symmetrized genus-zero moduli.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("space", help="counts, ordered basis, and relations")
    _add_space_flags(p)
    p.set_defaults(handler=_run_space)

    p = sub.add_parser("cone", help="serialize a cone as PORTA text")
    _add_cone_flags(p, _CONE_WHICHES)
    p.add_argument("--rep", choices=("hrep", "rays"), default="hrep")
    p.set_defaults(handler=_run_cone)

    p = sub.add_parser("member", help="membership query with a certificate")
    _add_cone_flags(p, _CONE_WHICHES)
    p.add_argument("--coords", required=True, help="comma-separated rationals")
    p.set_defaults(handler=_run_member)

    p = sub.add_parser("push", help="transport a class along a named map")
    p.add_argument("--map", required=True, choices=("hyperelliptic", "pointed", "m21"))
    p.add_argument("--g", type=int, default=None, help="genus of the target")
    p.add_argument("--n", type=int, default=None, help="pointed-cover parameter")
    p.add_argument("--target", choices=("mg", "mg1"), default="mg")
    p.add_argument("--coords", required=True, help="comma-separated rationals")
    p.set_defaults(handler=_run_push)

    p = sub.add_parser("counterexample", help="the pushed fibre class and certificate")
    p.add_argument("--n", type=int, default=6, help="number of points (default 6)")
    p.set_defaults(handler=_run_counterexample)

    p = sub.add_parser("verify-paper", help="run the numbered end-to-end checks")
    p.add_argument(
        "--sections",
        default=None,
        help="comma-separated thematic group numbers (default: all)",
    )
    p.set_defaults(handler=_run_verify)

    p = sub.add_parser("export", help="write a cone to a PORTA/JSON/LaTeX file")
    _add_cone_flags(p, _CONE_WHICHES)
    p.add_argument("--rep", choices=("hrep", "rays"), default="hrep")
    p.add_argument("--format", required=True, choices=("porta", "json", "latex"))
    p.add_argument("--out", default=None, help="output file name (default derived)")
    p.set_defaults(handler=_run_export)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    missing_space = args.verb in ("space",) and (args.n is None or args.m is None)
    if missing_space:
        print("error: space requires --n and --m", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except (ValueError, KeyError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
