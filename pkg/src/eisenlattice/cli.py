"""Command-line entry point ``eisenlattice``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks as chk
from .constructions import j0, stabilizer_class_lattice
from .groups import full_aut_definite, vector_orbits, weyl_group
from .io import (
    InputError,
    lattice_to_json,
    load_lattice,
    load_matrix,
    render,
    render_vector,
    space_to_json,
    vector_to_json,
)
from .lattice import discriminant_group, min_nonzero_norm, short_vectors, signature
from .linalg import snf
from .matgroup import DEFAULT_CAP, GroupTooLarge
from .modular import (
    classify_lambda,
    classify_tau_elliptic,
    hesse_j,
    is_smooth_hesse,
    j_invariant,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _cplx(re: float, im: float) -> complex:
    return complex(re, im)


# -- subcommands ------------------------------------------------------------------------


def cmd_verify(args) -> int:
    ids = args.check or chk.valid_ids()
    unknown = [i for i in ids if i.upper() not in chk.REGISTRY]
    if unknown:
        print(f"error: unknown check {unknown[0]!r}; valid ids: {', '.join(chk.valid_ids())}",
              file=sys.stderr)
        return EXIT_USAGE
    if args.grid % 5:
        print("error: --grid must be a multiple of 5", file=sys.stderr)
        return EXIT_USAGE
    cfg = chk.CheckConfig(grid=args.grid, cap=args.cap)
    reports = []
    for i in ids:
        r = chk.run_check(i, cfg)
        reports.append(r)
        if not args.json:
            print(r.summary_line(), flush=True)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2, default=str))
    else:
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} checks passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_snf(args) -> int:
    m = load_matrix(args.matrix)
    if not m.is_integral():
        raise InputError("snf needs an integral matrix")
    res = snf(m)
    payload = {
        "u": res.u.to_json(), "d": res.d.to_json(), "v": res.v.to_json(),
        "invariant_factors": [[x.a, x.b] for x in res.invariant_factors()],
    }
    lines = [
        "invariant factors: " + ", ".join(render(x) for x in res.invariant_factors()),
        "U =", res.u.pretty(), "D =", res.d.pretty(), "V =", res.v.pretty(),
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_disc_group(args) -> int:
    lat = load_lattice(args.lattice)
    space = discriminant_group(lat)
    payload = space_to_json(space)
    payload["lattice"] = lattice_to_json(lat)
    lines = [
        "invariant factors: " + (", ".join(render(d) for d in space.invariant_factors) or "(none)"),
        f"order: {space.order()}",
        "form on generators:",
    ]
    lines += ["  [" + ", ".join(str(x) for x in row) + "]" for row in space.form]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_short_vectors(args) -> int:
    lat = load_lattice(args.lattice)
    sv = short_vectors(lat, args.norm)
    payload = {"norm": sv.norm_target, "count": len(sv), "vectors": [vector_to_json(v) for v in sv],
               "lattice": lattice_to_json(lat)}
    lines = [f"{len(sv)} vectors of norm {sv.norm_target}"] + [render_vector(v) for v in sv]
    _emit(args, payload, lines)
    return EXIT_OK


def _group_report(args, lat, group) -> int:
    m = min_nonzero_norm(lat)
    norms = sorted({m, 2}) if short_vectors(lat, 2).vectors else [m]
    orbit_info = {}
    for n in norms:
        vs = short_vectors(lat, n)
        orbs = vector_orbits(group, vs)
        orbit_info[str(n)] = {"vectors": len(vs), "orbits": len(orbs),
                              "orbit_sizes": [len(o) for o in orbs]}
    payload = {"order": group.order(), "generators": [g.to_json() for g in group.generators],
               "orbits": orbit_info, "lattice": lattice_to_json(lat)}
    lines = [f"order: {group.order()}", f"generators: {len(group.generators)}"]
    for n, info in orbit_info.items():
        lines.append(f"norm {n}: {info['vectors']} vectors in {info['orbits']} orbit(s)")
    if args.elements:
        payload["elements"] = [g.to_json() for g in group.elements]
        if not args.json:
            lines.append(json.dumps(payload["elements"]))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_aut(args) -> int:
    lat = load_lattice(args.lattice)
    return _group_report(args, lat, full_aut_definite(lat, cap=args.cap))


def cmd_weyl(args) -> int:
    lat = load_lattice(args.lattice)
    return _group_report(args, lat, weyl_group(lat, cap=args.cap))


def _tau(args) -> complex:
    tau = _cplx(args.re, args.im)
    if not tau.imag > 0:
        raise InputError("tau must lie in the upper half-plane (Im tau > 0)")
    return tau


def cmd_classify_tau(args) -> int:
    tau = _tau(args)
    lat_cls = stabilizer_class_lattice(tau)
    ell_cls = classify_tau_elliptic(tau)
    j = j_invariant(tau)
    payload = {"tau": [tau.real, tau.imag], "j": [j.real, j.imag],
               "lattice_class": lat_cls.name, "elliptic_class": ell_cls.name,
               "order": lat_cls.order, "agree": lat_cls == ell_cls}
    lines = [f"tau = {tau}", f"j = {j}", f"lattice side:  {lat_cls.name}",
             f"elliptic side: {ell_cls.name}", f"agree: {lat_cls == ell_cls}"]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_classify_lambda(args) -> int:
    lam = _cplx(args.re, args.im)
    if not is_smooth_hesse(lam):
        raise InputError("singular Hesse cubic")
    cls = classify_lambda(lam)
    j = hesse_j(lam)
    payload = {"lambda": [lam.real, lam.imag], "class": cls.name, "order": cls.order,
               "j": [j.real, j.imag]}
    _emit(args, payload, [f"lambda = {lam}", f"j = {j}", f"class: {cls.name}"])
    return EXIT_OK


def cmd_period(args) -> int:
    tau = _tau(args)
    p = j0(tau)
    cls = stabilizer_class_lattice(tau)
    payload = {"tau": [tau.real, tau.imag], "coordinates": [[z.real, z.imag] for z in p.coordinates],
               "norm": p.norm, "class": cls.name, "order": cls.order}
    lines = [f"tau = {tau}", "coordinates:"] + [f"  {z}" for z in p.coordinates]
    lines += [f"norm: {p.norm:.10f}", f"class: {cls.name}"]
    _emit(args, payload, lines)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eisenlattice",
                                description="Exact hermitian lattices over the Eisenstein integers.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    v = add("verify", cmd_verify, "run the check registry")
    v.add_argument("--check", action="append", metavar="ID", help="run only this check (repeatable)")
    v.add_argument("--grid", type=_positive_int, default=40, help="grid size for C15")
    v.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP, help="group closure cap")

    s = add("snf", cmd_snf, "Smith normal form of a matrix JSON file")
    s.add_argument("matrix")

    d = add("disc-group", cmd_disc_group, "discriminant group of a lattice")
    d.add_argument("lattice")

    sv = add("short-vectors", cmd_short_vectors, "vectors of a given norm")
    sv.add_argument("lattice")
    sv.add_argument("--norm", type=int, required=True)

    for name, fn in (("aut", cmd_aut), ("weyl", cmd_weyl)):
        g = add(name, fn, f"{'automorphism' if name == 'aut' else 'Weyl'} group of a definite lattice")
        g.add_argument("lattice")
        g.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP)
        g.add_argument("--elements", action="store_true", help="dump all elements as JSON")

    for name, fn in (("classify-tau", cmd_classify_tau), ("classify-lambda", cmd_classify_lambda),
                     ("period", cmd_period)):
        c = add(name, fn, name.replace("-", " "))
        c.add_argument("re", type=float)
        c.add_argument("im", type=float)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, GroupTooLarge, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
