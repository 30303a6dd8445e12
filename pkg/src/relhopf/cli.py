"""Command-line front end.

Exit codes: 0 every check passed, 1 some check failed, 2 the input could not be
loaded or is not a valid input for the command.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import catalog
from . import serialize
from .hopfcore import (AlgebraData, CoalgebraData, HopfData, check_algebra, check_bialgebra, check_coalgebra,
                       check_coquasitriangular, check_hopf, check_quasitriangular)
from .monoidal import (DatumError, MonoidalInputDatum, check_theorem_2_1,
                       check_trivial_action_doi_hopf, long_dimodule_suite,
                       yd_identification_suite)
from .morphdsl import (DSLError, braided_environment, hopf_environment, load_identities,
                       paper_identities_path, run_identities)
from .native import compare_with_native
from .report import CheckReport
from .reptheory import (ComoduleAlgebraData, ComoduleData, ModuleData, RelHopfModuleData,
                        check_comodule, check_module, check_relative_hopf,
                        check_yetter_drinfeld)
from .transmute import YDModuleData, enveloping_braided_group, function_braided_group

PASS, FAIL, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _load(path) -> serialize.Instance:
    try:
        return serialize.load(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except (serialize.SchemaError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _need(inst, what, path):
    try:
        return what(inst)
    except serialize.SchemaError as exc:
        raise InputError(f"{path}: {exc}") from None


def _hopf(inst, path) -> HopfData:
    return _need(inst, lambda i: i.hopf(), path)


def _structure(inst, path):
    return _need(inst, lambda i: i.structure(), path)


# validate

def _module_candidates(kind, inst, path, separate_b):
    """(name, data) pairs of the file's modules of the requested kind."""
    keys = {"module": ("action",), "comodule": ("coaction",), "yd": ("action", "coaction"),
            "relhopf": ("coaction", "right_action")}[kind]
    make = {"module": lambda b: ModuleData(b["action"]),
            "comodule": lambda b: ComoduleData(b["coaction"]),
            "yd": lambda b: YDModuleData(b["action"], b["coaction"]),
            "relhopf": lambda b: RelHopfModuleData(b["coaction"], b["right_action"])}[kind]
    out = []
    if separate_b and kind != "relhopf" and all(k in inst.maps for k in keys):
        out.append(("carrier", make(inst.maps)))
    for name, block in inst.modules.items():
        if all(k in block for k in keys):
            out.append((name, make(block)))
    if not out and kind != "relhopf":
        raise InputError(f"{path}: no {kind} data ({', '.join(keys)}) found")
    return out


def _validate_one(kind, path, bialgebra_path) -> CheckReport:
    inst = _load(path)
    if kind == "algebra":
        return check_algebra(_need(inst, lambda i: i.bialgebra() if "comult" in i.maps
                                   else _algebra_only(i), path))
    if kind == "coalgebra":
        return check_coalgebra(_need(inst, lambda i: i.bialgebra() if "mult" in i.maps
                                     else _coalgebra_only(i), path))
    if kind == "bialgebra":
        return check_bialgebra(_need(inst, lambda i: i.bialgebra(), path))
    if kind == "hopf":
        return check_hopf(_hopf(inst, path))
    if kind == "qt":
        if inst.r is None:
            raise InputError(f"{path}: no R array")
        return check_quasitriangular(_hopf(inst, path), inst.r)
    if kind == "coqt":
        if inst.sigma is None:
            raise InputError(f"{path}: no sigma array")
        return check_coquasitriangular(_hopf(inst, path), inst.sigma)
    binst = _load(bialgebra_path) if bialgebra_path else inst
    B = _structure(binst, bialgebra_path or path)
    rep = CheckReport()
    if kind == "relhopf":
        if not bialgebra_path:
            raise InputError("validate relhopf needs --bialgebra")
        if not all(k in inst.maps for k in ("mult", "unit", "coaction")):
            raise InputError(f"{path}: the comodule algebra needs mult, unit and coaction")
        A = ComoduleAlgebraData(inst.maps["mult"], inst.maps["unit"], inst.maps["coaction"])
        _match(B, A.coaction.cod[0], path)
        mods = [("A", RelHopfModuleData(A.coaction, A.mult))]
        mods += _module_candidates(kind, inst, path, True)
        for name, X in mods:
            rep.extend(check_relative_hopf(B, A, X), f"{name}: ")
        return rep
    check = {"module": check_module, "comodule": check_comodule,
             "yd": check_yetter_drinfeld}[kind]
    for name, X in _module_candidates(kind, inst, path, bool(bialgebra_path)):
        dims = []
        if hasattr(X, "action"):
            dims.append(X.action.dom[0])
        if hasattr(X, "coaction"):
            dims.append(X.coaction.cod[0])
        for d in dims:
            _match(B, d, path)
        if kind == "yd":
            rep.extend(check_module(B, X), f"{name}: ")
            rep.extend(check_comodule(B, X), f"{name}: ")
        rep.extend(check(B, X), f"{name}: ")
    return rep


def _match(B, d, path):
    if d != B.dim:
        raise InputError(f"{path}: structure over a bialgebra of dim {d}, given dim {B.dim}")


def _algebra_only(inst):
    inst._need("mult", "unit")
    return AlgebraData(inst.maps["mult"], inst.maps["unit"])


def _coalgebra_only(inst):
    inst._need("comult", "counit")
    return CoalgebraData(inst.maps["comult"], inst.maps["counit"])


def cmd_validate(args, out):
    def run(path):
        try:
            return path, _validate_one(args.kind, path, args.bialgebra), None
        except InputError as exc:
            return path, None, str(exc)

    with ThreadPoolExecutor() as pool:
        results = list(pool.map(run, args.files))
    code = PASS
    machine = []
    for path, rep, err in results:
        if err:
            code = INPUT_ERROR
            machine.append({"file": path, "error": err})
            out.text(f"error: {err}")
            continue
        if not rep.passed and code == PASS:
            code = FAIL
        machine.append({"file": path, "kind": args.kind, **rep.as_dict()})
        out.text(f"{path} ({args.kind}):\n{rep.format()}")
    out.machine(machine if len(machine) > 1 else machine[0])
    return code


# transmute

def cmd_transmute(args, out):
    inst = _load(args.file)
    H = _hopf(inst, args.file)
    if args.kind == "enveloping":
        if inst.r is None:
            raise InputError(f"{args.file}: no R array")
        res = enveloping_braided_group(H, inst.r)
    else:
        if inst.sigma is None:
            raise InputError(f"{args.file}: no sigma array")
        try:
            res = function_braided_group(H, inst.sigma)
        except ValueError as exc:
            raise InputError(f"{args.file}: {exc}") from None
    serialize.save(res.algebra, args.output, basis=inst.basis)
    for w in res.warnings:
        out.text(f"warning: {w}")
    out.text(f"wrote {args.output}")
    out.machine({"output": args.output, "ok": res.ok, "warnings": list(res.warnings)})
    return PASS if res.ok else FAIL


# theorem21 / prop34

def _extra_modules(paths):
    mods = {}
    for path in paths or []:
        inst = _load(path)
        for name, X in inst.rel_modules().items():
            mods[f"{Path(path).stem}:{name}"] = X
    return mods


def cmd_theorem21(args, out):
    B = _structure(_load(args.bialgebra), args.bialgebra)
    A = _need(_load(args.datum), lambda i: i.braided(), args.datum)
    try:
        datum = MonoidalInputDatum(B, A)
    except DatumError as exc:
        raise InputError(str(exc)) from None
    res = check_theorem_2_1(datum, _extra_modules(args.extra_modules) or None)
    out.text(res.format())
    out.machine(res.as_dict())
    return PASS if res.agree else FAIL


def cmd_prop34(args, out):
    B = _structure(_load(args.bialgebra), args.bialgebra)
    path = args.comodule_algebra
    inst = _load(path)
    A = _need(inst, lambda i: i.bialgebra(), path)
    if "coaction" not in inst.maps:
        raise InputError(f"{path}: no coaction array")
    _match(B, inst.maps["coaction"].cod[0], path)
    res = check_trivial_action_doi_hopf(B, A, inst.maps["coaction"])
    out.text(res.format())
    out.machine(res.as_dict())
    return PASS if res.agree else FAIL


def cmd_suite(args, out):
    H = _hopf(_load(args.file), args.file)
    run = long_dimodule_suite if args.kind == "long" else yd_identification_suite
    rep = run(H, samples=args.samples, seed=args.seed)
    out.text(rep.format())
    out.machine(rep.as_dict())
    return PASS if rep.passed else FAIL


# identities

def _identity_file(path):
    p = Path(path)
    if not p.exists() and p.name == path and path == paper_identities_path().name:
        return paper_identities_path()
    return p


def cmd_identities(args, out):
    path = _identity_file(args.idfile)
    try:
        identities = load_identities(path)
    except OSError as exc:
        raise InputError(f"{args.idfile}: {exc.strerror or exc}") from None
    except DSLError as exc:
        raise InputError(f"{args.idfile}: {exc}") from None
    B0 = _structure(_load(args.bialgebra), args.bialgebra) if args.bialgebra else None

    def run(env_path):
        inst = _load(env_path)
        if "action" in inst.maps and B0 is not None:
            B, A = B0, _need(inst, lambda i: i.braided(), env_path)
            _match(B, A.action.dom[0], env_path)
            env = braided_environment(B, A)
        else:
            B, A = _structure(inst, env_path), None
            env = hopf_environment(B)
        try:
            rep = run_identities(identities, env)
        except DSLError as exc:
            raise InputError(f"{args.idfile}: {exc}") from None
        return rep, compare_with_native(rep, B, A)

    with ThreadPoolExecutor() as pool:
        results = list(pool.map(run, args.env))
    code = PASS
    machine = []
    for env_path, (rep, diffs) in zip(args.env, results):
        if (not rep.passed or diffs) and code == PASS:
            code = FAIL
        out.text(f"{env_path}:\n{rep.format()}")
        out.text("native checkers agree" if not diffs
                 else "disagrees with native checkers on: " + ", ".join(diffs))
        machine.append({"env": env_path, **rep.as_dict(), "native_disagreements": diffs})
    out.machine(machine if len(machine) > 1 else machine[0])
    return code


# catalog export

def _catalog_entries():
    from .tensorlin import GF
    F5, F7 = GF(5), GF(7)
    return {
        "k": lambda: (catalog.trivial_hopf(F5), {}),
        "kZ2": lambda: (catalog.build_group_algebra(catalog.cyclic_table(2), F5), {}),
        "kZ3": lambda: (catalog.build_group_algebra(catalog.cyclic_table(3), F7), {}),
        "k^Z2": lambda: (catalog.build_dual_group_algebra(catalog.cyclic_table(2), F5), {}),
        "k^Z3": lambda: (catalog.build_dual_group_algebra(catalog.cyclic_table(3), F7), {}),
        "H4": lambda: _pair(catalog.build_sweedler(5, 0), "r"),
        "H4-alpha1": lambda: _pair(catalog.build_sweedler(5, 1), "r"),
        "H4*": lambda: _pair(catalog.build_sweedler_dual(5, 0), "sigma"),
        "kZ3-qt": lambda: _pair(catalog.build_cyclic_qt(3, 7, 2), "r"),
        "kZ3-bicharacter": lambda: _pair(catalog.build_cyclic_bicharacter(3, 7, 2), "sigma"),
    }


def _pair(built, key):
    H, extra = built
    return H, {key: extra}


_BASES = {"H4": ["1", "g", "x", "gx"], "H4-alpha1": ["1", "g", "x", "gx"]}


def cmd_catalog(args, out):
    entries = _catalog_entries()
    if args.name == "list":
        out.text("\n".join(entries))
        out.machine(sorted(entries))
        return PASS
    if args.name not in entries:
        raise InputError(f"unknown catalog entry {args.name!r}; try 'catalog list'")
    if not args.output:
        raise InputError("catalog export needs -o OUT")
    H, extra = entries[args.name]()
    serialize.save(H, args.output, basis=_BASES.get(args.name), **extra)
    out.text(f"wrote {args.output}")
    out.machine({"output": args.output})
    return PASS


# plumbing

class _Output:
    def __init__(self, fmt, stream):
        self.fmt, self.stream = fmt, stream

    def text(self, s):
        if self.fmt == "text":
            print(s, file=self.stream)

    def machine(self, obj):
        if self.fmt == "machine":
            print(json.dumps(obj, indent=1, sort_keys=True, default=str), file=self.stream)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relhopf",
                                description="Check Hopf-algebraic structures given by structure constants.")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    # accepted after the subcommand too, without overriding an earlier value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="run the axiom checkers on files")
    v.add_argument("kind", choices=("algebra", "coalgebra", "bialgebra", "hopf", "qt", "coqt",
                                    "module", "comodule", "yd", "relhopf"))
    v.add_argument("files", nargs="+")
    v.add_argument("--bialgebra", help="bialgebra acting or coacting (module kinds)")
    v.set_defaults(func=cmd_validate)

    t = sub.add_parser("transmute", parents=[common], help="build a braided group")
    t.add_argument("kind", choices=("enveloping", "function"))
    t.add_argument("file")
    t.add_argument("-o", "--output", required=True)
    t.set_defaults(func=cmd_transmute)

    th = sub.add_parser("theorem21", parents=[common],
                        help="compare the braided bialgebra and monoidal-action verdicts")
    th.add_argument("--bialgebra", required=True)
    th.add_argument("--datum", required=True)
    th.add_argument("--extra-modules", nargs="*", default=[])
    th.set_defaults(func=cmd_theorem21)

    pr = sub.add_parser("prop34", parents=[common],
                        help="trivial-action datum against the Doi-Hopf conditions")
    pr.add_argument("--bialgebra", required=True)
    pr.add_argument("--comodule-algebra", required=True)
    pr.set_defaults(func=cmd_prop34)

    s = sub.add_parser("suite", parents=[common], help="seeded identification suites")
    s.add_argument("kind", choices=("long", "ydident"))
    s.add_argument("file")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_suite)

    i = sub.add_parser("identities", parents=[common], help="evaluate an identity file")
    i.add_argument("idfile")
    i.add_argument("--env", nargs="+", required=True)
    i.add_argument("--bialgebra", help="bialgebra for environments carrying action/coaction")
    i.set_defaults(func=cmd_identities)

    c = sub.add_parser("catalog", parents=[common], help="export a catalog example")
    c.add_argument("name")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else PASS
    out = _Output(args.format, sys.stdout)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
