"""Command-line front end for the forgetting toolkit.

Subcommands:
    models       print the models of a .kb file
    forget       forget atoms in a .kb file (reduced or original language)
    marginalise  restrict a .ocf ranking to a sub-signature
    lift         extend a .ocf ranking to a super-signature
    check        run a postulate suite (dfp | dfpes-sig | dfpes-formula)
    reproduce    recompute the bundled worked example and diff expectations
    census       enumerate belief-level operators and report survivors

Exit codes: 0 for success / all hold, 1 for violations or reproduction
failures, 2 for input or usage errors. Reports go to stdout, diagnostics to
stderr. Randomized suites are fully determined by --seed, and JSON output is
byte-identical across runs with the same arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources

from .errors import OblivionError, SizeCapError
from .forgetting import KnowledgeBase, forget_original, forget_reduced, load_kb, loads_kb
from .logic import BeliefState, Signature
from .ocf import Ocf, lift, load_ocf, loads_ocf, marginalise
from .postulates import (
    CensusReport,
    SuiteResult,
    generic_signature,
    get_formula_operator,
    get_signature_operator,
    run_dfp_suite,
    run_dfpes_formula_suite,
    run_dfpes_signature_suite,
    triviality_census,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT_ERROR = 2


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation, fully describing what to run.

    The seed determines every randomized-suite instance, so reports are
    reproducible byte for byte.
    """

    command: str
    inputs: tuple[str, ...] = ()
    output_json: bool = False
    seed: int = 0
    sig_override: str | None = None
    forget_atoms: str = ""
    original: bool = False
    keep: str | None = None
    to: str | None = None
    suite: str | None = None
    exhaustive: int | None = None
    random_count: int | None = None
    random_atoms: int = 3
    operator: str | None = None
    census_atoms: int = 1
    kb_path: str | None = None
    ocf_path: str | None = None


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _parse_atom_list(text: str) -> Signature:
    names = [part.strip() for part in text.split(",") if part.strip()]
    return Signature(names)


def _print_state(state: BeliefState, as_json: bool) -> None:
    if as_json:
        _emit_json(state.to_json_dict())
        return
    print(f"sig: {state.signature}")
    for text in state.world_texts():
        print(text if text else "(empty)")
    suffix = " (inconsistent)" if not state.worlds else ""
    print(f"worlds: {len(state.worlds)}{suffix}")


def _print_ocf(state: Ocf, as_json: bool) -> None:
    if as_json:
        _emit_json(state.to_json_dict())
        return
    print(f"sig: {state.signature}")
    for world, rank in sorted(state.items(), key=lambda wr: (wr[1], wr[0].bits)):
        text = world.text() or "(empty)"
        print(f"{rank} : {text}")


def _load_kb_with_override(cfg: RunConfig) -> KnowledgeBase:
    kb = load_kb(cfg.inputs[0])
    if cfg.sig_override is not None:
        kb = KnowledgeBase(_parse_atom_list(cfg.sig_override), kb.formulas)
    return kb


def cmd_models(cfg: RunConfig) -> int:
    kb = _load_kb_with_override(cfg)
    _print_state(kb.models(), cfg.output_json)
    return EXIT_OK


def cmd_forget(cfg: RunConfig) -> int:
    kb = _load_kb_with_override(cfg)
    atoms = _parse_atom_list(cfg.forget_atoms)
    result = forget_original(kb, atoms) if cfg.original else forget_reduced(kb, atoms)
    _print_state(result, cfg.output_json)
    return EXIT_OK


def cmd_marginalise(cfg: RunConfig) -> int:
    state = load_ocf(cfg.inputs[0])
    keep = _parse_atom_list(cfg.keep or "")
    _print_ocf(marginalise(state, keep), cfg.output_json)
    return EXIT_OK


def cmd_lift(cfg: RunConfig) -> int:
    state = load_ocf(cfg.inputs[0])
    target = _parse_atom_list(cfg.to or "")
    _print_ocf(lift(state, target), cfg.output_json)
    return EXIT_OK


def _run_suite(cfg: RunConfig) -> SuiteResult:
    mode: dict = {}
    if cfg.exhaustive is not None:
        mode["exhaustive"] = cfg.exhaustive
    else:
        mode["random_instances"] = cfg.random_count
        mode["seed"] = cfg.seed
        mode["atoms"] = cfg.random_atoms
    if cfg.suite == "dfp":
        if cfg.operator is not None:
            raise OblivionError("the dfp suite has no --operator")
        return run_dfp_suite(**mode)
    if cfg.suite == "dfpes-sig":
        op = get_signature_operator(cfg.operator or "marginalisation")
        return run_dfpes_signature_suite(op, **mode)
    if cfg.suite == "dfpes-formula":
        fop = get_formula_operator(cfg.operator or "trivial")
        return run_dfpes_formula_suite(fop, **mode)
    raise OblivionError(f"unknown suite {cfg.suite!r}")


def cmd_check(cfg: RunConfig) -> int:
    result = _run_suite(cfg)
    if cfg.output_json:
        _emit_json(result.to_json_dict())
    else:
        print(f"suite: {result.suite}")
        if result.operator:
            print(f"operator: {result.operator}")
        print(f"mode: {json.dumps(result.mode, sort_keys=True)}")
        for postulate in sorted(result.checks):
            count = result.checks[postulate]
            bad = result.violation_counts.get(postulate, 0)
            print(f"  {postulate}: {count} checks, {bad} violations")
        for report in result.violations:
            print(
                f"  violation {report.postulate}: "
                f"{json.dumps(report.witness, sort_keys=True)}"
            )
        print(f"result: {'PASS' if result.ok else 'FAIL'}")
    return EXIT_OK if result.ok else EXIT_VIOLATIONS


# Expected values for the bundled worked example: the models of the
# penguin/bird/fly base, forgetting p in both languages, and the ranking
# table with its marginalisation to {b, f} and the lifting back.
GAMMA_MODELS = ["-b -f -p", "b -f p", "b f -p"]
FORGET_REDUCED_MODELS = ["-b -f", "b -f", "b f"]
FORGET_ORIGINAL_MODELS = [
    "-b -f -p", "-b -f p", "b -f -p", "b -f p", "b f -p", "b f p",
]
KAPPA_RANKS = {
    "-b -f -p": 0, "-b -f p": 1, "-b f -p": 1, "-b f p": 1,
    "b -f -p": 2, "b -f p": 0, "b f -p": 0, "b f p": 2,
}
MARGINAL_RANKS = {"-b -f": 0, "-b f": 1, "b -f": 0, "b f": 0}
LIFTED_RANKS = {
    "-b -f -p": 0, "-b -f p": 0, "-b f -p": 1, "-b f p": 1,
    "b -f -p": 0, "b -f p": 0, "b f -p": 0, "b f p": 0,
}


def _bundled_text(name: str) -> str:
    return (
        resources.files("oblivion").joinpath("examples").joinpath(name)
        .read_text(encoding="utf-8")
    )


def cmd_reproduce(cfg: RunConfig) -> int:
    if cfg.kb_path is not None:
        kb = load_kb(cfg.kb_path)
    else:
        kb = loads_kb(_bundled_text("birds.kb"), source="birds.kb")
    if cfg.ocf_path is not None:
        kappa = load_ocf(cfg.ocf_path)
    else:
        kappa = loads_ocf(_bundled_text("birds.ocf"), source="birds.ocf")

    p = Signature(("p",))
    keep = kappa.signature.minus(p)
    marginal = marginalise(kappa, keep)
    checks = [
        ("models-gamma", GAMMA_MODELS, kb.models().world_texts()),
        ("forget-reduced", FORGET_REDUCED_MODELS, forget_reduced(kb, p).world_texts()),
        ("forget-original", FORGET_ORIGINAL_MODELS, forget_original(kb, p).world_texts()),
        ("ocf-ranks", KAPPA_RANKS, kappa.to_json_dict()["ranks"]),
        ("ocf-marginal", MARGINAL_RANKS, marginal.to_json_dict()["ranks"]),
        ("ocf-lifted", LIFTED_RANKS, lift(marginal, kappa.signature).to_json_dict()["ranks"]),
        ("beliefs-link", GAMMA_MODELS,
         sorted(w.text() for w, r in kappa.items() if r == 0)),
    ]
    results = [
        {"name": name, "status": "pass" if expected == actual else "fail",
         "expected": expected, "actual": actual}
        for name, expected, actual in checks
    ]
    ok = all(entry["status"] == "pass" for entry in results)
    if cfg.output_json:
        _emit_json({"checks": results, "ok": ok})
    else:
        for entry in results:
            print(f"{entry['name']}: {entry['status'].upper()}")
            if entry["status"] == "fail":
                print(f"  expected: {json.dumps(entry['expected'], sort_keys=True)}")
                print(f"  actual:   {json.dumps(entry['actual'], sort_keys=True)}")
        print(f"result: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_VIOLATIONS


def cmd_census(cfg: RunConfig) -> int:
    if cfg.census_atoms > 2:
        raise SizeCapError("the operator census is capped at 2 atoms")
    if cfg.census_atoms == 2:
        print(
            "warning: the 2-atom operator space has 15^240 members; "
            "this will not finish in any reasonable time",
            file=sys.stderr,
        )
    report = triviality_census(generic_signature(cfg.census_atoms))
    if cfg.output_json:
        _emit_json(report.to_json_dict())
    else:
        _print_census(report)
    return EXIT_OK


def _print_census(report: CensusReport) -> None:
    print(f"signature: {report.signature}")
    print(f"states: {report.state_count}  formula-classes: {report.formula_class_count}")
    print(f"operators: {report.operator_count}")
    print(f"survivors: {report.survivor_count}")
    for survivor in report.survivors:
        print(f"  {survivor['description']}")
    print("first failures by postulate:")
    for postulate, count in report.first_failure_counts.items():
        print(f"  {postulate}: {count}")


_HANDLERS = {
    "models": cmd_models,
    "forget": cmd_forget,
    "marginalise": cmd_marginalise,
    "lift": cmd_lift,
    "check": cmd_check,
    "reproduce": cmd_reproduce,
    "census": cmd_census,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oblivion",
        description="Forgetting, marginalisation, and postulate verification "
        "for propositional belief states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_models = sub.add_parser("models", help="print the models of a .kb file")
    p_models.add_argument("kb", help="path to a .kb file")
    p_models.add_argument("--sig", help="override the signature (comma-separated atoms)")
    p_models.add_argument("--json", action="store_true")

    p_forget = sub.add_parser("forget", help="forget atoms in a .kb file")
    p_forget.add_argument("kb", help="path to a .kb file")
    p_forget.add_argument("--atoms", default="", help="comma-separated atoms to forget")
    p_forget.add_argument(
        "--original", action="store_true",
        help="state the result over the original signature",
    )
    p_forget.add_argument("--sig", help="override the signature (comma-separated atoms)")
    p_forget.add_argument("--json", action="store_true")

    p_marg = sub.add_parser("marginalise", help="restrict a ranking to a sub-signature")
    p_marg.add_argument("ocf", help="path to a .ocf file")
    p_marg.add_argument("--keep", required=True, help="comma-separated atoms to keep")
    p_marg.add_argument("--json", action="store_true")

    p_lift = sub.add_parser("lift", help="extend a ranking to a super-signature")
    p_lift.add_argument("ocf", help="path to a .ocf file")
    p_lift.add_argument("--to", required=True, help="comma-separated target atoms")
    p_lift.add_argument("--json", action="store_true")

    p_check = sub.add_parser("check", help="run a postulate suite")
    p_check.add_argument("suite", choices=("dfp", "dfpes-sig", "dfpes-formula"))
    group = p_check.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", type=int, metavar="N",
                       help="sweep every instance over an N-atom signature")
    group.add_argument("--random", type=int, metavar="K", dest="random_count",
                       help="run K seeded random instances")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--atoms", type=int, default=3,
                         help="signature size for random mode (default 3)")
    p_check.add_argument("--operator",
                         help="built-in operator to test (dfpes suites only)")
    p_check.add_argument("--json", action="store_true")

    p_rep = sub.add_parser("reproduce", help="recompute the bundled worked example")
    p_rep.add_argument("--kb", dest="kb_path", help="override the bundled .kb file")
    p_rep.add_argument("--ocf", dest="ocf_path", help="override the bundled .ocf file")
    p_rep.add_argument("--json", action="store_true")

    p_census = sub.add_parser("census", help="enumerate belief-level operators")
    p_census.add_argument("--atoms", type=int, default=1)
    p_census.add_argument("--json", action="store_true")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = args.command
    if command in ("models", "forget"):
        return RunConfig(
            command=command,
            inputs=(args.kb,),
            output_json=args.json,
            sig_override=args.sig,
            forget_atoms=getattr(args, "atoms", ""),
            original=getattr(args, "original", False),
        )
    if command in ("marginalise", "lift"):
        return RunConfig(
            command=command,
            inputs=(args.ocf,),
            output_json=args.json,
            keep=getattr(args, "keep", None),
            to=getattr(args, "to", None),
        )
    if command == "check":
        return RunConfig(
            command=command,
            output_json=args.json,
            suite=args.suite,
            exhaustive=args.exhaustive,
            random_count=args.random_count,
            seed=args.seed,
            random_atoms=args.atoms,
            operator=args.operator,
        )
    if command == "reproduce":
        return RunConfig(
            command=command,
            output_json=args.json,
            kb_path=args.kb_path,
            ocf_path=args.ocf_path,
        )
    if command == "census":
        return RunConfig(
            command=command,
            output_json=args.json,
            census_atoms=args.atoms,
        )
    raise OblivionError(f"unknown command {command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    try:
        return _HANDLERS[cfg.command](cfg)
    except OblivionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
