"""Command line: prove, check, countermodel, eval, axioms, models.

Exit codes are stable: 0 proved/accepted/valid, 1 refuted/rejected/
counterexample found, 2 unknown (budget exhausted), 3 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import golden, hilbert
from .modelgen import Signature, enumerate_models, signature_for
from .semantics import (
    ModelFileError, UnassignedNominalError, extension, load_model,
    model_to_dict, satisfies, save_model, sequent_valid,
)
from .sequent import (
    ProofFileError, check_proof, find_countermodel, load_proof, prove,
    save_proof,
)
from .syntax import (
    ConceptF, ParseError, parse_formula, parse_problem, parse_sequent, render,
)

__all__ = ["run", "main"]

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3

DEFAULT_DEPTH = 24
DEFAULT_VISITED = 100_000


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="ialc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="search for a proof of a problem's goal")
    p.add_argument("problem")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--visited", type=int, default=DEFAULT_VISITED)
    p.add_argument("--emit-proof", metavar="F")
    p.add_argument("--tbox-local", action="store_true",
                   help="accepted for symmetry with the semantic commands; "
                        "proof search itself is syntactic")

    p = sub.add_parser("check", help="check a sequent proof tree or an "
                                     "axiomatic proof file")
    p.add_argument("prooffile")

    p = sub.add_parser("countermodel", help="search enumerated models for a "
                                            "counterexample to the goal sequent")
    p.add_argument("problem")
    p.add_argument("--max-worlds", type=int, required=True)
    p.add_argument("--emit-model", metavar="F")
    p.add_argument("--tbox-local", action="store_true")

    p = sub.add_parser("eval", help="evaluate a formula or sequent on a model")
    p.add_argument("--model", required=True, metavar="F")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--formula")
    group.add_argument("--sequent")
    p.add_argument("--tbox-local", action="store_true")
    p.add_argument("--raw", action="store_true",
                   help="skip frame validation when loading the model")

    p = sub.add_parser("axioms", help="write and verify the five axiom "
                                      "derivation trees")
    p.add_argument("--out", default=".", metavar="DIR")

    p = sub.add_parser("models", help="enumerate interpretations over a "
                                      "generic signature")
    p.add_argument("--worlds", type=int, required=True)
    p.add_argument("--atoms", type=int, default=0)
    p.add_argument("--roles", type=int, default=0)
    p.add_argument("--nominals", type=int, default=0)
    p.add_argument("--count-only", action="store_true")
    return parser


def _load_problem(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_problem(fh.read())


def _cmd_prove(args) -> int:
    problem = _load_problem(args.problem)
    goal = problem.sequent()
    result = prove(goal, max_depth=args.depth, max_visited=args.visited)
    if not result.proved:
        print(f"unknown within budget (depth {args.depth}, "
              f"visited {result.visited}): {render(goal)}")
        return EXIT_UNKNOWN
    print(f"proved (visited {result.visited}): {render(goal)}")
    if args.emit_proof:
        save_proof(result.tree, args.emit_proof)
        print(f"proof written to {args.emit_proof}")
    return EXIT_OK


def _sniff_is_tree(text: str) -> bool:
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            return stripped.startswith("{")
    return False


def _cmd_check(args) -> int:
    with open(args.prooffile, "r", encoding="utf-8") as fh:
        text = fh.read()
    if _sniff_is_tree(text):
        tree = load_proof(args.prooffile)
        result = check_proof(tree)
    else:
        proof = hilbert.parse_hilbert_proof(text)
        result = hilbert.check_hilbert_proof(proof)
    print(result)
    return EXIT_OK if result.ok else EXIT_REFUTED


def _cmd_countermodel(args) -> int:
    problem = _load_problem(args.problem)
    goal = problem.sequent()
    sig = signature_for(goal, args.max_worlds)
    model = find_countermodel(goal, sig, tbox_global=not args.tbox_local)
    if model is None:
        print(f"no countermodel with up to {args.max_worlds} worlds: {render(goal)}")
        return EXIT_OK
    print(f"countermodel with {len(model.worlds)} worlds: {render(goal)}")
    if args.emit_model:
        save_model(model, args.emit_model)
        print(f"model written to {args.emit_model}")
    else:
        print(json.dumps(model_to_dict(model), indent=2))
    return EXIT_REFUTED


def _cmd_eval(args) -> int:
    model, warnings = load_model(args.model, raw=args.raw)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.sequent is not None:
        s = parse_sequent(args.sequent)
        if sequent_valid(model, s, tbox_global=not args.tbox_local):
            print("sequent valid on model")
            return EXIT_OK
        print("sequent invalid on model")
        return EXIT_REFUTED
    f = parse_formula(args.formula)
    if isinstance(f, ConceptF):
        ext = extension(model, f.concept)
        missing = [w for w in model.worlds if w not in ext]
        if not missing:
            print("valid at all worlds")
            return EXIT_OK
        print(f"fails at {len(missing)} of {len(model.worlds)} worlds: "
              f"{sorted(missing, key=repr)}")
        return EXIT_REFUTED
    if satisfies(model, f):
        print("satisfied")
        return EXIT_OK
    print("not satisfied")
    return EXIT_REFUTED


def _cmd_axioms(args) -> int:
    os.makedirs(args.out, exist_ok=True)
    status = EXIT_OK
    for i, tree in sorted(golden.axiom_trees().items()):
        result = check_proof(tree)
        path = os.path.join(args.out, f"axiom{i}.prf")
        save_proof(tree, path)
        print(f"axiom{i}: {result} -> {path}")
        if not result.ok:
            status = EXIT_REFUTED
    return status


def _cmd_models(args) -> int:
    sig = Signature(
        atoms=tuple(f"A{i}" for i in range(1, args.atoms + 1)),
        roles=tuple(f"R{i}" for i in range(1, args.roles + 1)),
        nominals=tuple(f"x{i}" for i in range(1, args.nominals + 1)),
        max_worlds=args.worlds,
    )
    if args.count_only:
        print(sum(1 for _ in enumerate_models(sig)))
        return EXIT_OK
    for model in enumerate_models(sig):
        print(json.dumps(model_to_dict(model)))
    return EXIT_OK


_COMMANDS = {
    "prove": _cmd_prove,
    "check": _cmd_check,
    "countermodel": _cmd_countermodel,
    "eval": _cmd_eval,
    "axioms": _cmd_axioms,
    "models": _cmd_models,
}


def run(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (_CliError, ParseError, ModelFileError, ProofFileError,
            UnassignedNominalError, hilbert.SchemaError, OSError,
            ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
