"""Command line front end.

JSON objects come in on a file argument (or "-" for stdin) and results
go out as JSON on stdout.  Exit codes: 0 when every requested check
passed or the requested object was produced, 1 when a checked property
failed (the witness is printed on stdout), 2 for malformed input (the
message goes to stderr).  The float tolerance can be overridden through
the HFM_EPS environment variable.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from itertools import combinations
from typing import Optional

from .axioms import check_hyperfield_axioms
from .circuits import CircuitSignature, check_C0_C2, check_weak_elimination, classify
from .corpus import corpus_entries, run_demo
from .errors import (GPInconsistencyError, InputError, InvalidDualPairError,
                     RatioInconsistencyError)
from .experiments import config_from_json, run_perfection_experiment
from .gp import (GPFunction, PlueckerVector, check_gp_strong, check_gp_weak,
                 circuits_from_gp, gp_from_dual_pair, pluecker_relation_check)
from .matroids import validate_circuits
from .serialization import hyperfield_from_id, parse_text, serialize
from .transforms import (contract_gp, delete_gp, dual_circuits, dual_gp,
                         minor_circuits, pushforward_circuits, pushforward_gp,
                         rational_padic, rational_sign, to_krasner)

_PROPERTY_ERRORS = (GPInconsistencyError, InvalidDualPairError,
                    RatioInconsistencyError)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load(path: str):
    return parse_text(_read_text(path), path)


def _emit(obj) -> None:
    print(serialize(obj))


def _want(obj, kinds: tuple, what: str):
    if not isinstance(obj, kinds):
        raise InputError(f"expected {what}, got {type(obj).__name__}")
    return obj


def _split_labels(raw: Optional[str], ground) -> tuple:
    if not raw:
        return ()
    by_str = {str(label): label for label in ground}
    picked = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            continue
        if token not in by_str:
            raise InputError(f"label {token!r} is not in the ground set")
        picked.append(by_str[token])
    return tuple(picked)


# -- command bodies ----------------------------------------------------------


def _cmd_axioms(args) -> int:
    hf = hyperfield_from_id(args.hyperfield, "--hyperfield")
    report = check_hyperfield_axioms(hf, sample_budget=args.budget,
                                     seed=args.seed)
    _emit(report.as_json())
    return 0 if report.ok else 1


def _cmd_check_gp(args) -> int:
    phi = _want(_load(args.file), (GPFunction,), "a Grassmann-Pluecker object")
    run_weak = args.strength in ("weak", "both")
    run_strong = args.strength in ("strong", "both")
    out = {"hyperfield": str(phi.hyperfield), "rank": phi.rank,
           "ground_set": list(phi.ground.labels)}
    failed = False
    if run_weak:
        witness = check_gp_weak(phi)
        out["weak"] = {"ok": witness is None, "witness": witness}
        failed = failed or witness is not None
    if run_strong:
        witness = check_gp_strong(phi)
        out["strong"] = {"ok": witness is None, "witness": witness}
        failed = failed or witness is not None
    _emit(out)
    return 1 if failed else 0


def _cmd_check_circuits(args) -> int:
    sig = _want(_load(args.file), (CircuitSignature,), "a circuit signature")
    out = {"hyperfield": str(sig.hyperfield),
           "ground_set": list(sig.ground.labels)}
    witness = check_C0_C2(sig)
    out["supports"] = {"ok": witness is None, "witness": witness}
    if witness is None:
        violation = validate_circuits(sig.ground, sig.supports())
        witness = None if violation is None else violation.as_json()
        out["underlying_matroid"] = {"ok": witness is None, "witness": witness}
    if witness is None:
        witness = check_weak_elimination(sig, workers=args.workers)
        out["weak_elimination"] = {"ok": witness is None, "witness": witness}
    _emit(out)
    return 1 if witness is not None else 0


def _cmd_classify(args) -> int:
    sig = _want(_load(args.file), (CircuitSignature,), "a circuit signature")
    result = classify(sig, k_max=args.kmax, workers=args.workers)
    _emit(result)
    return 0 if result.ok else 1


def _cmd_circuits(args) -> int:
    phi = _want(_load(args.file), (GPFunction,), "a Grassmann-Pluecker object")
    witness = check_gp_weak(phi)
    if witness is not None:
        _emit({"error": "input fails the weak relation check",
               "witness": witness})
        return 1
    _emit(circuits_from_gp(phi))
    return 0


def _cmd_gp(args) -> int:
    pair = _load(args.file)
    if not (isinstance(pair, tuple) and len(pair) == 2
            and all(isinstance(s, CircuitSignature) for s in pair)):
        raise InputError("expected an object with circuits and cocircuits")
    _emit(gp_from_dual_pair(pair[0], pair[1]))
    return 0


def _cmd_dual(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, GPFunction):
        _emit(dual_gp(obj))
    elif isinstance(obj, CircuitSignature):
        _emit(dual_circuits(obj))
    else:
        raise InputError("expected a Grassmann-Pluecker object or a "
                         "circuit signature")
    return 0


def _cmd_minor(args) -> int:
    obj = _load(args.file)
    if not args.delete and not args.contract:
        raise InputError("nothing to do: pass --delete and/or --contract")
    if isinstance(obj, GPFunction):
        deleted = _split_labels(args.delete, obj.ground)
        contracted = _split_labels(args.contract, obj.ground)
        if set(deleted) & set(contracted):
            raise InputError("a label cannot be both deleted and contracted")
        result = obj
        if deleted:
            result = delete_gp(result, deleted)
        if contracted:
            result = contract_gp(result, contracted)
        _emit(result)
    elif isinstance(obj, CircuitSignature):
        deleted = _split_labels(args.delete, obj.ground)
        contracted = _split_labels(args.contract, obj.ground)
        _emit(minor_circuits(obj, deleted=deleted, contracted=contracted))
    else:
        raise InputError("expected a Grassmann-Pluecker object or a "
                         "circuit signature")
    return 0


def _resolve_hom(name: str, source):
    if name == "krasner":
        return to_krasner(source)
    if name == "sign":
        hom = rational_sign()
    elif name.startswith("padic:"):
        raw = name[len("padic:"):]
        try:
            p = int(raw)
        except ValueError:
            raise InputError(f"--hom padic wants an integer prime, got {raw!r}") from None
        hom = rational_padic(p)
    else:
        raise InputError(f"unknown homomorphism {name!r} "
                         "(use krasner, sign, or padic:<p>)")
    if hom.source != source:
        raise InputError(f"homomorphism {name!r} starts at {hom.source}, "
                         f"but the input lives over {source}")
    return hom


def _cmd_pushforward(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, GPFunction):
        hom = _resolve_hom(args.hom, obj.hyperfield)
        _emit(pushforward_gp(hom, obj))
    elif isinstance(obj, CircuitSignature):
        hom = _resolve_hom(args.hom, obj.hyperfield)
        _emit(pushforward_circuits(hom, obj))
    else:
        raise InputError("expected a Grassmann-Pluecker object or a "
                         "circuit signature")
    return 0


def _cmd_dressian(args) -> int:
    phi = _want(_load(args.file), (GPFunction,), "a Grassmann-Pluecker object")
    if phi.hyperfield.kind != "tropical":
        raise InputError("the three-term relation sweep is defined for "
                         "tropical input")
    p = PlueckerVector(phi)
    labels = phi.ground.labels
    checked = 0
    first_failure = None
    for I in combinations(labels, phi.rank + 1):
        for J in combinations(labels, phi.rank - 1):
            if len(set(I) - set(J)) != 3:
                continue
            checked += 1
            if first_failure is None and not pluecker_relation_check(p, I, J):
                first_failure = {"I": list(I), "J": list(J)}
    _emit({"relations_checked": checked, "ok": first_failure is None,
           "witness": first_failure})
    return 0 if first_failure is None else 1


def _cmd_demo(args) -> int:
    if args.list:
        _emit([{"name": e.name, "kind": e.kind, "summary": e.summary}
               for e in corpus_entries()])
        return 0
    if not args.name:
        raise InputError("pass a demo name or --list")
    report = run_demo(args.name)
    _emit(report)
    return 0 if report["ok"] else 1


def _cmd_experiment(args) -> int:
    try:
        raw = json.loads(_read_text(args.config))
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.config}: invalid JSON ({exc})") from None
    cfg = config_from_json(raw)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    report = run_perfection_experiment(cfg)
    _emit(report)
    bad = report["contract_violation"] or report["orthogonality_failures"]
    return 1 if bad else 0


# -- parser wiring ------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfm",
        description="Check and transform matroid data over hyperfields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="run the hyperfield axiom suite")
    p.add_argument("--hyperfield", required=True,
                   help="krasner | sign | tropical | triangle | phase | "
                        "phase[identity] | rational | gf(p)")
    p.add_argument("--budget", type=int, default=24,
                   help="sample pool size for infinite hyperfields")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=_cmd_axioms)

    p = sub.add_parser("check-gp", help="weak/strong relation checks")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--weak", dest="strength", action="store_const",
                       const="weak", default="both")
    group.add_argument("--strong", dest="strength", action="store_const",
                       const="strong")
    group.add_argument("--both", dest="strength", action="store_const",
                       const="both")
    p.set_defaults(run=_cmd_check_gp)

    p = sub.add_parser("check-circuits",
                       help="support axioms, underlying matroid, and weak "
                            "elimination for a circuit signature")
    p.add_argument("file")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(run=_cmd_check_circuits)

    p = sub.add_parser("classify",
                       help="full verdict: Strong, WeakOnly, "
                            "InvalidSignature, or UnderlyingNotMatroid")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, default=None,
                   help="cap the elimination family size")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("circuits",
                       help="derive the circuit signature of a weak-valid "
                            "Grassmann-Pluecker object")
    p.add_argument("file")
    p.set_defaults(run=_cmd_circuits)

    p = sub.add_parser("gp", help="rebuild a rank-(|E|-|cocircuit overlap|) "
                                  "function from a circuit/cocircuit pair")
    p.add_argument("file")
    p.set_defaults(run=_cmd_gp)

    p = sub.add_parser("dual", help="dualize a function or signature")
    p.add_argument("file")
    p.set_defaults(run=_cmd_dual)

    p = sub.add_parser("minor", help="delete and/or contract labels")
    p.add_argument("file")
    p.add_argument("--delete", default="", metavar="a,b")
    p.add_argument("--contract", default="", metavar="c")
    p.set_defaults(run=_cmd_minor)

    p = sub.add_parser("pushforward",
                       help="apply a coefficient homomorphism")
    p.add_argument("file")
    p.add_argument("--hom", required=True, metavar="krasner|sign|padic:<p>")
    p.set_defaults(run=_cmd_pushforward)

    p = sub.add_parser("dressian",
                       help="three-term relation sweep for tropical input")
    p.add_argument("file")
    p.set_defaults(run=_cmd_dressian)

    p = sub.add_parser("demo", help="run a built-in corpus entry")
    p.add_argument("name", nargs="?")
    p.add_argument("--list", action="store_true")
    p.set_defaults(run=_cmd_demo)

    p = sub.add_parser("experiment", help="randomized perfection sweep")
    p.add_argument("--config", required=True,
                   help="JSON file with hyperfield, bounds, samples, seed")
    p.add_argument("--seed", type=int, default=None,
                   help="override the config seed")
    p.set_defaults(run=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _PROPERTY_ERRORS as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
