"""``elemcalc`` command line: JSON in, JSON report out.

Exit status 0 means the computation finished and every certificate checked,
1 means a claim could not be certified or a precondition on the input failed,
and 2 means the input (or an I/O operation) was malformed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import selftest
from .annihil import INF, annihilate, verify_zero
from .elemop import ElemOp, as_operator_matrix, compose, minimize
from .exactnum import Matrix, det
from .invert import (
    biorthogonal_decomposition,
    biorthogonal_relations,
    classify_inverse,
    derivation_inverse,
    derivation_inverse_is_derivation,
    inverse_elemop,
    upsilon_inverse,
)
from .jsonio import (
    SchemaError,
    dumps,
    elemop_from_json,
    elemop_to_json,
    matrix_from_json,
    matrix_to_json,
    pair_from_json,
)
from .pencil import PencilHypothesisError, PencilSpace, canonical_form
from .shiftspace import pencil_nonregularity, verify_relations


class Uncertified(Exception):
    """A report was produced but one of its claims failed."""

    def __init__(self, report):
        super().__init__("claim not certified")
        self.report = report


def _jsonable(x):
    if isinstance(x, Matrix):
        return matrix_to_json(x)
    if isinstance(x, ElemOp):
        return elemop_to_json(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _term(A, B):
    return {"A": matrix_to_json(A), "B": matrix_to_json(B)}


# ---------------------------------------------------------------------------
# commands; each takes (parsed JSON or None, args) and returns a report dict


def cmd_length(data, args):
    phi = elemop_from_json(data)
    return {"length": phi.length()}


def cmd_apply(data, args):
    if not isinstance(data, dict) or "op" not in data or "T" not in data:
        raise SchemaError('input needs keys "op" and "T"')
    phi = elemop_from_json(data["op"])
    T = matrix_from_json(data["T"], square=True)
    if T.nrows != phi.n:
        raise SchemaError(f'"T" must be {phi.n}x{phi.n}')
    return {"result": matrix_to_json(phi(T))}


def cmd_compose(data, args):
    if not isinstance(data, dict) or "left" not in data or "right" not in data:
        raise SchemaError('input needs keys "left" and "right"')
    phi, psi = elemop_from_json(data["left"]), elemop_from_json(data["right"])
    if phi.n != psi.n:
        raise SchemaError("operators act on different sizes")
    out = minimize(compose(phi, psi))
    return {"composition": elemop_to_json(out), "length": out.length()}


def _inverse_report(rep):
    out = {
        "invertible": rep.invertible,
        "inverse": elemop_to_json(rep.inverse) if rep.inverse is not None else None,
        "inverse_length": rep.inverse_length,
        "predicted_length": rep.predicted_length,
        "provenance": rep.provenance,
        "details": _jsonable(rep.details),
    }
    if rep.predicted_length is not None and rep.inverse_length is not None:
        out["length_matches_prediction"] = rep.predicted_length == rep.inverse_length
        if not out["length_matches_prediction"]:
            raise Uncertified(out)
    return out


def cmd_invert(data, args):
    phi = elemop_from_json(data)
    out = _inverse_report(inverse_elemop(phi))
    out["operator_matrix_det"] = str(det(as_operator_matrix(phi)))
    return out


def cmd_upsilon(data, args):
    A, B = pair_from_json(data)
    return _inverse_report(upsilon_inverse(A, B))


def cmd_derivation_inverse(data, args):
    A, B = pair_from_json(data)
    out = _inverse_report(derivation_inverse(A, B))
    if out["invertible"]:
        special = derivation_inverse_is_derivation(A, B)
        if special is None:
            out["inverse_is_generalized_derivation"] = False
        else:
            lam, alpha, beta, C, D = special
            out["inverse_is_generalized_derivation"] = True
            out["generalized_derivation"] = {
                "lambda": str(lam),
                "alpha": str(alpha),
                "beta": str(beta),
                "C": matrix_to_json(C),
                "D": matrix_to_json(D),
            }
    return out


def cmd_annihilate(data, args):
    psi = elemop_from_json(data)
    rep = annihilate(psi, max_chain=args.max_chain)
    param = rep.pencil_parameter
    out = {"status": rep.status}
    if param is not None:
        out["pencil_parameter"] = INF if param == INF else str(param)
    if rep.chain_length is not None:
        out["chain_length"] = rep.chain_length
    if rep.witness is not None:
        out["witness"] = elemop_to_json(rep.witness)
    if rep.chain is not None:
        out["chain"] = {
            "E": [matrix_to_json(E) for E in rep.chain.E],
            "F": [matrix_to_json(F) for F in rep.chain.F],
        }
    if rep.witness is not None:
        out["composition_is_zero"] = verify_zero(rep.witness, psi)
        if not out["composition_is_zero"]:
            raise Uncertified(out)
    return out


def cmd_pencil_form(data, args):
    B1, B2 = pair_from_json(data, "B1", "B2", square=False)
    S = PencilSpace(B1, B2)
    cf = canonical_form(S)
    out = {
        "block_sizes": list(cf.block_sizes),
        "P": matrix_to_json(cf.P),
        "Q": matrix_to_json(cf.Q),
        "residual_B1": matrix_to_json(cf.residual_B1),
        "residual_B2": matrix_to_json(cf.residual_B2),
        "residual_shape": list(cf.residual_shape),
        "residual_rank": cf.residual_rank,
        "certified": cf.certify(S, seed=args.seed),
    }
    if not out["certified"]:
        raise Uncertified(out)
    return out


def cmd_decompose_invertible(data, args):
    delta = elemop_from_json(data)
    dec = biorthogonal_decomposition(delta, seed=args.seed)
    if dec is None:
        raise Uncertified({"found": False})
    out = {
        "found": True,
        "kind": dec.kind,
        "M1": _term(*dec.M1),
        "M2": _term(*dec.M2),
        "G": matrix_to_json(dec.G) if dec.G is not None else None,
    }
    if dec.inverse_terms is not None:
        out["inverse_terms"] = [_term(*t) for t in dec.inverse_terms]
        inv = inverse_elemop(delta).inverse
        rel = biorthogonal_relations(delta, inv, (dec.M1, dec.M2), dec.inverse_terms)
        out["relations"] = rel
        if not all(rel.values()):
            raise Uncertified(out)
    if ElemOp(delta.n, (dec.M1, dec.M2)) != delta:
        raise Uncertified(out)
    return out


def cmd_classify(data, args):
    return _jsonable(classify_inverse(elemop_from_json(data), seed=args.seed))


def cmd_shift_demo(data, args):
    N = args.max_index
    rel = verify_relations(N)
    regular = pencil_nonregularity(range(2, min(N, 16) + 1))
    out = {
        "relations": rel,
        "truncated_pencil": {str(k): v for k, v in regular.items()},
    }
    ok = all(v for k, v in rel.items() if k != "N") and all(
        v["identically_zero"] for v in regular.values()
    )
    if not ok:
        raise Uncertified(out)
    return out


def cmd_selftest(data, args):
    results = selftest.run(n=args.n, trials=args.trials, seed=args.seed)
    out = {"n": args.n, "trials": args.trials, "seed": args.seed, "suites": results}
    if any(r["failures"] for r in results.values()):
        raise Uncertified(out)
    return out


COMMANDS = {
    "length": (cmd_length, "minimal length of an operator"),
    "apply": (cmd_apply, "evaluate an operator on a matrix"),
    "compose": (cmd_compose, "compose two operators (left after right)"),
    "invert": (cmd_invert, "inverse of an operator via its operator matrix"),
    "upsilon": (cmd_upsilon, "inverse of T -> T + A T B"),
    "derivation-inverse": (cmd_derivation_inverse, "inverse of T -> A T - T B"),
    "annihilate": (cmd_annihilate, "left annihilator of a length-two operator"),
    "pencil-form": (cmd_pencil_form, "canonical form of a two-dimensional matrix space"),
    "decompose-invertible": (cmd_decompose_invertible, "two-term split of an invertible operator"),
    "classify": (cmd_classify, "structural cases of an invertible length-two operator"),
    "shift-demo": (cmd_shift_demo, "index-shift example on a countable basis"),
    "selftest": (cmd_selftest, "randomized invariant suites"),
}
NO_INPUT = {"shift-demo", "selftest"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="elemcalc", description="Exact elementary operators on rational matrices.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("-i", "--input", default="-", help="JSON input file (default: stdin)")
        sp.add_argument("-o", "--output", default="-", help="report file (default: stdout)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--n", type=int, default=3, help="largest matrix size for selftest")
        sp.add_argument("--trials", type=int, default=20)
        sp.add_argument("--max-chain", type=int, default=None)
        sp.add_argument("--max-index", type=int, default=64)
        sp.add_argument("--json", action="store_true", help="compact single-line JSON")
    return p


def _read_input(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _write_output(path, text):
    if path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    for flag in ("n", "trials", "max_index"):
        if getattr(args, flag) < 1:
            print(f"elemcalc: --{flag.replace('_', '-')} must be positive", file=sys.stderr)
            return 2
    if args.max_chain is not None and args.max_chain < 2:
        print("elemcalc: --max-chain must be at least 2", file=sys.stderr)
        return 2

    handler = COMMANDS[args.command][0]
    status = 0
    try:
        data = None if args.command in NO_INPUT else _read_input(args.input)
        report = handler(data, args)
    except (OSError, json.JSONDecodeError, SchemaError) as exc:
        print(f"elemcalc: {exc}", file=sys.stderr)
        return 2
    except Uncertified as exc:
        report, status = exc.report, 1
    except PencilHypothesisError as exc:
        report, status = {"error": str(exc), "hypothesis": exc.hypothesis}, 1
    except ValueError as exc:
        # preconditions of the requested construction (length, invertibility)
        report, status = {"error": str(exc)}, 1

    try:
        _write_output(args.output, dumps(report, compact=args.json))
    except OSError as exc:
        print(f"elemcalc: {exc}", file=sys.stderr)
        return 2
    if status:
        print(f"elemcalc: {args.command}: claim not certified or precondition failed", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
