"""Command-line front end.

Subcommands define fields, find/check normal elements, compute vectors,
run the prescription/composition constructions, and audit the exhaustive
oracles.  Human output is a small aligned table; --json emits one line of
machine-readable JSON with stable key order.  Every emitted element record
is re-verified in-process before printing.

Exit codes: 0 ok, 1 invalid input vector (or unsupported construction),
2 verification/audit failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construct, field, normal, oracle, poly2

EX_OK = 0
EX_INVALID = 1
EX_VERIFY = 2
EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="normbase",
        description="Construct, verify, and audit normal elements of GF(2^n) over GF(2) "
                    "with prescribed trace self-orthogonality vectors.")
    parser.add_argument("--json", action="store_true",
                        help="emit one line of machine-readable JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="field-level utilities")
    field_sub = p_field.add_subparsers(dest="subcommand", required=True)
    p_ffind = field_sub.add_parser("find", help="deterministic irreducible modulus")
    p_ffind.add_argument("--degree", type=int, required=True)

    p_normal = sub.add_parser("normal", help="find or check normal elements")
    normal_sub = p_normal.add_subparsers(dest="subcommand", required=True)
    p_nfind = normal_sub.add_parser("find", help="find a normal element")
    p_nfind.add_argument("--degree", type=int, required=True)
    p_nfind.add_argument("--modulus", help="defaults to the deterministic modulus")
    p_nfind.add_argument("--seed", type=int,
                         help="use seeded random search instead of the scan")
    p_ncheck = normal_sub.add_parser("check", help="check normality of an element")
    p_ncheck.add_argument("--degree", type=int, required=True)
    p_ncheck.add_argument("--modulus")
    p_ncheck.add_argument("--element", required=True)

    p_vector = sub.add_parser("vector", help="corresponding vector of an element")
    p_vector.add_argument("--degree", type=int, required=True)
    p_vector.add_argument("--modulus")
    p_vector.add_argument("--element", required=True)

    p_presc = sub.add_parser("prescribe",
                             help="construct a normal element with a prescribed vector")
    p_presc.add_argument("--degree", type=int, required=True)
    p_presc.add_argument("--modulus")
    p_presc.add_argument("--vector", required=True, help="comma-separated bits")
    p_presc.add_argument("--force-beta", help=argparse.SUPPRESS)

    p_comp = sub.add_parser("compose",
                            help="compose subfield prescriptions for n = 2^s * m")
    p_comp.add_argument("--degree", type=int, required=True)
    p_comp.add_argument("--modulus")
    p_comp.add_argument("--vector-pow2", required=True, help="length 2^s bits")
    p_comp.add_argument("--vector-odd", required=True, help="length m bits")

    p_w3 = sub.add_parser("weight3",
                          help="normal element with a weight-3 vector (4 | n)")
    p_w3.add_argument("--degree", type=int, required=True)
    p_w3.add_argument("--modulus")
    p_w3.add_argument("--i0", type=int, default=1)

    p_audit = sub.add_parser("audit", help="run an exhaustive oracle audit")
    p_audit.add_argument("--degree", type=int, required=True)
    p_audit.add_argument("--modulus")
    p_audit.add_argument("--mode", required=True,
                         choices=["characterization", "factorization", "necessary", "selfdual"])
    return parser


def _spec_from(args) -> field.FieldSpec:
    if getattr(args, "modulus", None):
        return field.FieldSpec(args.degree, poly2.parse_poly(args.modulus))
    return field.FieldSpec.from_degree(args.degree)


def _record(spec, element, vector, is_normal_flag, construction, verified):
    return {
        "degree": spec.n,
        "modulus": field.elem_to_hex(spec.modulus),
        "modulus_terms": poly2.poly_to_text(spec.modulus),
        "element": field.elem_to_hex(element),
        "vector": vector.coeffs(),
        "normal": is_normal_flag,
        "construction": construction,
        "verified": verified,
    }


def _emit(record: dict, as_json: bool):
    if as_json:
        print(json.dumps(record, separators=(",", ":")))
        return
    for key, value in record.items():
        if isinstance(value, list):
            value = ",".join(str(v) for v in value)
        elif isinstance(value, dict):
            value = " ".join(f"{k}={v}" for k, v in value.items())
        elif isinstance(value, bool):
            value = str(value).lower()
        print(f"{key:14} {value}")


def _emit_element(spec, element, construction, as_json) -> int:
    # recompute from scratch so "verified" means what it says
    vector = normal.corresponding_vector(spec, element)
    record = _record(spec, element, vector,
                     normal.is_normal(spec, element), construction, True)
    _emit(record, as_json)
    return EX_OK


def _cmd_field_find(args) -> int:
    spec = field.FieldSpec.from_degree(args.degree)
    record = {
        "degree": spec.n,
        "modulus": field.elem_to_hex(spec.modulus),
        "modulus_terms": poly2.poly_to_text(spec.modulus),
    }
    _emit(record, args.json)
    return EX_OK


def _cmd_normal_find(args) -> int:
    spec = _spec_from(args)
    if args.seed is not None:
        element = normal.find_normal(spec, "random", args.seed)
        construction = {"name": "find", "strategy": "random", "seed": args.seed}
    else:
        element = normal.find_normal(spec)
        construction = {"name": "find", "strategy": "scan"}
    return _emit_element(spec, element, construction, args.json)


def _cmd_normal_check(args) -> int:
    spec = _spec_from(args)
    element = field.parse_elem(spec, args.element)
    return _emit_element(spec, element, {"name": "check"}, args.json)


def _cmd_vector(args) -> int:
    spec = _spec_from(args)
    element = field.parse_elem(spec, args.element)
    return _emit_element(spec, element, {"name": "vector"}, args.json)


def _cmd_prescribe(args) -> int:
    spec = _spec_from(args)
    target = poly2.parse_vector(args.vector)
    beta = field.parse_elem(spec, args.force_beta) if args.force_beta else None
    steps = construct.prescribe_steps(spec, target, beta)
    construction = {
        "name": "prescribe",
        "base": field.elem_to_hex(steps.base),
        "change": ",".join(str(b) for b in steps.change.coeffs()),
    }
    return _emit_element(spec, steps.element, construction, args.json)


def _cmd_compose(args) -> int:
    spec = _spec_from(args)
    a = poly2.parse_vector(args.vector_pow2)
    b = poly2.parse_vector(args.vector_odd)
    gamma, _ = construct.compose(spec, a, b)
    construction = {"name": "compose", "vector_pow2": str(a), "vector_odd": str(b)}
    return _emit_element(spec, gamma, construction, args.json)


def _cmd_weight3(args) -> int:
    spec = _spec_from(args)
    gamma, _ = construct.weight3(spec, args.i0)
    construction = {"name": "weight3", "i0": args.i0}
    return _emit_element(spec, gamma, construction, args.json)


def _cmd_audit(args) -> int:
    spec = _spec_from(args)
    if args.mode == "characterization":
        report = oracle.check_characterization(spec)
        lines = report.lines()
        ok = report.ok
        payload = {
            "audit": "characterization",
            "degree": spec.n,
            "achievable": report.achievable_count,
            "predicted": report.predicted_count,
            "ok": ok,
        }
    elif args.mode == "factorization":
        from .factor import factor_2power, in_G, iter_H
        failures = []
        count = 0
        for h in iter_H(spec.n):
            count += 1
            matches = oracle.brute_factor(h, restrict_to_G=True)
            g = factor_2power(h)
            if len(matches) != 1 or matches[0] != g or not in_G(g):
                failures.append(str(h))
        ok = not failures
        lines = [f"factorization audit, n = {spec.n}: {count} targets, "
                 f"{len(failures)} violations"]
        lines += [f"  violation at h = {h}" for h in failures]
        payload = {"audit": "factorization", "degree": spec.n,
                   "targets": count, "violations": len(failures), "ok": ok}
    elif args.mode == "necessary":
        failures = []
        count = 0
        for _, vec in oracle.enumerate_normal(spec):
            count += 1
            verdict = construct.necessary_conditions(spec.n, vec)
            if construct.reasons_failed(verdict):
                failures.append(str(vec))
        ok = not failures
        lines = [f"necessary-conditions audit, n = {spec.n}: {count} normal elements, "
                 f"{len(failures)} violations"]
        lines += [f"  violation at vector {v}" for v in failures]
        payload = {"audit": "necessary", "degree": spec.n,
                   "normal_elements": count, "violations": len(failures), "ok": ok}
    else:
        report = oracle.check_self_dual_existence(args.degree)
        lines = report.lines()
        ok = report.ok
        payload = {
            "audit": "selfdual",
            "max_degree": args.degree,
            "rows": [{"n": r.n, "exists": r.exists, "expected": r.expected}
                     for r in report.rows],
            "ok": ok,
        }
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print("\n".join(lines))
    return EX_OK if ok else EX_VERIFY


_COMMANDS = {
    ("field", "find"): _cmd_field_find,
    ("normal", "find"): _cmd_normal_find,
    ("normal", "check"): _cmd_normal_check,
    ("vector", None): _cmd_vector,
    ("prescribe", None): _cmd_prescribe,
    ("compose", None): _cmd_compose,
    ("weight3", None): _cmd_weight3,
    ("audit", None): _cmd_audit,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = _COMMANDS[(args.command, getattr(args, "subcommand", None))]
    try:
        return handler(args)
    except construct.InvalidVectorError as exc:
        print(str(exc), file=sys.stderr)
        return EX_INVALID
    except (ValueError, ZeroDivisionError) as exc:
        print(f"normbase: {exc}", file=sys.stderr)
        return EX_INVALID
    except RuntimeError as exc:
        print(f"normbase: {exc}", file=sys.stderr)
        return EX_VERIFY


if __name__ == "__main__":
    sys.exit(main())
