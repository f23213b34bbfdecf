"""Command-line front end: one JSON job in, one JSON report out.

Exit codes: 0 completed (whatever the mathematical verdict), 1 input
error, 2 inconclusive or budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .closure import DEFAULT_SEMIGROUP_CAP, close, is_nilpotent_algebra
from .errors import (
    CapExceeded,
    DimensionMismatch,
    DomainMismatch,
    HypothesisViolation,
    InconclusiveError,
    InputError,
    RankOneNotFound,
)
from .linalg import Matrix, is_nilpotent
from .module_structure import commutant, hyperinvariant_check, is_irreducible, triangularize
from .serialize import (
    matrix_from_json,
    matrix_to_json,
    parse_field,
    poly_to_json,
    subspace_to_json,
    vector_to_json,
)
from .theorems import (
    burnside_certify,
    burnside_field_audit,
    counterexample_algebra,
    semigroup_ideal_audit,
    wedderburn_matrix_verify,
    wedderburn_verify,
)

SUBCOMMANDS = {
    "close": "closure",
    "irr": "irreducible",
    "tri": "triangularize",
    "comm": "commutant",
    "nil": "nilpotency",
    "burnside": "burnside",
    "audit-field": "field-audit",
    "counterexample": "counterexample",
    "wedderburn": "wedderburn",
    "audit-ideal": "ideal-audit",
    "hyper": "hyperinvariant",
}

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2


@dataclass
class Job:
    command: str
    field: object
    n: int
    generators: list
    unital: bool = False
    seed: int = 0
    options: dict = field(default_factory=dict)
    raw_options: dict = field(default_factory=dict)

    def canonical(self):
        out = {
            "command": self.command,
            "field": self.field.descriptor(),
            "n": self.n,
            "generators": [matrix_to_json(g) for g in self.generators],
            "unital": self.unital,
            "seed": self.seed,
        }
        out.update(self.raw_options)
        return out

    def hash(self):
        text = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode()).hexdigest()


def _int(obj, name, minimum=None):
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise InputError(f"{name}: expected an integer, got {obj!r}")
    if minimum is not None and obj < minimum:
        raise InputError(f"{name}: must be >= {minimum}")
    return obj


def _matrices(F, objs, n, name):
    if not isinstance(objs, list):
        raise InputError(f"{name}: expected a list of matrices")
    return [matrix_from_json(F, m, n, f"{name}[{i}]") for i, m in enumerate(objs)]


def parse_job(source, command=None, overrides=None) -> Job:
    """Validate a job from a JSON string, a dict or a file path."""
    if isinstance(source, dict):
        doc = source
    else:
        text = source
        if not source.lstrip().startswith("{"):
            try:
                with open(source, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"cannot read job file: {exc}") from None
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError("job must be a JSON object")
    doc = dict(doc)
    for key, value in (overrides or {}).items():
        if value is not None:
            doc[key] = value
    cmd = doc.get("command", command)
    if command is not None and cmd != command:
        raise InputError(f"command: job says {cmd!r} but the subcommand runs {command!r}")
    if cmd not in SUBCOMMANDS.values():
        raise InputError(f"command: unknown command {cmd!r}")
    if "field" not in doc:
        raise InputError("field: missing")
    F = parse_field(doc["field"])
    gens_raw = doc.get("generators", [])
    n = doc.get("n")
    if n is None:
        first = next((m for m in gens_raw if isinstance(m, dict) and "rows" in m), None)
        if first is None:
            raise InputError("n: missing and not inferable from generators")
        n = first["rows"]
    n = _int(n, "n", 1)
    gens = _matrices(F, gens_raw, n, "generators")
    unital = doc.get("unital", False)
    if not isinstance(unital, bool):
        raise InputError("unital: expected true or false")
    seed = _int(doc.get("seed", 0), "seed", 0)
    options, raw = {}, {}
    for key in ("nilpotents", "semigroup", "ideal", "samples"):
        if key in doc:
            options[key] = _matrices(F, doc[key], n, key)
            raw[key] = [matrix_to_json(m) for m in options[key]]
    if "matrix" in doc:
        options["matrix"] = matrix_from_json(F, doc["matrix"], n, "matrix")
        raw["matrix"] = matrix_to_json(options["matrix"])
    for key, minimum in (("k", 2), ("trials", 0), ("cap", 1)):
        if key in doc:
            options[key] = raw[key] = _int(doc[key], key, minimum)
    if "mode" in doc:
        if doc["mode"] not in ("span", "algebra"):
            raise InputError("mode: expected 'span' or 'algebra'")
        options["mode"] = raw["mode"] = doc["mode"]
    return Job(cmd, F, n, gens, unital, seed, options, raw)


# -- command runners; each returns a dict with at least "status" --

def _require_gens(job):
    if not job.generators:
        raise InputError("generators: at least one matrix is required for this command")


def _run_closure(job):
    A = close(job.generators, unital=job.unital, field=job.field, n=job.n)
    v = is_nilpotent_algebra(A)
    return {"status": "completed", "dimension": A.dim, "basis": [matrix_to_json(B) for B in A.basis],
            "unital": job.unital, "nilpotent": {"verdict": v.holds, "index": v.info["index"],
                                                "chain": v.info["chain"]}}


def _certificate_json(F, info):
    out = {}
    for key, value in info.items():
        if isinstance(value, Matrix):
            out[key] = matrix_to_json(value)
        elif key in ("kernel_vector", "dual_vector"):
            out[key] = vector_to_json(F, value)
        elif key == "factor":
            out[key] = poly_to_json(value)
        elif isinstance(value, tuple):
            out[key] = list(value)
        else:
            out[key] = value
    return out


def _run_irreducible(job):
    v = is_irreducible(job.generators, job.field, job.n, seed=job.seed)
    return {"status": "irreducible" if v.holds else "reducible", "witness": subspace_to_json(v.witness),
            "certificate": _certificate_json(job.field, v.info)}


def _run_triangularize(job):
    r = triangularize(job.generators, job.field, job.n, seed=job.seed)
    out = {"status": r.status, "chainDims": r.chain.dims}
    F = job.field
    if r.triangularized:
        out["P"] = matrix_to_json(r.P)
        out["innerEigenvalues"] = {f"gen{i}": [F.format(x) for x in eig] for i, eig in enumerate(r.inner_eigenvalues)}
        out["triangularForms"] = [matrix_to_json(T) for T in r.triangular_forms]
    else:
        w = r.witness
        out["witness"] = {"lower": subspace_to_json(w["lower"]), "upper": subspace_to_json(w["upper"]),
                          "dim": w["dim"]}
    return out


def _run_commutant(job):
    C = commutant(job.generators, job.field, job.n)
    return {"status": "completed", "dimension": C.dim, "basis": [matrix_to_json(B) for B in C.basis]}


def _run_nilpotency(job):
    A = close(job.generators, unital=job.unital, field=job.field, n=job.n)
    v = is_nilpotent_algebra(A)
    members = []
    for g in job.generators:
        m = is_nilpotent(g)
        members.append({"nilpotent": m.holds, "index": m.info["index"]})
    return {"status": "nilpotent" if v.holds else "not-nilpotent", "dimension": A.dim,
            "chain": v.info["chain"], "index": v.info["index"], "generators": members}


def _run_burnside(job):
    _require_gens(job)
    r = burnside_certify(job.generators, job.field, job.n, unital=job.unital, seed=job.seed)
    out = {"status": r.status, "n": r.n, "dimension": r.dimension, "target": r.n * r.n,
           "hypotheses": r.hypotheses, "reason": r.reason}
    if r.hypothesis_witness is not None:
        out["hypothesisWitness"] = matrix_to_json(r.hypothesis_witness)
    if r.irreducibility is not None:
        out["irreducible"] = r.irreducibility.holds
        out["witness"] = subspace_to_json(r.irreducibility.witness)
    if r.similarity is not None:
        out["similarity"] = matrix_to_json(r.similarity.P)
        out["normalizers"] = [{k: (job.field.format(v) if k in ("a", "b") else v) for k, v in d.items()}
                              for d in r.similarity.normalizers]
    return out


def _run_field_audit(job):
    a = burnside_field_audit(job.field, job.n, seed=job.seed)
    conds = {}
    for key, c in a.conditions.items():
        entry = {"holds": c["holds"]}
        for k2, v in c.items():
            if k2 == "holds":
                continue
            if isinstance(v, Matrix):
                entry[k2] = matrix_to_json(v)
            elif k2 == "min_poly":
                entry[k2] = poly_to_json(v)
            elif k2 == "witnesses":
                entry[k2] = {str(k): poly_to_json(f) for k, f in v.items()}
            else:
                entry[k2] = v
        conds[key] = entry
    return {"status": "completed", "allFail": not any(c["holds"] for c in a.conditions.values()),
            "conditions": conds, "k": a.k, "poly": poly_to_json(a.poly),
            "counterexampleDimension": a.algebra.dim}


def _run_counterexample(job):
    n = job.n
    k = job.options.get("k")
    if k is None:
        k = min(d for d in range(2, n + 1) if n % d == 0) if n > 1 else None
    if k is None:
        raise InputError("n must be > 1 for a counterexample")
    alg = counterexample_algebra(job.field, n, k, seed=job.seed)
    c = alg.construction
    return {"status": "certified", "dimension": alg.dim, "expected": (n // k) ** 2 * k, "k": k,
            "poly": poly_to_json(c["poly"]), "matrix": matrix_to_json(c["matrix"]), "irreducible": True,
            "basis": [matrix_to_json(B) for B in alg.basis]}


def _wedderburn_json(r, F):
    out = {"status": r.status, "reason": r.reason, "dimension": r.dimension, "index": r.index, "chain": r.chain}
    w = r.witness
    if isinstance(w, Matrix):
        out["witness"] = matrix_to_json(w)
    elif isinstance(w, tuple):
        out["witness"] = [matrix_to_json(m) for m in w]
    elif w is not None:
        out["witness"] = w
    return out


def _run_wedderburn(job):
    mode = job.options.get("mode", "span" if "nilpotents" in job.options else "algebra")
    if mode == "span":
        N = job.options.get("nilpotents", job.generators)
        if not N:
            raise InputError("nilpotents: at least one matrix is required")
        r = wedderburn_verify(N, job.field, job.n)
    else:
        A = close(job.generators, unital=job.unital, field=job.field, n=job.n)
        r = wedderburn_matrix_verify(A, seed=job.seed)
    out = _wedderburn_json(r, job.field)
    out["mode"] = mode
    return out


def _run_ideal_audit(job):
    S = job.options.get("semigroup", job.generators)
    J = job.options.get("ideal", S)
    if not S:
        raise InputError("semigroup: at least one generator is required")
    try:
        a = semigroup_ideal_audit(S, J, job.field, job.n, trials=job.options.get("trials", 100),
                                  seed=job.seed, cap=job.options.get("cap", DEFAULT_SEMIGROUP_CAP),
                                  samples=job.options.get("samples", ()))
    except HypothesisViolation as exc:
        return {"status": "inapplicable", "reason": str(exc)}
    return {"status": a.status, "semigroupSize": a.semigroup_size, "idealSize": a.ideal_size,
            "algebraDimension": a.algebra_dim, "zeroSatisfies": a.zero_satisfies,
            "failures": a.failures, "trials": a.trials,
            "counterexamples": {c: matrix_to_json(m) for c, m in a.counterexamples.items()}}


def _run_hyperinvariant(job):
    A = job.options.get("matrix") or (job.generators[0] if job.generators else None)
    if A is None:
        raise InputError("matrix: a matrix (or one generator) is required")
    v = hyperinvariant_check(A, seed=job.seed)
    return {"status": "no-hyperinvariant-subspace" if v.holds else "hyperinvariant-subspace",
            "minPoly": poly_to_json(v.info["min_poly"]), "commutantDimension": v.info["commutant_dim"],
            "witness": subspace_to_json(v.witness)}


RUNNERS = {
    "closure": _run_closure,
    "irreducible": _run_irreducible,
    "triangularize": _run_triangularize,
    "commutant": _run_commutant,
    "nilpotency": _run_nilpotency,
    "burnside": _run_burnside,
    "field-audit": _run_field_audit,
    "counterexample": _run_counterexample,
    "wedderburn": _run_wedderburn,
    "ideal-audit": _run_ideal_audit,
    "hyperinvariant": _run_hyperinvariant,
}


def run(job: Job):
    """(report, exit code) for a parsed job."""
    header = {"tool": "matalg", "version": __version__, "command": job.command,
              "jobHash": job.hash(), "seed": job.seed}
    try:
        body = RUNNERS[job.command](job)
        code = EXIT_OK
    except (InconclusiveError, CapExceeded, RankOneNotFound) as exc:
        body = {"status": "inconclusive", "reason": str(exc)}
        code = EXIT_INCONCLUSIVE
    except (InputError, DimensionMismatch, DomainMismatch) as exc:
        body = {"status": "error", "reason": str(exc)}
        code = EXIT_INPUT
    report = dict(body)
    report.update(header)
    return report, code


def dumps(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def emit_summary(report, stream=None):
    """One stable paragraph describing the report."""
    stream = stream or sys.stderr
    parts = [f"{report.get('command')}: {report.get('status')}"]
    if "chainDims" in report:
        parts.append("chain " + "<".join(str(d) for d in report["chainDims"]))
    if "innerEigenvalues" in report:
        eig = "; ".join(f"{k}: {', '.join(map(str, v))}" for k, v in sorted(report["innerEigenvalues"].items()))
        parts.append(f"inner eigenvalues per generator: {eig}")
    w = report.get("witness")
    if isinstance(w, dict) and "dim" in w and "ambient" in w:
        parts.append(f"invariant subspace of dim {w['dim']} found")
    if "dimension" in report:
        parts.append(f"dimension {report['dimension']}")
    if "conditions" in report:
        verdict = "all fail" if report.get("allFail") else "some hold"
        parts.append(f"field audit conditions (i)-(v): {verdict}; witness k={report.get('k')}")
    if "reason" in report and report["reason"]:
        parts.append(f"reason: {report['reason']}")
    parts.append(f"seed {report.get('seed')}")
    text = "; ".join(parts)
    print(text, file=stream)
    return text


def build_parser():
    parser = argparse.ArgumentParser(prog="matalg", description="Exact analysis of matrix algebras.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--in", dest="path", help="job file (default: standard input)")
        p.add_argument("--field", help='field override, e.g. "Q", "H", "GF(7)"')
        p.add_argument("--n", type=int, help="matrix size override")
        p.add_argument("--seed", type=int, help="master seed (default 0)")
        p.add_argument("--trials", type=int, help="random trials for audits")
        p.add_argument("--cap", type=int, help="semigroup closure cap")
        p.add_argument("--unital", action="store_true", default=None, help="adjoin the identity")
        p.add_argument("--quiet", action="store_true", help="no summary on standard error")
    return parser


def main(argv=None, stdin=None, stdout=None):
    args = build_parser().parse_args(argv)
    stdout = stdout or sys.stdout
    command = SUBCOMMANDS[args.subcommand]
    overrides = {"field": args.field, "n": args.n, "seed": args.seed, "trials": args.trials,
                 "cap": args.cap, "unital": args.unital}
    try:
        source = args.path if args.path else (stdin or sys.stdin).read()
        if args.path is None and not source.strip():
            raise InputError("empty job on standard input")
        job = parse_job(source, command, overrides)
    except InputError as exc:
        report = {"tool": "matalg", "version": __version__, "command": command, "status": "error",
                  "reason": str(exc)}
        stdout.write(dumps(report) + "\n")
        if not args.quiet:
            emit_summary(report)
        return EXIT_INPUT
    report, code = run(job)
    stdout.write(dumps(report) + "\n")
    if not args.quiet:
        emit_summary(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
