"""Command-line front end.

Queries are JSON objects {id, family, payload}; answers echo the id, the
fact-base version, the invariants with value and trace, and any warnings.
Output is deterministic: identical queries produce byte-identical answers
for the same fact-base version.  Exit codes: 0 success, 2 input error,
3 internal consistency failure.

Payload schemas are documented in docs/schemas.md.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import spaceform, sphere, stiefel, torus, wecken
from .errors import ConsistencyError, DescriptorError, FactBaseError
from .lattice import IntMatrix
from .projective import (
    ProjectiveField,
    ProjectivePairDescriptor,
    projective_invariants,
)
from .tables import FactBase, get_factbase, lint_text, set_factbase
from .verdict import (
    INFINITE,
    UNKNOWN,
    Fact,
    InvariantBundle,
    Truth,
    Verdict,
    user_fact,
    validate_bundle,
)

FAMILIES = ("torus", "sphere", "spaceform", "projective", "stiefel",
            "wecken", "fixedpoint")


class QueryError(DescriptorError):
    """Payload failed schema validation; message names the field."""


# -- payload readers -------------------------------------------------------


def _need(payload: dict, field: str, kind, where: str):
    if field not in payload:
        raise QueryError(f"{where}: missing field {field!r}")
    value = payload[field]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise QueryError(f"{where}: field {field!r} must be an integer")
    if kind is bool and not isinstance(value, bool):
        raise QueryError(f"{where}: field {field!r} must be a boolean")
    if kind is str and not isinstance(value, str):
        raise QueryError(f"{where}: field {field!r} must be a string")
    return value


def _fact(payload: dict, field: str, where: str) -> Fact:
    raw = payload.get(field, "unknown")
    if not isinstance(raw, str):
        raise QueryError(f"{where}: field {field!r} must be "
                         f"'yes', 'no' or 'unknown'")
    try:
        return user_fact(raw)
    except DescriptorError:
        raise QueryError(f"{where}: field {field!r} must be "
                         f"'yes', 'no' or 'unknown'") from None


def _matrix(payload: dict, field: str, where: str) -> IntMatrix:
    raw = _need(payload, field, list, where)
    if (not isinstance(raw, list) or not raw
            or not all(isinstance(row, list) for row in raw)):
        raise QueryError(f"{where}: field {field!r} must be a nonempty "
                         f"list of rows")
    try:
        return IntMatrix.from_rows(raw)
    except DescriptorError as exc:
        raise QueryError(f"{where}: field {field!r}: {exc}") from None


# -- per-family dispatch ----------------------------------------------------


def _run_torus(payload: dict):
    where = "torus payload"
    d = torus.TorusPairDescriptor(
        m=_need(payload, "m", int, where),
        n=_need(payload, "n", int, where),
        h1_matrix=_matrix(payload, "h1", where),
        source_is_torus=_need(payload, "source_is_torus", bool, where),
        top_cohomology_pullback_nonzero=_fact(
            payload, "top_pullback_nonzero", where),
        det_kills_top=_fact(payload, "det_kills_top", where),
    )
    bundle = torus.torus_invariants(d)
    warnings = [] if d.source_is_torus else [torus.bound_chain_note(d)]
    return bundle, d.n, warnings


def _run_sphere(payload: dict):
    where = "sphere payload"
    m = _need(payload, "m", int, where)
    n = _need(payload, "n", int, where)
    degrees = None
    if "degrees" in payload:
        raw = payload["degrees"]
        if (not isinstance(raw, list) or len(raw) != 2 or any(
                isinstance(x, bool) or not isinstance(x, int) for x in raw)):
            raise QueryError(f"{where}: field 'degrees' must be a pair of "
                             f"integers")
        degrees = (raw[0], raw[1])
    d = sphere.SphereClassDescriptor(
        m=m, n=n, degrees=degrees,
        f1_homotopic_a_f2=_fact(payload, "f1_homotopic_a_f2", where),
        in_suspension_image=_fact(payload, "in_suspension_image", where),
        stable_suspension_nonzero=_fact(
            payload, "stable_suspension_nonzero", where),
        some_stable_hopf_james_nonzero=_fact(
            payload, "some_stable_hopf_james_nonzero", where),
    )
    return sphere.sphere_invariants(d), n, []


def _run_spaceform(payload: dict):
    where = "spaceform payload"
    hopf = payload.get("hopf_mod4")
    if hopf is not None and (isinstance(hopf, bool)
                             or not isinstance(hopf, int)):
        raise QueryError(f"{where}: field 'hopf_mod4' must be an integer")
    d = spaceform.SpaceFormPairDescriptor(
        m=_need(payload, "m", int, where),
        n=_need(payload, "n", int, where),
        group_order=_need(payload, "group_order", int, where),
        homotopic=_fact(payload, "homotopic", where),
        del_zero=_fact(payload, "del_zero", where),
        e_del_zero=_fact(payload, "e_del_zero", where),
        kervaire_one=_fact(payload, "kervaire_one", where),
        hopf_mod4=hopf,
        in_psE_image=_fact(payload, "in_psE_image", where),
    )
    return spaceform.spaceform_pair_invariants(d), d.n, []


def _run_projective(payload: dict):
    where = "projective payload"
    field = ProjectiveField.from_str(_need(payload, "field", str, where))
    d = ProjectivePairDescriptor(
        field=field,
        n_prime=_need(payload, "n_prime", int, where),
        m=_need(payload, "m", int, where),
        fprime_homotopic=_fact(payload, "fprime_homotopic", where),
        lift2_in_ker_del=_fact(payload, "lift2_in_ker_del", where),
        lift2_in_ker_Edel=_fact(payload, "lift2_in_ker_Edel", where),
        lift2_antipodal_selfhomotopic=_fact(
            payload, "lift2_antipodal_selfhomotopic", where),
        lifts_differ_by_suspension=_fact(
            payload, "lifts_differ_by_suspension", where),
        lifts_equal=_fact(payload, "lifts_equal", where),
    )
    return projective_invariants(d), d.n, []


def _run_stiefel(payload: dict):
    where = "stiefel payload"
    q = stiefel.StiefelQuery(
        r=_need(payload, "r", int, where),
        k=_need(payload, "k", int, where),
        oriented_target=bool(payload.get("oriented_target", False)),
    )
    target_dim = q.k * (q.r - q.k)  # dimension of the Grassmannian
    return stiefel.stiefel_selfcoincidence(q), target_dim, []


def _run_wecken_fact(payload: dict) -> tuple[str, Fact]:
    where = "wecken payload"
    q = wecken.WeckenQuery(
        m=_need(payload, "m", int, where),
        n=_need(payload, "n", int, where),
        target_family=wecken.TargetFamily.from_str(
            payload.get("target_family", "Sphere")),
        noncompact_or_chi_zero=_fact(
            payload, "noncompact_or_chi_zero", where),
    )
    return "wecken_condition", wecken.wecken_condition(q)


def _run_fixedpoint_fact(payload: dict) -> tuple[str, Fact]:
    where = "fixedpoint payload"
    fact = wecken.fixed_point_wecken(
        dim=_need(payload, "dim", int, where),
        chi=_need(payload, "chi", int, where),
    )
    return "wecken_fixed_point", fact


# -- answers ----------------------------------------------------------------


def _verdict_json(v: Verdict) -> dict:
    if v.value is INFINITE:
        value = "infinite"
    elif v.value is UNKNOWN:
        value = "unknown"
    else:
        value = v.value
    return {"value": value, "trace": list(v.trace)}


def _fact_json(fact: Fact) -> dict:
    trace = []
    if fact.provenance.kind in ("rule", "table"):
        trace.append(fact.provenance.ref)
    return {"value": fact.truth.value, "trace": trace}


_BUNDLE_KEYS = ("mc", "mcc", "n_sharp", "n_tilde", "n", "n_z",
                "reidemeister")


def run_query(query: dict) -> dict:
    """One Query in, one Answer out.  Raises QueryError/DescriptorError on
    bad payloads and ConsistencyError on internal rule clashes."""
    if not isinstance(query, dict):
        raise QueryError("a query must be a JSON object")
    family = query.get("family")
    if family not in FAMILIES:
        raise QueryError(
            f"family must be one of {', '.join(FAMILIES)}; got {family!r}")
    payload = query.get("payload")
    if not isinstance(payload, dict):
        raise QueryError("payload must be a JSON object")
    qid = query.get("id", "")

    answer = {
        "id": qid,
        "factbase_version": get_factbase().version,
        "invariants": {},
        "warnings": [],
    }
    if family == "wecken":
        name, fact = _run_wecken_fact(payload)
        answer["invariants"][name] = _fact_json(fact)
        return answer
    if family == "fixedpoint":
        name, fact = _run_fixedpoint_fact(payload)
        answer["invariants"][name] = _fact_json(fact)
        return answer

    runner = {
        "torus": _run_torus,
        "sphere": _run_sphere,
        "spaceform": _run_spaceform,
        "projective": _run_projective,
        "stiefel": _run_stiefel,
    }[family]
    bundle, target_dim, warnings = runner(payload)
    violations = validate_bundle(bundle, target_dim)
    if violations:
        raise ConsistencyError(
            f"emitted bundle violates the invariant chain: {violations}")
    for key in _BUNDLE_KEYS:
        answer["invariants"][key] = _verdict_json(getattr(bundle, key))
    answer["warnings"] = warnings
    return answer


def _error_answer(query, message: str) -> dict:
    qid = query.get("id", "") if isinstance(query, dict) else ""
    return {
        "id": qid,
        "factbase_version": get_factbase().version,
        "invariants": {},
        "warnings": [],
        "error": message,
    }


def run_batch(queries: list, jobs: int = 1) -> list[dict]:
    """Evaluate queries (possibly concurrently); answers in input order;
    a malformed query yields an error answer instead of aborting."""

    def one(query):
        try:
            return run_query(query)
        except ConsistencyError:
            raise
        except (QueryError, DescriptorError) as exc:
            return _error_answer(query, str(exc))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, queries))
    return [one(q) for q in queries]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- entry point -------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coincalc",
        description="exact coincidence invariants with justification traces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_query = sub.add_parser("query", help="answer one JSON query file")
    p_query.add_argument("file")

    p_batch = sub.add_parser("batch", help="answer a JSON array of queries")
    p_batch.add_argument("file")
    p_batch.add_argument("--jobs", type=int, default=1)

    p_wecken = sub.add_parser("wecken", help="decide the Wecken condition")
    p_wecken.add_argument("-m", type=int, required=True)
    p_wecken.add_argument("-n", type=int, required=True)
    p_wecken.add_argument("--family", default="Sphere",
                          choices=[f.value for f in wecken.TargetFamily])

    p_stiefel = sub.add_parser(
        "stiefel", help="Stiefel-to-Grassmann selfcoincidence invariants")
    p_stiefel.add_argument("-r", type=int, required=True)
    p_stiefel.add_argument("-k", type=int, required=True)
    p_stiefel.add_argument("--oriented", action="store_true")

    p_fact = sub.add_parser("factbase", help="fact-base utilities")
    fact_sub = p_fact.add_subparsers(dest="factbase_command", required=True)
    p_lint = fact_sub.add_parser("lint", help="lint a fact-base file")
    p_lint.add_argument("file")

    return parser


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise QueryError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise QueryError(f"{path} is not valid JSON: {exc}") from None


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    try:
        try:
            set_factbase(FactBase.load())
        except FactBaseError as exc:
            print(f"fact base rejected: {exc}", file=sys.stderr)
            return 3
        except OSError as exc:
            print(f"cannot read fact base: {exc}", file=sys.stderr)
            return 2

        if args.command == "query":
            query = _load_json(args.file)
            out.write(_dump(run_query(query)))
            return 0
        if args.command == "batch":
            queries = _load_json(args.file)
            if not isinstance(queries, list):
                raise QueryError("a batch file must hold a JSON array")
            out.write(_dump(run_batch(queries, jobs=max(1, args.jobs))))
            return 0
        if args.command == "wecken":
            query = {"id": "cli", "family": "wecken",
                     "payload": {"m": args.m, "n": args.n,
                                 "target_family": args.family}}
            out.write(_dump(run_query(query)))
            return 0
        if args.command == "stiefel":
            query = {"id": "cli", "family": "stiefel",
                     "payload": {"r": args.r, "k": args.k,
                                 "oriented_target": args.oriented}}
            out.write(_dump(run_query(query)))
            return 0
        if args.command == "factbase":
            try:
                with open(args.file, encoding="utf-8") as handle:
                    raw = handle.read()
            except OSError as exc:
                print(f"cannot read {args.file}: {exc.strerror}",
                      file=sys.stderr)
                return 2
            problems = lint_text(raw)
            if problems:
                for line, message in problems:
                    where = f"{args.file}:{line}" if line else args.file
                    print(f"{where}: {message}", file=sys.stderr)
                return 2
            print(f"{args.file}: clean")
            return 0
        raise AssertionError("unreachable")
    except (QueryError, DescriptorError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    finally:
        set_factbase(None)


if __name__ == "__main__":
    sys.exit(main())
