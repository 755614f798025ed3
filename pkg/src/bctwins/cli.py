"""Command-line front end: JSON ingestion, subcommand dispatch, and
deterministic reports (tab-delimited text or JSON), with optional matplotlib
figure rendering on the report path.

Exit codes: 0 decided, 1 decided-negative (boolean commands under --strict),
2 input error, 3 criterion not applicable.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import schemas
from .embed import (
    EMBEDS,
    DOES_NOT_EMBED,
    NOT_APPLICABLE,
    MuSearchExhausted,
    OrthogonalTarget,
    SymplecticTarget,
    TargetMismatchError,
    UnitaryTarget,
    embed_orthogonal_quasisplit_even,
    embed_orthogonal_split,
    embed_symplectic,
    embed_unitary_quasisplit,
    embeds_globally,
)
from .etale import AlgebraError, EtaleInvolutionAlgebra, GeneratorSearchError
from .groups import (
    AbstractPlaceData,
    GroupB,
    GroupC,
    GroupError,
    LocalDataError,
    Rank2Certificate,
    RankTwoError,
    decide_rank2,
    first_failure,
    is_twin,
    is_twin_abstract,
    length_ratio,
    length_ratio_decimal,
    parse_isogeny,
    same_isomorphism_tori,
    weakly_commensurable,
)
from .qforms import DiagForm, FormError, invariants, witt_index
from .symbols import Place, SymbolError
from .tori import (
    RealFormSpec,
    ToriError,
    classify_rank,
    lattice_type,
    same_tori_real,
    standard_forms,
    torus_types,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_NOT_APPLICABLE = 3


class InputError(Exception):
    """Bad CLI input: unreadable file, schema violation, bad parameters."""


def _load_json(path: str, schema: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc
    _check_no_floats(payload, path)
    try:
        schemas.validate(payload, schema)
    except Exception as exc:  # jsonschema.ValidationError
        pathinfo = getattr(exc, "json_path", None)
        msg = getattr(exc, "message", str(exc))
        raise InputError(f"{path}: schema violation at "
                         f"{pathinfo or '$'}: {msg}") from exc
    return payload


def _check_no_floats(payload, path: str) -> None:
    if isinstance(payload, float):
        raise InputError(
            f"{path}: floating-point literals are not accepted; write exact "
            "rationals as strings like \"7/3\"")
    if isinstance(payload, list):
        for item in payload:
            _check_no_floats(item, path)
    elif isinstance(payload, dict):
        for item in payload.values():
            _check_no_floats(item, path)


def _rat(x) -> Fraction:
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {x!r}: {exc}") from exc


def _form_from(payload) -> DiagForm:
    try:
        return DiagForm(tuple(_rat(x) for x in payload))
    except FormError as exc:
        raise InputError(str(exc)) from exc


def _group_from(payload):
    try:
        iso = parse_isogeny(payload.get("isogeny", "adjoint"
                                        if payload["type"] == "B" else "sc"))
        if payload["type"] == "B":
            return GroupB(_form_from(payload["q"]), iso)
        return GroupC.of(_rat(payload["a"]), _rat(payload["b"]),
                         [_rat(c) for c in payload["h"]], iso)
    except (GroupError, FormError) as exc:
        raise InputError(str(exc)) from exc


def _algebra_from(payload) -> EtaleInvolutionAlgebra:
    try:
        return EtaleInvolutionAlgebra.create(
            [([_rat(c) for c in fac["min_poly"]],
              [_rat(c) for c in fac["d"]]) for fac in payload["factors"]],
            fixed=payload["fixed"],
            assert_irreducible=payload.get("assert_irreducible", False))
    except AlgebraError as exc:
        raise InputError(str(exc)) from exc


def _abstract_places(payload) -> list[AbstractPlaceData]:
    out = []
    for rec in payload["places"]:
        out.append(AbstractPlaceData(
            name=rec["name"],
            real=rec["kind"] == "real",
            b_witt=rec.get("b_witt"),
            b_signature=tuple(rec["b_signature"]) if "b_signature" in rec else None,
            c_ramified=rec.get("c_ramified", False),
            c_signature=tuple(rec["c_signature"]) if "c_signature" in rec else None,
            b_hasse=rec.get("b_hasse"),
        ))
    return out


def _parse_places(spec: str) -> list[Place]:
    try:
        return [Place.parse(tok) for tok in spec.split(",") if tok.strip()]
    except SymbolError as exc:
        raise InputError(f"bad place list {spec!r}: {exc}") from exc


class Report:
    """Accumulates the JSON payload and the human-readable lines."""

    def __init__(self, command: str, seed: int):
        self.payload = {"command": command, "seed": seed}
        self.lines: list[str] = []
        self.negative = False  # --strict exit 1 when a boolean answer is False

    def put(self, **kwargs):
        self.payload.update(kwargs)

    def line(self, *cells):
        self.lines.append("\t".join(str(c) for c in cells))


def _emit(report: Report, args) -> int:
    schemas.validate(report.payload, "report")
    if args.json:
        print(json.dumps(report.payload, indent=2, sort_keys=True))
    else:
        for line in report.lines:
            print(line)
    if args.strict and report.negative:
        return EXIT_NEGATIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_invariants(args, report: Report) -> int:
    q = _form_from(_load_json(args.form, "form"))
    inv = invariants(q)
    report.put(dim=inv.dim, det=str(inv.det),
               signature=list(inv.signature),
               hasse={str(v): e for v, e in sorted(inv.hasse.items())})
    report.line("dim", inv.dim)
    report.line("det", inv.det)
    report.line("signature", *inv.signature)
    for v, e in sorted(inv.hasse.items()):
        report.line("hasse", v, e)
    return _emit(report, args)


def _cmd_witt(args, report: Report) -> int:
    q = _form_from(_load_json(args.form, "form"))
    v = Place.parse(args.place)
    w, a = witt_index(q, v)
    report.put(place=str(v), witt_index=w, anisotropic_dim=a)
    report.line("place", "witt_index", "anisotropic_dim")
    report.line(v, w, a)
    return _emit(report, args)


def _put_certificate(report: Report, twin: bool, cert_json: list[dict],
                     headline: str) -> None:
    report.put(certificate=cert_json)
    report.line(headline, str(twin).lower())
    report.line("place", "rank1", "rank2", "status1", "status2")
    for st in cert_json:
        report.line(st["place"], st["rank1"], st["rank2"], *st["status"])


def _cmd_twin(args, report: Report) -> int:
    first = _load_json(args.g1, "group" if args.g2 else "abstract")
    if args.g2 is None:
        places = _abstract_places(first)
        try:
            twin, cert_json = is_twin_abstract(places, first["rank"])
        except LocalDataError as exc:
            raise InputError(str(exc)) from exc
        report.put(twin=twin, rank=first["rank"])
        _put_certificate(report, twin, cert_json, "twin")
        report.negative = not twin
        if args.figure:
            from . import viz
            viz.plot_local_certificate(cert_json, first["rank"], args.figure,
                                       f"abstract twin test: {twin}")
            report.put(figure=args.figure)
        return _emit(report, args)
    g1, g2 = _group_from(first), _group_from(_load_json(args.g2, "group"))
    if not isinstance(g1, GroupB) or not isinstance(g2, GroupC):
        raise InputError("twin expects a type B group then a type C group")
    try:
        twin, cert = is_twin(g1, g2)
    except GroupError as exc:
        raise InputError(str(exc)) from exc
    cert_json = [st.to_json() for st in cert]
    report.put(twin=twin, rank=g1.rank)
    fail = first_failure(cert)
    if fail is not None:
        report.put(first_failure=fail.to_json())
    _put_certificate(report, twin, cert_json, "twin")
    if fail is not None:
        report.line("first_failure", fail.place)
    report.negative = not twin
    if args.figure:
        from . import viz
        viz.plot_local_certificate(cert_json, g1.rank, args.figure,
                                   f"twin: {twin}")
        report.put(figure=args.figure)
    return _emit(report, args)


def _cmd_wc(args, report: Report) -> int:
    g1 = _group_from(_load_json(args.g1, "group"))
    g2 = _group_from(_load_json(args.g2, "group"))
    if not isinstance(g1, GroupB) or not isinstance(g2, GroupC):
        raise InputError("wc expects a type B group then a type C group")
    s_places = _parse_places(args.s_places)
    try:
        wc, cert = weakly_commensurable(g1, g2, s_places)
    except RankTwoError as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except GroupError as exc:
        raise InputError(str(exc)) from exc
    cert_json = [st.to_json() for st in cert]
    report.put(weakly_commensurable=wc, twin=wc, rank=g1.rank)
    fail = first_failure(cert)
    if fail is not None:
        report.put(first_failure=fail.to_json())
    _put_certificate(report, wc, cert_json, "weakly_commensurable")
    report.negative = not wc
    if args.figure:
        from . import viz
        viz.plot_local_certificate(cert_json, g1.rank, args.figure,
                                   f"weakly commensurable: {wc}")
        report.put(figure=args.figure)
    return _emit(report, args)


def _cmd_tori_enumerate(args, report: Report) -> int:
    try:
        form = RealFormSpec.parse(args.form)
        types = torus_types(form)
    except ToriError as exc:
        raise InputError(str(exc)) from exc
    report.put(form=str(form), tori=[list(t) for t in types])
    report.line("alpha", "beta", "gamma")
    for t in types:
        report.line(*t)
    if args.figure:
        from . import viz
        viz.plot_torus_sets([(str(form), types)], args.figure,
                            f"torus types of {form}")
        report.put(figure=args.figure)
    return _emit(report, args)


def _cmd_tori_compare(args, report: Report) -> int:
    try:
        f1 = RealFormSpec.parse(args.f1)
        f2 = RealFormSpec.parse(args.f2)
        same = same_tori_real(f1, f2)
    except ToriError as exc:
        raise InputError(str(exc)) from exc
    report.put(forms=[str(f1), str(f2)], same_tori=same)
    report.line("same_tori", str(same).lower())
    report.negative = not same
    return _emit(report, args)


def _cmd_tori_classify(args, report: Report) -> int:
    try:
        forms = standard_forms(args.rank)
        classes = classify_rank(forms)
    except ToriError as exc:
        raise InputError(str(exc)) from exc
    report.put(rank=args.rank,
               classes=[[str(f) for f in cls] for cls in classes])
    report.line("class", "forms")
    for i, cls in enumerate(classes):
        report.line(i, ",".join(str(f) for f in cls))
    if args.figure:
        from . import viz
        viz.plot_torus_sets([(str(f), torus_types(f)) for f in forms],
                            args.figure, f"rank {args.rank} torus tables")
        report.put(figure=args.figure)
    return _emit(report, args)


def _cmd_embed(args, report: Report) -> int:
    algebra = _algebra_from(_load_json(args.algebra, "algebra"))
    tgt = _load_json(args.target, "target")
    if tgt["kind"] == "unitary":
        return _embed_unitary(args, report, algebra, tgt)
    if tgt["kind"] == "symplectic":
        target = SymplecticTarget(tgt["n"])
    else:
        target = OrthogonalTarget(_form_from(tgt["f"]))
    try:
        decision = embeds_globally(algebra, target)
    except (AlgebraError, GeneratorSearchError) as exc:
        raise InputError(str(exc)) from exc
    cert = decision.certificate
    if decision.outcome == EMBEDS and cert is None and \
            isinstance(target, OrthogonalTarget):
        cert = _try_constructive(algebra, target.f, args.seed)
    report.put(outcome=decision.outcome, reason=decision.reason)
    if decision.failing_place is not None:
        report.put(failing_place=str(decision.failing_place))
    if cert is not None:
        report.put(embedding=cert.to_json())
    report.line("outcome", decision.outcome)
    report.line("reason", decision.reason)
    report.negative = decision.outcome != EMBEDS
    if decision.outcome == NOT_APPLICABLE:
        _emit(report, args)
        return EXIT_NOT_APPLICABLE
    return _emit(report, args)


def _try_constructive(algebra, f, seed):
    try:
        if algebra.dim % 2:
            return embed_orthogonal_split(algebra, f, seed=seed)
        return embed_orthogonal_quasisplit_even(algebra, f, seed=seed)
    except (TargetMismatchError, MuSearchExhausted, GeneratorSearchError):
        return None


def _embed_unitary(args, report: Report, algebra, tgt) -> int:
    m_val = _rat(tgt["m"])
    from .symbols import square_class
    m = square_class(m_val)
    if len(algebra.factors) != 1 or algebra.fixed != 0:
        raise InputError("unitary embedding needs E = F (x) L: one doubled "
                         "factor, no fixed factor")
    fac = algebra.factors[0]
    dconst = fac.d
    if len(dconst) != 1 or square_class(dconst[0]) != m:
        raise InputError("unitary embedding needs d constant with the same "
                         "square class as the target field discriminant")
    try:
        cert = embed_unitary_quasisplit(
            fac.field, m, UnitaryTarget.of(m, [_rat(c) for c in tgt["h"]]))
    except TargetMismatchError as exc:
        raise InputError(str(exc)) from exc
    report.put(outcome=EMBEDS, reason="quasi-split unitary target",
               embedding=cert.to_json())
    report.line("outcome", EMBEDS)
    report.line("reason", cert.notes)
    return _emit(report, args)


def _cmd_rank2(args, report: Report) -> int:
    q1 = _form_from(_load_json(args.q1, "form"))
    q2 = _form_from(_load_json(args.q2, "form"))
    try:
        same, cert = decide_rank2(q1, q2)
    except GroupError as exc:
        raise InputError(str(exc)) from exc
    cj = cert.to_json()
    report.put(same_isomorphism_tori=same, similar=cj["similar"],
               scalar=cj["scalar"], places=cj["places"],
               local_dichotomy=cj["local_dichotomy"])
    report.line("same_isomorphism_tori", str(same).lower())
    report.line("similar", str(cert.similar).lower(),
                cert.scalar if cert.scalar is not None else "-")
    report.line("place", "witt1", "witt2")
    for v, w1, w2 in cert.places:
        report.line(v, w1, w2)
    report.negative = not same
    if args.figure:
        from . import viz
        viz.plot_witt_table([(str(v), w1, w2) for v, w1, w2 in cert.places],
                            args.figure, f"rank-2 decision: {same}")
        report.put(figure=args.figure)
    return _emit(report, args)


def _cmd_ratio(args, report: Report) -> int:
    try:
        rad = length_ratio(args.n)
    except GroupError as exc:
        raise InputError(str(exc)) from exc
    dec = length_ratio_decimal(args.n)
    report.put(radicand=str(rad), lambda_decimal=dec)
    report.line(f"lambda = sqrt({rad}) ≈ {dec}")
    return _emit(report, args)


def _cmd_lattice_type(args, report: Report) -> int:
    payload = _load_json(args.matrix, "matrix")
    try:
        mat = [[int(str(x)) for x in row] for row in payload["matrix"]]
        alpha, beta, gamma = lattice_type(mat)
    except (ToriError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    report.put(alpha=alpha, beta=beta, gamma=gamma)
    report.line("alpha", "beta", "gamma")
    report.line(alpha, beta, gamma)
    return _emit(report, args)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit the JSON report instead of text")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized searches (default 0)")
    common.add_argument("--strict", action="store_true",
                        help="exit 1 when a boolean answer is negative")

    figure = argparse.ArgumentParser(add_help=False)
    figure.add_argument("--figure", metavar="PATH", default=None,
                        help="render a figure of the report to PATH")

    parser = argparse.ArgumentParser(
        prog="bctwins",
        description="Maximal tori, quadratic form invariants, and the twins "
                    "criterion for groups of types B and C over Q.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("invariants", parents=[common],
                       help="invariants of a diagonal form")
    p.add_argument("form")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("witt", parents=[common],
                       help="Witt index of a form at a place")
    p.add_argument("form")
    p.add_argument("--place", required=True, help='"inf" or a prime')
    p.set_defaults(func=_cmd_witt)

    p = sub.add_parser("twin", parents=[common, figure],
                       help="twin test for a B/C pair (or abstract local data)")
    p.add_argument("g1", help="type B group JSON, or abstract local data")
    p.add_argument("g2", nargs="?", default=None, help="type C group JSON")
    p.set_defaults(func=_cmd_twin)

    p = sub.add_parser("wc", parents=[common, figure],
                       help="weak commensurability of S-arithmetic subgroups")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--S", dest="s_places", default="inf",
                   help='comma-separated places containing "inf"')
    p.set_defaults(func=_cmd_wc)

    tori = sub.add_parser("tori", help="torus-type tables of real forms")
    tsub = tori.add_subparsers(dest="tori_cmd", required=True)
    p = tsub.add_parser("enumerate", parents=[common, figure])
    p.add_argument("--form", required=True, help='e.g. "SO(2,5)" or "Sp(1,2)"')
    p.set_defaults(func=_cmd_tori_enumerate)
    p = tsub.add_parser("compare", parents=[common])
    p.add_argument("f1")
    p.add_argument("f2")
    p.set_defaults(func=_cmd_tori_compare)
    p = tsub.add_parser("classify", parents=[common, figure])
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(func=_cmd_tori_classify)

    p = sub.add_parser("embed", parents=[common],
                       help="embed an algebra with involution into a target")
    p.add_argument("algebra")
    p.add_argument("target")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("rank2", parents=[common, figure],
                       help="same-tori decision for 5-dimensional forms")
    p.add_argument("q1")
    p.add_argument("q2")
    p.set_defaults(func=_cmd_rank2)

    p = sub.add_parser("ratio", parents=[common],
                       help="length-spectrum scaling factor")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_ratio)

    p = sub.add_parser("lattice-type", parents=[common],
                       help="torus type of an integral involution")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_lattice_type)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report(args.cmd if args.cmd != "tori"
                    else f"tori-{args.tori_cmd}", args.seed)
    try:
        return args.func(args, report)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RankTwoError as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except (MuSearchExhausted, GeneratorSearchError) as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except (FormError, GroupError, AlgebraError, ToriError, SymbolError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
