"""Command line front end.

Four subcommands: homology, collapse, morse, sequence. All output is
deterministic; the --json flags emit machine-readable equivalents of
the text reports. Exit codes: 0 on success, 2 for malformed input,
3 when an operation's theorem hypothesis fails.

The environment variable WMORSE_MAX_DIM caps the dimension of every
homology report (useful to keep long-chain inputs tractable).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .collapse import collapse_sequence, greedy_collapse
from .complexes import WeightedComplex, simplex
from .documents import (
    DocumentError,
    dump_complex_document,
    load_complex_document,
    load_morse_document,
    parse_rational,
    parse_weights_spec,
    read_fasta,
)
from .errors import HypothesisError, ValidationError
from .homology import HomologyGroup, group_at, homology
from .morse import classify, critical_window, morse_collapse
from .sequence import ALPHABETS, build_woc, sequence_fingerprint


def _max_dim_cap() -> int | None:
    raw = os.environ.get("WMORSE_MAX_DIM")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise DocumentError(f"WMORSE_MAX_DIM must be an integer, got {raw!r}")
    if cap < 0:
        raise DocumentError("WMORSE_MAX_DIM must be non-negative")
    return cap


def _fmt_simplex(sigma) -> str:
    return "[" + ",".join(str(v) for v in sigma) + "]"


def _homology_lines(groups: list[HomologyGroup]) -> list[str]:
    return [f"H{n} = {g}" for n, g in enumerate(groups)]


def _homology_json(groups: list[HomologyGroup]) -> list[dict]:
    return [
        {"dim": n, "free_rank": g.free_rank, "torsion": list(g.torsion)}
        for n, g in enumerate(groups)
    ]


def _emit(args, text_lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _load_complex(args) -> WeightedComplex:
    K, _ = load_complex_document(args.complex, constant_weight=args.constant_weight)
    return K


# --- homology ---------------------------------------------------------------

def cmd_homology(args) -> int:
    K = _load_complex(args)
    groups = homology(K, max_dim=_max_dim_cap())
    _emit(args, _homology_lines(groups), {"homology": _homology_json(groups)})
    return 0


# --- collapse ---------------------------------------------------------------

def _step_line(i, step, verdict) -> str:
    return (
        f"step {i}: sigma={_fmt_simplex(step.sigma)} tau={_fmt_simplex(step.tau)} "
        f"verdict={verdict.verdict.value} w(sigma)={verdict.w_sigma} w(tau)={verdict.w_tau}"
    )


def _step_json(step, verdict) -> dict:
    return {
        "sigma": list(step.sigma),
        "tau": list(step.tau),
        "verdict": verdict.verdict.value,
        "w_sigma": verdict.w_sigma,
        "w_tau": verdict.w_tau,
    }


def cmd_collapse(args) -> int:
    K = _load_complex(args)
    if args.auto_greedy:
        L, applied = greedy_collapse(K)
    else:
        try:
            with open(args.steps) as fh:
                raw = json.load(fh)
        except OSError as e:
            raise DocumentError(f"cannot read {args.steps}: {e.strerror or e}")
        except json.JSONDecodeError as e:
            raise DocumentError(f"{args.steps}: {e.msg}", line=e.lineno)
        if not isinstance(raw, list):
            raise DocumentError(f"{args.steps}: expected a JSON array of vertex lists")
        sigmas = [simplex(entry) for entry in raw]
        L, applied = collapse_sequence(K, sigmas)

    lines = [_step_line(i + 1, s, v) for i, (s, v) in enumerate(applied)]
    guaranteed = all(v.guaranteed for _, v in applied)
    lines.append(f"steps: {len(applied)}")
    lines.append(f"remaining: {len(L)} simplices")
    lines.append(f"guaranteed: {'yes' if guaranteed else 'no'}")
    payload = {
        "steps": [_step_json(s, v) for s, v in applied],
        "remaining_simplices": len(L),
        "guaranteed": guaranteed,
    }

    if args.verify:
        cap = _max_dim_cap()
        before = homology(K, max_dim=cap)
        after = homology(L, max_dim=cap)
        dims = max(len(before), len(after))
        agree = True
        for n in range(dims):
            b, a = group_at(before, n), group_at(after, n)
            same = b == a
            agree = agree and same
            lines.append(f"verify H{n}: before={b} after={a} agree={'yes' if same else 'no'}")
        lines.append(f"verify-agree: {'yes' if agree else 'no'}")
        payload["verify"] = {
            "before": _homology_json(before),
            "after": _homology_json(after),
            "agree": agree,
        }

    _emit(args, lines, payload)
    return 0


# --- morse -------------------------------------------------------------------

def cmd_morse(args) -> int:
    K = _load_complex(args)
    f = load_morse_document(args.morse, K)
    cap = _max_dim_cap()

    if args.classify:
        cls = classify(K, f)
        order = sorted(K, key=lambda s: (f(s), len(s), s))
        critical = [s for s in order if cls.is_critical(s)]
        rough = [s for s in order if not cls.is_w_simple(s)]
        lines = [f"morse function valid on {len(K)} simplices"]
        lines.append(f"critical cells: {len(critical)}")
        lines.extend(f"critical: {_fmt_simplex(s)} f={f(s)}" for s in critical)
        lines.append(f"non-w-simple cells: {len(rough)}")
        lines.extend(f"non-w-simple: {_fmt_simplex(s)} f={f(s)}" for s in rough)
        payload = {
            "simplices": len(K),
            "critical": [
                {"vertices": list(s), "value": str(f(s))} for s in critical
            ],
            "non_w_simple": [
                {"vertices": list(s), "value": str(f(s))} for s in rough
            ],
        }
        _emit(args, lines, payload)
        return 0

    if args.collapse is not None:
        a, b = (parse_rational(x) for x in args.collapse)
        cert = morse_collapse(K, f, a, b)
        lines = [f"window: ({a}, {b}]"]
        lines.extend(
            _step_line(i + 1, s, v)
            for i, (s, v) in enumerate(zip(cert.steps, cert.verdicts))
        )
        lines.append(f"steps: {len(cert.steps)}")
        lines.append(f"start: {len(cert.start)} simplices")
        lines.append(f"end: {len(cert.end)} simplices")
        before = homology(cert.start, max_dim=cap)
        after = homology(cert.end, max_dim=cap)
        agree = True
        for n in range(max(len(before), len(after))):
            ga, gb = group_at(before, n), group_at(after, n)
            same = ga == gb
            agree = agree and same
            lines.append(f"H{n}: start={ga} end={gb} agree={'yes' if same else 'no'}")
        lines.append(f"agree: {'yes' if agree else 'no'}")
        payload = {
            "window": [str(a), str(b)],
            "steps": [_step_json(s, v) for s, v in zip(cert.steps, cert.verdicts)],
            "start_homology": _homology_json(before),
            "end_homology": _homology_json(after),
            "agree": agree,
        }
        _emit(args, lines, payload)
        return 0

    # window certificate
    a, b = (parse_rational(x) for x in args.window)
    alpha = simplex(_parse_cell(args.cell))
    cert = critical_window(K, f, alpha, a, b)
    n = len(alpha) - 1
    lines = [
        f"cell: {_fmt_simplex(alpha)} f={f(alpha)}",
        f"window: ({a}, {b}]",
        f"a-prime: {cert.a_prime}",
        "K(a') == K(f(alpha)) minus alpha: yes",
        "alpha maximal in K(f(alpha)): yes",
        f"collapse above: {len(cert.collapse_above.steps)} steps"
        + (", all same-weight" if cert.collapse_above.all_same_weight else ""),
        f"collapse below: {len(cert.collapse_below.steps)} steps"
        + (", all same-weight" if cert.collapse_below.all_same_weight else ""),
    ]
    payload = {
        "alpha": list(alpha),
        "f_alpha": str(f(alpha)),
        "a": str(a),
        "b": str(b),
        "a_prime": str(cert.a_prime),
        "set_identity": True,
        "alpha_maximal": True,
        "collapse_above": {
            "steps": [
                _step_json(s, v)
                for s, v in zip(cert.collapse_above.steps, cert.collapse_above.verdicts)
            ]
        },
        "collapse_below": {
            "steps": [
                _step_json(s, v)
                for s, v in zip(cert.collapse_below.steps, cert.collapse_below.verdicts)
            ]
        },
    }
    if cert.removal is None:
        lines.append("removal: skipped (alpha has weight 0)")
        payload["removal"] = None
    else:
        rep = cert.removal
        lines.append(f"removal: dim={n} class-order={rep.class_order}")
        if rep.gains_free_summand:
            lines.append(f"H{n}: H{n}(K(f(alpha))) = H{n}(K(a')) (+) Z")
        else:
            lines.append(f"H{n}: H{n}(K(f(alpha))) = H{n}(K(a'))")
        if n >= 1:
            lines.append(
                f"H{n-1}: H{n-1}(K(f(alpha))) = H{n-1}(K(a')) / <[boundary]> = {rep.quotient_below}"
            )
        lines.append(f"unchanged: H_k for k not in {{{n-1}, {n}}}")
        payload["removal"] = {
            "dimension": n,
            "class_order": rep.class_order.kind,
            "k": rep.class_order.k,
            "gains_free_summand": rep.gains_free_summand,
            "quotient_below": None
            if rep.quotient_below is None
            else {
                "free_rank": rep.quotient_below.free_rank,
                "torsion": list(rep.quotient_below.torsion),
            },
        }
    _emit(args, lines, payload)
    return 0


def _parse_cell(text: str) -> list[int]:
    cleaned = text.strip().strip("[]")
    try:
        return [int(p) for p in cleaned.split(",") if p.strip() != ""]
    except ValueError:
        raise DocumentError(f"cannot parse cell {text!r}; expected comma-separated vertex ids")


# --- sequence ----------------------------------------------------------------

def _fingerprint_record(seq: str, alphabet, weights, woc_type, cap):
    unknown = sorted(set(seq) - set(alphabet))
    if unknown:
        raise DocumentError(f"symbols {unknown} not in the alphabet")
    return sequence_fingerprint(seq, weights, woc_type, max_dim=cap)


def cmd_sequence(args) -> int:
    alphabet = ALPHABETS.get(args.alphabet, tuple(args.alphabet))
    weights = parse_weights_spec(args.weights)
    cap = _max_dim_cap()

    if os.path.exists(args.sequence):
        records = read_fasta(args.sequence)
    else:
        records = [(None, args.sequence)]

    if args.emit_complex and len(records) > 1:
        raise DocumentError("--emit-complex needs a single-sequence input")

    if len(records) > 1:
        with ThreadPoolExecutor(max_workers=min(4, len(records))) as pool:
            results = list(
                pool.map(
                    lambda r: _fingerprint_record(r[1], alphabet, weights, args.woc_type, cap),
                    records,
                )
            )
    else:
        results = [
            _fingerprint_record(records[0][1], alphabet, weights, args.woc_type, cap)
        ]

    lines: list[str] = []
    payload_records = []
    for (ident, seq), groups in zip(records, results):
        block = _homology_lines(groups) if groups else ["(empty complex)"]
        if ident is not None:
            if lines:
                lines.append("")
            lines.append(f"# {ident} {seq}")
        lines.extend(block)
        payload_records.append(
            {"id": ident, "sequence": seq, "homology": _homology_json(groups)}
        )

    if args.emit_complex:
        ident, seq = records[0]
        skeleton = None if cap is None else cap + 1
        K, names = build_woc(seq, weights, args.woc_type, max_dim=skeleton)
        if not len(K):
            raise DocumentError("nothing to emit: the substring complex is empty")
        dump_complex_document(
            args.emit_complex, K, {i: name for i, name in enumerate(names)}
        )

    payload = (
        {"records": payload_records}
        if len(records) > 1 or records[0][0] is not None
        else {"sequence": records[0][1], "homology": payload_records[0]["homology"]}
    )
    _emit(args, lines, payload)
    return 0


# --- wiring -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wmorse",
        description="Weighted simplicial homology, collapses, and discrete Morse certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--constant-weight",
            type=int,
            default=None,
            metavar="N",
            help="treat the document as maximal faces only; fill the closure with weight N",
        )

    p = sub.add_parser("homology", help="weighted homology of a complex document")
    p.add_argument("complex", help="complex document (JSON)")
    add_common(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("collapse", help="apply elementary collapses with verdicts")
    p.add_argument("complex", help="complex document (JSON)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--steps", help="JSON array of free faces to collapse, in order")
    group.add_argument(
        "--auto-greedy",
        action="store_true",
        help="repeatedly collapse the lexicographically smallest free face",
    )
    p.add_argument("--verify", action="store_true", help="recompute homology before and after")
    add_common(p)
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("morse", help="discrete Morse analysis of a complex")
    p.add_argument("complex", help="complex document (JSON)")
    p.add_argument("morse", help="Morse document (JSON)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--classify", action="store_true", help="list critical and non-w-simple cells")
    group.add_argument(
        "--collapse", nargs=2, metavar=("A", "B"), help="collapse K(B) onto K(A)"
    )
    group.add_argument(
        "--window", nargs=2, metavar=("A", "B"), help="certificate for one critical cell in (A, B]"
    )
    p.add_argument("--cell", help="the critical cell for --window, e.g. '0,3'")
    add_common(p)
    p.set_defaults(func=cmd_morse)

    p = sub.add_parser("sequence", help="substring-poset fingerprint of a sequence")
    p.add_argument("sequence", help="literal sequence, or path to a FASTA file")
    p.add_argument(
        "--alphabet",
        default="dna",
        help="built-in name (dna, rna, bin, hex) or explicit symbols, e.g. 'xy'",
    )
    p.add_argument("--weights", required=True, help="letter weights, e.g. 'A=1,C=2,G=3,T=4'")
    p.add_argument(
        "--woc-type", type=int, choices=(1, 2, 3, 4), default=1, help="weighting type"
    )
    p.add_argument("--emit-complex", metavar="PATH", help="write the weighted complex document")
    add_common(p)
    p.set_defaults(func=cmd_sequence)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "morse" and args.window and not args.cell:
        parser.error("--window requires --cell")
    try:
        return args.func(args)
    except ValidationError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except HypothesisError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
