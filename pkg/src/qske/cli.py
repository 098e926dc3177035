"""``qske`` command line: table, run, analyze, demo.

Exit codes: 0 success, 1 protocol or analysis failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from qske import analysis, taxonomy
from qske import protocols as P
from qske.qsim import RandomSource, StateVector, random_density
from qske.report import TrialReport, sig12

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2
MIXTURE_TOL = 1e-9


class UsageError(Exception):
    pass


def fmt_num(x: float) -> str:
    return f"{sig12(x) + 0.0:.12g}"


def fmt_complex(z: complex) -> str:
    re, im = sig12(z.real) + 0.0, sig12(z.imag) + 0.0
    if im == 0:
        return fmt_num(re)
    return f"{fmt_num(re)}{'+' if im >= 0 else '-'}{fmt_num(abs(im))}j"


def complex_json(z: complex) -> list[float]:
    return [sig12(z.real) + 0.0, sig12(z.imag) + 0.0]


def state_json(s) -> list:
    if isinstance(s, StateVector):
        return [complex_json(z) for z in s.amplitudes]
    return [[complex_json(z) for z in row] for row in s.entries]


def state_text(s, indent: str = "  ") -> list[str]:
    if isinstance(s, StateVector):
        n = s.num_qubits
        terms = [
            f"{fmt_complex(z)}|{format(i, f'0{n}b')}>"
            for i, z in enumerate(s.amplitudes)
            if abs(z) > 1e-12
        ]
        return [indent + " + ".join(terms)]
    return [indent + "[" + ", ".join(fmt_complex(z) for z in row) + "]" for row in s.entries]


def report_json(report: TrialReport) -> dict:
    d = report.to_dict()
    if d["max_trace_distance"] is not None:
        d["max_trace_distance"] = sig12(d["max_trace_distance"]) + 0.0
    return d


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def default_seed() -> int:
    env = os.environ.get("QSKE_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"QSKE_SEED must be an integer, got {env!r}") from None


# --- table -----------------------------------------------------------------


def cmd_table(args) -> int:
    rows = taxonomy.generate_table()
    out = taxonomy.render_json(rows) if args.format == "json" else taxonomy.render_text(rows)
    sys.stdout.write(out)
    return EXIT_OK


# --- run -------------------------------------------------------------------


def _reject_unimplemented(kind: int):
    if not 1 <= kind <= 32:
        raise UsageError(f"kind must be in 1..32, got {kind}")
    if kind not in P.IMPLEMENTED_KINDS:
        q = taxonomy.Quintuple.from_index(kind)
        raise UsageError(
            f"kind {kind} ({q}) is {taxonomy.classify(q).label}: {taxonomy.explain(q)}"
        )


def _check_run_options(args):
    kind = args.kind
    if args.key is not None:
        if kind in (16, 32):
            raise UsageError(f"kind {kind} uses an entangled key; --key is not accepted")
        if kind == 2:
            raise UsageError("kind 2 takes its key as --q/--g/--s")
        try:
            bits = P.parse_bits(args.key)
        except ValueError as exc:
            raise UsageError(f"--key: {exc}") from None
        if kind in (12, 28) and len(bits) != 2:
            raise UsageError(f"kind {kind} key is two bits (k1k2), got {args.key!r}")
        if kind == 3 and len(bits) != args.t:
            raise UsageError(f"kind 3 key must have --t={args.t} bits")
    if args.plaintext is not None:
        if kind == 2:
            try:
                m = int(args.plaintext)
            except ValueError:
                raise UsageError(f"kind 2 plaintext is an integer, got {args.plaintext!r}") from None
            if not 1 <= m < args.q:
                raise UsageError(f"kind 2 plaintext must be in [1, {args.q - 1}]")
        else:
            try:
                bits = P.parse_bits(args.plaintext)
            except ValueError as exc:
                raise UsageError(f"--plaintext: {exc}") from None
            if kind in (3, 12, 16, 28, 32) and len(bits) != 1:
                raise UsageError(f"kind {kind} plaintext is a single bit")
            if args.key is not None and kind in (1, 4, 8, 20, 24) and len(bits) != len(args.key):
                raise UsageError("plaintext and key lengths differ")
    if kind == 2:
        if not P.kind2.is_prime(args.q) or args.q > P.kind2.MAX_MODULUS:
            raise UsageError(f"--q must be a prime <= {P.kind2.MAX_MODULUS}")
        if args.g is not None and not P.is_generator(args.g, args.q):
            raise UsageError(f"--g {args.g} does not generate the group mod {args.q}")
    if kind == 3 and args.mode == P.SIMULATED and args.t > P.kind3.MAX_SIMULATED_SHARES:
        raise UsageError(f"simulated mode supports --t up to {P.kind3.MAX_SIMULATED_SHARES}")
    if args.t < 1:
        raise UsageError("--t must be >= 1")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")


def cmd_run(args) -> int:
    _reject_unimplemented(args.kind)
    _check_run_options(args)
    seed = default_seed() if args.seed is None else args.seed
    report = analysis.correctness_trial(
        args.kind,
        args.trials,
        seed,
        plaintext=args.plaintext,
        key=args.key,
        t=args.t,
        mode=args.mode,
        q=args.q,
        g=args.g,
        s=args.s,
    )
    if args.format == "json":
        print(dump_json(report_json(report)))
    else:
        print(f"kind: {report.kind}")
        print(f"trials: {report.trials}")
        print(f"successes: {report.successes}")
        print(f"success_fraction: {fmt_num(report.success_fraction)}")
        if report.max_trace_distance is not None:
            print(f"max_trace_distance: {fmt_num(report.max_trace_distance)}")
        print(f"seed: {report.seed}")
        print(f"algorithm_id: {report.algorithm_id}")
        print("parameters:")
        for k in sorted(report.parameters):
            print(f"  {k}: {report.parameters[k]}")
        if report.notes:
            print(f"notes: {report.notes}")
    return EXIT_OK if report.all_succeeded else EXIT_FAILURE


# --- analyze ---------------------------------------------------------------


def cmd_analyze(args) -> int:
    if args.kind not in analysis.SUPPORTED_MIXTURE_KINDS:
        raise UsageError(str(analysis.unsupported(args.kind, analysis.SUPPORTED_MIXTURE_KINDS)))
    seed = default_seed() if args.seed is None else args.seed
    if args.kind == 12:
        reports = [analysis.average_ciphertext(12, x) for x in (0, 1)]
        descriptor = "both plaintext bits; worst case shown"
        count = 2
    else:
        if args.samples < 1:
            raise UsageError("--samples must be >= 1")
        root = RandomSource(seed)
        reports = [
            analysis.average_ciphertext(28, random_density(1, root.derive(i)))
            for i in range(args.samples)
        ]
        descriptor = f"{args.samples} seeded random one-qubit states; worst case shown"
        count = args.samples
    worst = max(reports, key=lambda r: r.distance_to_maximally_mixed)
    dist = worst.distance_to_maximally_mixed
    payload = {
        "kind": args.kind,
        "plaintext_descriptor": descriptor,
        "averaged_ciphertext": state_json(worst.averaged_ciphertext),
        "distance_to_maximally_mixed": sig12(dist) + 0.0,
        "key_count_or_samples": count,
        "keys_averaged": worst.key_count_or_samples,
        "seed": seed,
    }
    if args.format == "json":
        print(dump_json(payload))
    else:
        print(f"kind: {args.kind}")
        print(f"plaintexts: {descriptor}")
        print(f"keys averaged: {worst.key_count_or_samples}")
        print("averaged ciphertext:")
        print("\n".join(state_text(worst.averaged_ciphertext)))
        print(f"distance_to_maximally_mixed: {fmt_num(dist)}")
    return EXIT_OK if dist <= MIXTURE_TOL else EXIT_FAILURE


# --- demo ------------------------------------------------------------------


def cmd_demo(args) -> int:
    if args.name not in analysis.DEMOS:
        raise UsageError(f"unknown demo {args.name!r}; choose from {', '.join(analysis.DEMOS)}")
    rep = analysis.DEMOS[args.name](args.message)
    if args.format == "json":
        print(dump_json({
            "name": rep.name,
            "message": rep.message,
            "gate_sequence": [[g, list(t)] for g, t in rep.gate_sequence],
            "stage_states": [{"name": n, "state": state_json(s)} for n, s in rep.stage_states],
            "final_reduced": state_json(rep.final_reduced),
            "distance_to_plaintext": sig12(rep.distance_to_plaintext) + 0.0,
            "distance_to_maximally_mixed": sig12(rep.distance_to_maximally_mixed) + 0.0,
            "verdict": rep.verdict,
        }))
        return EXIT_OK
    print(f"demo: {rep.name} (message bit {rep.message})")
    print("register: qubit 0 = Bob's key, qubit 1 = Alice's key, qubit 2 = message")
    print("gates: " + ", ".join(f"{g}{list(t)}" for g, t in rep.gate_sequence))
    for name, state in rep.stage_states:
        print(f"{name}:")
        print("\n".join(state_text(state)))
    print("final reduced message state:")
    print("\n".join(state_text(rep.final_reduced)))
    print(f"distance_to_plaintext: {fmt_num(rep.distance_to_plaintext)}")
    print(f"distance_to_maximally_mixed: {fmt_num(rep.distance_to_maximally_mixed)}")
    print(f"verdict: {rep.verdict}")
    return EXIT_OK


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qske", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("text", "json"), default="text")

    p = sub.add_parser("table", help="print the 32-kind classification")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("run", help="run seeded encrypt/decrypt trials for one kind")
    p.add_argument("--kind", type=int, required=True)
    p.add_argument("--plaintext")
    p.add_argument("--key")
    p.add_argument("--q", type=int, default=11)
    p.add_argument("--g", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--mode", choices=(P.SAMPLED, P.SIMULATED), default=P.SAMPLED)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("analyze", help="key-averaged ciphertext vs the maximally mixed state")
    p.add_argument("--kind", type=int, required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("demo", help="independent-key failure or entangled-key contrast")
    p.add_argument("name")
    p.add_argument("--message", type=int, choices=(0, 1), default=0)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qske: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, P.KeyConsumedError) as exc:
        print(f"qske: failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
