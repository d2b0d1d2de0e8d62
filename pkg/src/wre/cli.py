"""Command-line front end.

Exit codes: 0 success, 1 failed verification check, 2 flag/usage errors,
3 resource-cap violations, 4 estimator failures (e.g. every shot zero).
Resource caps can be raised via the WRE_MAX_N environment variable.
"""

import argparse
import sys
import time
from datetime import datetime, timezone

import numpy as np

from . import __version__, analytic, husimi, protocol, purities, twirl
from .errors import EstimatorError, ResourceLimitError, StateFileError
from .qstate import make_named_state, sample_haar_state
from .results_io import (RunRecord, SweepRow, load_state_file,
                         write_result_json, write_sweep_csv)
from .verify import run_checks

NAMED_KINDS = ("ghz", "w", "pbell", "product")
SAMPLING_METHODS = ("mc-husimi", "twirl")


def _resolve_state(flag, n, seed):
    """Turn a --state flag into (PureState or None, descriptor, kind)."""
    if flag.startswith("file:"):
        path = flag[len("file:"):]
        state = load_state_file(path)
        return state, flag, None
    if flag == "haar":
        if n is None:
            raise ValueError("--n is required for haar states")
        state = sample_haar_state(n, np.random.default_rng(seed))
        return state, f"haar(seed={seed})", None
    if flag in NAMED_KINDS:
        if n is None:
            raise ValueError(f"--n is required for state {flag}")
        return make_named_state(flag, n), flag, flag
    raise ValueError(f"unknown state {flag!r}")


def _write_record(args, descriptor, n, method, value, second_moment,
                  std_error, count, seed, wall_time):
    record = RunRecord(
        tool_version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(),
        state_descriptor=descriptor,
        n_qubits=n,
        method=method,
        value_nats=value,
        second_moment=second_moment,
        std_error=std_error,
        samples_or_shots=count,
        seed=seed,
        wall_time_s=wall_time,
    )
    write_result_json(record, args.out)


def cmd_compute(args):
    t0 = time.perf_counter()
    state, descriptor, kind = _resolve_state(args.state, args.n, args.seed)
    n = state.n_qubits

    if args.method == "analytic":
        if args.state == "haar":
            kind = "haar-mean"
        if kind is None:
            raise ValueError("analytic method needs a named state kind")
        value = analytic.wre_closed_form(kind, n)
        est = husimi.WreEstimate(value=value, second_moment=float(np.exp(-value)),
                                 std_error_value=0.0, method="analytic")
    elif args.method == "exact-swap":
        est = purities.wre_exact(state, method="exact-swap")
    elif args.method == "subset-enum":
        est = purities.wre_exact(state, method="subset-enum")
    elif args.method == "mc-husimi":
        est = husimi.wre_mc(state, args.samples, args.seed, workers=args.workers)
    elif args.method == "twirl":
        est = twirl.wre_twirl(state, args.samples, args.seed, workers=args.workers)
    elif args.method == "protocol":
        est = protocol.wre_protocol(state, args.shots, args.seed).wre
    else:
        raise ValueError(f"unknown method {args.method!r}")

    print(f"WRE({descriptor}, N={n}, {est.method}) = {est.value:.12g} nats"
          + (f" +/- {est.std_error_value:.3g}" if est.std_error_value else ""))
    if args.out:
        count = est.samples
        _write_record(args, descriptor, n, est.method, est.value,
                      est.second_moment, est.std_error_value, count,
                      est.seed if est.seed is not None else args.seed,
                      time.perf_counter() - t0)
    return 0


def _parse_range(text):
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
        if lo < 1 or hi < lo:
            raise ValueError(f"malformed range {text!r}")
        return range(lo, hi + 1)
    return [int(text)]


def cmd_sweep(args):
    kinds = [k.strip() for k in args.states.split(",") if k.strip()]
    for kind in kinds:
        if kind not in analytic.CLOSED_FORM_KINDS:
            raise ValueError(f"unknown sweep state {kind!r}; "
                             f"choose from {', '.join(analytic.CLOSED_FORM_KINDS)}")
    rows = []
    for kind in kinds:
        for n in _parse_range(args.n):
            if kind == "pbell" and n % 2 != 0:
                continue
            lo, hi = analytic.wre_bounds(n)
            value = analytic.wre_closed_form(kind, n)
            rows.append(SweepRow(state_kind=kind, n=n, wre=value,
                                 wre_per_qubit=value / n,
                                 lower_bound=lo, upper_bound=hi))
    write_sweep_csv(rows, args.out)
    print(f"wrote {len(rows)} sweep rows to {args.out}")
    return 0


def cmd_verify(args):
    results = run_checks(level=args.level, seed=args.seed)
    width = max(len(name) for name, _, _ in results)
    failed = []
    for name, passed, detail in results:
        status = "PASS" if passed else "FAIL"
        print(f"{name:<{width}}  {status}  {detail}")
        if not passed:
            failed.append(name)
    if failed:
        print(f"FAILED checks: {', '.join(failed)}")
        return 1
    print("all checks passed")
    return 0


def cmd_protocol(args):
    t0 = time.perf_counter()
    state, descriptor, _ = _resolve_state(args.state, args.n, args.seed)
    est = protocol.wre_protocol(state, args.shots, args.seed)
    summary = protocol.sample_shots(state, args.shots, args.seed)
    print(f"mean_o = {summary.mean_o:.12g}  ({summary.successes}/{summary.shots} shots)")
    if est.exact_p is not None:
        print(f"exact success probability = {est.exact_p:.12g}")
        print(f"variance predicted = {est.variance_predicted:.12g}, "
              f"empirical = {summary.sample_variance:.12g}")
    print(f"WRE = {est.wre.value:.12g} +/- {est.wre.std_error_value:.3g} nats")
    if args.out:
        _write_record(args, descriptor, state.n_qubits, "protocol",
                      est.wre.value, est.wre.second_moment,
                      est.wre.std_error_value, args.shots, args.seed,
                      time.perf_counter() - t0)
    return 0


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wre",
        description="Wehrl-Renyi entropy of N-qubit states by five methods.")
    sub = parser.add_subparsers(dest="command", required=True)

    common_state = dict(help="ghz | w | pbell | product | haar | file:PATH")

    p_compute = sub.add_parser("compute", help="compute the WRE of one state")
    p_compute.add_argument("--state", required=True, **common_state)
    p_compute.add_argument("--n", type=_positive_int)
    p_compute.add_argument("--method", required=True,
                           choices=["exact-swap", "subset-enum", "mc-husimi",
                                    "twirl", "protocol", "analytic"])
    p_compute.add_argument("--samples", type=_positive_int, default=100_000)
    p_compute.add_argument("--shots", type=_positive_int, default=100_000)
    p_compute.add_argument("--seed", type=int, default=0)
    p_compute.add_argument("--workers", type=_positive_int, default=1)
    p_compute.add_argument("--out")
    p_compute.set_defaults(func=cmd_compute)

    p_sweep = sub.add_parser("sweep", help="closed-form WRE vs system size, as CSV")
    p_sweep.add_argument("--states", default="ghz,w,pbell,haar-mean")
    p_sweep.add_argument("--n", default="2:12", help="range lo:hi or a single integer")
    p_sweep.add_argument("--out", required=True)
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the cross-method checks")
    p_verify.add_argument("--level", choices=["quick", "full"], default="quick")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=cmd_verify)

    p_proto = sub.add_parser("protocol", help="two-copy measurement simulation")
    p_proto.add_argument("--state", required=True, **common_state)
    p_proto.add_argument("--n", type=_positive_int)
    p_proto.add_argument("--shots", type=_positive_int, required=True)
    p_proto.add_argument("--seed", type=int, default=0)
    p_proto.add_argument("--out")
    p_proto.set_defaults(func=cmd_protocol)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except EstimatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, StateFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
