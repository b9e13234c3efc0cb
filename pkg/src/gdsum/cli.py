"""Command-line front end: precompute, sum, verify, bench.

Exit codes: 0 success, 1 usage/configuration error, 2 verification failure.
All randomness is driven by --seed, so reports are reproducible; only the
wall-clock columns of bench vary between runs.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
import time
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from .characters import parse_character_spec
from .cosets import u_func
from .dedekind import (
    Context,
    ParityWarning,
    cache_filename,
    crossed_hom_check,
    fast_sum,
    load_context,
    naive_sum,
    precompute,
    save_context,
    split_gamma0,
)
from .modgroup import I2, Mat2, S, T, random_gamma0, random_sl2, ts_decompose
from .rewriter import (
    format_factor,
    format_reduced,
    modified_rewrite,
    reduce_t_power,
    reduce_word,
)


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; route them to exit 1
    def error(self, message):
        raise CliError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="gdsum",
        description="Exact generalized Dedekind sums for primitive character pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--chi1", required=True, help='character spec, e.g. "q=5;g=2;v=3/4"')
        p.add_argument("--chi2", required=True, help='character spec, e.g. "q=7;g=3;v=5/6"')
        p.add_argument("--cache-dir", default=".gdsum-cache", help="directory for table caches")
        p.add_argument(
            "--allow-large-n",
            action="store_true",
            help="lift the N <= 60 precompute guardrail (tables grow like N^3)",
        )

    p = sub.add_parser("precompute", help="build and cache the tables for a pair")
    add_common(p)
    p.add_argument("--force", action="store_true", help="rebuild even if cached")

    p = sub.add_parser("sum", help="evaluate one sum")
    add_common(p)
    p.add_argument("--matrix", required=True, help='matrix "a,b;c,d"')
    p.add_argument("--naive", action="store_true", help="evaluate the double sum instead")
    p.add_argument("--trace", action="store_true", help="print the factor expansion")

    p = sub.add_parser("verify", help="randomized exact verification suites")
    add_common(p)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cmax", type=int, default=2000, help="largest lower-left entry tested")

    p = sub.add_parser("bench", help="fast-vs-naive timing sweep, CSV output")
    add_common(p)
    p.add_argument("--kmin", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--samples", type=int, default=5, help="matrices per k")
    p.add_argument("--naive-cutoff", type=int, default=10**5, help="skip the double sum above this c")
    p.add_argument("--output", required=True, help="CSV file to write")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--ar-zero",
        action="store_true",
        help="shift d so the trailing T-exponent of each sample is 0",
    )
    return parser


def _load_or_build(args, *, force: bool = False, announce: bool = False) -> Context:
    chi1 = parse_character_spec(args.chi1)
    chi2 = parse_character_spec(args.chi2)
    cache_dir = Path(args.cache_dir)
    path = cache_dir / cache_filename(chi1, chi2)
    if path.exists() and not force:
        ctx = load_context(path)
        if announce:
            print(f"reusing cache {path}")
        return ctx
    t0 = time.perf_counter()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ParityWarning)
        ctx = precompute(chi1, chi2, allow_large=args.allow_large_n)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    elapsed = time.perf_counter() - t0
    cache_dir.mkdir(parents=True, exist_ok=True)
    save_context(ctx, path)
    if announce:
        print(
            f"precomputed N={ctx.N}: |T_g0|={len(ctx.t_g0)}, |T_sl2|={len(ctx.t_sl2)}, "
            f"alphabet={len(ctx.alphabet)} entries, order L={ctx.L} "
            f"({elapsed:.2f} s) -> {path}"
        )
    return ctx


def _format_value(v) -> str:
    z = v.approx()
    return f"{v}\n  ~ ({z.real:.12g}, {z.imag:.12g})"


def cmd_precompute(args) -> int:
    _load_or_build(args, force=args.force, announce=True)
    return 0


def cmd_sum(args) -> int:
    ctx = _load_or_build(args)
    gamma = Mat2.parse(args.matrix)
    if args.trace:
        _print_trace(ctx, gamma)
    if args.naive:
        value = naive_sum(ctx.chi1, ctx.chi2, gamma)
    else:
        value = fast_sum(ctx, gamma)
    print(_format_value(value))
    return 0


def _print_trace(ctx: Context, gamma: Mat2) -> None:
    g1, g, d_key = split_gamma0(ctx, gamma)
    print(f"gamma = gamma1 * g with g = {g} (d = {d_key} mod {ctx.N})")
    w = ts_decompose(g1)
    sign = "-" if w.negate else ""
    word = " S ".join(f"T^{e}" for e in w.exponents)
    print(f"gamma1 = {g1} = {sign}{word}")
    factors = modified_rewrite(w, ctx.t_sl2)
    print("rewritten factors:")
    for f in factors:
        print(f"  {format_factor(f)}")
    reduced = reduce_word(factors, ctx.N)
    print("alphabet terms:")
    for f in reduced:
        print(f"  {format_reduced(f)}")


@dataclass
class VerifyReport:
    lines: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def record(self, name: str, ok: bool, detail: str = ""):
        self.lines.append((name, ok, detail))
        if not ok:
            self.failures.append((name, detail))

    @property
    def ok(self) -> bool:
        return not self.failures


def run_verify(ctx: Context, *, trials: int, seed: int, cmax: int) -> VerifyReport:
    """Oracle-equivalence and exact-identity suites; all checks exact."""
    report = VerifyReport()
    rng = random.Random(seed)
    N, t = ctx.N, ctx.t_sl2

    # every Gamma0-transversal sum against the double sum
    bad = []
    for d, mem in ctx.t_g0.members.items():
        expect = naive_sum(ctx.chi1, ctx.chi2, mem) if mem != I2 else None
        if expect is not None and expect != ctx.sums_g0[d]:
            bad.append(f"d={d}: table {ctx.sums_g0[d]} vs oracle {expect}")
    report.record(
        "transversal-sums", not bad, bad[0] if bad else f"{len(ctx.t_g0)} entries"
    )

    # random alphabet entries with c >= 1 against the double sum
    checkable = [k for k, m in ctx.alphabet.items() if m.c >= 1]
    picked = rng.sample(checkable, min(20, len(checkable)))
    bad = []
    for key in picked:
        if naive_sum(ctx.chi1, ctx.chi2, ctx.alphabet[key]) != ctx.sums_alphabet[key]:
            bad.append(f"entry {key}: matrix {ctx.alphabet[key]}")
    report.record("alphabet-spot-check", not bad, bad[0] if bad else f"{len(picked)} entries")

    # fast path vs the double sum
    kmax = max(1, cmax // N)
    bad = []
    for _ in range(trials):
        gamma = random_gamma0(N, rng, kmax=kmax, d_shift=1)
        fast = fast_sum(ctx, gamma)
        slow = naive_sum(ctx.chi1, ctx.chi2, gamma)
        if fast != slow:
            bad.append(f"gamma={gamma}: fast {fast} vs naive {slow}")
    report.record("oracle-equivalence", not bad, bad[0] if bad else f"{trials} matrices")

    # crossed homomorphism under the double sum
    bad = []
    done = 0
    while done < trials:
        ga = random_gamma0(N, rng, kmax=max(1, min(kmax, 8)))
        gb = random_gamma0(N, rng, kmax=max(1, min(kmax, 8)))
        if (ga * gb).c < 1:
            continue
        done += 1
        if not crossed_hom_check(ctx.chi1, ctx.chi2, ga, gb):
            bad.append(f"ga={ga}, gb={gb}")
    report.record("crossed-homomorphism", not bad, bad[0] if bad else f"{trials} pairs")

    # exact coset/U-function identities
    bad = []
    for _ in range(trials):
        x, y = random_sl2(rng, 14), random_sl2(rng, 14)
        if t.bar(x * y) != t.bar(t.bar(x) * y):
            bad.append(f"x={x}, y={y}")
    report.record("nested-coset-law", not bad, bad[0] if bad else f"{trials} pairs")

    bad = []
    for _ in range(trials):
        x, y = random_sl2(rng, 14), random_sl2(rng, 14)
        if not u_func(x, y, t).in_gamma1(N):
            bad.append(f"x={x}, y={y}")
    report.record("u-in-gamma1", not bad, bad[0] if bad else f"{trials} pairs")

    bad = []
    for _ in range(trials):
        m = random_sl2(rng, 14)
        if t.bar(m.mul_t_power(N)) != t.bar(m):
            bad.append(f"m={m}")
    report.record("t-power-coset-cycle", not bad, bad[0] if bad else f"{trials} matrices")

    bad = []
    for _ in range(trials):
        a = random_sl2(rng, 10)
        b = rng.choice((S, T))
        k = rng.randint(1, 12)
        lhs = u_func(t.bar(a), _mat_pow(b, k), t)
        rhs = I2
        cur = a
        for _ in range(k):
            rhs = rhs * u_func(t.bar(cur), b, t)
            cur = cur * b
        if lhs != rhs:
            bad.append(f"a={a}, b={b}, k={k}")
            continue
        lhs = u_func(t.bar(a), _mat_pow(b, -k), t)
        rhs = I2
        cur = a
        for _ in range(k):
            cur = cur * b.inv()
            rhs = rhs * u_func(t.bar(cur), b, t).inv()
        if lhs != rhs:
            bad.append(f"a={a}, b={b}, k=-{k}")
    report.record("power-product-identities", not bad, bad[0] if bad else f"{trials} instances")

    bad = []
    for _ in range(trials):
        m = random_sl2(rng, 14)
        a = rng.randint(-6 * N, 6 * N)
        q, r = reduce_t_power(a, N)
        lhs = u_func(t.bar(m), Mat2.t_power(a), t)
        un = u_func(t.bar(m), Mat2.t_power(N), t)
        rhs = _mat_pow(un, q) * u_func(t.bar(m), Mat2.t_power(r), t)
        if lhs != rhs:
            bad.append(f"m={m}, a={a}")
    report.record("t-power-reduction", not bad, bad[0] if bad else f"{trials} instances")

    return report


def _mat_pow(m: Mat2, k: int) -> Mat2:
    if k < 0:
        m, k = m.inv(), -k
    out = I2
    for _ in range(k):
        out = out * m
    return out


def cmd_verify(args) -> int:
    ctx = _load_or_build(args)
    report = run_verify(ctx, trials=args.trials, seed=args.seed, cmax=args.cmax)
    for name, ok, detail in report.lines:
        print(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail})")
    if not report.ok:
        print(f"{len(report.failures)} suite(s) failed; first counterexamples above")
        return 2
    return 0


def _bench_matrix(N: int, c: int, rng, ar_zero: bool) -> Mat2:
    from math import gcd

    while True:
        a = rng.randrange(1, c)
        if gcd(a, c) == 1:
            break
    d = pow(a, -1, c)
    b = (a * d - 1) // c
    gamma = Mat2(a, b, c, d)
    if ar_zero:
        # shifting d by m*c adds m to the trailing exponent
        tail = ts_decompose(gamma).exponents[-1]
        if tail:
            gamma = gamma.mul_t_power(-tail)
            assert ts_decompose(gamma).exponents[-1] == 0
    return gamma


def cmd_bench(args) -> int:
    if args.kmin < 1 or args.kmax < args.kmin:
        raise CliError("need 1 <= kmin <= kmax")
    ctx = _load_or_build(args)
    rng = random.Random(args.seed)
    rows = []
    for k in range(args.kmin, args.kmax + 1):
        c = ctx.N * k
        mats = [_bench_matrix(ctx.N, c, rng, args.ar_zero) for _ in range(args.samples)]
        fast_sum(ctx, mats[0])  # warm-up
        t0 = time.perf_counter()
        for m in mats:
            fast_sum(ctx, m)
        fast_mean = (time.perf_counter() - t0) / len(mats)
        naive_mean = ""
        if c <= args.naive_cutoff:
            t0 = time.perf_counter()
            for m in mats:
                naive_sum(ctx.chi1, ctx.chi2, m)
            naive_mean = (time.perf_counter() - t0) / len(mats)
        rows.append((k, c, len(mats), fast_mean, naive_mean))
    out = Path(args.output)
    with out.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "c", "n_samples", "fast_mean_s", "naive_mean_s"])
        for k, c, n, fast_mean, naive_mean in rows:
            writer.writerow([k, c, n, f"{fast_mean:.9f}", "" if naive_mean == "" else f"{naive_mean:.9f}"])
    print(f"wrote {len(rows)} rows to {out}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "precompute": cmd_precompute,
            "sum": cmd_sum,
            "verify": cmd_verify,
            "bench": cmd_bench,
        }[args.command]
        return handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
