"""
Subcommand implementations. Each takes the parsed :class:`argparse.Namespace` and an optional
grid executor, and returns an :class:`~crr.cli.record.OutputRecord` plus a flag telling the
caller whether a cross-check exceeded its tolerance.

Row functions are module-level so that process pools can pickle them.
"""

import math
from argparse import Namespace

import numpy as np

from crr import chain, coulomb, opuc, poly, quadrature, zeros
from crr._typing import *
from crr.cli.record import OutputRecord
from crr.exceptions import DomainError
from crr.executor import AsyncExecutor, evaluate_grid
from crr.params import ParamB
from crr.utils import pochhammer

ZERO_AGREEMENT_TOL = 1e-8
"""Largest gap allowed between companion-matrix zeros and the energy minimizer."""

BESSEL_AGREEMENT_TOL = 1e-11

CommandResult = Tuple[OutputRecord, bool]


def parse_grid(text: str) -> List[float]:
    """
    ``a:b:steps`` → ``steps`` equally spaced points from a to b inclusive.

    Examples:
        >>> parse_grid("2:2:1")
        [2.0]
        >>> parse_grid("0:1:3")
        [0.0, 0.5, 1.0]
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must look like a:b:steps, got {text!r}")
    lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    if steps < 1:
        raise ValueError(f"grid needs at least one step, got {steps}")
    if steps == 1:
        return [lo]
    return np.linspace(lo, hi, steps).tolist()


def _param(args: Namespace) -> ParamB:
    return ParamB(args.lam, args.eta)


def _label(name: str, value: float) -> str:
    return f"{name}={value!r}"


# eval-poly


def _eval_row(b: ParamB, n: int, x: float, method: EvalMethod) -> List[float]:
    if method == "recurrence":
        return [poly.crr_eval_recurrence(b, n, x)]
    if method == "hyper":
        return [poly.crr_eval_hypergeometric(b, n, x)]
    return [poly.crr_eval_recurrence(b, n, x), poly.crr_eval_hypergeometric(b, n, x)]


def eval_poly(args: Namespace, executor: Optional[AsyncExecutor]) -> CommandResult:
    b = _param(args)
    xs = parse_grid(args.x_grid)
    record = OutputRecord(
        "eval-poly",
        {"lambda": b.lam, "eta": b.eta, "n": args.n, "x_grid": args.x_grid, "method": args.method},
    )
    rows = evaluate_grid(_eval_row, [(b, args.n, x, args.method) for x in xs], executor)
    for x, values in zip(xs, rows):
        record.add_row(_label("x", x), values)
    failed = False
    if args.method == "both":
        discrepancy = max(abs(r - h) / max(1.0, abs(r)) for r, h in rows)
        record.add_diagnostic("max_discrepancy", discrepancy)
        failed = discrepancy > opuc.METHOD_AGREEMENT_TOL
    return record, failed


# zeros


def zeros_cmd(args: Namespace, executor: Optional[AsyncExecutor]) -> CommandResult:
    b = _param(args)
    record = OutputRecord("zeros", {"lambda": b.lam, "eta": b.eta, "n": args.n, "method": args.method})
    failed = False
    if args.method == "eigen":
        config = zeros.crr_zeros(b, args.n)
        record.add_row("zeros", config.positions)
    elif args.method == "electro":
        config = zeros.minimize_energy(args.n, b)
        record.add_row("zeros", config.positions)
    else:
        config = zeros.crr_zeros(b, args.n)
        electro = zeros.minimize_energy(args.n, b)
        record.add_row("eigen", config.positions)
        record.add_row("electro", electro.positions)
        discrepancy = max(abs(u - v) for u, v in zip(config.positions, electro.positions))
        record.add_diagnostic("max_discrepancy", discrepancy)
        failed = discrepancy > ZERO_AGREEMENT_TOL
    record.add_diagnostic("energy", config.energy)
    record.add_diagnostic("grad_norm", config.grad_norm)
    return record, failed


# ortho


def ortho(args: Namespace, executor: Optional[AsyncExecutor]) -> CommandResult:
    b = _param(args)
    record = OutputRecord("ortho", {"lambda": b.lam, "eta": b.eta, "n_max": args.n_max, "tol": args.tol})
    matrix = quadrature.orthogonality_matrix(b, args.n_max, args.tol, executor)
    for m, row in enumerate(matrix):
        record.add_row(f"m={m}", row)
    record.add_row("gamma", chain.gamma_seq(b.lam, args.n_max))
    off = quadrature.off_diagonal_max(matrix)
    mismatch = quadrature.gamma_mismatch(b, matrix)
    record.add_diagnostic("off_diagonal_max", off)
    record.add_diagnostic("gamma_mismatch", mismatch)
    return record, False


# coulomb


def _coulomb_row(L: int, eta: float, w: float, checks: Tuple[str, ...]) -> List[float]:
    values = [coulomb.coulomb_f(L, eta, w)]
    if "ode" in checks:
        values.append(coulomb.coulomb_ode_residual(L, eta, w))
    if "recurrence" in checks:
        values.append(coulomb.lambda_recurrence_residual(ParamB(L + 1, -eta), w))
    return values


def coulomb_cmd(args: Namespace, executor: Optional[AsyncExecutor]) -> CommandResult:
    checks = tuple(c for c in (args.check or "").split(",") if c)
    unknown = set(checks) - {"ode", "recurrence"}
    if unknown:
        raise DomainError("check in {ode, recurrence}", check=",".join(sorted(unknown)))
    ws = parse_grid(args.w_grid)
    record = OutputRecord(
        "coulomb", {"L": args.L, "eta": args.eta, "w_grid": args.w_grid, "check": ",".join(checks)}
    )
    rows = evaluate_grid(_coulomb_row, [(args.L, args.eta, w, checks) for w in ws], executor)
    for w, values in zip(ws, rows):
        record.add_row(_label("w", w), values)
    record.add_diagnostic("gamow", coulomb.gamow_factor(ParamB(args.L + 1, -args.eta)))
    for k, name in enumerate(checks, start=1):
        record.add_diagnostic(f"max_{name}_residual", max(abs(r[k]) for r in rows))
    return record, False


# bessel


def _bessel_row(alpha: float, w: float) -> List[float]:
    return [coulomb.bessel_j(alpha, w), coulomb.bessel_j_series(alpha, w)]


def bessel(args: Namespace, executor: Optional[AsyncExecutor]) -> CommandResult:
    ws = parse_grid(args.w_grid)
    record = OutputRecord("bessel", {"alpha": args.alpha, "w_grid": args.w_grid})
    rows = evaluate_grid(_bessel_row, [(args.alpha, w) for w in ws], executor)
    for w, values in zip(ws, rows):
        record.add_row(_label("w", w), values)
    discrepancy = max(abs(j - s) for j, s in rows)
    record.add_diagnostic("max_discrepancy", discrepancy)
    return record, discrepancy > BESSEL_AGREEMENT_TOL


# expand


def _coulomb_indices(b: ParamB) -> Tuple[int, float]:
    L = b.lam - 1
    if L < 0 or L != math.floor(L):
        raise DomainError("lambda - 1 a non-negative integer", lam=b.lam)
    return int(L), -b.eta


def expand(args: Namespace, executor: Optional[AsyncExecutor]) -> CommandResult:
    b = _param(args)
    N, x, w = args.order, args.x, args.w
    if w is None:
        w = 0.5 * coulomb.weber_window(x) if args.kind == "weber" else 1.0
    record = OutputRecord(
        "expand", {"lambda": b.lam, "eta": b.eta, "kind": args.kind, "order": N, "x": x, "w": w}
    )
    if args.kind == "appell":
        for n, value in enumerate(poly.crr_monic_sequence(b, N, x)):
            record.add_row(f"n={n}", [value])
        record.add_diagnostic("residual", coulomb.appell_genfunc_residual(b, x, w, N))
    elif args.kind == "weber":
        for n, value in enumerate(poly.crr_monic_sequence(b, N, x)):
            record.add_row(f"n={n}", [pochhammer(2 * b.lam, n) * value])
        lhs = coulomb.weber_genfunc_lhs(b, x, w)
        series = coulomb.weber_genfunc_series(b, x, w, N)
        record.add_diagnostic("lhs", lhs)
        record.add_diagnostic("series", series)
        record.add_diagnostic("residual", abs(lhs - series))
    elif args.kind == "sincos":
        a, bseq = coulomb.ab_sequences(b, N)
        for n in range(N + 1):
            record.add_row(f"n={n}", [a[n], bseq[n]])
        if N >= 1:
            for which in ("cos", "sin", "combined"):
                residual = coulomb.sincos_expansion_residual(b, w, N - 1, which)
                record.add_diagnostic(f"{which}_residual", residual)
    elif args.kind == "acoeffs":
        L, eta = _coulomb_indices(b)
        for k, value in enumerate(coulomb.a_coeffs(L, eta, N)):
            record.add_row(f"k={k + L + 1}", [value])
        if w > 0:
            exact = coulomb.coulomb_f(L, eta, w)
            record.add_diagnostic("residual", abs(exact - coulomb.coulomb_f_series(L, eta, w, N)))
    else:
        raise DomainError("kind in {appell, weber, sincos, acoeffs}", kind=args.kind)
    return record, False


# chain


def chain_cmd(args: Namespace, executor: Optional[AsyncExecutor]) -> CommandResult:
    seqs = chain.chain_sequences(args.lam, args.n_max)
    record = OutputRecord("chain", {"lambda": seqs.lam, "n_max": args.n_max})
    K = args.n_max
    record.add_row("d", seqs.d[2 : K + 2])
    record.add_row("ell", seqs.ell[1 : K + 1])
    if seqs.gamma:
        record.add_row("big_ell", seqs.bigL[1 : K + 1])
        record.add_row("gamma", seqs.gamma)
    record.add_row("leading", chain.leading_coeffs(seqs.lam, K))
    return record, False


COMMANDS: Dict[str, Callable[[Namespace, Optional[AsyncExecutor]], CommandResult]] = {
    "eval-poly": eval_poly,
    "zeros": zeros_cmd,
    "ortho": ortho,
    "coulomb": coulomb_cmd,
    "bessel": bessel,
    "expand": expand,
    "chain": chain_cmd,
}
