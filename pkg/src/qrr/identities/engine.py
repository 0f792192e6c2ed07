"""Public verification operations over the identity registry."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product as _cartesian

from ..pochhammer import (
    PochProduct,
    SeriesAccumulator,
    qpoch_infinite,
    rr_product_side as _rr_product,
)
from ..series import (
    MonomialParam,
    NeedsLaurent,
    TruncatedSeries,
    default_truncation,
    series_compare,
)
from .catalog import REGISTRY
from .framework import (
    EngineError,
    EvalCtx,
    IdentityRecord,
    PochSum,
    QnSum,
    UnknownIdentity,
    VerificationReport,
    _check_params,
    _poch_support,
    _qn_support,
    compare_side_values,
    eval_affine,
    eval_side_value,
    window,
)


def get_record(ident: str) -> IdentityRecord:
    rec = REGISTRY.get(ident)
    if rec is None:
        raise UnknownIdentity(f"no identity with id {ident!r}")
    return rec


def list_identities() -> list[str]:
    return sorted(REGISTRY)


def _now_millis(start: float) -> float:
    if os.environ.get("QRR_ZERO_MILLIS"):
        return 0.0
    return (time.perf_counter() - start) * 1000.0


def verify(ident: str, params: dict, trunc: int | None = None,
           ctx: EvalCtx | None = None) -> VerificationReport:
    """Evaluate both sides of one identity at one parameter point and compare
    every coefficient through the truncation order."""
    rec = get_record(ident)
    if ctx is None:
        ctx = EvalCtx(trunc)
    start = time.perf_counter()
    env = _check_params(rec, params)
    lhs = eval_side_value(rec, "lhs", env, ctx)
    rhs = eval_side_value(rec, "rhs", env, ctx)
    mismatch = compare_side_values(lhs, rhs, ctx.trunc)
    if mismatch is None:
        return VerificationReport(ident=ident, params=dict(env), trunc=ctx.trunc,
                                  verdict="EQUAL", millis=_now_millis(start))
    e, _, _ = mismatch
    return VerificationReport(
        ident=ident, params=dict(env), trunc=ctx.trunc, verdict="MISMATCH",
        mismatch_index=e,
        lhs_window=window(lhs, e, ctx.trunc),
        rhs_window=window(rhs, e, ctx.trunc),
        millis=_now_millis(start),
    )


def grid_points(rec: IdentityRecord,
                ranges: dict[str, tuple[int, int]] | None = None) -> list[dict]:
    """All parameter dicts of a rectangular grid, in lexicographic order."""
    axes = []
    by_name = {name: (lo, hi) for name, lo, hi in rec.default_grid}
    if ranges:
        for name, bounds in ranges.items():
            if name not in {ps.name for ps in rec.params}:
                raise EngineError(f"{rec.ident}: unknown parameter {name!r}")
            by_name[name] = bounds
    for ps in rec.params:
        lo, hi = by_name.get(ps.name, (ps.low, ps.low))
        if lo < ps.low:
            raise EngineError(
                f"{rec.ident}: grid for {ps.name} starts at {lo}, below minimum {ps.low}"
            )
        axes.append([(ps.name, value) for value in range(lo, hi + 1)])
    return [dict(combo) for combo in _cartesian(*axes)]


def _verify_point(args) -> VerificationReport:
    ident, params, trunc = args
    return verify(ident, params, trunc)


def verify_grid(ident: str, ranges: dict[str, tuple[int, int]] | None = None,
                trunc: int | None = None, jobs: int = 1) -> list[VerificationReport]:
    """Verify an identity over a parameter grid; reports come back in the
    same lexicographic order regardless of the worker count."""
    rec = get_record(ident)
    if trunc is None:
        trunc = rec.default_trunc
    points = grid_points(rec, ranges)
    if jobs <= 1 or len(points) < 4:
        return [verify(ident, p, trunc) for p in points]
    tasks = [(ident, p, trunc) for p in points]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        reports = list(pool.map(_verify_point, tasks, chunksize=8))
    return reports


def eval_side(ident: str, side: str, params: dict,
              trunc: int | None = None) -> TruncatedSeries:
    """One side of an identity as an honest power series.

    Raises NeedsLaurent if the value genuinely retains negative q-exponents
    (individual terms may pass through them; only the total matters).
    """
    if side not in ("lhs", "rhs"):
        raise EngineError(f"side must be 'lhs' or 'rhs', got {side!r}")
    rec = get_record(ident)
    ctx = EvalCtx(trunc)
    env = _check_params(rec, params)
    offset, buf = eval_side_value(rec, side, env, ctx)
    if offset < 0:
        head, tail = buf[:-offset], buf[-offset:]
        if any(head):
            first = next(i for i, c in enumerate(head) if c)
            raise NeedsLaurent(
                f"{ident} {side} retains q^{offset + first} with coefficient {head[first]}"
            )
        buf = tail
    elif offset > 0:
        buf = [0] * offset + buf
    return TruncatedSeries(buf[: ctx.trunc + 1], ctx.trunc)


def support_bounds(ident: str, side: str, params: dict,
                   trunc: int | None = None) -> tuple[int, int]:
    """The inclusive k-range the engine sums over for one side.

    For QnSum sides this is the declared symmetric/terminating range (terms
    outside the true support inside this range are exactly zero); for
    PochSum sides it is derived from the argument exponents.
    """
    rec = get_record(ident)
    if trunc is None:
        trunc = rec.default_trunc
    env = _check_params(rec, params)
    s = (rec.lhs if side == "lhs" else rec.rhs).sum
    if s is None:
        raise EngineError(f"{ident} {side} has no sum")
    if isinstance(s, QnSum):
        return _qn_support(s, env, trunc)
    assert isinstance(s, PochSum)
    flip_num = {i for i, _ in s.flips}
    flip_den = {j for _, j in s.flips}
    num_args = [eval_affine(t, env) for t in s.num]
    den_args = [eval_affine(t, env) for t in s.den]
    plain_num = [a for i, a in enumerate(num_args) if i not in flip_num]
    plain_den = [b for j, b in enumerate(den_args) if j not in flip_den]
    pairs = [(num_args[i], den_args[j]) for i, j in s.flips]
    one_sided = s.one_sided or any(b == 1 for b in plain_den)
    return _poch_support(plain_num, plain_den, pairs, one_sided, s, env, trunc)


# ---------------------------------------------------------------------------
# the q -> 1 free and the n -> infinity Rogers-Ramanujan limits
# ---------------------------------------------------------------------------


def rr_limit_check(which: str, trunc: int | None = None) -> VerificationReport:
    """Stabilised n -> infinity limit of the finite identities.

    With n = T, the terminating sum times (q; q)_T agrees with the infinite
    Rogers-Ramanujan sum through q^T — the Gaussian-binomial correction
    factors all start at exponent T-k+1 and k^2 - k >= 0 pushes them past
    the window — so it must match the corresponding infinite product.
    """
    if which == "RR1":
        extra = 0
        product = "mod5_14"
    elif which == "RR2":
        extra = 1
        product = "mod5_23"
    else:
        raise UnknownIdentity(f"rr_limit_check knows RR1 and RR2, not {which!r}")
    if trunc is None:
        trunc = default_truncation()
    start = time.perf_counter()
    n = trunc
    acc = SeriesAccumulator(trunc)
    k = 0
    while k * k + extra * k <= trunc and k <= n:
        t = PochProduct()
        t.q(k * k + extra * k)
        t.qn(n)
        t.dqn(k)
        t.dqn(n - k)
        acc.add(t)
        k += 1
    lhs = acc.series()
    rhs = _rr_product(product, trunc)
    mismatch = series_compare(lhs, rhs)
    params = {"n": n}
    if mismatch is None:
        return VerificationReport(ident=which, params=params, trunc=trunc,
                                  verdict="EQUAL", millis=_now_millis(start))
    e, _, _ = mismatch
    return VerificationReport(
        ident=which, params=params, trunc=trunc, verdict="MISMATCH",
        mismatch_index=e,
        lhs_window=window((0, list(lhs.coeffs)), e, trunc),
        rhs_window=window((0, list(rhs.coeffs)), e, trunc),
        millis=_now_millis(start),
    )


def liu_counterexample(which: str, a_exp: int,
                       trunc: int | None = None) -> VerificationReport:
    """The degenerate specialisation that refutes LIU1/LIU2.

    Setting the product of the second and third parameters to q (for LIU1)
    or to 1 (for LIU2) makes their Pochhammer factors cancel in pairs, so
    the left side collapses to a one-parameter bilateral sum with the
    closed form (q)_inf/(a)_inf resp. (q)_inf/(aq)_inf — while the right
    side's prefactor acquires a (q^0; q)_inf factor and vanishes.  The two
    sides disagree already at q^0.
    """
    if which not in ("LIU1", "LIU2"):
        raise UnknownIdentity(f"liu_counterexample knows LIU1 and LIU2, not {which!r}")
    if a_exp < 1:
        raise EngineError(f"the first parameter must be q^e with e >= 1, got e={a_exp}")
    if trunc is None:
        trunc = default_truncation()
    start = time.perf_counter()
    alpha = a_exp
    acc = SeriesAccumulator(trunc)
    if which == "LIU1":
        # sum over |k| <= alpha-1 of (q/a)_k / (a)_k * a^k q^{k^2-k}
        for k in range(1 - alpha, alpha):
            t = PochProduct()
            t.q(k * k - k + alpha * k)
            t.poch(1 - alpha, k)
            t.poch(alpha, k, -1)
            acc.add(t)
        closed = qpoch_infinite(MonomialParam.q_power(1), trunc) * \
            qpoch_infinite(MonomialParam.q_power(alpha), trunc).invert()
    else:
        # sum over -alpha <= k <= alpha-1 of (q/a)_k / (aq)_k * a^k q^{k^2}
        for k in range(-alpha, alpha):
            t = PochProduct()
            t.q(k * k + alpha * k)
            t.poch(1 - alpha, k)
            t.poch(alpha + 1, k, -1)
            acc.add(t)
        closed = qpoch_infinite(MonomialParam.q_power(1), trunc) * \
            qpoch_infinite(MonomialParam.q_power(alpha + 1), trunc).invert()
    lhs = acc.series()
    if series_compare(lhs, closed) is not None:
        raise EngineError(f"{which}: degenerate sum disagrees with its closed form")
    rhs = TruncatedSeries.zero(trunc)
    mismatch = series_compare(lhs, rhs)
    params = {"a_exp": a_exp}
    if mismatch is None:
        return VerificationReport(ident=which, params=params, trunc=trunc,
                                  verdict="EQUAL", millis=_now_millis(start))
    e, _, _ = mismatch
    return VerificationReport(
        ident=which, params=params, trunc=trunc, verdict="MISMATCH",
        mismatch_index=e,
        lhs_window=window((0, list(lhs.coeffs)), e, trunc),
        rhs_window=window((0, list(rhs.coeffs)), e, trunc),
        millis=_now_millis(start),
    )


# ---------------------------------------------------------------------------
# perturbation sites (used by tests to confirm the comparisons have teeth)
# ---------------------------------------------------------------------------


def identity_sites(ident: str, params: dict, trunc: int = 20) -> list[str]:
    """Names of every exponent that enters the evaluation at this point."""
    rec = get_record(ident)
    recorder: set[str] = set()
    ctx = EvalCtx(trunc, recorder=recorder)
    env = _check_params(rec, params)
    eval_side_value(rec, "lhs", env, ctx)
    eval_side_value(rec, "rhs", env, ctx)
    return sorted(recorder)


def verify_mutated(ident: str, params: dict, site: str, delta: int,
                   trunc: int = 20) -> VerificationReport:
    """Re-verify with one exponent site perturbed.

    Power-of-q sites are perturbed linearly in k (delta * k) so that even a
    side that sums to zero is knocked off its cancellation; index and
    argument sites are shifted by the constant delta.
    """
    kind = "linear" if site.endswith(".qpow") else "const"
    ctx = EvalCtx(trunc, mutations={site: (kind, delta)})
    return verify(ident, params, trunc=None, ctx=ctx)
