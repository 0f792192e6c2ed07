"""Bailey pairs, the Bailey chain, and the Bailey lattice over exact series.

A pair is stored as two term generators: ``alpha_terms(r)`` and
``beta_terms(n)`` return lists of :class:`~qrr.pochhammer.PochProduct`
factors whose accumulated value is the entry ``alpha_r`` resp. ``beta_n``.
Working at the term level keeps boundary cases exact -- vanishing numerator
factors simply flip a term into its zero state instead of forcing a limit --
and turns the chain transformations into one-line term multiplications.

Three relation modes tie alpha to beta (with x = q^x_exp)::

    one_sided      beta_n = sum_{r=0..n}    alpha_r / ((q)_{n-r} (xq)_{n+r})
    bilateral_x1   beta_n = sum_{r in Z}    alpha_r / ((q)_{n-r} (q)_{n+r})
    bilateral_xq   beta_n = sum_{r in Z}    alpha_r / ((q)_{n-r} (q)_{n+r+1})

beta is defined for n >= 0 only; the bilateral modes are bilateral in the
alpha index.  The bilateral relation sums are finite for each n because the
reciprocal factorials kill every index outside [-n, n] (resp. [-n-1, n]).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .series import default_truncation
from .pochhammer import PochProduct, sum_terms, terms_to_series
from .identities.framework import (
    EngineError,
    EvalCtx,
    VerificationReport,
    _check_params,
    compare_side_values,
    eval_side_value,
    window,
)
from .identities.engine import _now_millis, get_record

__all__ = [
    "BaileyPair",
    "MODES",
    "unit_pair_x1",
    "unit_bilateral_x1",
    "unit_bilateral_xq",
    "lattice_seed_pair",
    "fold_to_one_sided",
    "verify_pair",
    "bailey_step",
    "lattice_step",
    "symmetrized_identity",
    "chain_reproduce",
]

MODES = ("one_sided", "bilateral_x1", "bilateral_xq")

TermFn = Callable[[int], list]


def _sign(n: int) -> int:
    return -1 if n & 1 else 1


def _binom2(n: int) -> int:
    """n(n-1)/2, valid for negative n as well."""
    return n * (n - 1) // 2


@dataclass(frozen=True)
class BaileyPair:
    """A pair of term generators plus the relation mode that links them."""

    mode: str
    x_exp: int
    alpha_terms: TermFn = field(repr=False)
    beta_terms: TermFn = field(repr=False)
    label: str = ""

    def __post_init__(self):
        if self.mode not in MODES:
            raise EngineError(f"unknown pair mode {self.mode!r}")
        if self.mode == "bilateral_x1" and self.x_exp != 0:
            raise EngineError("bilateral_x1 pairs have x = 1")
        if self.mode == "bilateral_xq" and self.x_exp != 1:
            raise EngineError("bilateral_xq pairs have x = q")
        if self.x_exp < 0:
            raise EngineError("pair parameter must be a nonnegative power of q")

    # -- values -------------------------------------------------------------

    def alpha_value(self, r: int, trunc: int | None = None):
        trunc = default_truncation() if trunc is None else trunc
        return sum_terms(self.alpha_terms(r), trunc)

    def beta_value(self, n: int, trunc: int | None = None):
        trunc = default_truncation() if trunc is None else trunc
        return sum_terms(self.beta_terms(n), trunc)

    def alpha_series(self, r: int, trunc: int | None = None):
        trunc = default_truncation() if trunc is None else trunc
        return terms_to_series(self.alpha_terms(r), trunc)

    def beta_series(self, n: int, trunc: int | None = None):
        trunc = default_truncation() if trunc is None else trunc
        return terms_to_series(self.beta_terms(n), trunc)

    # -- the defining relation ------------------------------------------------

    def relation_range(self, n: int) -> range:
        if self.mode == "one_sided":
            return range(0, n + 1)
        if self.mode == "bilateral_x1":
            return range(-n, n + 1)
        return range(-n - 1, n + 1)

    def relation_terms(self, n: int) -> list:
        """Terms of the relation sum whose value should equal beta_n."""
        if n < 0:
            raise EngineError("the pair relation is stated for n >= 0")
        out = []
        for r in self.relation_range(n):
            if self.mode == "one_sided":
                den = PochProduct().dqn(n - r).dpoch(self.x_exp + 1, n + r)
            elif self.mode == "bilateral_x1":
                den = PochProduct().dqn(n - r).dqn(n + r)
            else:
                den = PochProduct().dqn(n - r).dqn(n + r + 1)
            for t in self.alpha_terms(r):
                out.append(t.mul(den))
        return out

    def relation_value(self, n: int, trunc: int | None = None):
        trunc = default_truncation() if trunc is None else trunc
        return sum_terms(self.relation_terms(n), trunc)


# ---------------------------------------------------------------------------
# stock pairs
# ---------------------------------------------------------------------------


def _delta_beta(n: int) -> list:
    return [PochProduct()] if n == 0 else []


def unit_pair_x1() -> BaileyPair:
    """The one-sided unit pair with x = 1.

    alpha_0 = 1, alpha_n = (-1)^n (q^(n(n-1)/2) + q^(n(n+1)/2)) for n >= 1,
    and beta_n = delta_{n,0}.
    """

    def alpha(r: int) -> list:
        if r < 0:
            return []
        if r == 0:
            return [PochProduct()]
        s = _sign(r)
        return [
            PochProduct().scale(s).q(_binom2(r)),
            PochProduct().scale(s).q(_binom2(-r)),
        ]

    return BaileyPair("one_sided", 0, alpha, _delta_beta, label="unit-x1")


def _unit_bilateral_alpha(r: int) -> list:
    return [PochProduct().scale(_sign(r)).q(_binom2(r))]


def unit_bilateral_x1() -> BaileyPair:
    """The bilateral unit pair with x = 1: alpha_r = (-1)^r q^(r(r-1)/2)."""
    return BaileyPair("bilateral_x1", 0, _unit_bilateral_alpha, _delta_beta,
                      label="unit-x1-bilateral")


def unit_bilateral_xq() -> BaileyPair:
    """The bilateral unit pair with x = q; the same alpha as for x = 1,
    related through the shifted factorial (q)_{n+r+1}."""
    return BaileyPair("bilateral_xq", 1, _unit_bilateral_alpha, _delta_beta,
                      label="unit-xq-bilateral")


def lattice_seed_pair() -> BaileyPair:
    """The one-sided pair with x = q used to seed the lattice route:
    alpha_n = (-1)^n q^(n(n-1)/2) (1-q^(2n+1))/(1-q), beta_n = delta_{n,0}.

    This is exactly the one-sided fold of the bilateral x = q unit pair.
    """

    def alpha(r: int) -> list:
        if r < 0:
            return []
        return [
            PochProduct().scale(_sign(r)).q(_binom2(r)).factor(2 * r + 1).dfactor(1)
        ]

    return BaileyPair("one_sided", 1, alpha, _delta_beta, label="lattice-seed")


def fold_to_one_sided(pair: BaileyPair) -> BaileyPair:
    """Fold a bilateral pair onto nonnegative indices.

    For x = 1 the relation denominators at r and -r agree, so
    alpha'_n = alpha_n + alpha_{-n} (n >= 1) with alpha'_0 = alpha_0.
    For x = q the denominators at r and -r-1 agree and (xq)_{n+r} picks up
    one extra binomial, so alpha'_n = (alpha_n + alpha_{-n-1})/(1-q).
    beta is unchanged either way.
    """
    if pair.mode == "one_sided":
        return pair
    old = pair.alpha_terms
    if pair.mode == "bilateral_x1":

        def alpha(r: int) -> list:
            if r < 0:
                return []
            if r == 0:
                return [t.copy() for t in old(0)]
            return [t.copy() for t in old(r)] + [t.copy() for t in old(-r)]

        x_exp = 0
    else:

        def alpha(r: int) -> list:
            if r < 0:
                return []
            out = [t.copy() for t in old(r)] + [t.copy() for t in old(-r - 1)]
            return [t.dfactor(1) for t in out]

        x_exp = 1

    return BaileyPair("one_sided", x_exp, alpha, pair.beta_terms,
                      label=f"fold({pair.label})")


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def verify_pair(pair: BaileyPair, n_max: int = 10,
                trunc: int | None = None) -> list[VerificationReport]:
    """Check the defining relation for n = 0..n_max; one report per index."""
    trunc = default_truncation() if trunc is None else trunc
    reports = []
    for n in range(n_max + 1):
        start = time.perf_counter()
        lhs = pair.beta_value(n, trunc)
        rhs = pair.relation_value(n, trunc)
        diff = compare_side_values(lhs, rhs, trunc)
        label = pair.label or "pair"
        if diff is None:
            rep = VerificationReport(label, {"n": n}, trunc, "EQUAL")
        else:
            e, _, _ = diff
            rep = VerificationReport(label, {"n": n}, trunc, "MISMATCH",
                                     mismatch_index=e,
                                     lhs_window=window(lhs, e, trunc),
                                     rhs_window=window(rhs, e, trunc))
        rep.millis = _now_millis(start)
        reports.append(rep)
    return reports


# ---------------------------------------------------------------------------
# chain and lattice moves
# ---------------------------------------------------------------------------


def bailey_step(pair: BaileyPair, rho1_exp: int, rho2_exp: int,
                label: str | None = None) -> BaileyPair:
    """One move along the Bailey chain with rho_i = q^rho_i_exp.

    Keeps the mode and the parameter x; multiplies alpha_r by

        (rho1, rho2)_r (xq/rho1 rho2)^r / ((xq/rho1)_r (xq/rho2)_r)

    at every index (negative ones included for bilateral pairs), and maps

        beta_n -> sum_{r=0..n} (rho1, rho2)_r (xq/rho1 rho2)_{n-r}
                  (xq/rho1 rho2)^r / ((q)_{n-r} (xq/rho1)_n (xq/rho2)_n) beta_r.

    Requires rho_i_exp <= x_exp so the new denominators stay regular.
    """
    x = pair.x_exp
    if rho1_exp > x or rho2_exp > x:
        raise EngineError(
            f"chain step needs rho exponents <= {x}, got ({rho1_exp}, {rho2_exp})"
        )
    e1 = x + 1 - rho1_exp
    e2 = x + 1 - rho2_exp
    e12 = x + 1 - rho1_exp - rho2_exp
    old_alpha, old_beta = pair.alpha_terms, pair.beta_terms

    def alpha(r: int) -> list:
        m = (PochProduct().poch(rho1_exp, r).poch(rho2_exp, r)
             .q(e12 * r).dpoch(e1, r).dpoch(e2, r))
        return [t.mul(m) for t in old_alpha(r)]

    def beta(n: int) -> list:
        out = []
        for r in range(0, n + 1):
            c = (PochProduct().poch(rho1_exp, r).poch(rho2_exp, r)
                 .poch(e12, n - r).q(e12 * r)
                 .dqn(n - r).dpoch(e1, n).dpoch(e2, n))
            for t in old_beta(r):
                out.append(t.mul(c))
        return out

    name = label or f"step[{rho1_exp},{rho2_exp}]({pair.label})"
    return BaileyPair(pair.mode, x, alpha, beta, label=name)


def lattice_step(pair: BaileyPair, rho1_exp: int, rho2_exp: int,
                 label: str | None = None) -> BaileyPair:
    """One move along the Bailey lattice: x -> x/q.

    Takes a one-sided pair with parameter x and returns a one-sided pair
    with parameter x/q, where alpha'_0 = 1 and for n >= 1

        alpha'_n = (1-x) (x/rho1 rho2)^n (rho1, rho2)_n / ((x/rho1)_n (x/rho2)_n)
                   * ( alpha_n/(1-x q^{2n}) - x q^{2n-2} alpha_{n-1}/(1-x q^{2n-2}) ),

    while beta transforms exactly as in the chain step with xq replaced by x.
    """
    if pair.mode != "one_sided":
        raise EngineError("the lattice step needs a one-sided pair")
    x = pair.x_exp
    e1 = x - rho1_exp
    e2 = x - rho2_exp
    e12 = x - rho1_exp - rho2_exp
    if e1 < 1 or e2 < 1:
        raise EngineError(
            f"lattice step needs rho exponents < {x}, got ({rho1_exp}, {rho2_exp})"
        )
    old_alpha, old_beta = pair.alpha_terms, pair.beta_terms

    def alpha(n: int) -> list:
        if n < 0:
            return []
        if n == 0:
            return [PochProduct()]
        head = (PochProduct().factor(x).q(e12 * n)
                .poch(rho1_exp, n).poch(rho2_exp, n)
                .dpoch(e1, n).dpoch(e2, n))
        first = head.copy().dfactor(x + 2 * n)
        second = head.copy().scale(-1).q(x + 2 * n - 2).dfactor(x + 2 * n - 2)
        out = [t.mul(first) for t in old_alpha(n)]
        out.extend(t.mul(second) for t in old_alpha(n - 1))
        return out

    def beta(n: int) -> list:
        out = []
        for r in range(0, n + 1):
            c = (PochProduct().poch(rho1_exp, r).poch(rho2_exp, r)
                 .poch(e12, n - r).q(e12 * r)
                 .dqn(n - r).dpoch(e1, n).dpoch(e2, n))
            for t in old_beta(r):
                out.append(t.mul(c))
        return out

    name = label or f"lattice[{rho1_exp},{rho2_exp}]({pair.label})"
    return BaileyPair("one_sided", x - 1, alpha, beta, label=name)


# ---------------------------------------------------------------------------
# the symmetrized (weighted, terminating) form of the relation
# ---------------------------------------------------------------------------


def symmetrized_identity(pair: BaileyPair, rho1_exp: int, rho2_exp: int,
                         N: int, trunc: int | None = None) -> VerificationReport:
    """Check the terminating weighted identity attached to a pair.

    With x = q^x_exp, rho_i = q^rho_i_exp, this is

        sum_n (rho1, rho2, q^-N)_n / ((xq/rho1, xq/rho2, xq^{N+1})_n)
              * (xq^{1+N}/rho1 rho2)^n (-1)^n q^{-C(n,2)} alpha_n
            = (xq, xq/rho1 rho2)_N / ((xq/rho1, xq/rho2)_N)
              * sum_{n>=0} (rho1, rho2, q^-N)_n q^n beta_n / ((rho1 rho2 q^-N / x)_n),

    where for one-sided pairs n runs over 0..N and for bilateral pairs over
    all integers (the weights terminate the sum on both ends); bilateral
    pairs with x = q carry the extra 1/(1-q) that their fold introduces.
    """
    start = time.perf_counter()
    if N < 0:
        raise EngineError("the terminating parameter N must be >= 0")
    trunc = default_truncation() if trunc is None else trunc
    x = pair.x_exp
    if rho1_exp > x or rho2_exp > x:
        raise EngineError(
            f"weighted identity needs rho exponents <= {x}, "
            f"got ({rho1_exp}, {rho2_exp})"
        )
    e1 = x + 1 - rho1_exp
    e2 = x + 1 - rho2_exp

    if pair.mode == "one_sided":
        lhs_range = range(0, N + 1)
    elif pair.mode == "bilateral_x1":
        lhs_range = range(-N, N + 1)
    else:
        lhs_range = range(-N - 1, N + 1)

    lhs_terms = []
    for n in lhs_range:
        w = (PochProduct().scale(_sign(n)).q(-_binom2(n))
             .poch(rho1_exp, n).poch(rho2_exp, n).poch(-N, n)
             .dpoch(e1, n).dpoch(e2, n).dpoch(x + N + 1, n)
             .q((x + 1 + N - rho1_exp - rho2_exp) * n))
        if pair.mode == "bilateral_xq":
            w.dfactor(1)
        for t in pair.alpha_terms(n):
            lhs_terms.append(t.mul(w))

    pre = (PochProduct().poch(x + 1, N).poch(x + 1 - rho1_exp - rho2_exp, N)
           .dpoch(e1, N).dpoch(e2, N))
    rhs_terms = []
    for n in range(0, N + 1):
        w = (PochProduct().poch(rho1_exp, n).poch(rho2_exp, n).poch(-N, n)
             .q(n).dpoch(rho1_exp + rho2_exp - N - x, n).mul(pre))
        for t in pair.beta_terms(n):
            rhs_terms.append(t.mul(w))

    lhs = sum_terms(lhs_terms, trunc)
    rhs = sum_terms(rhs_terms, trunc)
    diff = compare_side_values(lhs, rhs, trunc)
    label = f"weighted[{rho1_exp},{rho2_exp};N={N}]({pair.label})"
    if diff is None:
        rep = VerificationReport(label, {"N": N}, trunc, "EQUAL")
    else:
        e, _, _ = diff
        rep = VerificationReport(label, {"N": N}, trunc, "MISMATCH",
                                 mismatch_index=e,
                                 lhs_window=window(lhs, e, trunc),
                                 rhs_window=window(rhs, e, trunc))
    rep.millis = _now_millis(start)
    return rep


# ---------------------------------------------------------------------------
# reconstruction of the five-parameter identities
# ---------------------------------------------------------------------------

_CHAIN_TARGETS = ("ABCDE1", "ABCDE2", "ABCDE3")


def _bridged(terms: list, bridge: PochProduct, trunc: int):
    return sum_terms([t.mul(bridge) for t in terms], trunc)


def _closed_beta_via_lattice(N: int, b: int, c: int, d: int, e: int) -> list:
    """The hypergeometric closed form of the doubly transformed beta_N on the
    lattice route: (bc/q)_N / ((q, b, c)_N) *
    sum_n (q^-N, q/b, q/c, de/q^2)_n q^n / ((q, d, e, q^{2-N}/bc)_n)."""
    pre = (PochProduct().poch(b + c - 1, N)
           .dqn(N).dpoch(b, N).dpoch(c, N))
    out = []
    for n in range(0, N + 1):
        t = (PochProduct().poch(-N, n).poch(1 - b, n).poch(1 - c, n)
             .poch(d + e - 2, n).q(n)
             .dqn(n).dpoch(d, n).dpoch(e, n)
             .dpoch(2 - N - b - c, n).mul(pre))
        out.append(t)
    return out


def chain_reproduce(ident: str, N: int, b_exp: int = 1, c_exp: int = 1,
                    d_exp: int = 1, e_exp: int = 1,
                    trunc: int | None = None) -> VerificationReport:
    """Rebuild one of the five-parameter identities from a unit pair.

    The first parameter is bound to q^(1+N); the others are q^b_exp ...
    q^e_exp with exponents >= 1.  Depending on the target this runs two
    chain steps from a bilateral unit pair, or a chain step followed by a
    lattice step from the one-sided seed, evaluates beta_N through every
    available route (relation sum, transformed-beta formula, closed form),
    and compares each against the registry's left-hand side.  The report is
    EQUAL only if all routes match.
    """
    start = time.perf_counter()
    key = ident.upper()
    if key not in _CHAIN_TARGETS:
        raise EngineError(
            f"chain reconstruction covers {', '.join(_CHAIN_TARGETS)}; "
            f"got {ident!r}"
        )
    if N < 0:
        raise EngineError("N must be >= 0")
    if min(b_exp, c_exp, d_exp, e_exp) < 1:
        raise EngineError("parameter exponents must be >= 1")
    trunc = default_truncation() if trunc is None else trunc

    params = {"n": N, "l": b_exp - 1, "m": c_exp - 1,
              "u": d_exp - 1, "v": e_exp - 1}
    rec = get_record(key)
    env = _check_params(rec, params)
    ctx = EvalCtx(trunc)
    target = eval_side_value(rec, "lhs", env, ctx)

    routes = []
    if key == "ABCDE1":
        pair = bailey_step(bailey_step(unit_bilateral_x1(),
                                       1 - b_exp, 1 - c_exp),
                           1 - d_exp, 1 - e_exp)
        bridge = PochProduct().qn(N, 2)
        routes.append(_bridged(pair.relation_terms(N), bridge, trunc))
        routes.append(_bridged(pair.beta_terms(N), bridge, trunc))
    elif key == "ABCDE2":
        pair = bailey_step(bailey_step(unit_bilateral_xq(),
                                       1 - b_exp, 1 - c_exp),
                           1 - d_exp, 1 - e_exp)
        bridge = PochProduct().qn(N).qn(N + 1)
        routes.append(_bridged(pair.relation_terms(N), bridge, trunc))
        routes.append(_bridged(pair.beta_terms(N), bridge, trunc))
    else:
        stepped = bailey_step(lattice_seed_pair(), 2 - d_exp, 2 - e_exp)
        pair = lattice_step(stepped, 1 - b_exp, 1 - c_exp)
        bridge = PochProduct().qn(N, 2)
        routes.append(_bridged(pair.relation_terms(N), bridge, trunc))
        routes.append(_bridged(pair.beta_terms(N), bridge, trunc))
        routes.append(_bridged(
            _closed_beta_via_lattice(N, b_exp, c_exp, d_exp, e_exp),
            bridge, trunc))

    rep = VerificationReport(f"chain({key})", dict(params), trunc, "EQUAL")
    for value in routes:
        diff = compare_side_values(value, target, trunc)
        if diff is not None:
            exp, _, _ = diff
            rep = VerificationReport(
                f"chain({key})", dict(params), trunc, "MISMATCH",
                mismatch_index=exp,
                lhs_window=window(value, exp, trunc),
                rhs_window=window(target, exp, trunc))
            break
    rep.millis = _now_millis(start)
    return rep
