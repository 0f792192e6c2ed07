"""Declarative machinery for two-sided q-series identity records.

Every identity in the registry has sides built from one of two sum shapes:

* :class:`QnSum` — terms are powers of q times quotients of (q; q)_j symbols
  whose indices are affine in the parameters and the summation variable k,
  e.g.  q^{k^2} (q)_{l+m+n-k} / ((q)_k (q)_{l-k} (q)_{m-k} ...).

* :class:`PochSum` — terms are quotients of (q^a; q)_k symbols whose argument
  exponents a are affine in the parameters (k is the index), times
  sign^k q^{linear in k} and a quadratic power of q.

A :class:`Prefactor` (finite and infinite Pochhammer quotients, a monomial,
single binomials) can multiply either shape.  Writing the sides this way
keeps each record a direct transcription of its printed form, and lets the
evaluator expose every exponent in every record as a named "site" that tests
can perturb to confirm the verification actually bites.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from ..pochhammer import (
    PochProduct,
    PoleError,
    SeriesAccumulator,
    div_binomial,
    mul_binomial,
)
from ..series import (
    Coeff,
    NeedsLaurent,
    SeriesError,
    TruncatedSeries,
    default_truncation,
)


class UnknownIdentity(SeriesError):
    """Raised when an identity id is not in the registry."""


class EngineError(SeriesError):
    """An identity side could not be evaluated as written."""


# ---------------------------------------------------------------------------
# affine expressions:  l+m+n-k+1,  -min(l,m,n,u,v)-1,  2,  ...
# ---------------------------------------------------------------------------


def _tokenize(s: str) -> list:
    out: list = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch in "+-(),*":
            out.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append(int(s[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(s) and (s[j].isalnum() or s[j] == "_"):
                j += 1
            out.append(s[i:j])
            i = j
        else:
            raise ValueError(f"bad character {ch!r} in affine expression {s!r}")
    return out


class _Parser:
    def __init__(self, tokens: list):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse_expr(self):
        terms = []
        sign = 1
        tok = self.peek()
        if tok in ("+", "-"):
            self.take()
            if tok == "-":
                sign = -1
        terms.append((sign, self.parse_atom()))
        while self.peek() in ("+", "-"):
            sign = 1 if self.take() == "+" else -1
            terms.append((sign, self.parse_atom()))
        return ("sum", terms)

    def parse_atom(self):
        tok = self.take()
        if isinstance(tok, int):
            return ("const", tok)
        if tok == "min":
            if self.take() != "(":
                raise ValueError("expected ( after min")
            args = [self.parse_expr()]
            while self.peek() == ",":
                self.take()
                args.append(self.parse_expr())
            if self.take() != ")":
                raise ValueError("expected ) closing min(...)")
            return ("min", args)
        if isinstance(tok, str):
            return ("name", tok)
        raise ValueError(f"unexpected token {tok!r}")


def _eval_node(node, env: Mapping[str, int]) -> int:
    kind = node[0]
    if kind == "sum":
        total = 0
        for sign, atom in node[1]:
            total += sign * _eval_node(atom, env)
        return total
    if kind == "const":
        return node[1]
    if kind == "name":
        return env[node[1]]
    if kind == "min":
        return min(_eval_node(a, env) for a in node[1])
    raise ValueError(f"bad node {node!r}")


_AFFINE_CACHE: dict[str, tuple] = {}


def parse_affine(s: str):
    node = _AFFINE_CACHE.get(s)
    if node is None:
        parser = _Parser(_tokenize(s))
        node = parser.parse_expr()
        if parser.peek() is not None:
            raise ValueError(f"trailing tokens in affine expression {s!r}")
        _AFFINE_CACHE[s] = node
    return node


def eval_affine(s: str, env: Mapping[str, int]) -> int:
    return _eval_node(parse_affine(s), env)


# ---------------------------------------------------------------------------
# evaluation context: truncation + perturbation sites
# ---------------------------------------------------------------------------


class EvalCtx:
    """Carries the truncation order and any active exponent perturbations.

    Every integer that enters a term — the power of q, each (q)_j index,
    each Pochhammer argument exponent — passes through :meth:`site` under a
    stable name.  A mutation maps a site name to ("const", d) or
    ("linear", d); the latter adds d*k so that even a sum that happens to be
    identically zero is knocked off its cancellation.
    """

    __slots__ = ("trunc", "mutations", "recorder")

    def __init__(self, trunc: int | None = None,
                 mutations: Mapping[str, tuple[str, int]] | None = None,
                 recorder: set | None = None):
        self.trunc = default_truncation() if trunc is None else trunc
        self.mutations = dict(mutations) if mutations else {}
        self.recorder = recorder

    def site(self, name: str, value: int, k: int = 0) -> int:
        if self.recorder is not None:
            self.recorder.add(name)
        mut = self.mutations.get(name)
        if mut is None:
            return value
        kind, d = mut
        if kind == "linear":
            return value + d * k
        return value + d


# ---------------------------------------------------------------------------
# side descriptions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QnSum:
    """sum over k of  sign^k q^{(A k^2 + B k)/2 + lin*k + aff0}
    prod (q)_num / prod (q)_den, indices affine in the parameters and k."""

    quad: tuple[int, int]            # (A, B) with (A k^2 + B k) always even
    num: tuple[str, ...]
    den: tuple[str, ...]
    support: tuple[str, str]         # inclusive k-range; "*" = run until the
                                     # q-power passes the truncation order
    alt: bool = False                # include (-1)^k
    lin: str = "0"                   # extra k-linear exponent (affine in params)
    aff0: str = "0"                  # constant exponent offset (affine in params)


@dataclass(frozen=True)
class PochSum:
    """sum over k of  sign^k q^{(A k^2 + B k)/2 + lin*k + aff0}
    prod (q^a; q)_k / prod (q^b; q)_k, argument exponents affine in params.

    ``flips`` pairs a numerator slot with a denominator slot whose arguments
    multiply to q^2 (i.e. (q/x; q)_k over (x/q; q)_k).  At parameter values
    where both arguments hit q^0 the quotient is a genuine 0/0 that resolves
    to -q^{1-d} (x = q^d); the paired slots are evaluated through the exact
    rewrite  (q/x)_k / (x/q)_k = -q/x * (q^2/x)_{k-1} / (x)_{k-1}  for k >= 1,
    which is regular for every x = q^d with d >= 1.
    """

    quad: tuple[int, int]
    num: tuple[str, ...]
    den: tuple[str, ...]
    alt: bool = False
    lin: str = "0"
    aff0: str = "0"
    flips: tuple[tuple[int, int], ...] = ()
    one_sided: bool = False          # force k >= 0 even without a (q)_k slot


@dataclass(frozen=True)
class Prefactor:
    """A side-wide multiplier of Pochhammer quotients and a monomial."""

    inf_num: tuple[str, ...] = ()    # (q^a; q)_inf factors
    inf_den: tuple[str, ...] = ()
    qn_num: tuple[str, ...] = ()     # finite (q; q)_a factors
    qn_den: tuple[str, ...] = ()
    bin_num: tuple[str, ...] = ()    # single binomials (1 - q^a)
    bin_den: tuple[str, ...] = ()
    mono: str = "0"                  # times q^a
    sign: int = 1


@dataclass(frozen=True)
class Side:
    sum: QnSum | PochSum | None = None
    pre: Prefactor | None = None
    zero: bool = False               # the side is literally 0


@dataclass(frozen=True)
class ParamSpec:
    name: str
    low: int = 0                     # admissibility floor


@dataclass(frozen=True)
class IdentityRecord:
    ident: str
    params: tuple[ParamSpec, ...]
    lhs: Side
    rhs: Side
    citation: str
    default_grid: tuple[tuple[str, int, int], ...] = ()   # (name, lo, hi)
    default_trunc: int = 40
    expect: str = "equal"            # "equal" | "counterexample"


@dataclass
class VerificationReport:
    ident: str
    params: dict
    trunc: int
    verdict: str                     # "EQUAL" | "MISMATCH"
    mismatch_index: int | None = None
    lhs_window: list | None = None   # [(exponent, coefficient), ...]
    rhs_window: list | None = None
    millis: float = 0.0

    @property
    def equal(self) -> bool:
        return self.verdict == "EQUAL"


# ---------------------------------------------------------------------------
# term construction
# ---------------------------------------------------------------------------


def _check_params(record: IdentityRecord, params: Mapping[str, int]) -> dict:
    env = {}
    for ps in record.params:
        if ps.name not in params:
            raise EngineError(f"{record.ident}: missing parameter {ps.name!r}")
        value = int(params[ps.name])
        if value < ps.low:
            raise EngineError(
                f"{record.ident}: parameter {ps.name}={value} below admissible minimum {ps.low}"
            )
        env[ps.name] = value
    extra = set(params) - set(env)
    if extra:
        raise EngineError(f"{record.ident}: unexpected parameters {sorted(extra)}")
    return env


def _quad_exponent(spec, env: Mapping[str, int], k: int) -> int:
    a, b = spec.quad
    twice = a * k * k + b * k
    if twice % 2:
        raise EngineError(f"odd quadratic exponent {twice}/2 at k={k}")
    return twice // 2 + eval_affine(spec.lin, env) * k + eval_affine(spec.aff0, env)


def _qn_support(spec: QnSum, env: Mapping[str, int], trunc: int) -> tuple[int, int]:
    kmin = eval_affine(spec.support[0], env)
    if spec.support[1] == "*":
        return kmin, _valuation_kmax(spec, env, kmin, trunc)
    return kmin, eval_affine(spec.support[1], env)


def _valuation_kmax(spec, env: Mapping[str, int], kmin: int, trunc: int) -> int:
    """Last k whose q-power can still reach the truncation window.

    Only used for sums whose terms carry q^{(A k^2 + ...)} with A > 0, so the
    exponent is eventually strictly increasing in k.
    """
    if spec.quad[0] <= 0:
        raise EngineError("open-ended support requires a positive quadratic power")
    k = max(kmin, 0)
    prev = _quad_exponent(spec, env, k)
    while True:
        nxt = _quad_exponent(spec, env, k + 1)
        if prev > trunc and nxt > prev:
            return k
        k += 1
        prev = nxt


def _qn_sum_terms(spec: QnSum, env: dict, ctx: EvalCtx, tag: str,
                  trunc: int) -> list[PochProduct]:
    kmin, kmax = _qn_support(spec, env, trunc)
    out = []
    tenv = dict(env)
    for k in range(kmin, kmax + 1):
        tenv["k"] = k
        t = PochProduct()
        if spec.alt and (k & 1):
            t.scale(-1)
        t.q(ctx.site(f"{tag}.qpow", _quad_exponent(spec, env, k), k))
        for s in spec.num:
            t.qn(ctx.site(f"{tag}.num[{s}]", eval_affine(s, tenv), k))
        for s in spec.den:
            t.dqn(ctx.site(f"{tag}.den[{s}]", eval_affine(s, tenv), k))
        st = t.state
        if st == "zero":
            continue
        if st == "pole":
            raise PoleError(f"{tag}: pole at k={k} with {env}")
        out.append(t)
    return out


def _poch_support(num_args: list[int], den_args: list[int],
                  flip_pairs: list[tuple[int, int]], one_sided: bool,
                  spec: PochSum, env: Mapping[str, int], trunc: int) -> tuple[int, int]:
    """Support of a PochSum from its (possibly perturbed) argument exponents.

    Positive k survive until some numerator (q^a; q)_k with a <= 0 vanishes
    (k <= -a); negative k = -s survive while every denominator (q^b; q)_{-s}
    with b >= 1 still avoids its zero at s = b (s <= b - 1).  Flip pairs
    contribute through their rewritten form instead: the pair (a, b) with
    a = -b bounds k above by b (when b >= 1, via (q^{1-b}; q)_{k-1}) and
    below by s <= b - 1 like a plain denominator, except that b = 0 imposes
    no bound at all because the pair cancels identically there.
    """
    upper: list[int] = []
    lower: list[int] = []
    for a in num_args:
        if a <= 0:
            upper.append(-a)
    for b in den_args:
        if b >= 1:
            lower.append(b - 1)
    for a, b in flip_pairs:
        if a == -b:
            if b >= 1:
                upper.append(b)
                lower.append(b - 1)
        else:  # broken pairing (perturbations): behave like direct slots
            if a <= 0:
                upper.append(-a)
            if b >= 1:
                lower.append(b - 1)
    if upper:
        kmax = min(upper)
    else:
        kmax = _valuation_kmax(spec, env, 0, trunc)
    if one_sided:
        kmin = 0
    elif lower:
        kmin = -min(lower)
    else:
        kmin = 0
    return kmin, kmax


def _poch_sum_terms(spec: PochSum, env: dict, ctx: EvalCtx, tag: str,
                    trunc: int) -> list[PochProduct]:
    flip_num = {i for i, _ in spec.flips}
    flip_den = {j for _, j in spec.flips}
    num_args = []
    for i, s in enumerate(spec.num):
        num_args.append(ctx.site(f"{tag}.argnum[{s}]", eval_affine(s, env)))
    den_args = []
    for j, s in enumerate(spec.den):
        den_args.append(ctx.site(f"{tag}.argden[{s}]", eval_affine(s, env)))

    plain_num = [a for i, a in enumerate(num_args) if i not in flip_num]
    plain_den = [b for j, b in enumerate(den_args) if j not in flip_den]
    pairs = [(num_args[i], den_args[j]) for i, j in spec.flips]
    one_sided = spec.one_sided or any(b == 1 for b in plain_den)

    kmin, kmax = _poch_support(plain_num, plain_den, pairs,
                               one_sided, spec, env, trunc)
    out = []
    for k in range(kmin, kmax + 1):
        t = PochProduct()
        if spec.alt and (k & 1):
            t.scale(-1)
        t.q(ctx.site(f"{tag}.qpow", _quad_exponent(spec, env, k), k))
        for a in plain_num:
            t.poch(a, k)
        for b in plain_den:
            t.poch(b, k, -1)
        for a, b in pairs:
            if k >= 1 and a == -b:
                # exact rewrite of the 0/0-prone quotient; d = b + 1
                t.scale(-1)
                t.q(-b)
                t.poch(1 - b, k - 1)
                t.poch(b + 1, k - 1, -1)
            else:
                t.poch(a, k)
                t.poch(b, k, -1)
        st = t.state
        if st == "zero":
            continue
        if st == "pole":
            raise PoleError(f"{tag}: pole at k={k} with {env}")
        out.append(t)
    return out


def _apply_prefactor(pre: Prefactor, env: dict, ctx: EvalCtx, tag: str,
                     trunc: int, offset: int, buf: list) -> tuple[int, list]:
    # The prefactor itself is a unit series (or exactly zero); build its
    # coefficients then convolve with the accumulated sum.
    mono = ctx.site(f"{tag}.pre.mono[{pre.mono}]", eval_affine(pre.mono, env)) \
        if pre.mono != "0" else 0
    length = len(buf) - 1
    unit: list[Coeff] = [0] * (length + 1)
    unit[0] = 1

    for s in pre.inf_num:
        a = ctx.site(f"{tag}.pre.infnum[{s}]", eval_affine(s, env))
        if a == 0:
            return offset + mono, [0] * (length + 1)   # (q^0; q)_inf = 0
        if a < 0:
            raise NeedsLaurent(f"{tag}: infinite product argument q^{a}")
        x = a
        while x <= length:
            mul_binomial(unit, x)
            x += 1
    for s in pre.inf_den:
        a = ctx.site(f"{tag}.pre.infden[{s}]", eval_affine(s, env))
        if a == 0:
            raise PoleError(f"{tag}: infinite product (q^0; q)_inf in a denominator")
        if a < 0:
            raise NeedsLaurent(f"{tag}: infinite product argument q^{a}")
        x = a
        while x <= length:
            div_binomial(unit, x)
            x += 1
    for s in pre.qn_num:
        a = ctx.site(f"{tag}.pre.qnnum[{s}]", eval_affine(s, env))
        if a < 0:
            raise EngineError(f"{tag}: prefactor (q; q)_{a}")
        for x in range(1, a + 1):
            mul_binomial(unit, x)
    for s in pre.qn_den:
        a = ctx.site(f"{tag}.pre.qnden[{s}]", eval_affine(s, env))
        if a < 0:
            raise EngineError(f"{tag}: prefactor 1/(q; q)_{a}")
        for x in range(1, a + 1):
            div_binomial(unit, x)
    for s in pre.bin_num:
        a = ctx.site(f"{tag}.pre.binnum[{s}]", eval_affine(s, env))
        if a == 0:
            return offset + mono, [0] * (length + 1)
        if a < 0:
            raise NeedsLaurent(f"{tag}: binomial exponent {a}")
        mul_binomial(unit, a)
    for s in pre.bin_den:
        a = ctx.site(f"{tag}.pre.binden[{s}]", eval_affine(s, env))
        if a == 0:
            raise PoleError(f"{tag}: division by (1 - q^0)")
        if a < 0:
            raise NeedsLaurent(f"{tag}: binomial exponent {a}")
        div_binomial(unit, a)

    out: list[Coeff] = [0] * (length + 1)
    for i, u in enumerate(unit):
        if not u:
            continue
        for j in range(length + 1 - i):
            bj = buf[j]
            if bj:
                out[i + j] += u * bj
    if pre.sign != 1:
        out = [pre.sign * c for c in out]
    return offset + mono, out


def eval_side_value(record: IdentityRecord, side_name: str, env: dict,
                    ctx: EvalCtx) -> tuple[int, list]:
    """(offset, coeffs) for one side: coeffs[i] is the coefficient of
    q^(offset+i), exact through q^ctx.trunc."""
    side = record.lhs if side_name == "lhs" else record.rhs
    tag = f"{side_name}"
    trunc = ctx.trunc
    if side.zero:
        return 0, [0] * (trunc + 1)
    if side.sum is None:
        offset, buf = 0, [1] + [0] * trunc
    else:
        if isinstance(side.sum, QnSum):
            terms = _qn_sum_terms(side.sum, env, ctx, tag, trunc)
        else:
            terms = _poch_sum_terms(side.sum, env, ctx, tag, trunc)
        acc = SeriesAccumulator(trunc)
        for t in terms:
            acc.add(t)
        offset, buf = acc.value()
    if side.pre is not None:
        offset, buf = _apply_prefactor(side.pre, env, ctx, tag, trunc, offset, buf)
    return offset, buf


def compare_side_values(lhs: tuple[int, list], rhs: tuple[int, list],
                        trunc: int):
    """None if equal through q^trunc, else (exponent, lhs_c, rhs_c)."""
    off_l, a = lhs
    off_r, b = rhs
    lo = min(off_l, off_r)
    for e in range(lo, trunc + 1):
        ca = a[e - off_l] if 0 <= e - off_l < len(a) else 0
        cb = b[e - off_r] if 0 <= e - off_r < len(b) else 0
        if ca != cb:
            return e, ca, cb
    return None


def window(value: tuple[int, list], center: int, trunc: int) -> list:
    """Coefficients around a mismatch: exponents max(0, center-2)..center+2,
    clipped to the truncation order.  (The floor drops below 0 only when the
    value genuinely extends to negative exponents.)"""
    off, buf = value
    floor = 0 if off >= 0 else off
    lo = max(floor, center - 2)
    hi = min(trunc, center + 2)
    out = []
    for e in range(lo, hi + 1):
        c = buf[e - off] if 0 <= e - off < len(buf) else 0
        out.append((e, c))
    return out
