"""Upper envelope ``htilde``, its argmax ``t`` and the WHN breakpoints.

Two independent routes compute the same :class:`WhnResult`:

* :func:`whn_reference` evaluates ``t(n)`` straight from its definition at
  every integer of a window guaranteed to contain all jumps of ``t``;
* :func:`whn_effective` runs the threshold recursion over the candidate set
  ``T`` and never evaluates ``t``.

``+inf`` is represented by :data:`INF` (``math.inf``); for ``t = INF`` the
affine form ``x -> h(t) + (x - t) r(t)`` reads ``rho*x + sigma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .fdh import FdhFunction
from .report import CheckReport

INF = math.inf
ExtInt = Union[int, float]


@dataclass(frozen=True)
class WhnResult:
    taus: tuple[int, ...]
    nus: tuple[int, ...]
    rhos: tuple[int, ...]
    betas: tuple[int, ...]
    torsion_constant: int

    @property
    def length(self) -> int:
        """Number of torsion-free graded pieces (``s + 1``, or 0 for torsion)."""
        return len(self.nus)


def affine_form(f: FdhFunction, t: ExtInt) -> tuple[int, int]:
    """``(slope, intercept)`` of ``x -> h(t) + (x - t) r(t)``."""
    if t == INF:
        return f.rho, f.sigma
    rt = f.r(t)
    return rt, f.h(t) - t * rt


def _form_at(f: FdhFunction, t: ExtInt, x: int) -> int:
    slope, icpt = affine_form(f, t)
    return slope * x + icpt


def scan_floor(f: FdhFunction) -> int:
    """An index below which ``t`` is constant.

    Every affine form with positive slope crosses the level ``h(tau_0)`` at
    some ``n >= lo - h(hi)``, so below that bound nothing can overtake the
    constant forms supported left of ``lo``.
    """
    if f.lo is None:
        return 0
    return f.lo - f.h(f.hi) - 2


def htilde_t_reference(f: FdhFunction, n: int) -> tuple[int, ExtInt]:
    """Brute-force ``(htilde(n), t(n))``.

    For ``m`` in ``[n, lo - 1]`` every candidate is 0, so ``m = lo - 1``
    stands for all of them; every ``m >= hi`` gives the tail ``rho*n + sigma``.
    """
    if f.lo is None:
        return 0, INF
    best = None
    arg: ExtInt = n
    for m in range(max(n, f.lo - 1), max(n, f.hi) + 1):
        value = f.h(m) + (n - m) * f.r(m)
        if best is None or value >= best:
            best, arg = value, m
    tail = f.rho * n + f.sigma
    if tail >= best:
        return tail, INF
    return best, arg


def whn_reference(f: FdhFunction) -> WhnResult:
    """WHN data from a definitional scan of ``t``."""
    if f.lo is None:
        return WhnResult((), (), (), (), 0)
    start = scan_floor(f)
    t_prev = htilde_t_reference(f, start - 1)[1]
    t_start = htilde_t_reference(f, start)[1]
    assert t_prev == t_start, "t is not constant below the scan floor"
    if t_start == INF:
        # pure torsion: the tail form dominates everywhere
        assert f.rho == 0
        return WhnResult((), (), (), (), f.sigma)

    taus = [t_start]
    firsts: list[int] = []
    n = start
    while True:
        n += 1
        t = htilde_t_reference(f, n)[1]
        assert t >= taus[-1] or t == INF, f"t decreases at n={n}"
        if t == INF:
            firsts.append(n)
            break
        if t != taus[-1]:
            taus.append(t)
            firsts.append(n)
        assert n <= f.hi, "t failed to reach +inf by hi"

    ends = [*taus, INF]
    rhos, betas = [], []
    for i, nu in enumerate(firsts, start=1):
        lower, upper = ends[i - 1], ends[i]
        rhos.append(affine_form(f, upper)[0] - f.r(lower))
        betas.append(htilde_t_reference(f, nu)[0] - _form_at(f, lower, nu))
    return WhnResult(tuple(taus), tuple(firsts), tuple(rhos), tuple(betas), f.h(taus[0]))


def candidate_set(f: FdhFunction) -> list[ExtInt]:
    """``T``: the candidates for the values of ``t``, in increasing order.

    Starts from the points just before a positive jump of ``r`` and purges,
    in descending order, every ``n`` with ``r(n) >= r(next kept)``.
    """
    jumps = [k - 1 for k, v in f.diff.items() if v > 0]
    kept: list[ExtInt] = [INF]
    for n in reversed(jumps):
        if f.r(n) < affine_form(f, kept[-1])[0]:
            kept.append(n)
    return kept[::-1]


def whn_effective(f: FdhFunction, *, flip_threshold: bool = False) -> WhnResult:
    """WHN data by the threshold recursion over :func:`candidate_set`.

    The threshold for a candidate ``t`` is the least ``x`` with
    ``h(t) + (x - t) r(t) >= h(prev) + (x - prev) r(prev)``.
    ``flip_threshold`` negates the numerator of that quotient; it exists only so
    the test suite can check that the differential harness catches the
    resulting wrong breakpoints.
    """
    if f.rho == 0:
        return WhnResult((), (), (), (), f.sigma)
    cands = candidate_set(f)
    prev = cands[0]
    assert f.r(prev) == 0
    taus, nus, rhos, betas = [prev], [], [], []
    while prev != INF:
        p_slope, p_icpt = affine_form(f, prev)
        thresholds = {}
        for t in cands:
            if t <= prev:
                continue
            slope, icpt = affine_form(f, t)
            num = p_icpt - icpt
            if flip_threshold:
                num = -num
            thresholds[t] = math.ceil(Fraction(num, slope - p_slope))
        nu = min(thresholds.values())
        attaining = [t for t, x in thresholds.items() if x == nu]
        top = max(_form_at(f, t, nu) for t in attaining)
        nxt = max(t for t in attaining if _form_at(f, t, nu) == top)
        rhos.append(affine_form(f, nxt)[0] - p_slope)
        betas.append(top - (p_slope * nu + p_icpt))
        nus.append(nu)
        if nxt != INF:
            taus.append(nxt)
        prev = nxt
    return WhnResult(tuple(taus), tuple(nus), tuple(rhos), tuple(betas), f.h(taus[0]))


COMBIN_CLAUSES = ("i", "ii", "iii", "iv", "v", "vi", "vii")


def check_combin(f: FdhFunction, w: WhnResult) -> CheckReport:
    """Verify the combinatorial properties of ``htilde`` and ``t``, clause by clause.

    All quantifiers over ``n`` run over ``[scan_floor - 1, hi + 1]``; beyond
    that window both ``t`` and the relevant affine forms are constant or
    linear, so the finite check is exhaustive.
    """
    rep = CheckReport()
    rep.declare(*COMBIN_CLAUSES)
    if f.lo is None:
        return rep
    lo_n, hi_n = scan_floor(f) - 1, f.hi + 1
    window = range(lo_n, hi_n + 1)
    tab = {n: htilde_t_reference(f, n) for n in window}

    def r_ext(t: ExtInt) -> int:
        return affine_form(f, t)[0]

    for n in window:
        ht, t = tab[n]
        rep.check("i", 0 <= f.h(n) <= ht and t > n, f"n={n}")
        if t != INF:
            for m in range(t + 1, hi_n + 1):
                rep.check("ii", f.r(m) > f.r(t), f"n={n}, m={m}")

    ts = [tab[n][1] for n in window]
    rep.check("iii", all(x <= y for x, y in zip(ts, ts[1:])), "t not nondecreasing")
    finite = sorted({t for t in ts if t != INF})
    rep.check("iii", tuple(finite) == w.taus, f"finite t-values {finite} != taus {w.taus}")
    rvals = [f.r(t) for t in w.taus] + [f.rho]

    if f.rho == 0:
        for n in window:
            rep.check("vii", tab[n] == (f.sigma, INF), f"torsion n={n}")
        return rep

    rep.check("iii", rvals[0] == 0 and all(x < y for x, y in zip(rvals, rvals[1:])),
              f"r along taus {rvals}")

    ends = [*w.taus, INF]
    nus = [-INF, *w.nus, INF]  # nus[i] = nu_i, with nu_0 = -inf and nu_{s+2} = +inf
    for i in range(1, len(ends)):
        s_lo, c_lo = affine_form(f, ends[i - 1])
        s_hi, c_hi = affine_form(f, ends[i])
        for n in window:
            ht, t = tab[n]
            if nus[i] <= n < nus[i + 1]:
                rep.check("iv", t == ends[i] and ht == s_hi * n + c_hi, f"i={i}, n={n}")
            rep.check("iv", (n < nus[i]) == (s_lo * n + c_lo > s_hi * n + c_hi),
                      f"threshold characterisation i={i}, n={n}")

    for i, tau in enumerate(ends):
        slope, icpt = affine_form(f, tau)
        m_top = hi_n if tau == INF else tau
        for n in window:
            if n < nus[i]:
                continue
            for m in range(n, m_top + 1):
                rep.check("v", slope * n + icpt >= f.h(m) + (n - m) * f.r(m),
                          f"i={i}, n={n}, m={m}")

    last_zero = max(n for n in range(f.lo - 1, f.hi + 1) if f.r(n) == 0)
    rep.check("vi", w.taus[0] == last_zero, f"tau_0={w.taus[0]} != {last_zero}")
    torsion_free = f.h(w.taus[0]) == 0
    last_h_zero = max(n for n in range(f.lo - 1, f.hi + 1) if f.h(n) == 0)
    for n in window:
        ht, t = tab[n]
        if n < w.nus[0]:
            rep.check("vi", t == w.taus[0] and ht == f.h(w.taus[0]), f"n={n}")
            if torsion_free:
                rep.check("vi", ht == 0 and t == last_h_zero, f"torsion-free n={n}")
        if n >= w.nus[-1]:
            rep.check("vii", ht == f.rho * n + f.sigma and t == INF, f"n={n}")
    return rep
