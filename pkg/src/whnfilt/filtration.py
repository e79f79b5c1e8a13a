"""Graded pieces of filtrations, rank-one decompositions and the slope order."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, Union

from .fdh import FdhFunction, SupportSeq, classify, deficiency, is_filterable_at
from .report import CheckReport
from .whn import INF, ExtInt, WhnResult, htilde_t_reference, scan_floor, whn_effective, whn_reference


class NotFilterableAt(ValueError):
    def __init__(self, m: int):
        super().__init__(f"not filterable at m={m}")
        self.m = m


class NotTrivialWhn(ValueError):
    pass


class OrderUndefined(ValueError):
    pass


@dataclass(frozen=True)
class GradedPiece:
    """Piece ``i`` of a filtration, supported on ``(lower, upper]``.

    ``nu`` and ``beta`` are filled in only for torsion-free WHN pieces.
    """

    index: int
    h: FdhFunction
    lower: ExtInt
    upper: ExtInt
    nu: int | None = None
    beta: int | None = None

    @property
    def rho(self) -> int:
        return self.h.rho

    @property
    def degree(self) -> int:
        return self.h.degree

    @property
    def curve_degree(self) -> int:
        """Constant tail of a torsion piece (degree of its support curve)."""
        return self.h.sigma


def split_at(f: FdhFunction, points: Sequence[int]) -> list[GradedPiece]:
    """Split ``f`` at the ascending filtration ``points`` into graded pieces."""
    points = list(points)
    if any(x >= y for x, y in zip(points, points[1:])):
        raise ValueError(f"filtration points must be strictly increasing: {points}")
    for m in points:
        if not is_filterable_at(f, m):
            raise NotFilterableAt(m)
    bounds = [-INF, *points, INF]
    pieces = []
    for i in range(len(bounds) - 1):
        lower, upper = bounds[i], bounds[i + 1]
        h_i = FdhFunction(f.diff.restrict(lower, upper),
                          f.a.restrict(lower, upper), f.b.restrict(lower, upper))
        pieces.append(GradedPiece(i, h_i, lower, upper))
    return pieces


@dataclass(frozen=True)
class WhnGraded:
    whn: WhnResult
    torsion: GradedPiece
    pieces: tuple[GradedPiece, ...]


def whn_graded(f: FdhFunction, w: WhnResult | None = None) -> WhnGraded:
    """Graded pieces of the WHN filtration of ``f``.

    Pure torsion input gives a single torsion piece and no torsion-free ones.
    """
    w = whn_effective(f) if w is None else w
    if not w.taus:
        return WhnGraded(w, GradedPiece(0, f, -INF, INF), ())
    parts = split_at(f, w.taus)
    pieces = []
    for p, nu, rho, beta in zip(parts[1:], w.nus, w.rhos, w.betas):
        assert p.rho == rho, (p.index, p.rho, rho)
        pieces.append(GradedPiece(p.index, p.h, p.lower, p.upper, nu, beta))
    return WhnGraded(w, parts[0], tuple(pieces))


def check_trivial_whn(piece: GradedPiece) -> bool:
    """Recompute ``t_i`` by brute force and test that it jumps once, at ``nu_i``.

    Below ``nu_i`` it must equal the lower end of the piece's interval, from
    ``nu_i`` on it must be ``+inf``.
    """
    h = piece.h
    if piece.nu is None or h.lo is None:
        return False
    top = max(h.hi, piece.nu) + 1
    for n in range(min(scan_floor(h), piece.nu) - 1, top + 1):
        t = htilde_t_reference(h, n)[1]
        expected = piece.lower if n < piece.nu else INF
        if t != expected:
            return False
    return True


@dataclass(frozen=True)
class RankOnePiece:
    j: int
    h: FdhFunction
    degree: int
    deficiency: int
    eta: int
    zeta: int
    higher: bool  # twist -nu (j <= beta) rather than -nu - 1

    @property
    def rank(self) -> int:
        return 1


def trivial_whn_params(h: FdhFunction) -> tuple[int, int]:
    """``(nu, beta)`` with ``h(n) = rho*(n - nu) + beta`` for large ``n``, ``0 <= beta < rho``."""
    return -(h.sigma // h.rho), h.sigma % h.rho


def rank_one_decompose(piece: GradedPiece | FdhFunction) -> list[RankOnePiece]:
    """Split a torsion-free FDH function with trivial WHN into rank-1 summands.

    Summand ``j`` is ``min(gamma_j, (h - gamma_1 - ... - gamma_{j-1})_+)`` where
    ``gamma_j(n) = (n - nu + 1)_+`` for ``j <= beta`` and ``(n - nu)_+`` after.
    """
    h = piece.h if isinstance(piece, GradedPiece) else piece
    if h.rho == 0 or not classify(h).is_torsion_free:
        raise NotTrivialWhn("rank-one decomposition needs a torsion-free function of positive rank")
    own = whn_reference(h)
    nu, beta = trivial_whn_params(h)
    if len(own.taus) != 1 or own.nus != (nu,):
        raise NotTrivialWhn(f"WHN filtration of {h!r} is not trivial: {own}")
    if isinstance(piece, GradedPiece) and piece.nu is not None:
        assert (piece.nu, piece.beta) == (nu, beta), (piece.nu, piece.beta, nu, beta)

    def gamma(k: int, n: int) -> int:
        return max(n - nu + 1, 0) if k <= beta else max(n - nu, 0)

    lo = nu - 2
    top = max(h.hi, nu) + 2
    window = range(lo, top + 1)
    out = []
    for j in range(1, h.rho + 1):
        vals = {n: min(gamma(j, n), max(h.h(n) - sum(gamma(k, n) for k in range(1, j)), 0))
                for n in window}
        diff = SupportSeq({n: vals[n] - 2 * vals[n - 1] + vals[n - 2]
                           for n in range(lo + 2, top + 1)})
        hj = FdhFunction(diff)
        assert all(hj.h(n) == vals[n] for n in window)
        eta = min(n for n in window
                  if h.h(n) > sum(gamma(k, n) for k in range(1, j)))
        zeta = min(n for n in window
                   if h.h(n) >= sum(gamma(k, n) for k in range(1, j + 1)) > 0)
        out.append(RankOnePiece(j, hj, hj.degree, deficiency(hj), eta, zeta, j <= beta))
    return out


class OrderRelation(enum.Enum):
    StrictlyGreater = ">"
    Equivalent = "~"
    StrictlyLess = "<"

    @property
    def succeq(self) -> bool:
        return self is not OrderRelation.StrictlyLess


Comparable = Union[FdhFunction, RankOnePiece, "tuple[int, int, int]"]


def _invariants(x: Comparable) -> tuple[int, int, int]:
    if isinstance(x, tuple):
        return x
    if isinstance(x, RankOnePiece):
        return 1, x.degree, x.deficiency
    return x.rho, x.degree, deficiency(x)


def fdh_order_compare(f: Comparable, g: Comparable) -> OrderRelation:
    """Compare by slope ``d/rho`` first, then by smaller ``deficiency/rho``.

    Tuples are read as ``(rank, degree, deficiency)``.
    """
    if isinstance(f, FdhFunction) and not classify(f).is_torsion_free:
        raise OrderUndefined("order is defined on torsion-free functions only")
    if isinstance(g, FdhFunction) and not classify(g).is_torsion_free:
        raise OrderUndefined("order is defined on torsion-free functions only")
    rf, df, ef = _invariants(f)
    rg, dg, eg = _invariants(g)
    if rf <= 0 or rg <= 0:
        raise OrderUndefined("order is defined for positive rank only")
    slope = df * rg - dg * rf
    if slope:
        return OrderRelation.StrictlyGreater if slope > 0 else OrderRelation.StrictlyLess
    defect = ef * rg - eg * rf
    if defect < 0:
        return OrderRelation.StrictlyGreater
    if defect > 0:
        return OrderRelation.StrictlyLess
    return OrderRelation.Equivalent


def check_compar_chain(groups: Sequence[Sequence[RankOnePiece]]) -> CheckReport:
    """Non-increasing order within each group, strict drops between groups.

    Within a group the drop from the last higher-twist summand to the first
    lower-twist one must also be strict.
    """
    rep = CheckReport()
    rep.declare("within", "beta_drop", "across")
    for i, group in enumerate(groups, start=1):
        for x, y in zip(group, group[1:]):
            rel = fdh_order_compare(x, y)
            rep.check("within", rel.succeq, f"group {i}: {x.j} {rel.value} {y.j}")
            if x.higher and not y.higher:
                rep.check("beta_drop", rel is OrderRelation.StrictlyGreater, f"group {i}: j={x.j}")
    for i, (g, g_next) in enumerate(zip(groups, groups[1:]), start=1):
        if g and g_next:
            rel = fdh_order_compare(g[-1], g_next[0])
            rep.check("across", rel is OrderRelation.StrictlyGreater, f"groups {i},{i + 1}: {rel.value}")
    return rep


def check_rank_one(piece: GradedPiece, summands: Sequence[RankOnePiece]) -> CheckReport:
    """Properties of one rank-one decomposition.

    Checks the sum, rank/degree/torsion-freeness and positive deficiency of
    the summands, the two descriptions of ``eta``/``zeta``, the deficiency
    bounds ``C(eta+d+1, 2) <= delta <= C(zeta+d+1, 2)``, and
    ``zeta_j <= eta_{j+1}``.
    """
    rep = CheckReport()
    rep.declare("sum", "rank_degree", "torsion_free", "positive_deficiency",
                "eta_zeta", "deficiency_bounds", "zeta_eta_chain")
    h = piece.h
    nu, beta = trivial_whn_params(h)
    rep.check("rank_degree", len(summands) == h.rho, "summand count")
    lo, top = nu - 3, max(h.hi, nu) + 3
    for n in range(lo, top + 1):
        rep.check("sum", sum(s.h.h(n) for s in summands) == h.h(n), f"n={n}")
    for s in summands:
        want = -nu if s.j <= beta else -nu - 1
        rep.check("rank_degree", s.h.rho == 1 and s.degree == want, f"j={s.j}")
        first = None
        for n in range(lo, top + 1):
            if s.h.h(n) > 0:
                first = n if first is None else first
                rep.check("torsion_free", s.h.h(n) - s.h.h(n - 1) > 0, f"j={s.j}, n={n}")
        if s.higher:
            rep.check("positive_deficiency", s.deficiency >= 1, f"j={s.j}")
        gam = [max(n - nu + 1, 0) if s.j <= beta else max(n - nu, 0) for n in range(lo, top + 1)]
        zeta_alt = min(n for n, g in zip(range(lo, top + 1), gam) if s.h.h(n) == g > 0)
        rep.check("eta_zeta", first == s.eta and zeta_alt == s.zeta, f"j={s.j}")
        lower = math.comb(max(s.eta + s.degree + 1, 0), 2)
        upper = math.comb(max(s.zeta + s.degree + 1, 0), 2)
        rep.check("deficiency_bounds", lower <= s.deficiency <= upper,
                  f"j={s.j}: {lower} <= {s.deficiency} <= {upper}")
    for x, y in zip(summands, summands[1:]):
        rep.check("zeta_eta_chain", x.zeta <= y.eta, f"j={x.j}")
    return rep
