"""Split model sheaf realising an FDH function, and integer vanishing certificates.

The model is ``F_0 + sum_i sum_j I_{Z_i^j}(twist_i^j)``: a line bundle on a
curve of degree ``curve_degree`` plus twisted ideal sheaves of point sets, with
each point set known only through its size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .fdh import FdhFunction, SupportSeq, deficiency
from .filtration import (RankOnePiece, WhnGraded, check_compar_chain,
                         rank_one_decompose)
from .report import CheckReport
from .whn import INF


@dataclass(frozen=True)
class IdealPiece:
    twist: int
    points: int

    def describe(self) -> str:
        base = "O" if self.points == 0 else ("I_pt" if self.points == 1 else f"I_{self.points}pts")
        return base if self.twist == 0 else f"{base}({self.twist})"


@dataclass(frozen=True)
class ModelGroup:
    nu: int
    pieces: tuple[IdealPiece, ...]

    @property
    def rho(self) -> int:
        return len(self.pieces)

    @property
    def beta(self) -> int:
        return sum(p.twist == -self.nu for p in self.pieces)


@dataclass(frozen=True)
class ModelSheaf:
    curve_degree: int | None
    groups: tuple[ModelGroup, ...]

    def describe(self) -> str:
        parts = [] if self.curve_degree is None else [f"L_C(deg {self.curve_degree})"]
        parts += [p.describe() for g in self.groups for p in g.pieces]
        return " ⊕ ".join(parts) if parts else "0"


class CertificateKind(enum.Enum):
    HomVanishing = "hom_vanishing"
    Ext1Restriction = "ext_restriction"
    HnCompatibility = "hn_compatibility"
    ResolutionReassembly = "resolution_reassembly"


class Reason(enum.Enum):
    NegativeTwist = "negative_twist"
    ZeroTwistNonemptyZ = "zero_twist_nonempty_z"
    TorsionSource = "torsion_source"
    TorsionPieceAsserted = "torsion_piece_asserted"
    TwistAtLeastMinusOne = "twist_at_least_minus_one"


@dataclass(frozen=True)
class Certificate:
    """One vanishing claim together with the integer datum that decides it.

    ``source``/``target`` are ``(group, summand)`` coordinates, group 0 being
    the torsion piece and summand 0 meaning the whole group. ``nu_gap`` is
    ``nu_source - nu_target`` where both groups are torsion-free, so the
    twist can be read off either per summand or per group.
    """

    kind: CertificateKind
    source: tuple[int, int]
    target: tuple[int, int]
    twist: int | None
    reason: Reason | None
    passed: bool
    nu_gap: int | None = None


def build_model(graded: WhnGraded,
                decomposed: Sequence[Sequence[RankOnePiece]] | None = None) -> ModelSheaf:
    if decomposed is None:
        decomposed = [rank_one_decompose(p) for p in graded.pieces]
    torsion = None if graded.torsion.h.is_zero() else graded.torsion.curve_degree
    groups = []
    for piece, summands in zip(graded.pieces, decomposed):
        groups.append(ModelGroup(piece.nu, tuple(IdealPiece(s.degree, s.deficiency) for s in summands)))
    return ModelSheaf(torsion, tuple(groups))


def restriction_type(model: ModelSheaf) -> tuple[list[list[tuple[int, int]]], list[tuple[int, int]]]:
    """Splitting type on a general line: per group and concatenated.

    Each group contributes ``O_L(-nu)^beta + O_L(-nu-1)^(rho-beta)``; entries
    of multiplicity zero are dropped.
    """
    per_group = []
    for g in model.groups:
        entry = [(-g.nu, g.beta), (-g.nu - 1, g.rho - g.beta)]
        per_group.append([(tw, mult) for tw, mult in entry if mult > 0])
    return per_group, [e for grp in per_group for e in grp]


def hom_vanishing_certificates(model: ModelSheaf) -> list[Certificate]:
    """``Hom(gr_i, gr_j(-1)) = 0`` for ``i <= j``, summand by summand.

    A source ``I_Z(s)`` and target ``I_W(u)`` contribute ``H^0(I_W(u - 1 - s))``,
    which vanishes when the twist is negative, or zero with ``W`` nonempty.
    """
    kind = CertificateKind.HomVanishing
    certs = []
    if model.curve_degree is not None:
        certs.append(Certificate(kind, (0, 0), (0, 0), None, Reason.TorsionPieceAsserted, True))
        for j in range(1, len(model.groups) + 1):
            certs.append(Certificate(kind, (0, 0), (j, 0), None, Reason.TorsionSource, True))
    for i, gi in enumerate(model.groups, start=1):
        for j, gj in enumerate(model.groups[i - 1:], start=i):
            for k_src, src in enumerate(gi.pieces, start=1):
                for k_tgt, tgt in enumerate(gj.pieces, start=1):
                    k = tgt.twist - 1 - src.twist
                    if k < 0:
                        reason, ok = Reason.NegativeTwist, True
                    elif k == 0 and tgt.points >= 1:
                        reason, ok = Reason.ZeroTwistNonemptyZ, True
                    else:
                        reason, ok = None, False
                    certs.append(Certificate(kind, (i, k_src), (j, k_tgt), k, reason, ok,
                                             gi.nu - gj.nu))
    return certs


def ext1_restriction_certificates(model: ModelSheaf) -> list[Certificate]:
    """``Ext^1(gr_i|_L, gr_j|_L) = 0`` for ``i > j`` via ``H^1(O_L(k))``, ``k >= -1``."""
    certs = []
    for i, gi in enumerate(model.groups, start=1):
        for j, gj in enumerate(model.groups[:i - 1], start=1):
            for eps in (-1, 0, 1):
                k = gi.nu - gj.nu + eps
                ok = k >= -1
                certs.append(Certificate(CertificateKind.Ext1Restriction, (i, 0), (j, 0), k,
                                         Reason.TwistAtLeastMinusOne if ok else None, ok,
                                         gi.nu - gj.nu))
    return certs


def hn_compatibility_certificate(model: ModelSheaf,
                                 decomposed: Sequence[Sequence[RankOnePiece]]) -> CheckReport:
    """Summand slopes lie in ``{-nu_i, -nu_i - 1}`` and the order chain holds."""
    rep = CheckReport()
    rep.declare("slopes")
    for i, (g, summands) in enumerate(zip(model.groups, decomposed), start=1):
        for s in summands:
            rep.check("slopes", s.degree in (-g.nu, -g.nu - 1), f"group {i}, j={s.j}: {s.degree}")
    rep.merge(check_compar_chain(decomposed), prefix="chain_")
    return rep


def resolution_pieces(a: SupportSeq, b: SupportSeq,
                      taus: Sequence[int]) -> list[tuple[SupportSeq, SupportSeq]]:
    bounds = [-INF, *taus, INF]
    return [(a.restrict(lo, hi), b.restrict(lo, hi)) for lo, hi in zip(bounds, bounds[1:])]


def resolution_reassembly_check(a: SupportSeq, b: SupportSeq, taus: Sequence[int]) -> Certificate:
    """The per-piece resolutions partition ``(a, b)`` entry for entry."""
    pieces = resolution_pieces(a, b, taus)
    a_idx = [n for pa, _ in pieces for n in pa]
    b_idx = [n for _, pb in pieces for n in pb]
    disjoint = len(a_idx) == len(set(a_idx)) and len(b_idx) == len(set(b_idx))
    sum_a = SupportSeq([e for pa, _ in pieces for e in pa.items()])
    sum_b = SupportSeq([e for _, pb in pieces for e in pb.items()])
    ok = disjoint and sum_a == a and sum_b == b
    return Certificate(CertificateKind.ResolutionReassembly, (0, 0), (len(taus) + 1, 0),
                       None, None, ok)


def check_reconciliation(model: ModelSheaf, graded: WhnGraded,
                         decomposed: Sequence[Sequence[RankOnePiece]], f: FdhFunction) -> CheckReport:
    """Rank, degree and point-count bookkeeping of the model against ``f``."""
    rep = CheckReport()
    rep.declare("rank", "degree", "points", "restriction")
    rep.check("rank", sum(g.rho for g in model.groups) == f.rho)
    degree = sum(g.beta * -g.nu + (g.rho - g.beta) * (-g.nu - 1) for g in model.groups)
    degree += model.curve_degree or 0
    rep.check("degree", degree == f.degree, f"{degree} != {f.degree}")
    for g, summands in zip(model.groups, decomposed):
        for p, s in zip(g.pieces, summands):
            rep.check("points", p.points == deficiency(s.h) >= 0, f"nu={g.nu}, j={s.j}")
    per_group, _ = restriction_type(model)
    for g, piece, entries in zip(model.groups, graded.pieces, per_group):
        rep.check("restriction", sum(m for _, m in entries) == g.rho == piece.rho
                  and g.beta == piece.beta and all(m > 0 for _, m in entries))
    return rep
