"""Full pipeline from an FDH function to model sheaf and certificates."""

from __future__ import annotations

from dataclasses import dataclass

from .fdh import Classification, FdhFunction, classify, deficiency
from .filtration import RankOnePiece, WhnGraded, rank_one_decompose, whn_graded
from .report import CheckReport
from .sheaf_model import (Certificate, ModelSheaf, build_model, ext1_restriction_certificates,
                          hn_compatibility_certificate, hom_vanishing_certificates,
                          resolution_reassembly_check, restriction_type)
from .whn import WhnResult, whn_effective, whn_reference


@dataclass(frozen=True)
class Analysis:
    f: FdhFunction
    classification: Classification
    deficiency: int | None
    whn: WhnResult
    graded: WhnGraded
    decomposed: tuple[tuple[RankOnePiece, ...], ...]
    model: ModelSheaf
    restriction: tuple[list[list[tuple[int, int]]], list[tuple[int, int]]]
    hom: tuple[Certificate, ...]
    ext1: tuple[Certificate, ...]
    hn: CheckReport
    resolution: Certificate
    oracle_agreement: bool | None

    @property
    def certificates_pass(self) -> bool:
        return (all(c.passed for c in self.hom) and all(c.passed for c in self.ext1)
                and self.hn.ok and self.resolution.passed)


def analyze(f: FdhFunction, *, oracle: bool = True) -> Analysis:
    """Run every stage; ``oracle=False`` skips the brute-force cross-check."""
    w = whn_effective(f)
    agreement = None
    if oracle:
        agreement = whn_reference(f) == w
    graded = whn_graded(f, w)
    decomposed = tuple(tuple(rank_one_decompose(p)) for p in graded.pieces)
    model = build_model(graded, decomposed)
    try:
        defi = deficiency(f)
    except ValueError:
        defi = None
    return Analysis(
        f=f,
        classification=classify(f),
        deficiency=defi,
        whn=w,
        graded=graded,
        decomposed=decomposed,
        model=model,
        restriction=restriction_type(model),
        hom=tuple(hom_vanishing_certificates(model)),
        ext1=tuple(ext1_restriction_certificates(model)),
        hn=hn_compatibility_certificate(model, decomposed),
        resolution=resolution_reassembly_check(f.a, f.b, w.taus),
        oracle_agreement=agreement,
    )
