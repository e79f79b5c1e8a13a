"""Per-instance invariant suite shared by ``whnfilt verify`` and the tests.

Each suite returns a list of failure strings; an empty list means pass.
"""

from __future__ import annotations

from .fdh import FdhFunction, classify, deficiency, is_filterable_at
from .filtration import (NotTrivialWhn, check_compar_chain, check_rank_one, check_trivial_whn,
                         rank_one_decompose, whn_graded)
from .sheaf_model import (Reason, build_model, check_reconciliation, ext1_restriction_certificates,
                          hn_compatibility_certificate, hom_vanishing_certificates,
                          resolution_reassembly_check)
from .whn import INF, check_combin, whn_effective, whn_reference

SUITES = ("fdh", "oracle", "combin", "trivial_whn", "rank_one", "compar", "certificates",
          "reconciliation")


def _fdh_suite(f: FdhFunction) -> list[str]:
    out = []
    if f.lo is None:
        return out
    for n in range(f.lo - 2, f.hi + 3):
        if not (f.h(n) >= 0 and f.h(n) - f.h(n - 1) == f.r(n) >= 0
                and f.r(n) - f.r(n - 1) == f.diff(n)):
            out.append(f"difference relations fail at n={n}")
    for m in list(range(f.lo - 3, f.lo)) + list(range(f.hi, f.hi + 3)):
        if not is_filterable_at(f, m):
            out.append(f"not filterable outside the support at m={m}")
    c = classify(f)
    if c.is_locally_free and not c.is_torsion_free:
        out.append("locally free but not torsion-free")
    if c.is_torsion != (f.rho == 0):
        out.append("torsion flag disagrees with rank")
    return out


def check_instance(f: FdhFunction, *, flip_threshold: bool = False) -> dict[str, list[str]]:
    """Run every suite on ``f``; ``flip_threshold`` uses the misprinted recursion."""
    res: dict[str, list[str]] = {name: [] for name in SUITES}
    res["fdh"] = _fdh_suite(f)

    ref = whn_reference(f)
    eff = whn_effective(f, flip_threshold=flip_threshold)
    if ref != eff:
        res["oracle"].append(f"effective {eff} != reference {ref}")
    res["combin"] = check_combin(f, ref).failures
    if f.rho > 0:
        w = ref
        if not (all(r >= 1 for r in w.rhos) and all(0 <= b < r for b, r in zip(w.betas, w.rhos))
                and sum(w.rhos) == f.rho
                and all(x < y for x, y in zip(w.nus, w.nus[1:]))):
            res["combin"].append(f"rho/beta/nu bounds fail: {w}")

    graded = whn_graded(f, ref)
    decomposed = []
    for piece in graded.pieces:
        if not check_trivial_whn(piece):
            res["trivial_whn"].append(f"piece {piece.index} does not have trivial WHN")
        try:
            summands = rank_one_decompose(piece)
        except NotTrivialWhn as exc:
            res["rank_one"].append(f"piece {piece.index}: {exc}")
            return res
        decomposed.append(summands)
        res["rank_one"] += [f"piece {piece.index}: {m}" for m in check_rank_one(piece, summands).failures]
    if f.lo is not None:
        for n in range(f.lo - 2, f.hi + 3):
            s = graded.torsion.h.h(n) + sum(p.h.h(n) for p in graded.pieces)
            if s != f.h(n):
                res["rank_one"].append(f"graded pieces do not sum to h at n={n}")
    ct = graded.torsion.h
    if not (ct.rho == 0 and (f.rho == 0 or ct.is_zero() == (f.h(ref.taus[0]) == 0))):
        res["rank_one"].append("torsion piece is not torsion")

    res["compar"] = check_compar_chain(decomposed).failures
    ends = [*ref.taus, INF]
    for i, summands in enumerate(decomposed, start=1):
        lower, upper = ends[i - 1], ends[i]
        for s in summands:
            if s.eta < lower + 1:
                res["compar"].append(f"group {i}: eta_{s.j}={s.eta} below interval")
            # summand already linear where the sub-filtration step at upper is taken
            if upper != INF and any(s.h.h(n) != n + 1 + s.degree for n in range(upper - 1, upper + 2)):
                res["compar"].append(f"group {i}: summand {s.j} not linear from {upper - 1}")
        if summands and summands[0].eta != lower + 1:
            res["compar"].append(f"group {i}: eta_1={summands[0].eta} != {lower + 1}")

    model = build_model(graded, decomposed)
    hom = hom_vanishing_certificates(model)
    for c in hom:
        if not c.passed:
            res["certificates"].append(f"hom {c.source}->{c.target} twist {c.twist}")
        if c.twist == 0 and c.reason is not Reason.ZeroTwistNonemptyZ:
            res["certificates"].append(f"hom {c.source}->{c.target}: zero twist without points")
    for c in ext1_restriction_certificates(model):
        if not c.passed:
            res["certificates"].append(f"ext {c.source}->{c.target} twist {c.twist}")
    res["certificates"] += [f"hn {m}" for m in hn_compatibility_certificate(model, decomposed).failures]
    if not resolution_reassembly_check(f.a, f.b, ref.taus).passed:
        res["certificates"].append("resolution reassembly")

    res["reconciliation"] = check_reconciliation(model, graded, decomposed, f).failures
    if f.rho > 0:
        try:
            deficiency(f)
        except ValueError as exc:
            res["reconciliation"].append(str(exc))
    return res


def failed_suites(res: dict[str, list[str]]) -> list[str]:
    return [name for name, msgs in res.items() if msgs]
