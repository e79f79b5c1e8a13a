"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines appear in the terminal
summary) or directly as ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import contextlib
import io
import json
import sys
import time

import pytest

from oracle import whn_naive
from strategies import ACCEPTANCE_LINES, pres
from whnfilt import Reason, analyze, whn_effective, whn_reference
from whnfilt.cli import main, run_verify
from whnfilt.corpus import corpus
from whnfilt.filtration import OrderRelation, fdh_order_compare
from whnfilt.verify import check_instance

COUNT, SEED, WINDOW, MAX_MULT = 1000, 42, 12, 9
LEMMA_SUITES = ("combin", "trivial_whn", "rank_one", "compar")


@contextlib.contextmanager
def criterion(number: int, title: str):
    notes: list[str] = []
    try:
        yield notes
    except BaseException as exc:
        line = f"criterion {number} ({title}): FAIL: {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"criterion {number} ({title}): PASS" + (f" [{'; '.join(notes)}]" if notes else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="module")
def seeded_corpus():
    return list(corpus(COUNT, SEED, WINDOW, MAX_MULT))


@pytest.fixture(scope="module")
def corpus_results(seeded_corpus):
    return [check_instance(f) for f in seeded_corpus]


def test_criterion_1_oracle_equivalence(seeded_corpus):
    with criterion(1, "oracle equivalence") as notes:
        for f in seeded_corpus:
            assert f.lo is None or f.hi - f.lo + 1 <= WINDOW
            assert all(v <= MAX_MULT for _, v in f.a.items() + f.b.items())
            assert f.rho <= MAX_MULT
        start = time.perf_counter()
        mismatches = [i for i, f in enumerate(seeded_corpus) if whn_effective(f) != whn_reference(f)]
        elapsed = time.perf_counter() - start
        assert mismatches == [], f"{len(mismatches)} mismatches, first at index {mismatches[0]}"
        assert elapsed < 5.0, f"took {elapsed:.2f}s"
        notes.append(f"{COUNT} instances, 0 mismatches, {elapsed:.2f}s")


def test_criterion_2_example_a():
    with criterion(2, "worked example A") as _:
        an = analyze(pres({0: 4}, {1: 1}))
        w = an.whn
        assert (w.taus, w.nus, w.rhos, w.betas) == ((-1,), (-1,), (3,), (1,))
        assert an.restriction[1] == [(1, 1), (0, 2)]
        assert an.model.describe() == "I_pt(1) ⊕ O ⊕ O"
        assert an.certificates_pass and an.oracle_agreement


def test_criterion_3_example_b():
    with criterion(3, "worked example B") as _:
        an = analyze(pres({0: 1, 2: 2}, {3: 1}))
        assert an.whn.taus == (-1, 1) and an.whn.nus == (-1, 0)
        pieces = [(p.rho, p.degree, s[0].deficiency) for p, s in zip(an.graded.pieces, an.decomposed)]
        assert pieces == [(1, 0, 0), (1, -1, 1)]
        rel = fdh_order_compare(an.decomposed[0][-1], an.decomposed[1][0])
        assert rel is OrderRelation.StrictlyGreater and an.hn.ok


def test_criterion_4_degenerate_suite():
    with criterion(4, "degenerate suite") as notes:
        zero = analyze(pres())
        assert zero.whn.taus == () and zero.whn.torsion_constant == 0
        assert zero.model.groups == () and zero.model.curve_degree is None
        assert not any(check_instance(pres()).values())
        for rho in (1, 2, 5):
            f = pres({0: rho})
            an = analyze(f)
            w = an.whn
            assert (w.taus, w.nus, w.rhos, w.betas) == ((-1,), (-1,), (rho,), (0,))
            assert len(an.graded.pieces) == 1 and an.restriction[1] == [(0, rho)]
            assert an.model.describe() == " ⊕ ".join(["O"] * rho)
            assert not any(check_instance(f).values())
        for d in range(1, 6):
            f = pres({0: 1}, {d: 1})
            an = analyze(f)
            assert an.whn.taus == () and an.whn.torsion_constant == d
            assert an.graded.pieces == () and an.model.curve_degree == d
            assert an.classification.is_torsion and an.certificates_pass
            assert not any(check_instance(f).values())
        notes.append("zero, O^1, O^2, O^5, curves of degree 1..5")


def test_criterion_5_lemma_suite(seeded_corpus, corpus_results):
    with criterion(5, "lemma suite") as notes:
        bad = {s: sum(bool(r[s]) for r in corpus_results) for s in LEMMA_SUITES}
        assert not any(bad.values()), f"failures per suite: {bad}"
        multi = sum(len(whn_reference(f).taus) >= 2 for f in seeded_corpus)
        notes.append(f"{len(corpus_results)} instances, {multi} with two or more graded pieces")


def test_criterion_6_certificate_suite(seeded_corpus, corpus_results):
    with criterion(6, "certificate suite") as notes:
        bad = sum(bool(r["certificates"]) for r in corpus_results)
        assert bad == 0, f"{bad} instances with certificate failures"
        zero_twist = 0
        for f in seeded_corpus:
            an = analyze(f, oracle=False)
            assert an.certificates_pass
            for c in an.hom:
                if c.twist == 0:
                    target = an.model.groups[c.target[0] - 1].pieces[c.target[1] - 1]
                    assert target.points >= 1 and c.reason is Reason.ZeroTwistNonemptyZ
                    zero_twist += 1
        assert zero_twist > 0, "corpus never exercised a zero-twist Hom certificate"
        notes.append(f"{zero_twist} zero-twist Hom certificates, all witnessed by points")


def test_criterion_7_regression_guard():
    with criterion(7, "regression guard") as notes:
        rep = run_verify(COUNT, SEED, WINDOW, MAX_MULT, flip_threshold=True)
        assert not rep["pass"] and rep["suites"]["oracle"] > 0
        ex_a = pres({0: 4}, {1: 1})
        flipped = whn_effective(ex_a, flip_threshold=True)
        assert flipped.nus[0] == 2 and whn_reference(ex_a).nus[0] == -1
        assert whn_naive({0: 4, 1: -1})[1] == (-1,)
        assert check_instance(ex_a, flip_threshold=True)["oracle"]
        notes.append(f"flipped build fails the oracle on {rep['suites']['oracle']}/{COUNT}; "
                     f"example A nu_1 = {flipped.nus[0]} != -1")


def _verify_bytes(workers: int) -> str:
    out = io.StringIO()
    old = sys.stdout
    sys.stdout = out
    try:
        code = main(["verify", "--seed", str(SEED), "--workers", str(workers), "--format", "json"])
    finally:
        sys.stdout = old
    assert code == 0
    return out.getvalue()


def test_criterion_8_reproducibility():
    with criterion(8, "reproducibility") as notes:
        first = _verify_bytes(1)
        assert first == _verify_bytes(1)
        for workers in (2, 4):
            assert _verify_bytes(workers) == first, f"workers={workers} differs"
        assert json.loads(first)["pass"]
        notes.append("identical bytes for workers 1, 1, 2, 4")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
