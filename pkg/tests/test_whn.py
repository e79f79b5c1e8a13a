from __future__ import annotations

from hypothesis import given, strategies as st

from oracle import htilde_naive, whn_naive
from strategies import fdh_functions, pres
from whnfilt import INF, SupportSeq, fdh_from_presentation, WhnResult
from whnfilt.corpus import corpus
from whnfilt.whn import (COMBIN_CLAUSES, affine_form, candidate_set, check_combin,
                         htilde_t_reference, scan_floor, whn_effective, whn_reference)


def as_tuple(w: WhnResult):
    return w.taus, w.nus, w.rhos, w.betas, w.torsion_constant


class TestHtilde:
    def test_example_a(self, example_a):
        assert htilde_t_reference(example_a, -2) == (0, -1)
        assert htilde_t_reference(example_a, -1) == (1, INF)

    def test_tail(self, example_b):
        f = example_b
        for n in range(f.hi, f.hi + 5):
            assert htilde_t_reference(f, n) == (f.rho * n + f.sigma, INF)

    def test_affine_form(self, example_a):
        assert affine_form(example_a, INF) == (3, 4)
        assert affine_form(example_a, -1) == (0, 0)


class TestReference:
    def test_two_step(self, example_b):
        w = whn_reference(example_b)
        assert as_tuple(w) == ((-1, 1), (-1, 0), (1, 1), (0, 0), 0)
        assert w.length == 2
        ts = [htilde_t_reference(example_b, n)[1] for n in (-3, -2, -1, 0, 1)]
        assert ts == [-1, -1, 1, INF, INF]

    def test_example_a(self, example_a):
        assert as_tuple(whn_reference(example_a)) == ((-1,), (-1,), (3,), (1,), 0)

    def test_torsion(self, cubic):
        assert as_tuple(whn_reference(cubic)) == ((), (), (), (), 3)

    def test_zero(self):
        assert as_tuple(whn_reference(pres())) == ((), (), (), (), 0)

    def test_breakpoint_far_below_support(self):
        # r = 10, 1, 1, ...: the first jump lies ten steps below lo
        f = pres({0: 10}, {1: 9})
        w = whn_reference(f)
        assert w.nus[0] == -10 < f.lo - 1
        assert scan_floor(f) <= w.nus[0] - 1
        assert as_tuple(w) == whn_naive({0: 10, 1: -9})


class TestEffective:
    def test_candidate_sets(self, example_a, example_b):
        assert candidate_set(example_b) == [-1, 1, INF]
        assert candidate_set(example_a) == [-1, INF]
        assert candidate_set(pres({0: 3})) == [-1, INF]

    def test_examples(self, example_a, example_b):
        assert whn_effective(example_a) == whn_reference(example_a)
        assert whn_effective(example_b) == whn_reference(example_b)
        w = whn_effective(pres({0: 2}))
        assert as_tuple(w) == ((-1,), (-1,), (2,), (0,), 0)

    def test_flipped_threshold_breaks_example_a(self, example_a):
        w = whn_effective(example_a, flip_threshold=True)
        assert w.nus[0] == 2 != whn_reference(example_a).nus[0]

    def test_flipped_threshold_fails_often(self):
        bad = sum(whn_effective(f, flip_threshold=True) != whn_reference(f)
                  for f in corpus(100, seed=5))
        assert bad > 0


class TestCombin:
    def test_examples(self, example_a, example_b, cubic):
        for f in (example_a, example_b, cubic, pres()):
            rep = check_combin(f, whn_reference(f))
            assert rep.ok, rep.failures
            assert set(COMBIN_CLAUSES) <= set(rep.clauses)

    def test_detects_wrong_data(self, example_a):
        good = whn_reference(example_a)
        bad = WhnResult(good.taus, (2,), good.rhos, good.betas, good.torsion_constant)
        assert not check_combin(example_a, bad).ok


@given(fdh_functions(), st.integers(-6, 6))
def test_htilde_matches_unpruned_scan(f, n):
    assert htilde_t_reference(f, n) == htilde_naive(dict(f.diff.items()), n)


@given(fdh_functions())
def test_reference_matches_definition(f):
    assert as_tuple(whn_reference(f)) == whn_naive(dict(f.diff.items()))


@given(fdh_functions(max_width=12, max_mult=9))
def test_effective_matches_reference(f):
    assert whn_effective(f) == whn_reference(f)


@given(fdh_functions())
def test_combin_clauses_hold(f):
    rep = check_combin(f, whn_reference(f))
    assert rep.ok, rep.failures


@given(fdh_functions(), st.integers(1, 4))
def test_scaling(f, k):
    w, v = whn_reference(f), whn_reference(f.scale(k))
    assert v.taus == w.taus and v.nus == w.nus
    assert v.rhos == tuple(k * x for x in w.rhos)
    assert v.betas == tuple(k * x for x in w.betas)
    assert v.torsion_constant == k * w.torsion_constant


@given(fdh_functions(), st.integers(-3, 3))
def test_twist_shifts_breakpoints(f, s):
    # E(s) has h'(n) = h(n + s), i.e. diff shifted down by s
    g = fdh_from_presentation(SupportSeq({n - s: v for n, v in f.a.items()}),
                              SupportSeq({n - s: v for n, v in f.b.items()}))
    w, v = whn_reference(f), whn_reference(g)
    assert v.taus == tuple(t - s for t in w.taus)
    assert v.nus == tuple(x - s for x in w.nus)
    assert (v.rhos, v.betas, v.torsion_constant) == (w.rhos, w.betas, w.torsion_constant)


@given(fdh_functions())
def test_structural_bounds(f):
    w = whn_reference(f)
    assert sum(w.rhos) == f.rho
    assert all(r >= 1 for r in w.rhos)
    assert all(0 <= b < r for b, r in zip(w.betas, w.rhos))
    assert all(x < y for x, y in zip(w.nus, w.nus[1:]))
    assert all(x < y for x, y in zip(w.taus, w.taus[1:]))
    assert len(w.taus) == len(w.nus) == len(w.rhos)
    assert (len(w.taus) == 0) == (f.rho == 0)
