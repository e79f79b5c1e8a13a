"""Reference scan against the candidate-set recursion on a seeded corpus.

Also shows what happens with the misprinted threshold sign: the effective
route drifts from the definition almost immediately.

Run: python demos/differential_oracle.py
"""

import collections
import time

from whnfilt import SupportSeq, fdh_from_presentation, whn_effective, whn_reference
from whnfilt.corpus import corpus, shrink

fs = list(corpus(2000, seed=1))
t0 = time.perf_counter()
ref = [whn_reference(f) for f in fs]
t1 = time.perf_counter()
eff = [whn_effective(f) for f in fs]
t2 = time.perf_counter()
print(f"reference {t1 - t0:.3f}s, effective {t2 - t1:.3f}s")
print("mismatches:", sum(x != y for x, y in zip(ref, eff)))

# how long the filtrations get
lengths = collections.Counter(len(w.taus) for w in ref)
print("number of breakpoints:", dict(sorted(lengths.items())))

# the flipped numerator
flipped = [whn_effective(f, flip_threshold=True) for f in fs]
bad = [f for f, x, y in zip(fs, ref, flipped) if x != y]
print(f"flipped threshold disagrees on {len(bad)} of {len(fs)}")

a = fdh_from_presentation(SupportSeq({0: 4}), SupportSeq({1: 1}))
print("example A, reference:", whn_reference(a).nus, "flipped:", whn_effective(a, flip_threshold=True).nus)

small = shrink(bad[0], lambda g: whn_effective(g, flip_threshold=True) != whn_reference(g))
print("a shrunk disagreement:", small.a, small.b)
