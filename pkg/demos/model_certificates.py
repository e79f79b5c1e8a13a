"""Model sheaves and their vanishing certificates for a few random inputs.

Run: python demos/model_certificates.py
"""

from whnfilt import analyze
from whnfilt.corpus import random_fdh

shown = 0
index = 0
while shown < 4:
    f = random_fdh(seed=11, index=index, window=7, max_mult=4)
    index += 1
    an = analyze(f)
    if len(an.model.groups) < 2:
        continue
    shown += 1
    print(f"a={f.a.items()} b={f.b.items()}")
    print("  model:", an.model.describe())
    print("  restriction per group:", an.restriction[0])
    for c in an.hom:
        if c.twist is not None and c.twist >= 0:
            print(f"  Hom {c.source} -> {c.target}: twist {c.twist}, {c.reason.value}")
    gaps = sorted({c.twist for c in an.ext1})
    print("  Ext twists on the line:", gaps, "(all >= -1)")
    print("  HN chain:", "ok" if an.hn.ok else an.hn.failures)
    print()
