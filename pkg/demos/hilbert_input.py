"""Start from Hilbert-function values instead of a presentation.

The window must extend far enough that the third difference vanishes at both
ends; values below the window are taken to be zero.

Run: python demos/hilbert_input.py
"""

from math import comb

from whnfilt import WindowTooNarrow, analyze, fdh_from_hilbert

# h^0(O(n)) + h^0(O(n-1)) for O + O(-1)
values = [(n, comb(n + 2, 2) * (n >= 0) + comb(n + 1, 2) * (n >= 1)) for n in range(-1, 6)]
print("values:", values)
f = fdh_from_hilbert(values)
print("diff:", f.diff.items(), "rank", f.rho, "degree", f.degree)
an = analyze(f)
print("taus", an.whn.taus, "model", an.model.describe())

try:
    fdh_from_hilbert([(0, 1), (1, 3)])
except WindowTooNarrow as exc:
    print("too narrow:", exc)
