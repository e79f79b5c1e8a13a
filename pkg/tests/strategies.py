"""Shared constructors and hypothesis strategies for the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from whnfilt import FdhFunction, SupportSeq, fdh_from_presentation


def pres(a=None, b=None) -> FdhFunction:
    return fdh_from_presentation(SupportSeq(a or {}), SupportSeq(b or {}))


@st.composite
def fdh_functions(draw, max_width: int = 8, max_mult: int = 6, torsion_free: bool = False):
    """Valid FDH functions drawn through a nonnegative ``r`` profile."""
    start = draw(st.integers(-5, 5))
    values = draw(st.lists(st.integers(0, max_mult), min_size=1, max_size=max_width))
    if torsion_free and values[-1] == 0:
        values[-1] = 1
    diff = {}
    prev = 0
    for k, v in enumerate(values):
        diff[start + k] = v - prev
        prev = v
    s = SupportSeq(diff)
    return fdh_from_presentation(s.positive_part(), s.negative_part())


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []
