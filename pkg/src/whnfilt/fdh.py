"""Finitely supported sequences and FDH functions.

An FDH function ``h`` is stored through its second difference ``diff = a - b``.
Its first and second running sums are ``r`` and ``h``; both are tabulated on
the support window ``[lo, hi]`` and given in closed form outside it
(``r = 0, h = 0`` below, ``r = rho, h = rho*n + sigma`` above).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class NotFdh(ValueError):
    """Some partial sum ``r(n)`` of the presentation data is negative."""

    def __init__(self, n: int, value: int):
        super().__init__(f"not an FDH function: r({n}) = {value} < 0")
        self.n = n
        self.value = value


class WindowTooNarrow(ValueError):
    pass


class DeficiencyUndefinedForTorsion(ValueError):
    pass


class SupportSeq:
    """Integer-valued function on the integers with finite support.

    Only nonzero entries are stored; duplicate indices given at construction
    are summed.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[int, int] = {}
        for n, v in items:
            if isinstance(n, bool) or isinstance(v, bool):
                raise TypeError("indices and values must be integers")
            n, v = int(n), int(v)
            acc[n] = acc.get(n, 0) + v
        self._entries = {n: acc[n] for n in sorted(acc) if acc[n] != 0}

    def __call__(self, n: int) -> int:
        return self._entries.get(n, 0)

    __getitem__ = __call__

    @property
    def lo(self) -> int | None:
        return next(iter(self._entries), None)

    @property
    def hi(self) -> int | None:
        return next(reversed(self._entries), None) if self._entries else None

    def items(self) -> list[tuple[int, int]]:
        return list(self._entries.items())

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SupportSeq):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        return f"SupportSeq({self._entries!r})"

    def __add__(self, other: SupportSeq) -> SupportSeq:
        return SupportSeq(list(self._entries.items()) + list(other._entries.items()))

    def __neg__(self) -> SupportSeq:
        return SupportSeq({n: -v for n, v in self._entries.items()})

    def __sub__(self, other: SupportSeq) -> SupportSeq:
        return self + (-other)

    def scale(self, k: int) -> SupportSeq:
        return SupportSeq({n: k * v for n, v in self._entries.items()})

    def restrict(self, lower: float, upper: float) -> SupportSeq:
        """Entries with ``lower < n <= upper`` (bounds may be infinite)."""
        return SupportSeq({n: v for n, v in self._entries.items() if lower < n <= upper})

    def positive_part(self) -> SupportSeq:
        return SupportSeq({n: v for n, v in self._entries.items() if v > 0})

    def negative_part(self) -> SupportSeq:
        """Absolute values of the negative entries."""
        return SupportSeq({n: -v for n, v in self._entries.items() if v < 0})

    def total(self) -> int:
        return sum(self._entries.values())


class FdhFunction:
    """FDH function given by its second difference.

    ``a`` and ``b`` are kept only for resolution reporting; when omitted they
    default to the positive and negative parts of ``diff``. Equality and
    hashing look at ``diff`` alone.
    """

    __slots__ = ("diff", "a", "b", "lo", "hi", "rho", "sigma", "_r", "_h")

    def __init__(self, diff: SupportSeq, a: SupportSeq | None = None,
                 b: SupportSeq | None = None):
        if (a is None) != (b is None):
            raise ValueError("give both a and b or neither")
        if a is None:
            a, b = diff.positive_part(), diff.negative_part()
        elif a - b != diff:
            raise ValueError("diff must equal a - b")
        self.diff = diff
        self.a = a
        self.b = b
        self.lo = diff.lo
        self.hi = diff.hi
        r_tab: list[int] = []
        h_tab: list[int] = []
        if diff:
            r = h = 0
            for n in range(self.lo, self.hi + 1):
                r += diff(n)
                if r < 0:
                    raise NotFdh(n, r)
                h += r
                r_tab.append(r)
                h_tab.append(h)
            self.rho = r
            self.sigma = h - r * self.hi
        else:
            self.rho = 0
            self.sigma = 0
        self._r = tuple(r_tab)
        self._h = tuple(h_tab)

    @classmethod
    def from_r(cls, start: int, values: Sequence[int]) -> FdhFunction:
        """Build from ``r`` on ``[start, start + len(values) - 1]``.

        ``r`` is 0 below ``start`` and equal to ``values[-1]`` above the window.
        """
        diff = {}
        prev = 0
        for k, v in enumerate(values):
            diff[start + k] = v - prev
            prev = v
        return cls(SupportSeq(diff))

    def r(self, n: int) -> int:
        if self.lo is None or n < self.lo:
            return 0
        if n >= self.hi:
            return self.rho
        return self._r[n - self.lo]

    def h(self, n: int) -> int:
        if self.lo is None or n < self.lo:
            return 0
        if n >= self.hi:
            return self.rho * n + self.sigma
        return self._h[n - self.lo]

    @property
    def rank(self) -> int:
        return self.rho

    @property
    def degree(self) -> int:
        return self.sigma - self.rho

    def is_zero(self) -> bool:
        return not self.diff

    def scale(self, k: int) -> FdhFunction:
        return FdhFunction(self.diff.scale(k))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FdhFunction):
            return NotImplemented
        return self.diff == other.diff

    def __hash__(self) -> int:
        return hash(self.diff)

    def __repr__(self) -> str:
        return f"FdhFunction(diff={dict(self.diff.items())}, rho={self.rho}, sigma={self.sigma})"


def fdh_from_presentation(a: SupportSeq | Mapping[int, int],
                          b: SupportSeq | Mapping[int, int]) -> FdhFunction:
    """FDH function of the cokernel of a general map ``O(-n)^b -> O(-n)^a``.

    Raises :class:`NotFdh` when ``r`` goes negative, i.e. when the general map
    is not injective.
    """
    a = a if isinstance(a, SupportSeq) else SupportSeq(a)
    b = b if isinstance(b, SupportSeq) else SupportSeq(b)
    for name, seq in (("a", a), ("b", b)):
        for n, v in seq.items():
            if v < 0:
                raise ValueError(f"{name}({n}) = {v} is negative")
    return FdhFunction(a - b, a, b)


def fdh_from_hilbert(h0: Iterable[tuple[int, int]]) -> FdhFunction:
    """FDH function from a consecutive window of Hilbert-function values.

    ``h0(n) = 0`` is assumed below the window; the third difference must
    vanish at the first and last index of the window, otherwise the window
    does not bracket the support and :class:`WindowTooNarrow` is raised.
    """
    pairs = sorted((int(n), int(v)) for n, v in h0)
    if not pairs:
        raise WindowTooNarrow("empty Hilbert window")
    ns = [n for n, _ in pairs]
    if ns != list(range(ns[0], ns[0] + len(ns))):
        raise ValueError("Hilbert window indices must be consecutive and distinct")
    vals = dict(pairs)
    lo, hi = ns[0], ns[-1]

    def hv(n: int) -> int:
        return vals.get(n, 0) if n >= lo else 0

    d3 = {n: hv(n) - 3 * hv(n - 1) + 3 * hv(n - 2) - hv(n - 3) for n in range(lo, hi + 1)}
    if d3[lo] != 0 or d3[hi] != 0:
        raise WindowTooNarrow(
            f"third difference is nonzero at the window boundary ({lo}: {d3[lo]}, {hi}: {d3[hi]})")
    diff = SupportSeq(d3)
    return fdh_from_presentation(diff.positive_part(), diff.negative_part())


def evaluate_h(f: FdhFunction, n: int) -> int:
    return f.h(n)


def evaluate_r(f: FdhFunction, n: int) -> int:
    return f.r(n)


def rank_degree(f: FdhFunction) -> tuple[int, int]:
    return f.rho, f.sigma - f.rho


def deficiency(f: FdhFunction) -> int:
    """Sum of ``(rho*n + sigma)_+ - h(n)`` over all ``n``.

    Only defined for positive rank (or the zero function); the sum diverges
    for nonzero torsion functions.
    """
    if f.is_zero():
        return 0
    if f.rho == 0:
        raise DeficiencyUndefinedForTorsion("deficiency diverges for a torsion FDH function")
    first_positive = (-f.sigma) // f.rho + 1
    total = 0
    for n in range(min(f.lo, first_positive), f.hi):
        total += max(f.rho * n + f.sigma, 0) - f.h(n)
    return total


def is_filterable_at(f: FdhFunction, m: int) -> bool:
    """True iff ``r(n) >= r(m)`` for every ``n >= m``."""
    if f.lo is None or m < f.lo or m >= f.hi:
        return True
    rm = f.r(m)
    return all(f.r(n) >= rm for n in range(m + 1, f.hi + 1))


def filtration_points(f: FdhFunction) -> list[int]:
    """Points ``m`` splitting ``f`` into two nonzero pieces."""
    if f.lo is None:
        return []
    return [m for m in range(f.lo, f.hi) if is_filterable_at(f, m)]


class Chang(enum.Enum):
    TorsionFreeMult1Sing = "torsion-free, at worst multiplicity-1 singular points"
    LocallyFree = "locally free"
    LineBundleOnNodalCurve = "torsion: line bundle on a curve with normal crossings"
    LineBundleOnSmoothCurve = "torsion, unfilterable: line bundle on a smooth curve"


@dataclass(frozen=True)
class Classification:
    is_torsion: bool
    is_torsion_free: bool
    is_locally_free: bool
    is_unfilterable: bool
    chang_description: Chang | None


def _persists(f: FdhFunction, level: int) -> bool:
    # r(m) >= level implies r(n) >= level for all n >= m
    if f.lo is None:
        return True
    reached = False
    for n in range(f.lo, f.hi + 1):
        if f.r(n) >= level:
            reached = True
        elif reached:
            return False
    return True


def classify(f: FdhFunction) -> Classification:
    torsion = f.rho == 0
    torsion_free = _persists(f, 1)
    locally_free = torsion_free and _persists(f, 2)
    unfilterable = not filtration_points(f)
    if f.is_zero():
        desc = None
    elif torsion:
        desc = Chang.LineBundleOnSmoothCurve if unfilterable else Chang.LineBundleOnNodalCurve
    elif locally_free:
        desc = Chang.LocallyFree
    elif torsion_free:
        desc = Chang.TorsionFreeMult1Sing
    else:
        desc = None
    return Classification(torsion, torsion_free, locally_free, unfilterable, desc)
