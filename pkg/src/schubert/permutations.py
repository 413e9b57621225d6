"""Finitely-supported permutations of the positive integers.

A permutation is stored in one-line notation as the tuple
``(p(1), ..., p(n))``; every position beyond the stored window is an
implicit fixed point.  Windows are kept canonical (trailing fixed points
trimmed), so two equal elements of S_infinity always compare and hash
equal.  The identity stores the empty window.

Text format (used by the CLI and all serializers): a compact digit
string when every value is at most 9, otherwise a comma-separated list.

>>> Permutation.parse("4317625").length()
10
>>> Permutation.parse("123469857,10").text()
'123469857'
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

LehmerCode = tuple[int, ...]

_TEXT_RE = re.compile(r"\d+(,\d+)*")


@dataclass(frozen=True)
class Permutation:
    """An element of S_infinity in canonical (trimmed) one-line notation."""

    window: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        window = tuple(self.window)
        if any(v < 1 for v in window):
            raise ValueError(f"zero or negative entry in one-line notation: {window}")
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f"not a bijection of 1..{len(window)}: {window}")
        while window and window[-1] == len(window):
            window = window[:-1]
        object.__setattr__(self, "window", window)

    # -- construction ------------------------------------------------

    @classmethod
    def identity(cls) -> Permutation:
        return cls(())

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse the text format: digits, or comma-separated values.

        Also accepts the mixed display form where runs of single-digit
        values sit between commas and each multi-digit value is its own
        chunk, e.g. ``123469857,10``.

        >>> Permutation.parse("1,2,3")
        Permutation(window=())
        """
        text = text.strip()
        if not _TEXT_RE.fullmatch(text):
            raise ValueError(f"malformed permutation text: {text!r}")
        if "," not in text:
            return cls(tuple(int(ch) for ch in text))
        chunks = text.split(",")
        try:
            return cls(tuple(int(chunk) for chunk in chunks))
        except ValueError:
            pass
        values: list[int] = []
        for chunk in chunks:
            if "0" in chunk:
                values.append(int(chunk))
            else:
                values.extend(int(ch) for ch in chunk)
        return cls(tuple(values))

    @classmethod
    def from_lehmer(cls, code: Sequence[int]) -> Permutation:
        """Inverse of :meth:`lehmer_code`; the window extends as needed."""
        code = tuple(code)
        if any(c < 0 for c in code):
            raise ValueError(f"negative Lehmer code entry: {code}")
        n = max((c + i for i, c in enumerate(code, start=1)), default=0)
        n = max(n, len(code))
        available = list(range(1, n + 1))
        window = []
        for i in range(n):
            c = code[i] if i < len(code) else 0
            window.append(available.pop(c))
        return cls(tuple(window))

    # -- text format ---------------------------------------------------

    def text(self) -> str:
        """Render the canonical window; exact inverse of :meth:`parse`."""
        if not self.window:
            return "1"
        if all(v <= 9 for v in self.window):
            return "".join(str(v) for v in self.window)
        return ",".join(str(v) for v in self.window)

    def __str__(self) -> str:
        return self.text()

    # -- evaluation ----------------------------------------------------

    def __call__(self, i: int) -> int:
        """Value at the 1-based position ``i`` (fixed beyond the window)."""
        if i < 1:
            raise ValueError(f"positions are 1-based, got {i}")
        return self.window[i - 1] if i <= len(self.window) else i

    def size(self) -> int:
        """Length of the canonical window (0 for the identity)."""
        return len(self.window)

    def is_identity(self) -> bool:
        return not self.window

    def inverse(self) -> Permutation:
        inv = [0] * len(self.window)
        for i, v in enumerate(self.window, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    # -- statistics ------------------------------------------------------

    def length(self) -> int:
        """Coxeter length: the number of inversions of the window."""
        w = self.window
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def descents(self) -> tuple[int, ...]:
        """Positions i with p(i) > p(i+1); always inside the window."""
        w = self.window
        return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])

    def last_descent(self) -> int | None:
        """Largest i with p(i) > p(i+1), or None for the identity."""
        d = self.descents()
        return d[-1] if d else None

    def lehmer_code(self) -> LehmerCode:
        """Entries c_i = #{j > i : p(j) < p(i)}, trailing zeros trimmed."""
        w = self.window
        code = [sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))]
        while code and code[-1] == 0:
            code.pop()
        return tuple(code)

    def grassmannian_descent(self) -> int | None:
        """The unique descent position, or None if there is not exactly one.

        The identity has no descent and is not Grassmannian.
        """
        d = self.descents()
        return d[0] if len(d) == 1 else None

    def is_vexillary(self) -> bool:
        """True iff the window avoids the pattern 2143.

        Exhaustive subsequence scan; windows at this scale are tiny.
        """
        w = self.window
        for i, j, k, l in itertools.combinations(range(len(w)), 4):
            if w[j] < w[i] < w[l] < w[k]:
                return False
        return True

    # -- structural operations ---------------------------------------

    def transpose(self, i: int, j: int) -> Permutation:
        """Right multiplication by t_{i<->j}: swap positions i and j."""
        if i == j:
            raise ValueError("transposition needs two distinct positions")
        n = max(len(self.window), i, j)
        values = [self(k) for k in range(1, n + 1)]
        values[i - 1], values[j - 1] = values[j - 1], values[i - 1]
        return Permutation(tuple(values))

    def star(self, other: Permutation, n: int) -> Permutation:
        """Block direct sum in S_2n: self on 1..n, other shifted by n."""
        if self.size() > n or other.size() > n:
            raise ValueError(f"star requires both windows within S_{n}")
        values = tuple(self(i) for i in range(1, n + 1))
        values += tuple(n + other(i) for i in range(1, n + 1))
        return Permutation(values)

    def stabilize(self, n: int) -> Permutation:
        """Shift by n: fixed on 1..n, then n + p(i-n) beyond."""
        if n < 0:
            raise ValueError("stabilization shift must be non-negative")
        values = tuple(range(1, n + 1)) + tuple(n + v for v in self.window)
        return Permutation(values)

    def w0_conjugate(self, n: int) -> Permutation:
        """Conjugation by the longest element of S_n; an involution."""
        if self.size() > n:
            raise ValueError(f"window exceeds S_{n}")
        return Permutation(tuple(n + 1 - self(n + 1 - i) for i in range(1, n + 1)))


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All elements of S_n (canonical windows may be shorter than n)."""
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)
