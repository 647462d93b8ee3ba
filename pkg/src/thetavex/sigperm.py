"""Signed permutations (the hyperoctahedral group W_n).

An element w of W_n is a bijection of the integers that satisfies
w(-i) = -w(i), fixes everything outside [-n, n], and is stored here by
its window w(1), ..., w(n).  Negative positions, the fixed point at 0,
and fixed points beyond n are all derived on demand from the window.

The natural order on window entries is the usual integer order with 0
removed: -n < ... < -1 < 1 < ... < n.
"""

from __future__ import annotations

import itertools
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence, Tuple

#: Exhaustive scans refuse ranks above this unless explicitly overridden.
RANK_GUARD = 8


class RankTooLargeError(ValueError):
    """An exhaustive scan was requested for a rank above the guard."""


def check_rank_guard(n: int, allow_large: bool = False) -> None:
    if n < 1:
        raise ValueError(f"rank must be a positive integer, got {n}")
    if n > RANK_GUARD and not allow_large:
        raise RankTooLargeError(
            f"rank {n} exceeds the guard for exhaustive work (max {RANK_GUARD}); "
            "pass allow_large/--allow-large to override"
        )


class SignedPermutation:
    """An element of W_n in one-line window notation.

    The window holds w(1), ..., w(n); each absolute value in {1, ..., n}
    appears exactly once.  Instances are immutable values: hashable,
    comparable by window, safe to share between workers.
    """

    __slots__ = ("window",)

    window: Tuple[int, ...]

    def __init__(self, window: Iterable[int]):
        win = tuple(window)
        n = len(win)
        seen = set()
        for v in win:
            if v == 0:
                raise ValueError("window entries must be nonzero")
            if not 1 <= abs(v) <= n:
                raise ValueError(
                    f"window entry {v} out of range for rank {n} "
                    f"(absolute values must cover 1..{n})"
                )
            if abs(v) in seen:
                raise ValueError(f"absolute value {abs(v)} repeated in window")
            seen.add(abs(v))
        object.__setattr__(self, "window", win)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPermutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """Evaluate w(i) for any integer i under the full-form convention."""
        n = len(self.window)
        if i == 0:
            return 0
        if i > 0:
            return self.window[i - 1] if i <= n else i
        # w(-i) = -w(i)
        return -self.window[-i - 1] if -i <= n else i

    def inverse(self) -> "SignedPermutation":
        """The group inverse, i.e. v with v(w(i)) = i."""
        inv = [0] * self.n
        for i, v in enumerate(self.window, start=1):
            if v > 0:
                inv[v - 1] = i
            else:
                inv[-v - 1] = -i
        return SignedPermutation(inv)

    def length(self) -> int:
        """Coxeter length: inversions of the window plus antisymmetric pairs.

        length = #{i < j | w(i) > w(j)} + #{i <= j | w(-i) > w(j)}.
        The second count uses w(-i) > w(j) <=> w(i) + w(j) < 0.
        """
        win = self.window
        n = len(win)
        inv = sum(
            1 for i in range(n) for j in range(i + 1, n) if win[i] > win[j]
        )
        neg = sum(
            1 for i in range(n) for j in range(i, n) if win[i] + win[j] < 0
        )
        return inv + neg

    def descents(self) -> frozenset:
        """Positions d in [0, n-1] with w(d) > w(d+1) in the full form.

        d = 0 is a descent exactly when w(1) < 0.
        """
        return frozenset(d for d in range(self.n) if self(d) > self(d + 1))

    def embed_odd(self) -> "FullPermutation":
        """The full antisymmetric form on positions [-n, n]."""
        n = self.n
        return FullPermutation(n, tuple(self(i) for i in range(-n, n + 1)))

    def embed_even(self) -> Tuple[int, ...]:
        """The full form with the fixed point at position 0 removed."""
        n = self.n
        return tuple(self(i) for i in range(-n, n + 1) if i != 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPermutation) and self.window == other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.window)})"

    def __str__(self) -> str:
        return format_window(self)


#: Signed patterns are just signed permutations of the pattern's rank;
#: containment is tested against the window of a larger element.
SignedPattern = SignedPermutation


class FullPermutation:
    """The image of a signed permutation in the symmetric group on [-n, n].

    Stores the value at every position of [-n, n]; positions beyond the
    window evaluate as fixed points, which is what the corner condition
    needs when it peeks one unit past the boundary.
    """

    __slots__ = ("n", "values", "_inv")

    def __init__(self, n: int, values: Sequence[int]):
        if len(values) != 2 * n + 1:
            raise ValueError("expected one value per position of [-n, n]")
        vals = tuple(values)
        if sorted(vals) != list(range(-n, n + 1)):
            raise ValueError("values must be a bijection of [-n, n]")
        for i in range(1, n + 1):
            if vals[n - i] != -vals[n + i]:
                raise ValueError("values must be antisymmetric through 0")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", vals)
        inv = [0] * (2 * n + 1)
        for pos in range(-n, n + 1):
            inv[vals[pos + n] + n] = pos
        object.__setattr__(self, "_inv", tuple(inv))

    def __setattr__(self, name, value):
        raise AttributeError("FullPermutation is immutable")

    def __call__(self, i: int) -> int:
        return self.values[i + self.n] if -self.n <= i <= self.n else i

    def inverse_at(self, v: int) -> int:
        """Position mapped to v, with fixed points outside [-n, n]."""
        return self._inv[v + self.n] if -self.n <= v <= self.n else v

    def restrict(self) -> SignedPermutation:
        """The window w(1), ..., w(n) as a SignedPermutation."""
        return SignedPermutation(self.values[self.n + 1 :])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FullPermutation)
            and self.n == other.n
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.n, self.values))

    def __repr__(self) -> str:
        return f"FullPermutation({self.n}, {list(self.values)})"


# ---------------------------------------------------------------------------
# pattern containment


def find_pattern(
    w: SignedPermutation, pattern: SignedPermutation
) -> Optional[Tuple[int, ...]]:
    """Lexicographically least witness of the pattern inside w, or None.

    A witness is an increasing index sequence 1 <= i_1 < ... < i_m <= n
    such that sign(w(i_j)) = sign(pattern(j)) for every j and the
    absolute values |w(i_1)|, ..., |w(i_m)| are in the same relative
    order as the pattern's absolute values.

    Depth-first search over index prefixes in increasing order, pruning
    on signs; the first complete match found is the lexicographically
    least one.
    """
    win = w.window
    pat = pattern.window
    n, m = len(win), len(pat)
    if m > n:
        return None
    chosen: list = []

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == m:
            return True
        for i in range(start, n - (m - j) + 1):
            v = win[i]
            if (v > 0) != (pat[j] > 0):
                continue
            if all(
                (abs(win[c]) < abs(v)) == (abs(pat[l]) < abs(pat[j]))
                for l, c in enumerate(chosen)
            ):
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return tuple(i + 1 for i in chosen)
    return None


def contains_pattern(w: SignedPermutation, pattern: SignedPermutation) -> bool:
    """True iff some subsequence of the window realizes the pattern."""
    return find_pattern(w, pattern) is not None


# ---------------------------------------------------------------------------
# enumeration of W_n


def group_order(n: int) -> int:
    return (2 ** n) * factorial(n)


def _window_stream(n: int, prefix: list, used: set) -> Iterator[Tuple[int, ...]]:
    if len(prefix) == n:
        yield tuple(prefix)
        return
    for v in range(-n, n + 1):
        if v == 0 or abs(v) in used:
            continue
        prefix.append(v)
        used.add(abs(v))
        yield from _window_stream(n, prefix, used)
        prefix.pop()
        used.remove(abs(v))


def iter_windows(
    n: int, start: int = 0, stop: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """Windows of W_n in lexicographic order, optionally sliced.

    The slice [start, stop) makes the stream splittable into contiguous
    chunks that parallel workers can regenerate independently.
    """
    stream = _window_stream(n, [], set())
    if start == 0 and stop is None:
        yield from stream
    else:
        yield from itertools.islice(stream, start, stop)


def enumerate_group(
    n: int,
    *,
    allow_large: bool = False,
    start: int = 0,
    stop: Optional[int] = None,
) -> Iterator[SignedPermutation]:
    """All 2^n * n! elements of W_n, each exactly once, in lexicographic
    order on windows (entries ordered -n < ... < -1 < 1 < ... < n).
    """
    check_rank_guard(n, allow_large)
    for win in iter_windows(n, start, stop):
        yield SignedPermutation(win)


# ---------------------------------------------------------------------------
# text notation

def parse_window(text: str) -> SignedPermutation:
    """Parse whitespace/comma separated signed integers into an element.

    Bars are written as ASCII minus signs, e.g. "-2 3 1" for the window
    whose first entry is negative.
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty window")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ValueError(f"bad window token {tok!r}: not an integer") from None
    try:
        return SignedPermutation(values)
    except ValueError as exc:
        raise ValueError(f"bad window {text!r}: {exc}") from None


def format_window(w: SignedPermutation) -> str:
    return " ".join(str(v) for v in w.window)
