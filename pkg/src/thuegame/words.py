"""Words over small integer alphabets and repetition (square) detection.

A word is any sequence of symbols drawn from 0..q-1.  A repetition of size t
is a factor of the form XX where |X| = t; a word containing no repetition of
any size is square-free.  Three detection tiers live here: a cubic
definitional scan (the test oracle, also used by the verification suites),
a quadratic windowed check for single insertions (the referee path), and a
vectorized existence scan for long words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

MAX_ALPHABET = 64

Word = tuple[int, ...]


@dataclass(frozen=True)
class Repetition:
    """A square occupying w[start : start + 2*size] (0-based, half-open)."""

    start: int
    size: int

    def end(self) -> int:
        return self.start + 2 * self.size


def validate_alphabet(q: int) -> int:
    if not 1 <= q <= MAX_ALPHABET:
        raise ValueError(f"alphabet size must be in 1..{MAX_ALPHABET}, got {q}")
    return q


def validate_word(w: Sequence[int], q: int) -> Word:
    validate_alphabet(q)
    word = tuple(w)
    for s in word:
        if not 0 <= s < q:
            raise ValueError(f"symbol {s} out of range for alphabet of size {q}")
    return word


def find_repetition_bruteforce(w: Sequence[int]) -> Optional[Repetition]:
    """Definitional oracle: try every (start, size) pair, innermost loop explicit.

    Scans by increasing end index, then increasing size, so its witness choice
    matches find_repetition.
    """
    n = len(w)
    for end in range(2, n + 1):
        for t in range(1, end // 2 + 1):
            i = end - 2 * t
            for j in range(t):
                if w[i + j] != w[i + t + j]:
                    break
            else:
                return Repetition(start=i, size=t)
    return None


def has_square(w: Sequence[int]) -> bool:
    """Whether any repetition exists, without locating a canonical witness.

    For each candidate size t the word has a square iff w[i] == w[i+t] holds
    for t consecutive positions; that run test is vectorized so long words
    (thousands of symbols) stay cheap.
    """
    w = tuple(w)
    n = len(w)
    if n < 2:
        return False
    if n < 64:
        for end in range(2, n + 1):
            for t in range(1, end // 2 + 1):
                i = end - 2 * t
                if w[i : i + t] == w[i + t : end]:
                    return True
        return False
    a = np.asarray(w, dtype=np.int64)
    for t in range(1, n // 2 + 1):
        eq = (a[:-t] == a[t:]).astype(np.int64)
        if len(eq) < t:
            break
        run = np.cumsum(eq)
        if run[t - 1] == t or np.any(run[t:] - run[:-t] == t):
            return True
    return False


def find_repetition(w: Sequence[int]) -> Optional[Repetition]:
    """Earliest-ending repetition, ties broken by smaller size; None if square-free.

    The minimal-end scan terminates at the first square, so the cost is
    bounded by the cube of the earliest square's end index; the existence
    pre-check keeps square-free long words out of that scan entirely.
    """
    w = tuple(w)
    if not has_square(w):
        return None
    n = len(w)
    for end in range(2, n + 1):
        for t in range(1, end // 2 + 1):
            i = end - 2 * t
            if w[i : i + t] == w[i + t : end]:
                return Repetition(start=i, size=t)
    raise AssertionError("existence scan and witness scan disagree")


def is_nonrepetitive(w: Sequence[int]) -> bool:
    """True iff the word contains no repetition of any size."""
    return not has_square(w)


def repetition_through(w: Sequence[int], pos: int) -> Optional[Repetition]:
    """Repetition whose occupied range covers index pos, or None.

    Sound as a full check only when the word minus w[pos] is square-free
    (the referee's situation after a single insertion): any new square must
    cover the inserted index.  Witness choice matches find_repetition.
    """
    w = tuple(w)
    n = len(w)
    if not 0 <= pos < n:
        raise ValueError(f"position {pos} out of range for word of length {n}")
    for end in range(2, n + 1):
        for t in range(1, end // 2 + 1):
            i = end - 2 * t
            if i <= pos < end and w[i : i + t] == w[i + t : end]:
                return Repetition(start=i, size=t)
    return None


# Square-free morphism over 3 letters: the fixed point starting from 0 is the
# classical square-free word obtained by counting ones between consecutive
# zeros of the Thue-Morse sequence (relabeled).  Tests re-verify emitted
# prefixes against the detection tiers rather than trusting this table.
_SQUARE_FREE_MORPHISM = {0: (0, 1, 2), 1: (0, 2), 2: (1,)}


def thue_word(n: int) -> Word:
    """Prefix of length n of a square-free word over the alphabet {0, 1, 2}."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        return ()
    seq: tuple[int, ...] = (0,)
    while len(seq) < n:
        seq = tuple(s for sym in seq for s in _SQUARE_FREE_MORPHISM[sym])
    return seq[:n]


def canonical_form(w: Sequence[int]) -> Word:
    """Relabel symbols by first occurrence: first distinct symbol -> 0, next -> 1, ...

    Idempotent, and preserves the exact (start, size) structure of every
    repetition, which makes it a sound memoization key for game search.
    """
    relabel: dict[int, int] = {}
    out = []
    for s in w:
        if s not in relabel:
            relabel[s] = len(relabel)
        out.append(relabel[s])
    return tuple(out)


def to_letters(w: Sequence[int]) -> str:
    """Display form mapping 0..25 to 'a'..'z'."""
    return "".join(chr(ord("a") + s) for s in w)


def from_letters(text: str) -> Word:
    """Inverse of to_letters, for tests and terminal input."""
    return tuple(ord(ch) - ord("a") for ch in text)
