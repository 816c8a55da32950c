"""O- and I-Fibonacci (p,r)-words: predicates, enumeration and counting.

Words are fixed-length binary strings with 1-based positions. The empty word
(n = 0) is a valid value and serializes as the empty string.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional

from .config import Config
from .errors import InvalidParamsError, InvalidWordError, WordIndexError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Word:
    bits: str

    def __post_init__(self):
        if any(ch not in "01" for ch in self.bits):
            raise InvalidWordError(f"not a binary word: {self.bits!r}")

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def bit(self, i: int) -> int:
        """Bit at 1-based position i."""
        if not 1 <= i <= len(self.bits):
            raise WordIndexError(i, len(self.bits))
        return 1 if self.bits[i - 1] == "1" else 0

    def ones(self) -> list[int]:
        """1-based positions of the 1s, ascending."""
        return [i + 1 for i, ch in enumerate(self.bits) if ch == "1"]


def parse_word(text: str) -> Word:
    return Word(text.strip())


def zero_word(n: int) -> Word:
    return Word("0" * n)


def unit_word(n: int, i: int) -> Word:
    """The i-th unit word e^i of length n."""
    if not 1 <= i <= n:
        raise WordIndexError(i, n)
    return Word("0" * (i - 1) + "1" + "0" * (n - i))


def weight(w: Word) -> int:
    return w.bits.count("1")


def flip(w: Word, i: int) -> Word:
    """w + e^i: invert the bit at 1-based position i."""
    if not 1 <= i <= len(w):
        raise WordIndexError(i, len(w))
    inverted = "1" if w.bits[i - 1] == "0" else "0"
    return Word(w.bits[: i - 1] + inverted + w.bits[i:])


class Family(str, Enum):
    O = "O"
    I = "I"

    @classmethod
    def parse(cls, text: str) -> "Family":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise InvalidParamsError(f"unknown family {text!r} (expected O or I)") from None


@dataclass(frozen=True)
class CubeParams:
    family: Family
    p: int
    r: int
    n: int

    def __post_init__(self):
        if not isinstance(self.family, str):
            raise InvalidParamsError(f"family must be O or I, got {self.family!r}")
        object.__setattr__(self, "family", Family.parse(self.family))
        if self.p < 1 or self.r < 1:
            raise InvalidParamsError(f"p and r must be at least 1, got p={self.p} r={self.r}")
        if self.n < 0:
            raise InvalidParamsError(f"n must be non-negative, got n={self.n}")

    @classmethod
    def parse(cls, spec: str) -> "CubeParams":
        """Parse a `o:p,r,n` / `i:p,r,n` cube spec."""
        family, sep, rest = spec.partition(":")
        parts = rest.split(",")
        if not sep or len(parts) != 3:
            raise InvalidParamsError(f"cube spec must look like o:p,r,n, got {spec!r}")
        try:
            p, r, n = (int(part) for part in parts)
        except ValueError:
            raise InvalidParamsError(f"cube spec must look like o:p,r,n, got {spec!r}") from None
        return cls(Family.parse(family), p, r, n)

    def label(self) -> str:
        return f"{self.family.value}({self.p},{self.r},{self.n})"


def _check_pr(p: int, r: int):
    if p < 1 or r < 1:
        raise InvalidParamsError(f"p and r must be at least 1, got p={p} r={r}")


def is_o_word(w: Word, p: int, r: int) -> bool:
    """1s pairwise at least p apart; chains of 1s spaced exactly p have length <= r."""
    _check_pr(p, r)
    chain = 0
    previous = None
    for t in w.ones():
        if previous is None:
            chain = 1
        elif t - previous < p:
            return False
        elif t - previous == p:
            chain += 1
        else:
            chain = 1
        if chain > r:
            return False
        previous = t
    return True


def is_i_word(w: Word, p: int, r: int) -> bool:
    """Runs of 1s have length <= r and are separated by at least p zeros."""
    _check_pr(p, r)
    groups = [(ch, len(list(run))) for ch, run in itertools.groupby(w.bits)]
    for idx, (ch, size) in enumerate(groups):
        if ch == "1" and size > r:
            return False
        # a zero block strictly between two runs of 1s
        if ch == "0" and 0 < idx < len(groups) - 1 and size < p:
            return False
    return True


def accepts(params: CubeParams, w: Word) -> bool:
    if params.family is Family.O:
        return is_o_word(w, params.p, params.r)
    return is_i_word(w, params.p, params.r)


# ---- prefix-pruned generation ----
#
# O state: (gap to the last 1 or None, length of the current exact-p chain)
# I state: (trailing run of 1s, trailing zeros since the last run, any run seen)

_State = tuple


def _initial_state(family: Family) -> _State:
    return (None, 0) if family is Family.O else (0, 0, False)


def _step(params: CubeParams, state: _State, bit: str) -> Optional[_State]:
    p, r = params.p, params.r
    if params.family is Family.O:
        gap, chain = state
        if bit == "0":
            # gaps beyond p all behave alike
            return (None if gap is None else min(gap + 1, p + 1), chain)
        if gap is None:
            chain = 1
        elif gap < p:
            return None
        elif gap == p:
            chain += 1
        else:
            chain = 1
        return (1, chain) if chain <= r else None

    run, zeros, seen = state
    if bit == "0":
        return (0, 1, seen) if run else (0, min(zeros + 1, p), seen)
    if run:
        return (run + 1, 0, seen) if run + 1 <= r else None
    if seen and zeros < p:
        return None
    return (1, 0, True)


def enumerate_pruned(params: CubeParams) -> Iterator[Word]:
    """Depth-first generation that abandons a prefix as soon as it is invalid."""

    def extend(prefix: str, state: _State) -> Iterator[str]:
        if len(prefix) == params.n:
            yield prefix
            return
        for bit in "01":
            nxt = _step(params, state, bit)
            if nxt is not None:
                yield from extend(prefix + bit, nxt)

    for bits in extend("", _initial_state(params.family)):
        yield Word(bits)


def enumerate_words(params: CubeParams) -> list[Word]:
    """All words of the family in ascending lexicographic order."""
    if params.n > Config.BRUTE_FORCE_WORD_LENGTH:
        logger.debug("n=%d above brute-force limit, using pruned generation", params.n)
        return list(enumerate_pruned(params))
    words = (Word("".join(bits)) for bits in itertools.product("01", repeat=params.n))
    return [w for w in words if accepts(params, w)]


@lru_cache(maxsize=None)
def _recurrence(p: int, r: int, n: int) -> frozenset:
    if n < 0:
        return frozenset()
    if n == 0:
        return frozenset({""})
    block = "1" + "0" * (p - 1)
    words = set()
    for k in range(r + 1):
        prefix = block * k + "0"
        if len(prefix) <= n:
            words.update(prefix + tail for tail in _recurrence(p, r, n - len(prefix)))
        elif k >= 1:
            # the block ran off the end of the word; every larger k repeats it
            words.add((block * k)[:n])
    return frozenset(words)


def enumerate_recursive(p: int, r: int, n: int) -> list[Word]:
    """Vertex set built by the block recurrence, with truncated final blocks."""
    _check_pr(p, r)
    if n < 0:
        raise InvalidParamsError(f"n must be non-negative, got n={n}")
    return [Word(bits) for bits in sorted(_recurrence(p, r, n))]


def count_words(params: CubeParams) -> int:
    if params.family is Family.O:
        return _count_o_words(params.p, params.r, params.n)
    return _count_by_automaton(params)


def _count_o_words(p: int, r: int, n: int) -> int:
    counts = [1] + [0] * n
    for m in range(1, n + 1):
        total = sum(counts[m - k * p - 1] for k in range(r + 1) if k * p + 1 <= m)
        # a truncated chain of ceil(m / p) blocks
        if -(-m // p) <= r:
            total += 1
        counts[m] = total
    return counts[n]


def _count_by_automaton(params: CubeParams) -> int:
    states = Counter({_initial_state(params.family): 1})
    for _ in range(params.n):
        nxt = Counter()
        for state, count in states.items():
            for bit in "01":
                target = _step(params, state, bit)
                if target is not None:
                    nxt[target] += count
        states = nxt
    return sum(states.values())
