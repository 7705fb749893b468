"""Braid words in the Artin generators of B_m.

A letter ``i > 0`` stands for sigma_i and ``-i`` for its inverse.  Words are
never normalised behind the caller's back: two words are equal as Python
objects only when their strand counts and letter sequences coincide.
Semantic equality lives in :mod:`twistedbraids.oracle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, StrandMismatch


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise IndexOutOfRange(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise IndexOutOfRange(f"letter {x} does not fit in B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str, strands: int) -> "BraidWord":
        """Read the whitespace-separated integer format, e.g. ``"2 1 -1"``."""
        return cls(strands, tuple(int(tok) for tok in text.split()))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> "BraidWord":
        return cls(int(data["strands"]), tuple(data["letters"]))

    def with_letters(self, letters: Iterable[int]) -> "BraidWord":
        return BraidWord(self.strands, tuple(letters))


@dataclass(frozen=True)
class ProductBlock:
    """The descending product sigma_hi sigma_{hi-1} ... sigma_lo (empty if lo > hi)."""

    lo: int
    hi: int

    def letters(self) -> tuple[int, ...]:
        return tuple(range(self.hi, self.lo - 1, -1))

    def __len__(self):
        return max(0, self.hi - self.lo + 1)


def pi(lo: int, hi: int) -> tuple[int, ...]:
    """Letters of the descending product from sigma_hi down to sigma_lo."""
    return tuple(range(hi, lo - 1, -1))


def expand(block: ProductBlock, strands: int) -> BraidWord:
    letters = block.letters()
    if letters and (block.lo < 1 or block.hi >= strands):
        raise IndexOutOfRange(f"block Pi_{block.lo}^{block.hi} does not fit in B_{strands}")
    return BraidWord(strands, letters)


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise ValueError("concat needs at least one word")
    strands = words[0].strands
    letters: list[int] = []
    for w in words:
        if w.strands != strands:
            raise StrandMismatch(f"cannot concatenate words in B_{strands} and B_{w.strands}")
        letters.extend(w.letters)
    return BraidWord(strands, tuple(letters))


def inverse_letters(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


def inverse(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, inverse_letters(u.letters))


def free_reduce_letters(letters: Iterable[int]) -> list[int]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def free_reduce(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple(free_reduce_letters(u.letters)))


def exponent_sum(u: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in u.letters)


def permutation_of(letters: Iterable[int], strands: int) -> tuple[int, ...]:
    # entry j-1 is the strand (by starting position) that ends in position j
    arrangement = list(range(1, strands + 1))
    for x in letters:
        i = abs(x)
        arrangement[i - 1], arrangement[i] = arrangement[i], arrangement[i - 1]
    return tuple(arrangement)


def permutation(u: BraidWord) -> tuple[int, ...]:
    """Image of ``u`` in the symmetric group.

    The result ``perm`` is a tuple with ``perm[j-1]`` giving the starting
    position of the strand that ends in position ``j``; for ``"1 2"`` in B_3
    this is ``(2, 3, 1)``, the cycle 1 -> 2 -> 3 -> 1.
    """
    return permutation_of(u.letters, u.strands)


def compose_permutations(first: Sequence[int], second: Sequence[int]) -> tuple[int, ...]:
    """Permutation of the word ``first`` followed by the word ``second``."""
    return tuple(first[j - 1] for j in second)


def cycle_type(perm: Sequence[int]) -> list[int]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            n += 1
        lengths.append(n)
    return sorted(lengths, reverse=True)


def is_positive(u: BraidWord) -> bool:
    return all(x > 0 for x in u.letters)
