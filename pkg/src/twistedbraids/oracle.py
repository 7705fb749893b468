"""Semantic checks on braid words.

``handle_reduce`` is Dehornoy's handle reduction and decides the word problem
in B_m.  The reduced Burau representation and the Alexander polynomial of a
closure are computed exactly over Z[t, 1/t]; they serve as a secondary check
and as a necessary condition for two closures to be isotopic.

Burau convention: sigma_i acts as the identity except in row ``i-1`` (0-based),
which reads ``(..., t, -t, 1, ...)`` centred on the diagonal; the inverse row is
``(..., 1, -1/t, 1/t, ...)``.  For B_2 this gives sigma_1 -> (-t).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .braid import BraidWord, concat, cycle_type, exponent_sum, free_reduce_letters, inverse, permutation
from .errors import NotAKnot, StrandMismatch
from .laurent import ONE, ZERO, LaurentPoly

DEFAULT_MAX_STEPS = 10**7


@dataclass(frozen=True)
class OracleBudget:
    max_steps: int = DEFAULT_MAX_STEPS
    max_word_length: int | None = None

    def __post_init__(self):
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")
        if self.max_word_length is not None and self.max_word_length < 1:
            raise ValueError("max_word_length must be positive")


class Reduction(enum.Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "NonTrivial"
    BUDGET_EXCEEDED = "BudgetExceeded"


class Equality(enum.Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    BUDGET_EXCEEDED = "BudgetExceeded"


class _OutOfBudget(Exception):
    pass


def _find_handle(w: list[int]):
    """Locate the next permitted handle, or report that none exists.

    Returns ``(start, end, index)`` of a permitted sigma_index-handle, or
    ``None`` when the word is sigma_i-positive or sigma_i-negative for its
    lowest index ``i``.  Selection is deterministic: the leftmost handle on
    the lowest generator, descending into its leftmost inner
    sigma_{i+1}-handle while one exists.
    """
    i = min(abs(x) for x in w)
    lo, hi = 0, len(w)
    found = None
    while True:
        prev = -1
        hit = None
        for pos in range(lo, hi):
            x = w[pos]
            if x == i or x == -i:
                if prev >= 0 and w[prev] == -x:
                    hit = (prev, pos)
                    break
                prev = pos
        if hit is None:
            return found
        found = (hit[0], hit[1], i)
        lo, hi = hit[0] + 1, hit[1]
        i += 1


def _reduce_handle(w: list[int], start: int, end: int, i: int) -> list[int]:
    e = 1 if w[start] > 0 else -1
    j = i + 1
    body: list[int] = []
    for x in w[start + 1:end]:
        if x == j or x == -j:
            d = 1 if x > 0 else -1
            body.extend((-e * j, d * i, e * j))
        else:
            body.append(x)
    return free_reduce_letters(w[:start] + free_reduce_letters(body) + w[end + 1:])


def _cyclic_reduce(w: list[int]) -> list[int]:
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == -w[hi - 1]:
        lo += 1
        hi -= 1
    return w[lo:hi]


def _run_reduction(letters, budget: OracleBudget) -> Reduction:
    # conjugation preserves triviality, so the word may be reduced cyclically
    w = _cyclic_reduce(free_reduce_letters(letters))
    steps = 0
    while w:
        handle = _find_handle(w)
        if handle is None:
            return Reduction.NONTRIVIAL
        steps += 1
        if steps > budget.max_steps:
            raise _OutOfBudget
        w = _reduce_handle(w, *handle)
        if budget.max_word_length is not None and len(w) > budget.max_word_length:
            raise _OutOfBudget
    return Reduction.TRIVIAL


def handle_reduce(u: BraidWord, budget: OracleBudget | None = None) -> Reduction:
    """Decide whether ``u`` is the identity braid."""
    budget = budget or OracleBudget()
    try:
        return _run_reduction(u.letters, budget)
    except _OutOfBudget:
        return Reduction.BUDGET_EXCEEDED


def words_equal(u: BraidWord, v: BraidWord, budget: OracleBudget | None = None) -> Equality:
    if u.strands != v.strands:
        raise StrandMismatch(f"B_{u.strands} vs B_{v.strands}")
    if exponent_sum(u) != exponent_sum(v) or permutation(u) != permutation(v):
        return Equality.NOT_EQUAL
    verdict = handle_reduce(concat(u, inverse(v)), budget)
    if verdict is Reduction.TRIVIAL:
        return Equality.EQUAL
    if verdict is Reduction.NONTRIVIAL:
        return Equality.NOT_EQUAL
    return Equality.BUDGET_EXCEEDED


# -- reduced Burau -------------------------------------------------------------

_T = LaurentPoly.monomial(1, 1)
_MINUS_T = LaurentPoly.monomial(-1, 1)
_INV_T = LaurentPoly.monomial(1, -1)
_MINUS_INV_T = LaurentPoly.monomial(-1, -1)


def identity_matrix(n: int) -> list[list[LaurentPoly]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def generator_row(letter: int, size: int) -> dict[int, LaurentPoly]:
    """Nonidentity row of the Burau image of one letter, as ``{column: entry}``."""
    r = abs(letter) - 1
    if letter > 0:
        row = {r: _MINUS_T}
        if r - 1 >= 0:
            row[r - 1] = _T
        if r + 1 < size:
            row[r + 1] = ONE
    else:
        row = {r: _MINUS_INV_T}
        if r - 1 >= 0:
            row[r - 1] = ONE
        if r + 1 < size:
            row[r + 1] = _INV_T
    return row


def generator_matrix(letter: int, strands: int) -> list[list[LaurentPoly]]:
    size = strands - 1
    m = identity_matrix(size)
    r = abs(letter) - 1
    m[r] = [ZERO] * size
    for j, val in generator_row(letter, size).items():
        m[r][j] = val
    return m


def _right_multiply_letter(m: list[list[LaurentPoly]], letter: int) -> None:
    size = len(m)
    r = abs(letter) - 1
    row = generator_row(letter, size)
    for a in range(size):
        pivot = m[a][r]
        if pivot.is_zero():
            continue
        for j, val in row.items():
            if j == r:
                m[a][r] = pivot * val
            else:
                m[a][j] = m[a][j] + pivot * val


def burau_reduced(u: BraidWord) -> list[list[LaurentPoly]]:
    m = identity_matrix(u.strands - 1)
    for x in u.letters:
        _right_multiply_letter(m, x)
    return m


def matmul(a, b):
    n, k, p = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][l] * b[l][j] for l in range(k)), ZERO) for j in range(p)] for i in range(n)]


def determinant(matrix) -> LaurentPoly:
    """Fraction-free (Bareiss) elimination; every division is exact."""
    n = len(matrix)
    if n == 0:
        return ONE
    a = [list(row) for row in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def alexander_of_closure(u: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure, normalised to a positive constant term at t^0."""
    m = u.strands
    if cycle_type(permutation(u)) != [m]:
        raise NotAKnot(f"closure of {u} has {len(cycle_type(permutation(u)))} components")
    b = burau_reduced(u)
    size = m - 1
    diff = [[(ONE if i == j else ZERO) - b[i][j] for j in range(size)] for i in range(size)]
    det = determinant(diff)
    # (1 - t^m) / (1 - t) = 1 + t + ... + t^{m-1}
    geometric = LaurentPoly({e: 1 for e in range(m)})
    return det.exact_div(geometric).normalized()
