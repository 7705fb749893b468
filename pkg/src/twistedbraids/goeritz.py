"""Induced action of the extended Goeritz group on H_1 of the genus-two surface.

Vectors are integer 4-tuples in the basis (a, x, b, y).  A matrix's columns
are the images of the basis vectors.  In a written word the rightmost
generator acts first, so ``word_matrix(g1 g2 ... gn) = M(g1) M(g2) ... M(gn)``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidParams, NotUnimodular
from .ttk import FamilyPair, h1_class, make_family, surface_slope

Matrix = tuple[tuple[int, ...], ...]


class GoeritzGen(enum.Enum):
    ALPHA = "Alpha"
    BETA = "Beta"
    GAMMA = "Gamma"
    DELTA = "Delta"
    DELTA_INV = "DeltaInv"
    EPSILON = "Epsilon"


def _blockdiag(c, d) -> Matrix:
    return (
        (c[0][0], c[0][1], 0, 0),
        (c[1][0], c[1][1], 0, 0),
        (0, 0, d[0][0], d[0][1]),
        (0, 0, d[1][0], d[1][1]),
    )


GAMMA_BLOCK = ((0, -1), (-1, 0))
DELTA_BLOCK = ((1, 0), (1, 1))
DELTA_INV_BLOCK = ((1, 0), (-1, 1))

_GEN_MATRICES: dict[GoeritzGen, Matrix] = {
    GoeritzGen.ALPHA: tuple(tuple(-1 if i == j else 0 for j in range(4)) for i in range(4)),
    GoeritzGen.BETA: ((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1)),
    GoeritzGen.GAMMA: _blockdiag(GAMMA_BLOCK, GAMMA_BLOCK),
    GoeritzGen.DELTA: _blockdiag(DELTA_BLOCK, ((1, -1), (0, 1))),
    GoeritzGen.DELTA_INV: _blockdiag(DELTA_INV_BLOCK, ((1, 1), (0, 1))),
    # a -> y, x -> b, b -> x, y -> a
    GoeritzGen.EPSILON: ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)),
}

IDENTITY: Matrix = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))


def gen_matrix(g: GoeritzGen) -> Matrix:
    return _GEN_MATRICES[g]


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][l] * b[l][j] for l in range(k)) for j in range(m)) for i in range(n))


def apply(mat: Matrix, vec) -> tuple[int, ...]:
    return tuple(sum(mat[i][j] * vec[j] for j in range(len(vec))) for i in range(len(mat)))


# -- words -------------------------------------------------------------------------

_UNICODE = {
    GoeritzGen.ALPHA: "α", GoeritzGen.BETA: "β", GoeritzGen.GAMMA: "γ",
    GoeritzGen.DELTA: "δ", GoeritzGen.EPSILON: "ε",
}
_ASCII = {
    GoeritzGen.ALPHA: "alpha", GoeritzGen.BETA: "beta", GoeritzGen.GAMMA: "gamma",
    GoeritzGen.DELTA: "delta", GoeritzGen.EPSILON: "epsilon",
}
_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")
_FROM_SUPERSCRIPT = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")


@dataclass(frozen=True)
class NormalFormView:
    h: int
    j: int
    k: int
    l: int
    ms: tuple[int, ...]

    def as_tuple(self):
        return (self.h, self.j, self.k, self.l, list(self.ms))


@dataclass(frozen=True)
class GoeritzWord:
    gens: tuple[GoeritzGen, ...] = ()

    def __len__(self):
        return len(self.gens)

    def __add__(self, other: "GoeritzWord") -> "GoeritzWord":
        return GoeritzWord(self.gens + other.gens)

    def _runs(self):
        # (generator, exponent) runs with delta and delta^-1 merged
        out: list[list] = []
        for g in self.gens:
            if g in (GoeritzGen.DELTA, GoeritzGen.DELTA_INV):
                step = 1 if g is GoeritzGen.DELTA else -1
                if out and out[-1][0] is GoeritzGen.DELTA and (out[-1][1] > 0) == (step > 0):
                    out[-1][1] += step
                else:
                    out.append([GoeritzGen.DELTA, step])
            else:
                out.append([g, 1])
        return out

    def render(self, ascii: bool = False) -> str:
        if not self.gens:
            return "1"
        parts = []
        for g, e in self._runs():
            if ascii:
                name = _ASCII[g]
                parts.append(name if e == 1 else f"{name}^{e}")
            else:
                name = _UNICODE[g]
                parts.append(name if e == 1 else name + str(e).translate(_SUPERSCRIPT))
        return " ".join(parts) if ascii else "".join(parts)

    def __str__(self):
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "GoeritzWord":
        """Read either the compact Greek form ("αβεγδ⁻¹γδ²") or ASCII tokens
        ("alpha beta epsilon gamma delta^-1 gamma delta^2")."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        by_name = {v: k for k, v in _ASCII.items()}
        by_char = {v: k for k, v in _UNICODE.items()}
        gens: list[GoeritzGen] = []

        def emit(g, e):
            if g is GoeritzGen.DELTA:
                gens.extend([GoeritzGen.DELTA if e > 0 else GoeritzGen.DELTA_INV] * abs(e))
            else:
                gens.extend([g] * (e % 2 if e >= 0 else (-e) % 2))

        if any(ch in by_char for ch in text):
            i = 0
            while i < len(text):
                ch = text[i]
                if ch.isspace():
                    i += 1
                    continue
                if ch not in by_char:
                    raise InvalidParams(f"unexpected character {ch!r} in Goeritz word")
                j = i + 1
                while j < len(text) and text[j] in "⁰¹²³⁴⁵⁶⁷⁸⁹⁻":
                    j += 1
                exp = text[i + 1:j].translate(_FROM_SUPERSCRIPT)
                emit(by_char[ch], int(exp) if exp else 1)
                i = j
            return cls(tuple(gens))
        for tok in text.split():
            name, _, exp = tok.partition("^")
            if name not in by_name:
                raise InvalidParams(f"unknown generator {name!r}")
            emit(by_name[name], int(exp) if exp else 1)
        return cls(tuple(gens))

    def view(self) -> NormalFormView:
        """(h, j, k, l, [m_1 .. m_n]) for a word already in normal form."""
        gens = list(self.gens)
        flags = []
        for g in (GoeritzGen.ALPHA, GoeritzGen.BETA, GoeritzGen.EPSILON):
            if gens and gens[0] is g:
                flags.append(1)
                gens.pop(0)
            else:
                flags.append(0)
        l = 0
        if gens and gens[0] is GoeritzGen.GAMMA:
            l = 1
            gens.pop(0)
        ms = [0]
        for g in gens:
            if g is GoeritzGen.GAMMA:
                ms.append(0)
            elif g is GoeritzGen.DELTA:
                ms[-1] += 1
            elif g is GoeritzGen.DELTA_INV:
                ms[-1] -= 1
            else:
                raise ValueError(f"{self} is not in normal form")
        return NormalFormView(flags[0], flags[1], flags[2], l, tuple(ms))

    def to_json(self) -> dict:
        v = self.view() if _is_normal_shape(self) else None
        out = {"word": self.render(), "ascii": self.render(ascii=True)}
        if v is not None:
            out["normal_form"] = {"h": v.h, "j": v.j, "k": v.k, "l": v.l, "m": list(v.ms)}
        return out


def _is_normal_shape(w: GoeritzWord) -> bool:
    try:
        w.view()
    except ValueError:
        return False
    return True


def word_matrix(w: GoeritzWord, rightmost_first: bool = True) -> Matrix:
    """Matrix of the composite map.  ``rightmost_first=False`` gives the opposite
    reading, used only for the convention cross-check."""
    m = IDENTITY
    gens = w.gens if rightmost_first else tuple(reversed(w.gens))
    for g in gens:
        m = matmul(m, gen_matrix(g))
    return m


def normal_form(w: GoeritzWord) -> GoeritzWord:
    """Rewrite into alpha^h beta^j epsilon^k gamma^l delta^m1 gamma ... gamma delta^mn.

    Scans left to right keeping the prefix flags and a gamma/delta core.
    Appending beta or epsilon pushes it left through the core with
    gamma beta = alpha beta gamma, delta beta = beta delta^-1,
    gamma epsilon = epsilon gamma, delta epsilon = epsilon delta^-1, and then
    through the prefix with epsilon beta = alpha beta epsilon; alpha is central.
    """
    h = j = k = 0
    core: list[list] = []  # entries ["g"] or ["d", exponent]

    def push_gamma():
        if core and core[-1][0] == "g":
            core.pop()
        else:
            core.append(["g"])

    def push_delta(e):
        if core and core[-1][0] == "d":
            core[-1][1] += e
            if core[-1][1] == 0:
                core.pop()
        else:
            core.append(["d", e])

    for g in w.gens:
        if g is GoeritzGen.ALPHA:
            h ^= 1
        elif g is GoeritzGen.GAMMA:
            push_gamma()
        elif g is GoeritzGen.DELTA:
            push_delta(1)
        elif g is GoeritzGen.DELTA_INV:
            push_delta(-1)
        elif g is GoeritzGen.BETA:
            gammas = sum(1 for item in core if item[0] == "g")
            for item in core:
                if item[0] == "d":
                    item[1] = -item[1]
            h ^= (gammas % 2) ^ k
            j ^= 1
        elif g is GoeritzGen.EPSILON:
            for item in core:
                if item[0] == "d":
                    item[1] = -item[1]
            k ^= 1

    out: list[GoeritzGen] = []
    if h:
        out.append(GoeritzGen.ALPHA)
    if j:
        out.append(GoeritzGen.BETA)
    if k:
        out.append(GoeritzGen.EPSILON)
    for item in core:
        if item[0] == "g":
            out.append(GoeritzGen.GAMMA)
        else:
            e = item[1]
            out.extend([GoeritzGen.DELTA if e > 0 else GoeritzGen.DELTA_INV] * abs(e))
    return GoeritzWord(tuple(out))


# -- block form ----------------------------------------------------------------------

def _det2(c) -> int:
    return c[0][0] * c[1][1] - c[0][1] * c[1][0]


def _inv_transpose(c):
    # (C^T)^-1 for det C = +-1
    d = _det2(c)
    s, t, u, v = c[0][0], c[0][1], c[1][0], c[1][1]
    return ((v * d, -u * d), (-t * d, s * d))


@dataclass(frozen=True)
class BlockForm:
    C: tuple[tuple[int, int], tuple[int, int]]

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotBlockForm:
    reason: str

    def __bool__(self):
        return False


def check_block_form(m: Matrix) -> BlockForm | NotBlockForm:
    if any(m[i][j] for i in (0, 1) for j in (2, 3)) or any(m[i][j] for i in (2, 3) for j in (0, 1)):
        return NotBlockForm("off-diagonal blocks are nonzero")
    c = ((m[0][0], m[0][1]), (m[1][0], m[1][1]))
    d = ((m[2][2], m[2][3]), (m[3][2], m[3][3]))
    if _det2(c) not in (1, -1):
        return NotBlockForm(f"det C = {_det2(c)}")
    if d != _inv_transpose(c):
        return NotBlockForm("lower block is not (C^T)^-1")
    return BlockForm(c)


def _mat2(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _l_pow(k):
    return ((1, 0), (k, 1))


def _u_pow(k):
    return ((1, k), (0, 1))


def realize_block(c) -> GoeritzWord:
    """A gamma/delta word whose upper block is ``c``.

    Uses L = delta and U = gamma delta gamma = [[1, 1], [0, 1]]: the bottom row
    of ``c`` is cleared by a Euclidean descent of right multiplications by
    powers of L and U, leaving U^t or -U^-t with -1 = (U L^-1 U)^2.
    """
    c = ((int(c[0][0]), int(c[0][1])), (int(c[1][0]), int(c[1][1])))
    det = _det2(c)
    if det not in (1, -1):
        raise NotUnimodular(f"det = {det}")
    original = c
    tail: list[tuple[str, int]] = []  # factors to the right, innermost last
    if det == -1:
        c = _mat2(c, GAMMA_BLOCK)
        tail.append(("G", 1))
    while c[1][0] != 0:
        u, v = c[1][0], c[1][1]
        if v != 0 and abs(u) >= abs(v):
            k = u // v
            c = _mat2(c, _l_pow(-k))
            tail.append(("L", k))
        else:
            k = -u if v == 0 else v // u
            c = _mat2(c, _u_pow(-k))
            tail.append(("U", k))
    s, t = c[0][0], c[0][1]
    if s == 1:
        head = [("U", t)]
    else:
        head = [("U", 1), ("L", -1), ("U", 1)] * 2 + [("U", -t)]
    factors = head + list(reversed(tail))

    gens: list[GoeritzGen] = []
    for kind, e in factors:
        if kind == "G":
            gens.append(GoeritzGen.GAMMA)
            continue
        if e == 0:
            continue
        d = [GoeritzGen.DELTA if e > 0 else GoeritzGen.DELTA_INV] * abs(e)
        gens.extend([GoeritzGen.GAMMA] + d + [GoeritzGen.GAMMA] if kind == "U" else d)
    word = normal_form(GoeritzWord(tuple(gens)))
    got = check_block_form(word_matrix(word))
    assert got and got.C == original, (original, word)
    return word


# -- obstruction -------------------------------------------------------------------

PREFIXES = tuple(itertools.product((0, 1), repeat=3))
# +1 is the primary case in the argument; -1 is the parallel one
DET_ORDER = (1, -1)


def prefix_word(h: int, j: int, k: int) -> GoeritzWord:
    gens = [GoeritzGen.ALPHA] * h + [GoeritzGen.BETA] * j + [GoeritzGen.EPSILON] * k
    return GoeritzWord(tuple(gens))


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _solve2(a11, a12, a21, a22, b1, b2):
    det = a11 * a22 - a12 * a21
    return Fraction(b1 * a22 - a12 * b2, det), Fraction(a11 * b2 - a21 * b1, det)


@dataclass
class PrefixRecord:
    prefix: tuple[int, int, int]
    det: int
    target: tuple[int, int, int, int]
    candidate: dict
    integral: bool
    unimodular: bool
    trace: list = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return self.integral and self.unimodular

    def to_json(self) -> dict:
        return {
            "prefix": list(self.prefix),
            "det": self.det,
            "target": list(self.target),
            "candidate": {k: fraction_str(v) for k, v in self.candidate.items()},
            "integral": self.integral,
            "unimodular": self.unimodular,
            "trace": self.trace,
        }


@dataclass
class Obstructed:
    pair: FamilyPair
    evidence: list[PrefixRecord]

    kind = "Obstructed"

    def to_json(self) -> dict:
        return {"verdict": self.kind, "evidence": [r.to_json() for r in self.evidence]}


@dataclass
class Witness:
    pair: FamilyPair
    word: GoeritzWord
    prefix: tuple[int, int, int]
    block: tuple
    evidence: list[PrefixRecord]
    conventions: dict

    kind = "Witness"

    def to_json(self) -> dict:
        return {
            "verdict": self.kind,
            "witness": self.word.to_json(),
            "prefix": list(self.prefix),
            "C": [list(self.block[0]), list(self.block[1])],
            "conventions": self.conventions,
            "evidence": [r.to_json() for r in self.evidence],
        }


@dataclass
class Unknown:
    pair: FamilyPair
    reason: str

    kind = "Unknown"

    def to_json(self) -> dict:
        return {"verdict": self.kind, "reason": self.reason}


def _divisibility_trace(pair: FamilyPair, x, det: int) -> list[dict]:
    # the integer row reduction for k = 0: q-m | x1 +- x4, then m | x3 when q-m = 1
    if pair.k != 0:
        return []
    q, m = pair.q, pair.m
    x1, _, x3, x4 = x
    combo = x1 + det * x4
    trace = [{
        "condition": f"q-m | x1{'+' if det == 1 else '-'}x4",
        "value": combo, "modulus": q - m, "holds": combo % (q - m) == 0,
    }]
    if q - m == 1:
        trace.append({"condition": "m | x3", "value": x3, "modulus": m, "holds": x3 % m == 0})
    return trace


def _prefix_record(pair: FamilyPair, prefix, det: int) -> PrefixRecord:
    k, q, m = pair.k, pair.q, pair.m
    x = apply(word_matrix(prefix_word(*prefix)), h1_class(pair.K2).as_tuple())
    x1, x2, x3, x4 = x
    if det == -1:
        x3, x4 = -x3, -x4
    p1 = k * q + m
    # qs - mt = x1, -ms + (kq+m)t = x4;  qu - mv = x2, mu - (kq+m)v = x3
    s, t = _solve2(q, -m, -m, p1, x1, x4)
    u, v = _solve2(q, -m, m, -p1, x2, x3)
    cand = {"s": s, "t": t, "u": u, "v": v}
    integral = all(val.denominator == 1 for val in cand.values())
    unimodular = integral and s * v - t * u == det
    return PrefixRecord(tuple(prefix), det, tuple(x), cand, integral, unimodular,
                        _divisibility_trace(pair, x, det))


def obstruction(pair: FamilyPair) -> Obstructed | Witness | Unknown:
    """Search for an induced map sending [K1] to [K2].

    Any such map can be written alpha^h beta^j epsilon^k times a gamma/delta
    word of block form (C, (C^T)^-1), so it exists iff for some prefix
    (h', j', k') and sign of det C the system C-block [K1] = prefix [K2] has an
    integral unimodular solution.  The systems decouple into two 2x2 systems
    whose determinant is +-(surface slope), which is never zero.
    """
    pair = make_family(pair.k, pair.q, pair.m)
    if surface_slope(pair) == 0:
        return Unknown(pair, "singular system")
    records = [_prefix_record(pair, prefix, det) for det in DET_ORDER for prefix in PREFIXES]
    k1, k2 = h1_class(pair.K1).as_tuple(), h1_class(pair.K2).as_tuple()
    for rec in records:
        if not rec.accepted:
            continue
        c = tuple(tuple(int(rec.candidate[n]) for n in row) for row in (("s", "t"), ("u", "v")))
        mat = _blockdiag(c, _inv_transpose(c))
        if not check_block_form(mat) or apply(mat, k1) != rec.target:
            continue
        h, j, kk = rec.prefix
        inv_prefix = GoeritzWord(tuple([GoeritzGen.EPSILON] * kk + [GoeritzGen.BETA] * j + [GoeritzGen.ALPHA] * h))
        word = normal_form(inv_prefix + realize_block(c))
        conventions = {
            "rightmost_first": apply(word_matrix(word), k1) == k2,
            "leftmost_first": apply(word_matrix(word, rightmost_first=False), k1) == k2,
        }
        assert conventions["rightmost_first"]
        return Witness(pair, word, rec.prefix, c, records, conventions)
    return Obstructed(pair, records)
