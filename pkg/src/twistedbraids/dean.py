"""Dean's word parameters for twisted torus knots and the primitivity test.

A knot K(p, q, r, n) on the genus-two surface reads as the word
w_{p,q,r,n,1} in pi_1(H) and as w'_{q,p,r,1,n} in pi_1(H').  The residue
reductions change q and r only up to sign mod p, and primitivity depends only
on those classes.

HEM-Seifert status is never computed here.  The classification report carries
the conclusions stated in the case table, tagged ``paper-asserted``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InvalidParams, NotDecidedByDean
from .ttk import FamilyPair, TTKParams, make_family


class HandlebodySide(enum.Enum):
    H = "H"
    HPRIME = "Hprime"


@dataclass(frozen=True)
class DeanWordParams:
    p: int
    q: int
    r: int
    m: int
    n: int

    def __post_init__(self):
        if self.p < 1:
            raise InvalidParams(f"Dean word needs p >= 1, got {self.p}")

    def __str__(self):
        return f"w_{{{self.p},{self.q},{self.r},{self.m},{self.n}}}"

    def to_json(self) -> list[int]:
        return [self.p, self.q, self.r, self.m, self.n]


def _pm_residue(x: int, p: int) -> int:
    # representative of {x, -x} mod p in [0, p/2]; a tie at p/2 keeps p/2
    x %= p
    return p - x if 2 * x > p else x


def reduce_word(wp: DeanWordParams) -> DeanWordParams:
    return DeanWordParams(wp.p, _pm_residue(wp.q, wp.p), _pm_residue(wp.r, wp.p), wp.m, wp.n)


def word_params(params: TTKParams, side: HandlebodySide) -> DeanWordParams:
    if side is HandlebodySide.H:
        return DeanWordParams(params.p, params.q, params.r, params.n, 1)
    return DeanWordParams(params.q, params.p, params.r, 1, params.n)


def _primitive_word(wp: DeanWordParams) -> bool:
    P, Q, R = wp.p, wp.q, wp.r
    if P == 1:
        return True
    return (R - 1) % P == 0 or (R + 1) % P == 0 or (R - Q) % P == 0 or (R + Q) % P == 0


def is_primitive(params: TTKParams, side: HandlebodySide) -> bool:
    """Primitivity of K(p, q, r, n) with respect to one handlebody, for n = +-1."""
    if abs(params.n) != 1:
        raise NotDecidedByDean(f"{params}: the primitivity criterion needs |n| = 1, got n={params.n}")
    return _primitive_word(word_params(params, side))


# -- classification --------------------------------------------------------------

PP = "p/p"
ONE_SIDE = "primitive-one-side"
NEITHER = "neither"

PAPER_ASSERTED = "paper-asserted"


def _label(prim_h: bool, prim_hp: bool) -> tuple[str, str | None]:
    if prim_h and prim_hp:
        return PP, None
    if prim_h:
        return ONE_SIDE, HandlebodySide.H.value
    if prim_hp:
        return ONE_SIDE, HandlebodySide.HPRIME.value
    return NEITHER, None


@dataclass
class SideVerdict:
    side: HandlebodySide
    word: DeanWordParams
    reduced: DeanWordParams
    primitive: bool
    # None when nothing is asserted; False means "not HEM-Seifert" as stated for the case
    hem_seifert: bool | None = None

    def to_json(self) -> dict:
        return {
            "side": self.side.value,
            "word": self.word.to_json(),
            "reduced": self.reduced.to_json(),
            "primitive": {"value": self.primitive, "provenance": "computed"},
            "hem_seifert": {"value": self.hem_seifert, "provenance": PAPER_ASSERTED},
        }


@dataclass
class KnotReport:
    name: str
    params: TTKParams
    sides: list[SideVerdict]
    label: str
    primitive_side: str | None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params.to_json(),
            "sides": [s.to_json() for s in self.sides],
            "label": self.label,
            "primitive_side": self.primitive_side,
        }


@dataclass
class ClassificationReport:
    pair: FamilyPair
    case: str
    knots: list[KnotReport]
    expected: dict = field(default_factory=dict)
    matches: bool | None = None
    mismatches: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "k": self.pair.k,
            "q": self.pair.q,
            "m": self.pair.m,
            "case": self.case,
            "knots": [kr.to_json() for kr in self.knots],
            "expected": self.expected,
            "matches": self.matches,
            "mismatches": list(self.mismatches),
        }


def expected_case_table(pair: FamilyPair) -> tuple[str, dict]:
    """The stated classification for k in {0, 1}: label and primitive side per knot,
    plus the sides on which each knot is stated to be not HEM-Seifert."""
    hp = HandlebodySide.HPRIME.value
    if pair.k == 0 and pair.m == 1:
        return "(i)(a)", {
            "K1": {"label": PP, "primitive_side": None, "not_hem_seifert": []},
            "K2": {"label": ONE_SIDE, "primitive_side": hp, "not_hem_seifert": ["H"]},
        }
    if pair.k == 0:
        return "(i)(b)", {
            "K1": {"label": ONE_SIDE, "primitive_side": hp, "not_hem_seifert": ["H"]},
            "K2": {"label": ONE_SIDE, "primitive_side": hp, "not_hem_seifert": ["H"]},
        }
    if pair.k == 1:
        return "(ii)", {
            "K1": {"label": PP, "primitive_side": None, "not_hem_seifert": []},
            "K2": {"label": PP, "primitive_side": None, "not_hem_seifert": []},
        }
    return "k>=2", {}


def classify_theorem3(pair: FamilyPair) -> ClassificationReport:
    pair = make_family(pair.k, pair.q, pair.m)
    case, table = expected_case_table(pair)
    knots = []
    for name, params in (("K1", pair.K1), ("K2", pair.K2)):
        not_hem = table.get(name, {}).get("not_hem_seifert", [])
        sides = []
        for side in HandlebodySide:
            wp = word_params(params, side)
            sides.append(SideVerdict(
                side, wp, reduce_word(wp), is_primitive(params, side),
                hem_seifert=False if side.value in not_hem else None,
            ))
        label, prim_side = _label(sides[0].primitive, sides[1].primitive)
        knots.append(KnotReport(name, params, sides, label, prim_side))

    report = ClassificationReport(pair, case, knots, expected=table)
    if table:
        for kr in knots:
            exp = table[kr.name]
            if (kr.label, kr.primitive_side) != (exp["label"], exp["primitive_side"]):
                report.mismatches.append(
                    f"{kr.name}={kr.params}: computed {kr.label}"
                    f"{'' if kr.primitive_side is None else ' (' + kr.primitive_side + ')'}, "
                    f"case {case} states {exp['label']}"
                    f"{'' if exp['primitive_side'] is None else ' (' + exp['primitive_side'] + ')'}"
                )
        report.matches = not report.mismatches
    return report
