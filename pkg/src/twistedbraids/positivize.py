"""Rewriting K(p, q, r, -nu) into a positive braid word.

Write p = kq + e.  The canonical word is E F^k N with E = (Pi_1^{q-1})^e,
F = (Pi_1^{q-1})^q a full twist and N = nu*r copies of c^-1, c = Pi_1^{r-1}.
Each round factors the rightmost full twist as A B C D (FullTwistFactor),
cancels D = c^r against r copies from N, and carries the rest of N leftwards:
past C by far commutation, through B by the inverted ShiftBLTR_i (indices
rise by q-r), then one letter at a time through A by SigmaForward (indices
fall back by q-r).  After min(nu, k) rounds N is empty, or, when nu = k+1,
r copies remain and PiRelation absorbs them into the last r partial twists
of E.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, is_positive
from .errors import InvalidParams, NotApplicable
from .oracle import Equality, OracleBudget, words_equal
from .rewrite import RewriteCertificate, RewriteStep, Rule, apply_rule, rule_sides
from .ttk import TTKParams, canonical_word


@dataclass
class PositivizeResult:
    params: TTKParams
    word: BraidWord
    certificate: RewriteCertificate
    fibered: bool
    oracle: Equality | None = None

    def to_json(self) -> dict:
        out = {
            "params": self.params.to_json(),
            "word": self.word.to_json(),
            "positive": is_positive(self.word),
            "length": len(self.word),
            "fibered": self.fibered,
            "certificate": self.certificate.to_json(),
        }
        if self.oracle is not None:
            out["oracle"] = self.oracle.value
        return out


class _Builder:
    def __init__(self, word: BraidWord):
        self.word = word
        self.steps: list[RewriteStep] = []

    def apply(self, rule: Rule, params: dict, pos: int):
        if rule is Rule.COMMUTE:
            length = params["left"] + params["right"]
        elif rule is Rule.FREE_CANCEL:
            length = 2 * params["length"]
        else:
            length = len(rule_sides(rule, params)[0])
        self.word = apply_rule(self.word, rule, params, pos)
        self.steps.append(RewriteStep(rule, dict(params), (pos, length)))


def check_applicable(params: TTKParams) -> None:
    """Raise unless positivize's hypotheses hold for ``params``."""
    if params.n >= 0:
        raise InvalidParams(f"{params}: positivize handles negative twists only (n < 0)")
    if params.q < 2:
        raise InvalidParams(f"{params}: need q >= 2")
    nu, k, e, r = -params.n, params.k, params.e, params.r
    if r > params.q:
        canonical_word(params)  # raises RTooLarge with the swap hint
    if nu > k + 1:
        raise NotApplicable(
            f"{params}: nu={nu} exceeds k+1={k + 1}; positivity is not established in this range"
        )
    if nu == k + 1 and e < r:
        raise NotApplicable(
            f"{params}: nu = k+1 = {nu} needs r <= e, but e={e} < r={r} "
            f"(compare K(4,3,2,-2), which is not fibered and hence not positive)"
        )


def positivize(
    params: TTKParams,
    budget: OracleBudget | None = None,
    verify: bool = False,
) -> PositivizeResult:
    check_applicable(params)
    q, r, k, e = params.q, params.r, params.k, params.e
    nu = -params.n
    source = canonical_word(params)
    b = _Builder(source)

    if r > 1:
        c_len = r - 1
        rounds = min(nu, k)
        for j in range(rounds):
            f_pos = (e + (k - 1 - j) * q) * (q - 1)
            if r < q:
                b.apply(Rule.FULL_TWIST_FACTOR, {"q": q, "r": r, "direction": "expand"}, f_pos)
                len_a = len_b = r * (q - r)
                len_c = (q - r) * (q - r - 1)
            else:
                # r = q: the full twist already is c^r
                len_a = len_b = len_c = 0
            d_pos = f_pos + len_a + len_b + len_c
            for t in range(r):
                b.apply(Rule.FREE_CANCEL, {"length": c_len}, d_pos + (r - 1 - t) * c_len)
            left = (nu - j - 1) * r  # copies of c^-1 still to carry
            if left == 0 or r == q:
                continue
            n_len = left * c_len
            c_pos = f_pos + len_a + len_b
            if len_c:
                b.apply(Rule.COMMUTE, {"left": len_c, "right": n_len}, c_pos)
            b_pos = f_pos + len_a
            for t in range(left):
                b.apply(Rule.SHIFT_BLTR_I, {"a": 1, "b": q - r, "n": r - 1, "sign": -1}, b_pos + t * c_len)
            for t in range(n_len):
                letter = b.word.letters[f_pos + len_a + t]
                b.apply(Rule.SIGMA_FORWARD, {"a": r, "b": q - r, "i": -letter, "sign": -1}, f_pos + t)
        if nu == k + 1:
            b.apply(Rule.PI_RELATION, {"q": q, "r": r}, (e - r) * (q - 1))

    cert = RewriteCertificate(source, b.word, b.steps)
    expected_len = params.p * (q - 1) - nu * r * (r - 1)
    assert is_positive(b.word) and len(b.word) == expected_len, (str(params), str(b.word))
    verdict = words_equal(source, b.word, budget) if verify else None
    # closures of positive braids are fibered
    return PositivizeResult(params, b.word, cert, fibered=True, oracle=verdict)
