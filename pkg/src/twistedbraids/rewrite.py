"""Named rewrite rules on braid words and replayable certificates.

Each rule is a pair of literal letter sequences (left side, right side)
determined by the rule's integer parameters.  Applying a rule at a position
checks the left side letter by letter and splices in the right side; nothing
else about the word changes.

Shorthand used below: ``X(a, b)`` is the staircase
Pi_1^a Pi_2^{a+1} ... Pi_b^{a+b-1}, and ``c_r`` is Pi_1^{r-1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .braid import BraidWord, exponent_sum, inverse_letters, permutation, permutation_of, pi
from .errors import IndexOutOfRange, InvalidParams, PatternMismatch
from .oracle import Equality, OracleBudget, words_equal


class Rule(enum.Enum):
    GLESSER = "Glesser"
    SIGMA_BACKWARD = "SigmaBackward"
    SHIFT_BLTR_I = "ShiftBLTR_i"
    SHIFT_BLTR_II = "ShiftBLTR_ii"
    REWORK34 = "Rework34"
    SIGMA_FORWARD = "SigmaForward"
    FULL_TWIST_FACTOR = "FullTwistFactor"
    PI_RELATION = "PiRelation"
    COMMUTE = "Commute"
    FREE_CANCEL = "FreeCancel"


# parameter names in canonical (serialisation) order
RULE_PARAMS: dict[Rule, tuple[str, ...]] = {
    Rule.GLESSER: ("a", "b", "sign", "direction"),
    Rule.SIGMA_BACKWARD: ("a", "b", "i", "sign"),
    Rule.SHIFT_BLTR_I: ("a", "b", "n", "sign"),
    Rule.SHIFT_BLTR_II: ("a", "b", "n"),
    Rule.REWORK34: ("l", "s", "t", "sign"),
    Rule.SIGMA_FORWARD: ("a", "b", "i", "sign"),
    Rule.FULL_TWIST_FACTOR: ("q", "r", "direction"),
    Rule.PI_RELATION: ("q", "r"),
    Rule.COMMUTE: ("left", "right"),
    Rule.FREE_CANCEL: ("length",),
}

_DIRECTIONS = {
    Rule.GLESSER: ("L2R", "R2L"),
    Rule.FULL_TWIST_FACTOR: ("expand", "collapse"),
}


def staircase(a: int, b: int) -> tuple[int, ...]:
    """Letters of X(a, b) = Pi_1^a Pi_2^{a+1} ... Pi_b^{a+b-1}."""
    out: list[int] = []
    for j in range(1, b + 1):
        out.extend(pi(j, a + j - 1))
    return tuple(out)


def _power(letters: tuple[int, ...], k: int) -> tuple[int, ...]:
    return letters * k


def _signed(letter: int, sign: int) -> int:
    return letter if sign > 0 else -letter


def _need(cond: bool, rule: Rule, msg: str):
    if not cond:
        raise InvalidParams(f"{rule.value}: {msg}")


def _check_sign(rule: Rule, sign):
    _need(sign in (1, -1), rule, f"sign must be +1 or -1, got {sign!r}")


def normalize_params(rule: Rule, params: dict[str, Any]) -> dict[str, Any]:
    names = RULE_PARAMS[rule]
    missing = [k for k in names if k not in params]
    extra = [k for k in params if k not in names]
    _need(not missing and not extra, rule, f"expected parameters {names}, got {tuple(params)}")
    out = {}
    for k in names:
        v = params[k]
        if k == "direction":
            _need(v in _DIRECTIONS[rule], rule, f"direction must be one of {_DIRECTIONS[rule]}")
        else:
            _need(isinstance(v, int) and not isinstance(v, bool), rule, f"{k} must be an integer")
        out[k] = v
    return out


def rule_sides(rule: Rule, params: dict[str, Any]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Left and right sides of a rule instance.  Raises InvalidParams when the
    parameters fall outside the rule's hypotheses."""
    p = normalize_params(rule, params)

    if rule is Rule.GLESSER:
        a, b, s = p["a"], p["b"], p["sign"]
        _check_sign(rule, s)
        _need(1 <= a <= b, rule, "need 1 <= a <= b")
        block = pi(a, b) + pi(a + 1, b + 1)
        lhs = block + (_signed(a, s),)
        rhs = (_signed(b + 1, s),) + block
        return (lhs, rhs) if p["direction"] == "L2R" else (rhs, lhs)

    if rule is Rule.SIGMA_BACKWARD:
        a, b, i, s = p["a"], p["b"], p["i"], p["sign"]
        _check_sign(rule, s)
        _need(a >= 1 and b >= 1, rule, "need a, b >= 1")
        _need(1 <= i <= b - 1, rule, "need 1 <= i <= b-1")
        x = staircase(a, b)
        return x + (_signed(i, s),), (_signed(i + a, s),) + x

    if rule in (Rule.SHIFT_BLTR_I, Rule.SHIFT_BLTR_II):
        a, b, n = p["a"], p["b"], p["n"]
        s = p.get("sign", 1)
        _check_sign(rule, s)
        _need(1 <= a <= b and n >= 1, rule, "need 1 <= a <= b and n >= 1")
        y: list[int] = []
        for j in range(n + 1):
            y.extend(pi(a + j, b + j))
        y_t = tuple(y)
        z = pi(a, a + n - 1)
        if rule is Rule.SHIFT_BLTR_II:
            rhs = pi(a, b + n)
            for j in range(1, n + 1):
                rhs += pi(a + j, b + j)
            return y_t + z, rhs
        if s > 0:
            return y_t + z, pi(b + 1, b + n) + y_t
        # inverted instance: Y Z^-1 = (Pi_{b+1}^{b+n})^-1 Y
        return y_t + inverse_letters(z), inverse_letters(pi(b + 1, b + n)) + y_t

    if rule is Rule.REWORK34:
        l, s_, t, sg = p["l"], p["s"], p["t"], p["sign"]
        _check_sign(rule, sg)
        _need(1 <= l < t <= s_, rule, "need 1 <= l < t <= s")
        block = pi(l, s_)
        return block + (_signed(t, sg),), (_signed(t - 1, sg),) + block

    if rule is Rule.SIGMA_FORWARD:
        a, b, i, s = p["a"], p["b"], p["i"], p["sign"]
        _check_sign(rule, s)
        _need(a >= 1 and b >= 1, rule, "need a, b >= 1")
        _need(b + 1 <= i <= a + b - 1, rule, "need b+1 <= i <= a+b-1")
        x = staircase(a, b)
        return x + (_signed(i, s),), (_signed(i - b, s),) + x

    if rule is Rule.FULL_TWIST_FACTOR:
        q, r = p["q"], p["r"]
        _need(1 <= r < q, rule, "need 1 <= r < q")
        twist = _power(pi(1, q - 1), q)
        factored = (
            staircase(r, q - r)
            + staircase(q - r, r)
            + _power(pi(r + 1, q - 1), q - r)
            + _power(pi(1, r - 1), r)
        )
        return (twist, factored) if p["direction"] == "expand" else (factored, twist)

    if rule is Rule.PI_RELATION:
        q, r = p["q"], p["r"]
        _need(1 <= r < q, rule, "need 1 <= r < q")
        lhs = _power(pi(1, q - 1), r) + _power(inverse_letters(pi(1, r - 1)), r)
        return lhs, staircase(q - r, r)

    raise InvalidParams(f"{rule.value} has no fixed letter pattern")


@dataclass(frozen=True)
class RewriteStep:
    rule: Rule
    params: dict
    span: tuple[int, int]

    def to_json(self) -> dict:
        names = RULE_PARAMS[self.rule]
        return {
            "rule": self.rule.value,
            "params": {k: self.params[k] for k in names},
            "span": [self.span[0], self.span[1]],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RewriteStep":
        return cls(Rule(data["rule"]), dict(data["params"]), (int(data["span"][0]), int(data["span"][1])))


@dataclass
class RewriteCertificate:
    source: BraidWord
    target: BraidWord
    steps: list[RewriteStep] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "steps": [s.to_json() for s in self.steps],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RewriteCertificate":
        return cls(
            BraidWord.from_json(data["source"]),
            BraidWord.from_json(data["target"]),
            [RewriteStep.from_json(s) for s in data["steps"]],
        )


def _match_sides(w: tuple[int, ...], rule: Rule, params: dict, pos: int):
    """Resolve the concrete (lhs, rhs) at ``pos``; Commute and FreeCancel read
    their sides off the word itself."""
    if rule is Rule.COMMUTE:
        p = normalize_params(rule, params)
        left, right = p["left"], p["right"]
        _need(left >= 0 and right >= 0, rule, "block lengths must be non-negative")
        if pos < 0 or pos + left + right > len(w):
            raise PatternMismatch(rule.value, f"{left + right} letters", w[max(pos, 0):], pos)
        u, v = w[pos:pos + left], w[pos + left:pos + left + right]
        bad = [(x, y) for x in u for y in v if abs(abs(x) - abs(y)) < 2]
        if bad:
            raise PatternMismatch(rule.value, "far-commuting blocks", u + v, pos,
                                  detail=f"letters {bad[0][0]} and {bad[0][1]} do not commute")
        return u + v, v + u
    if rule is Rule.FREE_CANCEL:
        p = normalize_params(rule, params)
        n = p["length"]
        _need(n >= 1, rule, "length must be positive")
        if pos < 0 or pos + 2 * n > len(w):
            raise PatternMismatch(rule.value, f"{2 * n} letters", w[max(pos, 0):], pos)
        u = w[pos:pos + n]
        return u + inverse_letters(u), ()
    return rule_sides(rule, params)


def apply_rule(w: BraidWord, rule: Rule, params: dict, pos: int) -> BraidWord:
    """Replace the rule's left side at ``pos`` by its right side."""
    lhs, rhs = _match_sides(w.letters, rule, params, pos)
    top = max((abs(x) for x in lhs + rhs), default=0)
    if top > w.strands - 1:
        raise IndexOutOfRange(f"{rule.value} instance uses sigma_{top}, which does not fit in B_{w.strands}")
    found = w.letters[pos:pos + len(lhs)] if pos >= 0 else ()
    if found != lhs:
        raise PatternMismatch(rule.value, lhs, found, pos)
    out = w.with_letters(w.letters[:pos] + rhs + w.letters[pos + len(lhs):])
    # cheap conservation checks on the changed region
    assert exponent_sum(BraidWord(w.strands, lhs)) == exponent_sum(BraidWord(w.strands, rhs))
    assert permutation_of(lhs, w.strands) == permutation_of(rhs, w.strands)
    return out


def find_rule(w: BraidWord, rule: Rule, params: dict, start: int = 0) -> int | None:
    """Leftmost position at or after ``start`` where the rule's left side occurs."""
    if rule in (Rule.COMMUTE, Rule.FREE_CANCEL):
        for pos in range(start, len(w) + 1):
            try:
                _match_sides(w.letters, rule, params, pos)
                return pos
            except PatternMismatch:
                continue
        return None
    lhs, _ = rule_sides(rule, params)
    n = len(lhs)
    for pos in range(start, len(w) - n + 1):
        if w.letters[pos:pos + n] == lhs:
            return pos
    return None


# -- per-rule entry points -----------------------------------------------------

def rw_glesser(w: BraidWord, a: int, b: int, sign: int, pos: int, direction: str = "L2R") -> BraidWord:
    return apply_rule(w, Rule.GLESSER, {"a": a, "b": b, "sign": sign, "direction": direction}, pos)


def rw_sigma_backward(w: BraidWord, a: int, b: int, i: int, sign: int, pos: int) -> BraidWord:
    if 1 <= i <= b - 1 and i + a >= w.strands:
        raise IndexOutOfRange(f"sigma_{i + a} does not fit in B_{w.strands}")
    return apply_rule(w, Rule.SIGMA_BACKWARD, {"a": a, "b": b, "i": i, "sign": sign}, pos)


def rw_shift_bltr(w: BraidWord, a: int, b: int, n: int, pos: int, form: str = "i", sign: int = 1) -> BraidWord:
    if form == "i":
        return apply_rule(w, Rule.SHIFT_BLTR_I, {"a": a, "b": b, "n": n, "sign": sign}, pos)
    if form == "ii":
        if sign != 1:
            raise InvalidParams("ShiftBLTR_ii: the combined form has no inverted instance")
        return apply_rule(w, Rule.SHIFT_BLTR_II, {"a": a, "b": b, "n": n}, pos)
    raise InvalidParams(f"ShiftBLTR: form must be 'i' or 'ii', got {form!r}")


def rw_rework34(w: BraidWord, l: int, s: int, t: int, sign: int, pos: int) -> BraidWord:
    return apply_rule(w, Rule.REWORK34, {"l": l, "s": s, "t": t, "sign": sign}, pos)


def rw_sigma_forward(w: BraidWord, a: int, b: int, i: int, sign: int, pos: int) -> BraidWord:
    if not (b + 1 <= i <= a + b - 1):
        # for b = 1 and small a the admissible range is empty; report as a non-match
        raise PatternMismatch("SigmaForward", f"index in [{b + 1}, {a + b - 1}]", (i,), pos)
    return apply_rule(w, Rule.SIGMA_FORWARD, {"a": a, "b": b, "i": i, "sign": sign}, pos)


def rw_full_twist_factor(w: BraidWord, q: int, r: int, pos: int, direction: str = "expand") -> BraidWord:
    return apply_rule(w, Rule.FULL_TWIST_FACTOR, {"q": q, "r": r, "direction": direction}, pos)


def rw_pi_relation(w: BraidWord, q: int, r: int, pos: int) -> BraidWord:
    return apply_rule(w, Rule.PI_RELATION, {"q": q, "r": r}, pos)


def rw_commute(w: BraidWord, left: int, right: int, pos: int) -> BraidWord:
    return apply_rule(w, Rule.COMMUTE, {"left": left, "right": right}, pos)


def rw_free_cancel(w: BraidWord, length: int, pos: int) -> BraidWord:
    return apply_rule(w, Rule.FREE_CANCEL, {"length": length}, pos)


# -- replay ----------------------------------------------------------------------

@dataclass(frozen=True)
class Valid:
    steps: int

    def __bool__(self):
        return True


@dataclass(frozen=True)
class InvalidAtStep:
    index: int
    reason: str
    expected: tuple = ()
    found: tuple = ()

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        return {"index": self.index, "reason": self.reason,
                "expected": list(self.expected), "found": list(self.found)}


def replay(
    cert: RewriteCertificate,
    budget: OracleBudget | None = None,
    oracle: bool = False,
    oracle_max_span: int = 40,
) -> Valid | InvalidAtStep:
    """Re-execute every step of ``cert``.

    Index ``len(cert.steps)`` in an InvalidAtStep refers to the final
    comparison against the certificate's target.
    """
    w = cert.source
    if cert.target.strands != w.strands:
        return InvalidAtStep(len(cert.steps), f"target lives in B_{cert.target.strands}, source in B_{w.strands}")
    esum, perm = exponent_sum(w), permutation(w)
    for idx, step in enumerate(cert.steps):
        start, length = step.span
        try:
            lhs, rhs = _match_sides(w.letters, step.rule, step.params, start)
            if len(lhs) != length:
                return InvalidAtStep(idx, f"span length {length} but the rule's left side has {len(lhs)} letters",
                                     lhs, w.letters[start:start + length])
            nxt = apply_rule(w, step.rule, step.params, start)
        except PatternMismatch as exc:
            return InvalidAtStep(idx, str(exc), exc.expected if isinstance(exc.expected, tuple) else (),
                                 tuple(exc.found))
        except (InvalidParams, IndexOutOfRange) as exc:
            return InvalidAtStep(idx, str(exc))
        if exponent_sum(nxt) != esum or permutation(nxt) != perm:
            return InvalidAtStep(idx, "exponent sum or permutation changed")
        if oracle and len(lhs) <= oracle_max_span:
            verdict = words_equal(BraidWord(w.strands, lhs), BraidWord(w.strands, rhs), budget)
            if verdict is not Equality.EQUAL:
                return InvalidAtStep(idx, f"oracle verdict {verdict.value} on the rewritten span", lhs, rhs)
        w = nxt
    final = len(cert.steps)
    if exponent_sum(cert.target) != esum:
        return InvalidAtStep(final, "target exponent sum differs from source", w.letters, cert.target.letters)
    if permutation(cert.target) != perm:
        return InvalidAtStep(final, "target permutation differs from source", w.letters, cert.target.letters)
    if w.letters != cert.target.letters:
        return InvalidAtStep(final, "replayed word differs from target", w.letters, cert.target.letters)
    return Valid(len(cert.steps))
