"""Regret-based preference representations.

``X`` is weakly preferred to ``Y`` when ``V(Psi(X, Y)) >= 0``.  Nothing
forces either direction to hold, so incomparability is an ordinary verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from regretaudit.measure_space import ZERO, format_rational
from regretaudit.random_variables import SimpleRandomVariable
from regretaudit.regret import RegretFunction, RegretLottery, difference_regret, regret_lottery


@dataclass(frozen=True)
class Representation:
    """A functional over regret lotteries paired with its regret function.

    ``certificates`` holds the analytic facts (continuity of the functional,
    structure of the induced relation) that the finite audit cannot
    establish on its own; they are copied into audit reports verbatim.
    """

    name: str
    regret_function: RegretFunction
    value: Callable[[RegretLottery], Fraction] = field(compare=False)
    certificates: tuple[str, ...] = ()

    def evaluate(self, lottery: RegretLottery) -> Fraction:
        return Fraction(self.value(lottery))


def constant_negative() -> Representation:
    return Representation(
        "constant-negative",
        difference_regret(),
        lambda lottery: Fraction(-1),
        (
            "V is constant, hence continuous.",
            "V < 0 on every lottery, so no pair is related: the relation is empty "
            "on all of L and its contour sets are all empty.",
        ),
    )


def neg_abs_sum() -> Representation:
    # |r * p| == |r| * p because probabilities are positive
    return Representation(
        "neg-abs-sum",
        difference_regret(),
        lambda lottery: -sum((abs(r) * p for r, p in lottery.entries), ZERO),
        (
            "V is a finite weighted sum of absolute values, hence continuous.",
            "V <= 0 with equality only on the zero lottery, so X is weakly preferred "
            "to Y exactly when X = Y almost everywhere, on all of L.",
        ),
    )


def expected_regret() -> Representation:
    return Representation(
        "expected-regret",
        difference_regret(),
        lambda lottery: sum((r * p for r, p in lottery.entries), ZERO),
        (
            "V is linear, hence continuous.",
            "With psi(x, y) = x - y, V(Psi(X, Y)) = E[X] - E[Y]: the relation is the "
            "expected-value order, complete and transitive on all of L.",
        ),
    )


REPRESENTATIONS: dict[str, Callable[[], Representation]] = {
    "constant-negative": constant_negative,
    "neg-abs-sum": neg_abs_sum,
    "expected-regret": expected_regret,
}


def get_representation(name: str) -> Representation:
    try:
        return REPRESENTATIONS[name]()
    except KeyError:
        raise KeyError(
            f"unknown representation {name!r}; known: {', '.join(REPRESENTATIONS)}"
        ) from None


@dataclass(frozen=True)
class PreferenceVerdict:
    forward: bool
    backward: bool
    value_forward: Fraction
    value_backward: Fraction

    @classmethod
    def from_values(cls, value_forward: Fraction, value_backward: Fraction) -> PreferenceVerdict:
        return cls(value_forward >= 0, value_backward >= 0, value_forward, value_backward)

    @property
    def strict(self) -> bool:
        """Strict preference for the first argument."""
        return self.forward and not self.backward

    @property
    def indifferent(self) -> bool:
        return self.forward and self.backward

    @property
    def incomparable(self) -> bool:
        return not self.forward and not self.backward

    @property
    def relation(self) -> str:
        if self.indifferent:
            return "indifferent"
        if self.incomparable:
            return "incomparable"
        return "strict-forward" if self.forward else "strict-backward"

    def to_dict(self) -> dict[str, Any]:
        return {
            "forward": self.forward,
            "backward": self.backward,
            "value_forward": format_rational(self.value_forward),
            "value_backward": format_rational(self.value_backward),
            "relation": self.relation,
        }


def prefer(
    rep: Representation, x: SimpleRandomVariable, y: SimpleRandomVariable
) -> PreferenceVerdict:
    psi = rep.regret_function
    return PreferenceVerdict.from_values(
        rep.evaluate(regret_lottery(psi, x, y)),
        rep.evaluate(regret_lottery(psi, y, x)),
    )
