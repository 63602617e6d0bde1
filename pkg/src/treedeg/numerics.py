"""Numerical-semigroup membership and the tree-versus-star Ramsey predictor."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import OutOfScopeError
from .trees import Tree, recognize_tpq

__all__ = [
    "normalize_parts",
    "lin_comb_witness",
    "is_lin_comb",
    "fact1_predicate",
    "fact1_quotient",
    "divisors_ge3",
    "RamseyPrediction",
    "RULES",
    "predict_ramsey",
    "rule_parts",
]

RULES = ("non_tpq", "tpq_one_leaf", "tpq_general", "upper_bound_only", "unknown")


def normalize_parts(parts: Iterable[int]) -> tuple[int, ...]:
    """Distinct parts, largest first."""
    out = tuple(sorted(set(parts), reverse=True))
    if not out:
        raise ValueError("part set must be nonempty")
    if out[-1] < 1:
        raise ValueError(f"parts must be positive, got {out[-1]}")
    return out


def lin_comb_witness(total: int, parts: Iterable[int]) -> dict[int, int] | None:
    """Coefficients writing ``total`` over ``parts``, or ``None``.

    Among all representations the coefficient vector is lexicographically
    greatest with parts taken largest first: use as many copies of the
    largest part as still leave a representable remainder, and so on.
    """
    ps = normalize_parts(parts)
    if total < 0:
        return None
    # reach[i][x]: x is a combination of ps[i:]
    reach = [bytearray(total + 1) for _ in range(len(ps) + 1)]
    reach[len(ps)][0] = 1
    for i in range(len(ps) - 1, -1, -1):
        row, nxt, p = reach[i], reach[i + 1], ps[i]
        for x in range(total + 1):
            row[x] = nxt[x] or (x >= p and row[x - p])
    if not reach[0][total]:
        return None
    coeffs = {}
    rest = total
    for i, p in enumerate(ps):
        c = rest // p
        while not reach[i + 1][rest - c * p]:
            c -= 1
        coeffs[p] = c
        rest -= c * p
    return coeffs


def is_lin_comb(total: int, parts: Iterable[int]) -> bool:
    return lin_comb_witness(total, parts) is not None


def fact1_quotient(m: int, n: int) -> int | None:
    """``k`` with ``m = k(n-1) + 3`` and ``0 <= k <= n-5``, if any."""
    if n < 5 or m < 3 or (m - 3) % (n - 1):
        return None
    k = (m - 3) // (n - 1)
    return k if k <= n - 5 else None


def fact1_predicate(m: int, n: int) -> bool:
    """True iff ``m + n - 4`` is over {n-1, n-2} while ``m + n - 3`` is not.

    Computed from the closed form ``m = k(n-1) + 3`` with ``0 <= k <= n-5``.
    """
    return fact1_quotient(m, n) is not None


def divisors_ge3(x: int) -> list[int]:
    if x < 1:
        raise ValueError("x must be positive")
    small = [d for d in range(1, int(x**0.5) + 1) if x % d == 0]
    found = set(small) | {x // d for d in small}
    return sorted(d for d in found if d >= 3)


@dataclass(frozen=True)
class RamseyPrediction:
    """Predicted R(T, K_{1,m}).

    ``value`` is exact for rules ``non_tpq``, ``tpq_one_leaf`` and
    ``tpq_general``; for ``upper_bound_only`` it is an upper bound; for
    ``unknown`` it is ``None``.
    """

    value: int | None
    rule: str
    side_conditions: dict = field(default_factory=dict)

    @property
    def is_exact(self) -> bool:
        return self.rule in ("non_tpq", "tpq_one_leaf", "tpq_general")

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "rule": self.rule,
            "exact": self.is_exact,
            "side_conditions": self.side_conditions,
        }


def rule_parts(rule: str, n: int) -> tuple[int, ...]:
    """Block orders whose combinations defeat the T(p, q) clauses."""
    if rule == "tpq_one_leaf":
        return normalize_parts([n - 1, n - 2] + [n - 3 + a for a in divisors_ge3(n - 3)])
    if rule == "tpq_general":
        return normalize_parts([2 * n - 6, n - 1, n - 2])
    raise ValueError(f"rule {rule!r} has no part set")


def predict_ramsey(t: Tree, m: int) -> RamseyPrediction:
    n = t.n
    if n < 5:
        raise OutOfScopeError(f"prediction needs n >= 5, got {n}")
    if t.max_degree > n - 3:
        raise OutOfScopeError(f"prediction needs max degree <= n-3 = {n - 3}, got {t.max_degree}")
    if m < 1:
        raise OutOfScopeError("m must be positive")
    shape = recognize_tpq(t)
    k = fact1_quotient(m, n)
    side: dict = {
        "n": n,
        "m": m,
        "tpq": list(shape) if shape else None,
        "fact1": k is not None,
        "k": k,
    }
    pair = (n - 1, n - 2)
    side["pair_covers_m_plus_n_minus_3"] = is_lin_comb(m + n - 3, pair)

    if k is not None:
        if shape is None:
            return RamseyPrediction(m + n - 3, "non_tpq", side)
        rule = "tpq_one_leaf" if shape.p == 1 else "tpq_general"
        parts = rule_parts(rule, n)
        witness = lin_comb_witness(m + n - 3, parts)
        side["parts"] = list(parts)
        side["blocking_combination"] = (
            None if witness is None else {str(p): c for p, c in witness.items()}
        )
        value = m + n - 3 if witness is None else m + n - 2
        return RamseyPrediction(value, rule, side)

    if shape is None and not side["pair_covers_m_plus_n_minus_3"]:
        return RamseyPrediction(m + n - 3, "upper_bound_only", side)
    return RamseyPrediction(None, "unknown", side)
