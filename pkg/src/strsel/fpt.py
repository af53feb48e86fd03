"""Decision wrapper for Closest to k Strings built on a (1+eps)-approximation
oracle.

Because radii are integers, querying the oracle with any eps satisfying
(1+eps)*d < d+1 makes the approximate radius answer the exact decision
"is the optimal radius at most d". We use eps = 1/(2(d+1)), which satisfies
that inequality for every d >= 1. (Some statements of this trick give the
looser-looking bound eps < (d+1)/d; the inequality chain actually needs
eps < 1/d, which is what the choice above guarantees.) The d = 0 query does
not need an oracle at all: the radius is 0 iff some word occurs k times.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Callable

from .exact import CenterResult, enumerate_words, solve_cks_exact, _k_nearest
from .rng import SplitMix64
from .words import CksInstance, hamming

ApproxOracle = Callable[[CksInstance, float], CenterResult]


class OracleContractError(Exception):
    """The plugged-in oracle returned an infeasible or mis-scored solution."""


def _validate_oracle_result(inst: CksInstance, result: CenterResult) -> int:
    if result.chosen_subset is None or len(result.chosen_subset) != inst.k:
        raise OracleContractError("oracle must return a subset of exactly k strings")
    radius = max(hamming(result.center, inst.set.words[i]) for i in result.chosen_subset)
    if radius != result.value:
        raise OracleContractError(
            f"oracle reported radius {result.value} but its solution re-scores to {radius}"
        )
    return radius


def epsilon_for(d: int) -> float:
    return 1.0 / (2 * (d + 1))


def decide_cks(inst: CksInstance, d: int, oracle: ApproxOracle) -> bool:
    """True iff the optimal radius of ``inst`` is at most ``d``."""
    if d < 0:
        raise ValueError("d must be >= 0")
    if d == 0:
        counts = Counter(inst.set.words)
        return max(counts.values()) >= inst.k
    result = oracle(inst, epsilon_for(d))
    d_alg = _validate_oracle_result(inst, result)
    return d_alg <= d


def exact_oracle(inst: CksInstance, eps: float) -> CenterResult:
    """The trivially contract-honoring oracle: ignore eps, solve exactly."""
    return solve_cks_exact(inst)


@lru_cache(maxsize=256)
def _radius_table(inst: CksInstance):
    """All achievable radii with one representative feasible solution each."""
    table = {}
    for s in enumerate_words(inst.set.alphabet, inst.set.length):
        radius, chosen = _k_nearest(s, inst.set, inst.k)
        table.setdefault(radius, []).append(CenterResult(s, radius, chosen))
    return table


def synthetic_inflating_oracle(inst: CksInstance, eps: float, seed: int = 0) -> CenterResult:
    """Worst contract-honoring oracle for stress tests: returns a feasible
    solution whose radius is drawn from [d_opt, floor((1+eps)*d_opt)]."""
    table = _radius_table(inst)
    d_opt = min(table)
    hi = int((1 + eps) * d_opt)
    rng = SplitMix64(seed)
    target = d_opt + rng.next_below(hi - d_opt + 1) if hi > d_opt else d_opt
    candidates = table.get(target)
    if not candidates:
        # no feasible solution attains exactly the drawn radius
        candidates = table[d_opt]
    return candidates[rng.next_below(len(candidates))]


def make_inflating_oracle(seed: int) -> ApproxOracle:
    return lambda inst, eps: synthetic_inflating_oracle(inst, eps, seed)
