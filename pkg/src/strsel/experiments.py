"""Verification campaigns for the probabilistic and arithmetic claims behind
the Max-2-SAT reduction: the fixing-string structural property, its per-pair
probability bounds, the approximation-gap inequalities, and the Las-Vegas
retry loop.

Words are manipulated as packed integers here (blocks are adjacent bit
pairs), which keeps the exhaustive enumerations fast enough to run in CI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import exact
from .reductions import (
    Max2SatInstance,
    NonCanonicalCenterError,
    decode_center,
    fixing_strings,
    reduce_max2sat_to_cms,
)
from .rng import derive_seed
from .words import Word

_CHUNK = 8192


def _pair_mask(n: int) -> int:
    return int("01" * n, 2)


def noncanonical_words(n: int) -> np.ndarray:
    """Packed integers for all words in {0,1}^(2n) \\ {00,11}^n."""
    mask = _pair_mask(n)
    arr = np.arange(1 << (2 * n), dtype=np.uint32)
    keep = ((arr ^ (arr >> 1)) & mask) != 0
    return arr[keep]


def all_fixing_words(n: int) -> np.ndarray:
    """Packed integers for all 2^n words in {01,10}^n."""
    out = np.empty(1 << n, dtype=np.uint32)
    for p in range(1 << n):
        bits = 0
        for t in range(n):
            block = 0b10 if (p >> t) & 1 else 0b01
            bits |= block << (2 * t)
        out[p] = bits
    return out


def _far_counts(s_arr: np.ndarray, f_arr: np.ndarray, n: int) -> np.ndarray:
    """For each s, how many f are at Hamming distance > n."""
    counts = np.zeros(len(s_arr), dtype=np.int64)
    for lo in range(0, len(s_arr), _CHUNK):
        chunk = s_arr[lo : lo + _CHUNK]
        dist = np.bitwise_count(chunk[:, None] ^ f_arr[None, :])
        counts[lo : lo + _CHUNK] = (dist > n).sum(axis=1)
    return counts


def structural_property_holds(fixing, n: int, m: int):
    """Check the fixing-string property for a concrete set F: every
    non-canonical word must be at distance > n from at least m strings of F.

    Returns (holds, witness word or None, witness's far-string count).
    """
    f_arr = np.asarray([w.bits for w in fixing], dtype=np.uint32)
    s_arr = noncanonical_words(n)
    counts = _far_counts(s_arr, f_arr, n)
    bad = np.nonzero(counts < m)[0]
    if len(bad) == 0:
        return True, None, None
    i = int(bad[0])
    return False, Word.from_bits(int(s_arr[i]), 2 * n), int(counts[i])


@dataclass(frozen=True)
class TrialOutcome:
    holds: bool
    witness: Optional[Word] = None
    far_count: Optional[int] = None


def lemma_fixing_trial(n: int, m: int, c: int, seed: int, max_n: int = 8) -> TrialOutcome:
    """One draw of F (cm random fixing strings) checked exhaustively."""
    if m < n:
        raise ValueError(f"need m >= n, got m={m}, n={n}")
    if n > max_n:
        raise exact.BudgetExceededError(f"trial enumerates 4^{n} words, above the n <= {max_n} cap")
    fixing = fixing_strings(c * m, n, seed)
    holds, witness, far = structural_property_holds(fixing, n, m)
    return TrialOutcome(holds=holds, witness=witness, far_count=far)


@dataclass
class TrialReport:
    parameters: dict
    trials: int
    failures: int = 0
    worst_witnesses: list = field(default_factory=list)
    bound: Optional[float] = None
    slack: Optional[float] = None
    within_bound: Optional[bool] = None

    @property
    def failure_fraction(self) -> float:
        return self.failures / self.trials if self.trials else 0.0


def one_sided_binomial_slack(p: float, trials: int, z: float = 1.645) -> float:
    """95% one-sided normal-approximation slack for an observed fraction."""
    return z * math.sqrt(p * (1 - p) / trials)


def lemma_fixing_campaign(n: int, m: int, c: int, trials: int, seed: int) -> TrialReport:
    """Repeated trials of the structural property; the observed failure
    fraction is compared against the 0.9^n bound plus binomial slack.

    The comparison is recorded in the report, not raised: it is a
    statistical claim, not a unit test.
    """
    report = TrialReport(parameters={"n": n, "m": m, "c": c, "seed": seed}, trials=trials)
    if trials == 0:
        return report
    for t in range(trials):
        outcome = lemma_fixing_trial(n, m, c, derive_seed(seed, t))
        if not outcome.holds:
            report.failures += 1
            report.worst_witnesses.append((t, str(outcome.witness), outcome.far_count))
    report.bound = 0.9**n
    report.slack = one_sided_binomial_slack(report.bound, trials)
    report.within_bound = report.failure_fraction <= report.bound + report.slack
    return report


def per_pair_quarter_bound(n: int, max_n: int = 8) -> float:
    """Exact minimum over all non-canonical s of the fraction of fixing
    strings at distance >= n+1; must be >= 1/4."""
    if n > max_n:
        raise exact.BudgetExceededError(f"enumeration capped at n <= {max_n}")
    f_arr = all_fixing_words(n)
    s_arr = noncanonical_words(n)
    counts = _far_counts(s_arr, f_arr, n)  # distance > n, i.e. >= n+1
    return float(counts.min()) / len(f_arr)


def conditional_half_bound(n: int, max_n: int = 8) -> float:
    """Exact minimum conditional fraction: for every non-canonical s and
    every mismatched block of s, restrict to fixing strings whose block there
    opposes s's, and measure the fraction at distance >= n+1; must be >= 1/2."""
    if n > max_n:
        raise exact.BudgetExceededError(f"enumeration capped at n <= {max_n}")
    f_arr = all_fixing_words(n)
    s_arr = noncanonical_words(n)
    minimum = 1.0
    for s in s_arr:
        s = int(s)
        for t in range(n):
            block = (s >> (2 * t)) & 0b11
            if block in (0b00, 0b11):
                continue
            opposing = 0b11 ^ block
            cond = f_arr[((f_arr >> (2 * t)) & 0b11) == opposing]
            dist = np.bitwise_count(np.uint32(s) ^ cond)
            frac = float((dist >= n + 1).sum()) / len(cond)
            minimum = min(minimum, frac)
    return minimum


def conditional_distance_distribution(s_bits: int, block: int, n: int) -> dict:
    """Histogram of d(s, f) over fixing strings f whose block ``block``
    opposes s's mismatched block there; symmetric about n+1."""
    f_arr = all_fixing_words(n)
    sblock = (s_bits >> (2 * block)) & 0b11
    if sblock in (0b00, 0b11):
        raise ValueError("designated block must be mismatched (01 or 10)")
    opposing = 0b11 ^ sblock
    cond = f_arr[((f_arr >> (2 * block)) & 0b11) == opposing]
    dist = np.bitwise_count(np.uint32(s_bits) ^ cond)
    values, freq = np.unique(dist, return_counts=True)
    return {int(v): int(f) for v, f in zip(values, freq)}


@dataclass
class InequalityReport:
    c: int
    m_max: int
    epsilon_threshold: float
    gap_holds: bool
    structural_threshold_holds: bool
    union_bound_holds: bool
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.gap_holds and self.structural_threshold_holds and self.union_bound_holds


def inequality_checks(c: int, m_max: int, n_max: int = 60) -> InequalityReport:
    """Numerically verify the three arithmetic facts behind the reduction:

    (a) for every m <= m_max, every achievable optimum k* in [ceil(m/2), m],
        and eps below the threshold 1/(21+44c):
        (cm + k*)/(1+eps) > cm + (21/22) k*;
    (b) those eps also sit below the structural-lemma applicability
        threshold 1/(2c);
    (c) the union-bound quantity (4^n - 2^n) exp(-(c-4)^2 n / (8c)) stays
        at or below 0.9^n for n in [1, n_max] (log-space comparison).
    """
    if c < 5:
        raise ValueError("c must be >= 5")
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    threshold = 1.0 / (21 + 44 * c)
    eps_grid = [0.1 * threshold, 0.5 * threshold, 0.9 * threshold]
    report = InequalityReport(
        c=c,
        m_max=m_max,
        epsilon_threshold=threshold,
        gap_holds=True,
        structural_threshold_holds=True,
        union_bound_holds=True,
    )
    for m in range(1, m_max + 1):
        k = np.arange((m + 1) // 2, m + 1, dtype=np.float64)
        for eps in eps_grid:
            lhs = (c * m + k) / (1.0 + eps)
            rhs = c * m + (21.0 / 22.0) * k
            bad = np.nonzero(lhs <= rhs)[0]
            if len(bad):
                report.gap_holds = False
                report.failures.append(("gap", m, float(k[bad[0]]), eps))
    for eps in eps_grid:
        if not eps < 1.0 / (2 * c):
            report.structural_threshold_holds = False
            report.failures.append(("structural", eps))
    exponent = (c - 4) ** 2 / (8.0 * c)
    for n in range(1, n_max + 1):
        log_lhs = n * math.log(4.0) + math.log1p(-(2.0 ** (-n))) - exponent * n
        log_rhs = n * math.log(0.9)
        if log_lhs > log_rhs:
            report.union_bound_holds = False
            report.failures.append(("union", n, log_lhs, log_rhs))
    return report


def las_vegas_loop(
    phi: Max2SatInstance,
    c: int = 20,
    seed: int = 0,
    cms_solver=None,
    trial_limit: int = 1000,
):
    """Re-run the randomized reduction with fresh bits until the solver's
    center is canonical, then decode it. Returns (assignment, trial count)."""
    if cms_solver is None:
        cms_solver = exact.solve_cms_exact
    for t in range(trial_limit):
        inst, _ = reduce_max2sat_to_cms(phi, c=c, seed=derive_seed(seed, t))
        result = cms_solver(inst)
        try:
            return decode_center(result.center), t + 1
        except NonCanonicalCenterError:
            continue
    raise exact.BudgetExceededError(f"no canonical center within {trial_limit} trials")
