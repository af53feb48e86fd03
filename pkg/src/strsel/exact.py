"""Brute-force exact solvers. These are the ground-truth oracles for the
heuristics, the reductions, and the experiments, so they fail loudly when an
instance exceeds their enumeration budget rather than truncating.

Tie-breaking is lexicographic everywhere (smallest center, then smallest
index list), which makes every solver deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .words import (
    Alphabet,
    CksInstance,
    CmsInstance,
    FfmsInstance,
    MsfbcInstance,
    StringSet,
    Word,
    anticoverage,
    bad_columns,
    coverage,
    hamming,
)

DEFAULT_ENUM_BUDGET = 2**24
DEFAULT_SUBSET_BUDGET = 2**20
DEFAULT_ASSIGNMENT_VARS = 24


class BudgetExceededError(Exception):
    """Raised when an exact solver would exceed its enumeration budget."""


@dataclass(frozen=True)
class CenterResult:
    center: Word
    value: int
    chosen_subset: Optional[tuple] = None


@dataclass(frozen=True)
class SubsetResult:
    indices: tuple
    bad_column_count: int


def enumerate_words(alphabet: Alphabet, length: int) -> Iterator[Word]:
    """All words of the given length in lexicographic order."""
    if alphabet.is_binary:
        for bits in range(1 << length):
            yield Word.from_bits(bits, length)
    else:
        for symbols in itertools.product(range(alphabet.size), repeat=length):
            yield Word(symbols, alphabet)


def _check_enum_budget(sset: StringSet, budget: int):
    count = sset.alphabet.size**sset.length
    if count > budget:
        raise BudgetExceededError(
            f"center enumeration needs {count} words, above the budget of {budget}"
        )


def solve_cms_exact(inst: CmsInstance, enum_budget: int = DEFAULT_ENUM_BUDGET) -> CenterResult:
    """Maximize coverage over all possible centers."""
    _check_enum_budget(inst.set, enum_budget)
    best = None
    best_value = -1
    for s in enumerate_words(inst.set.alphabet, inst.set.length):
        v = coverage(s, inst)
        if v > best_value:
            best, best_value = s, v
    return CenterResult(center=best, value=best_value)


def solve_ffms_exact(inst: FfmsInstance, enum_budget: int = DEFAULT_ENUM_BUDGET) -> CenterResult:
    """Maximize anticoverage over all possible centers."""
    _check_enum_budget(inst.set, enum_budget)
    best = None
    best_value = -1
    for s in enumerate_words(inst.set.alphabet, inst.set.length):
        v = anticoverage(s, inst)
        if v > best_value:
            best, best_value = s, v
    return CenterResult(center=best, value=best_value)


def _k_nearest(center: Word, sset: StringSet, k: int):
    """(radius, indices of the k nearest strings); ties by lowest index."""
    ranked = sorted(range(sset.size), key=lambda i: (hamming(center, sset.words[i]), i))
    chosen = ranked[:k]
    radius = max(hamming(center, sset.words[i]) for i in chosen)
    return radius, tuple(sorted(chosen))


def solve_cks_exact(inst: CksInstance, enum_budget: int = DEFAULT_ENUM_BUDGET) -> CenterResult:
    """Minimize the k-th smallest distance over all possible centers.

    With k = n this is the classic Closest String problem.
    """
    _check_enum_budget(inst.set, enum_budget)
    best = None
    for s in enumerate_words(inst.set.alphabet, inst.set.length):
        radius, chosen = _k_nearest(s, inst.set, inst.k)
        if best is None or radius < best.value:
            best = CenterResult(center=s, value=radius, chosen_subset=chosen)
    return best


def solve_msfbc_subsets(
    inst: MsfbcInstance, subset_budget: int = DEFAULT_SUBSET_BUDGET
) -> SubsetResult:
    """Exhaustive search over all subsets, largest cardinality first.

    Within a cardinality, ``itertools.combinations`` yields index lists in
    lexicographic order, so the first feasible subset found is the canonical
    answer.
    """
    n = inst.set.size
    if 2**n > subset_budget:
        raise BudgetExceededError(
            f"subset enumeration needs 2^{n} subsets, above the budget of {subset_budget}"
        )
    words = inst.set.words
    for size in range(n, 0, -1):
        for combo in itertools.combinations(range(n), size):
            bad = bad_columns([words[i] for i in combo])
            if len(bad) <= inst.k:
                return SubsetResult(indices=combo, bad_column_count=len(bad))
    raise AssertionError("unreachable: any single string has zero bad columns")


def solve_msfbc_columns(
    inst: MsfbcInstance, column_budget: int = DEFAULT_SUBSET_BUDGET
) -> SubsetResult:
    """Independent exact MSFBC algorithm used to cross-check the subset solver.

    A subset has at most k bad columns iff all its words agree outside some
    column set J with |J| = min(k, l) (bad-column sets only grow when J
    shrinks, so size exactly min(k, l) suffices). For each J, group words by
    their restriction to the other columns and take the largest group.
    """
    ell = inst.set.length
    j_size = min(inst.k, ell)
    if comb(ell, j_size) > column_budget:
        raise BudgetExceededError(
            f"column enumeration needs C({ell},{j_size}) sets, above the budget of {column_budget}"
        )
    words = inst.set.words
    best: Optional[tuple] = None
    for j_set in itertools.combinations(range(ell), j_size):
        keep = [j for j in range(ell) if j not in j_set]
        groups: dict = {}
        for i, w in enumerate(words):
            key = tuple(w[j] for j in keep)
            groups.setdefault(key, []).append(i)
        for indices in groups.values():
            cand = (-len(indices), tuple(indices))
            if best is None or cand < best:
                best = cand
    indices = best[1]
    bad = bad_columns([words[i] for i in indices])
    return SubsetResult(indices=indices, bad_column_count=len(bad))


def solve_max2sat_exact(phi, max_vars: int = DEFAULT_ASSIGNMENT_VARS):
    """Enumerate all assignments; ties go to the lexicographically smallest
    assignment (false < true, variable order). Returns (assignment, count)."""
    n = phi.variable_count
    if n > max_vars:
        raise BudgetExceededError(
            f"assignment enumeration needs 2^{n} assignments, above the cap of 2^{max_vars}"
        )
    best = None
    best_count = -1
    for assignment in itertools.product((False, True), repeat=n):
        count = phi.satisfied_count(assignment)
        if count > best_count:
            best, best_count = assignment, count
    return best, best_count


def solve_dks_exact(graph, k: int, subset_budget: int = DEFAULT_SUBSET_BUDGET):
    """Densest-k-Subgraph by exhaustive k-subset enumeration.

    Returns (vertex tuple, induced edge count); vertices are 1-based.
    """
    v = graph.vertex_count
    if k > v:
        raise ValueError(f"k={k} exceeds the vertex count {v}")
    if comb(v, k) > subset_budget:
        raise BudgetExceededError(
            f"subset enumeration needs C({v},{k}) subsets, above the budget of {subset_budget}"
        )
    edges = graph.edges
    best = None
    best_count = -1
    for combo in itertools.combinations(range(1, v + 1), k):
        chosen = set(combo)
        count = sum(1 for (a, b) in edges if a in chosen and b in chosen)
        if count > best_count:
            best, best_count = combo, count
    return best, best_count
