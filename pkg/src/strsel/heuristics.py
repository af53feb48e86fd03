"""Restarted hill climbing for Close to Most Strings and Far from Most
Strings. Deterministic: best-improvement moves with a fixed (position,
symbol) scan order, strict improvement only, seeded restarts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .exact import CenterResult
from .rng import SplitMix64, derive_seed
from .words import CmsInstance, FfmsInstance, StringSet, Word, anticoverage, coverage


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    restarts: int = 1
    max_iterations: int = 10_000
    start: str = "inputs"  # "inputs" | "random" | "canonical"

    def __post_init__(self):
        if self.restarts < 1 or self.max_iterations < 1:
            raise ValueError("restarts and max_iterations must be positive")
        if self.start not in ("inputs", "random", "canonical"):
            raise ValueError(f"unknown start strategy {self.start!r}")


def _random_word(sset: StringSet, rng: SplitMix64) -> Word:
    return Word([rng.next_below(sset.alphabet.size) for _ in range(sset.length)], sset.alphabet)


def _canonical_word(sset: StringSet, rng: SplitMix64) -> Word:
    # random element of {00,11}^(l/2); used for instances built by the
    # Max-2-SAT reduction, whose good centers are all canonical
    if not sset.alphabet.is_binary or sset.length % 2 != 0:
        raise ValueError("canonical starts need a binary instance of even length")
    symbols = []
    for _ in range(sset.length // 2):
        b = rng.next_bit()
        symbols.extend((b, b))
    return Word(symbols)


def _start_word(sset: StringSet, cfg: SearchConfig, restart: int) -> Word:
    if cfg.start == "inputs":
        return sset.words[restart % sset.size]
    rng = SplitMix64(derive_seed(cfg.seed, restart))
    if cfg.start == "random":
        return _random_word(sset, rng)
    return _canonical_word(sset, rng)


def _climb(start: Word, objective: Callable[[Word], int], max_iterations: int):
    current = start
    value = objective(current)
    for _ in range(max_iterations):
        best_move: Optional[Word] = None
        best_value = value
        sigma = current.alphabet.size
        for pos in range(current.length):
            old = current[pos]
            for sym in range(sigma):
                if sym == old:
                    continue
                cand = Word(
                    current.symbols[:pos] + (sym,) + current.symbols[pos + 1 :],
                    current.alphabet,
                )
                v = objective(cand)
                if v > best_value:
                    best_move, best_value = cand, v
        if best_move is None:
            break
        current, value = best_move, best_value
    return current, value


def _local_search(sset: StringSet, objective, cfg: SearchConfig) -> CenterResult:
    best: Optional[CenterResult] = None
    for restart in range(cfg.restarts):
        center, value = _climb(_start_word(sset, cfg, restart), objective, cfg.max_iterations)
        if best is None or value > best.value or (value == best.value and center < best.center):
            best = CenterResult(center=center, value=value)
    return best


def local_search_cms(inst: CmsInstance, cfg: SearchConfig) -> CenterResult:
    return _local_search(inst.set, lambda s: coverage(s, inst), cfg)


def local_search_ffms(inst: FfmsInstance, cfg: SearchConfig) -> CenterResult:
    return _local_search(inst.set, lambda s: anticoverage(s, inst), cfg)
