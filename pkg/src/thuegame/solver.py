"""Exact adversary analysis of the insertion game for a fixed alphabet size.

val(w) for a square-free word w: Bob picks the slot minimizing Alice's best
continuation; a slot with no safe color ends the game at length |w|.  States
are memoized on the canonical relabeling of the word (and optionally its
reversal), which is sound because repetition structure is position-free.
Search depth is capped by a word-length budget; values at the cap are lower
bounds, so interrupted runs still report honest brackets.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import game as game_mod
from .words import Word, canonical_form, find_repetition, repetition_through


@dataclass(frozen=True)
class SolverConfig:
    budget: int = 24
    use_reversal_symmetry: bool = True
    memo_limit: int = 2_000_000

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if self.memo_limit < 1:
            raise ValueError("memo limit must be positive")


@dataclass(frozen=True)
class Value:
    """Game value, or a certified lower bound when the budget cut in."""

    lower: int
    exact: bool

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError("value not resolved within budget")
        return self.lower


@dataclass
class SolveOutcome:
    q: int
    budget: int
    lower: int
    upper: int
    exact: bool
    principal_variation: list[tuple[int, int]] = field(default_factory=list)
    states: int = 0
    memo_hits: int = 0
    wall_time_ms: float = 0.0
    aborted: bool = False

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError("outcome is a bracket, not an exact value")
        return self.lower

    def to_dict(self) -> dict:
        out: dict = {"q": self.q, "budget": self.budget}
        if self.exact:
            out["value"] = self.lower
        else:
            out["bracket"] = {"lower": self.lower, "upper": self.upper}
        out["exact"] = self.exact
        out["principal_variation"] = [
            {"slot": slot, "color": color} for slot, color in self.principal_variation
        ]
        out["states"] = self.states
        out["memo_hits"] = self.memo_hits
        out["wall_time_ms"] = round(self.wall_time_ms, 3)
        if self.aborted:
            out["aborted"] = True
        return out


class MemoLimitReached(RuntimeError):
    pass


def safe_colors(w: Word, slot: int, q: int) -> list[int]:
    """Colors whose insertion at slot keeps the word square-free."""
    out = []
    for x in range(q):
        candidate = w[:slot] + (x,) + w[slot:]
        if repetition_through(candidate, slot) is None:
            out.append(x)
    return out


class _Search:
    """One budget-bounded memoized minimax pass."""

    def __init__(self, q: int, budget: int, config: SolverConfig, exact_seed: dict):
        self.q = q
        self.budget = budget
        self.config = config
        self.memo: dict[Word, Value] = {
            k: Value(v, True) for k, v in exact_seed.items()
        }
        self.states = 0
        self.memo_hits = 0

    def key(self, w: Word) -> Word:
        k = canonical_form(w)
        if self.config.use_reversal_symmetry:
            k = min(k, canonical_form(w[::-1]))
        return k

    def value(self, w: Word) -> Value:
        if len(w) >= self.budget:
            return Value(self.budget, False)
        key = self.key(w)
        hit = self.memo.get(key)
        if hit is not None:
            self.memo_hits += 1
            return hit
        if len(self.memo) >= self.config.memo_limit:
            raise MemoLimitReached
        self.states += 1
        n = len(w)
        best: Optional[Value] = None
        for slot in range(n + 1):
            colors = safe_colors(w, slot, self.q)
            if not colors:
                # an immediate trap is the least Alice can ever be held to
                best = Value(n, True)
                break
            slot_val: Optional[Value] = None
            for x in colors:
                child = self.value(w[:slot] + (x,) + w[slot:])
                if not child.exact:
                    slot_val = child  # unresolved dominates every exact max
                    break
                if slot_val is None or child.lower > slot_val.lower:
                    slot_val = child
            assert slot_val is not None
            if best is None or slot_val.lower < best.lower:
                best = slot_val
            if best.exact and best.lower == n:
                break
        assert best is not None
        self.memo[key] = best
        return best


def value_of(w: Sequence[int], q: int, config: SolverConfig = SolverConfig()) -> Value:
    """Game value of a square-free position (exact, or lower bound at budget)."""
    word = tuple(w)
    if find_repetition(word) is not None:
        raise ValueError("game values are defined for square-free words only")
    budget = max(config.budget, len(word) + 1)
    search = _Search(q, budget, config, {})
    return search.value(word)


def solve_game(q: int, config: SolverConfig = SolverConfig()) -> SolveOutcome:
    """Iterative deepening from the empty word until exact or out of budget."""
    if q < 1:
        raise ValueError("alphabet size must be positive")
    start = time.perf_counter()
    exact_seed: dict[Word, int] = {}
    outcome = SolveOutcome(q=q, budget=config.budget, lower=0, upper=config.budget, exact=False)
    for budget in range(1, config.budget + 1):
        search = _Search(q, budget, config, exact_seed)
        try:
            result = search.value(())
        except MemoLimitReached:
            outcome.aborted = True
            break
        finally:
            outcome.states += search.states
            outcome.memo_hits += search.memo_hits
        for k, v in search.memo.items():
            if v.exact:
                exact_seed[k] = v.lower
        if result.exact:
            outcome.lower = outcome.upper = result.lower
            outcome.exact = True
            outcome.principal_variation = principal_variation(q, budget, config, exact_seed)
            break
        outcome.lower = budget
    outcome.wall_time_ms = (time.perf_counter() - start) * 1000.0
    return outcome


def principal_variation(
    q: int, budget: int, config: SolverConfig, exact_seed: dict
) -> list[tuple[int, int]]:
    """Optimal (slot, color) line from the empty word down to the forced loss.

    The final move is the trap: Alice plays her smallest color and the
    resulting word contains the witness.  Ties break to the smallest slot and
    smallest color.
    """
    search = _Search(q, budget, config, exact_seed)
    pv: list[tuple[int, int]] = []
    w: Word = ()
    while True:
        best_slot = None
        best_val: Optional[Value] = None
        trap = None
        for slot in range(len(w) + 1):
            colors = safe_colors(w, slot, q)
            if not colors:
                trap = slot
                break
            slot_val = max(
                (search.value(w[:slot] + (x,) + w[slot:]) for x in colors),
                key=lambda v: v.lower,
            )
            if best_val is None or slot_val.lower < best_val.lower:
                best_slot, best_val = slot, slot_val
        if trap is not None:
            pv.append((trap, 0))
            return pv
        assert best_slot is not None and best_val is not None and best_val.exact
        colors = safe_colors(w, best_slot, q)
        chosen = None
        for x in colors:
            child = search.value(w[: best_slot] + (x,) + w[best_slot:])
            if child.exact and child.lower == best_val.lower:
                chosen = x
                break
        assert chosen is not None
        pv.append((best_slot, chosen))
        w = w[:best_slot] + (chosen,) + w[best_slot:]


def bob_best_move(w: Sequence[int], q: int, config: SolverConfig = SolverConfig()) -> int:
    """A slot achieving the minimax value; smallest index on ties."""
    word = tuple(w)
    if find_repetition(word) is not None:
        raise ValueError("optimal moves are defined for square-free words only")
    budget = max(config.budget, len(word) + 1)
    search = _Search(q, budget, config, {})
    best_slot = 0
    best_val: Optional[Value] = None
    for slot in range(len(word) + 1):
        colors = safe_colors(word, slot, q)
        if not colors:
            return slot  # immediate trap cannot be beaten
        slot_val = max(
            (search.value(word[:slot] + (x,) + word[slot:]) for x in colors),
            key=lambda v: v.lower,
        )
        if best_val is None or slot_val.lower < best_val.lower or (
            slot_val.lower == best_val.lower and slot_val.exact and not best_val.exact
        ):
            best_slot, best_val = slot, slot_val
    return best_slot


def trap_heuristic_move(w: Sequence[int], q: int) -> int:
    """Slot leaving Alice the fewest safe colors; smallest index on ties."""
    word = tuple(w)
    best_slot, best_count = 0, q + 1
    for slot in range(len(word) + 1):
        count = len(safe_colors(word, slot, q))
        if count < best_count:
            best_slot, best_count = slot, count
    return best_slot


def naive_value(w: Sequence[int], q: int, budget: int) -> Value:
    """Unmemoized, uncanonicalized minimax; the independent solver oracle."""
    word = tuple(w)
    if len(word) >= budget:
        return Value(budget, False)
    best: Optional[Value] = None
    for slot in range(len(word) + 1):
        colors = safe_colors(word, slot, q)
        if not colors:
            slot_val = Value(len(word), True)
        else:
            slot_val = None
            for x in colors:
                child = naive_value(word[:slot] + (x,) + word[slot:], q, budget)
                if not child.exact:
                    slot_val = child
                    break
                if slot_val is None or child.lower > slot_val.lower:
                    slot_val = child
        assert slot_val is not None
        if best is None or slot_val.lower < best.lower:
            best = slot_val
    assert best is not None
    return best


def solver_bob(q: int, budget: int):
    """Match adversary backed by the exact solver (use for small alphabets)."""
    config = SolverConfig(budget=budget)

    def strategy(state: game_mod.GameState) -> int:
        return bob_best_move(state.word(), q, config)

    return strategy


def heuristic_bob():
    """Match adversary using the cheap fewest-safe-colors trap heuristic."""

    def strategy(state: game_mod.GameState) -> int:
        return trap_heuristic_move(state.word(), state.config.q)

    return strategy
