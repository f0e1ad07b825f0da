"""Sessions and the bounded in-memory store behind the HTTP service.

A session owns one live game plus the engine strategies for whichever sides
the human is not playing.  Sessions are ephemeral: the store keeps a bounded
number and evicts the least recently used.  Engine colorings are certified
(searched, then verified against every reachable point set) before first use
and cached per round budget.
"""

from __future__ import annotations

import secrets
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Callable, Optional

from .. import alice as alice_mod
from .. import solver as solver_mod
from ..game import GameState

MODE_HUMAN_BOB = "human-bob"
MODE_HUMAN_ALICE = "human-alice"
MODE_AUTO = "auto"
MODES = (MODE_HUMAN_BOB, MODE_HUMAN_ALICE, MODE_AUTO)

# search + verification stay interactive up to this budget
AUTO_PREPARE_MAX_ROUNDS = 10
# the exact solver is the adversary only where the game is small and decided
SOLVER_BOB_MAX_Q = 4
SOLVER_BOB_BUDGET = 8
MAX_SESSION_ROUNDS = 512

_coloring_cache: dict[int, alice_mod.Coloring] = {}
_coloring_cache_lock = threading.Lock()


def certified_coloring(rounds: int) -> alice_mod.Coloring:
    """Search a coloring for the round budget and verify it before handing it out."""
    with _coloring_cache_lock:
        cached = _coloring_cache.get(rounds)
    if cached is not None:
        return cached
    coloring = alice_mod.search_coloring_reachable(rounds, alice_mod.MAX_COLORS)
    if coloring is None:
        raise alice_mod.ColoringDefectError(
            f"no {alice_mod.MAX_COLORS}-coloring found for {rounds} rounds"
        )
    violation = alice_mod.verify_reachable(rounds, coloring)
    if violation is not None:
        raise alice_mod.ColoringDefectError(
            f"searched coloring failed verification at {rounds} rounds: "
            f"{violation.to_dict()}"
        )
    with _coloring_cache_lock:
        _coloring_cache[rounds] = coloring
    return coloring


def pick_engine_alice(q: int, rounds: int) -> tuple[str, Callable[[GameState], int]]:
    """Table Alice when the alphabet carries the full palette, greedy otherwise."""
    if q >= alice_mod.MAX_COLORS:
        if rounds > AUTO_PREPARE_MAX_ROUNDS:
            raise ValueError(
                f"no certified coloring for {rounds} rounds; "
                f"the engine prepares tables up to {AUTO_PREPARE_MAX_ROUNDS} rounds"
            )
        return "coloring", alice_mod.alice_coloring(certified_coloring(rounds))
    return "greedy", alice_mod.alice_greedy


def pick_engine_bob(q: int) -> tuple[str, Callable[[GameState], int]]:
    """Exact solver on small alphabets, fewest-safe-colors heuristic otherwise."""
    if q <= SOLVER_BOB_MAX_Q:
        return "solver", solver_mod.solver_bob(q, SOLVER_BOB_BUDGET)
    return "heuristic", solver_mod.heuristic_bob()


@dataclass
class Session:
    id: str
    mode: str
    state: GameState
    alice_label: Optional[str] = None
    bob_label: Optional[str] = None
    engine_alice: Optional[Callable[[GameState], int]] = None
    engine_bob: Optional[Callable[[GameState], int]] = None
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """LRU map of live sessions; the oldest session is evicted at capacity."""

    def __init__(self, capacity: int = 256):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self._sessions: OrderedDict[str, Session] = OrderedDict()
        self._lock = threading.Lock()

    def new_id(self) -> str:
        return secrets.token_hex(8)

    def put(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session
            self._sessions.move_to_end(session.id)
            while len(self._sessions) > self.capacity:
                self._sessions.popitem(last=False)

    def get(self, session_id: str) -> Optional[Session]:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is not None:
                self._sessions.move_to_end(session_id)
            return session

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)
