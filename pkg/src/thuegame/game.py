"""Referee for the online Thue game.

A round has two phases: Bob picks a slot (resolved to an exact dyadic
position), then Alice picks a color for it.  The referee keeps the point set
sorted, checks the color word after every insertion, and freezes the game
with a witness when a repetition appears.  The word containing the witness is
retained so transcripts can show exactly how the game ended.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import words
from .dyadic import Dyadic, ORIGIN, ONE, is_monotone_path, midpoint
from .words import Repetition, Word

STATUS_ONGOING = "ongoing"
STATUS_ENDED = "ended"
STATUS_FORFEIT = "forfeit"


@dataclass(frozen=True)
class GameConfig:
    q: int
    max_rounds: int
    alice: str = "external"
    bob: str = "external"

    def __post_init__(self) -> None:
        words.validate_alphabet(self.q)
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be at least 1")


@dataclass(frozen=True)
class Move:
    round: int
    slot: int
    position: Dyadic
    color: int

    def to_dict(self) -> dict:
        return {
            "round": self.round,
            "slot": self.slot,
            "position": {"num": self.position.num, "depth": self.position.depth},
            "color": self.color,
        }


@dataclass
class Forfeit:
    actor: str
    reason: str


class GameState:
    """Single-writer game state; one actor mutates it at a time."""

    def __init__(self, config: GameConfig):
        self.config = config
        self.points: list[tuple[Dyadic, int]] = []  # sorted by position
        self.history: list[Move] = []
        self.status = STATUS_ONGOING
        self.witness: Optional[Repetition] = None
        self.pending: Optional[Dyadic] = None
        self.pending_slot: Optional[int] = None
        self.forfeit: Optional[Forfeit] = None

    @property
    def round(self) -> int:
        """Completed insertions so far."""
        return len(self.points)

    def positions(self) -> list[Dyadic]:
        return [p for p, _ in self.points]

    def word(self) -> Word:
        """Colors read in increasing position order."""
        return tuple(c for _, c in self.points)

    def legal_slots(self) -> list[int]:
        if self.status != STATUS_ONGOING:
            raise ValueError("game is over")
        if self.pending is not None:
            raise ValueError("a position is pending Alice's color")
        return list(range(len(self.points) + 1))

    def resolve_slot(self, slot: int) -> Dyadic:
        """Map a slot index to the exact position an insertion there creates."""
        n = len(self.points)
        if not 0 <= slot <= n:
            raise ValueError(f"slot {slot} out of range 0..{n}")
        if n == 0:
            return ORIGIN
        if slot == 0:
            lo = self.points[0][0]
            assert lo.depth == 0, "extreme points are always integers"
            return lo - ONE
        if slot == n:
            hi = self.points[-1][0]
            assert hi.depth == 0, "extreme points are always integers"
            return hi + ONE
        return midpoint(self.points[slot - 1][0], self.points[slot][0])

    def apply_bob(self, slot: int) -> Dyadic:
        """Phase one: resolve and stage Bob's chosen slot."""
        if self.status != STATUS_ONGOING:
            raise ValueError("game is over")
        if self.pending is not None:
            raise ValueError("a position is already pending")
        if self.round >= self.config.max_rounds:
            raise ValueError("round budget exhausted")
        position = self.resolve_slot(slot)
        self.pending = position
        self.pending_slot = slot
        return position

    def apply_alice(self, color: int) -> Optional[Repetition]:
        """Phase two: color the pending position; returns the witness if this ends the game."""
        if self.status != STATUS_ONGOING:
            raise ValueError("game is over")
        if self.pending is None:
            raise ValueError("no position is pending")
        if not 0 <= color < self.config.q:
            raise ValueError(f"color {color} out of range for q={self.config.q}")
        position, slot = self.pending, self.pending_slot
        assert slot is not None
        idx = slot  # insertion index in the sorted order equals the slot
        self.points.insert(idx, (position, color))
        self.pending = None
        self.pending_slot = None
        self.history.append(
            Move(round=len(self.points), slot=slot, position=position, color=color)
        )
        self._assert_invariants(position)
        witness = words.repetition_through(self.word(), idx)
        if witness is not None:
            self.status = STATUS_ENDED
            self.witness = witness
        return witness

    def _assert_invariants(self, inserted: Dyadic) -> None:
        r = len(self.points)
        positions = self.positions()
        assert is_monotone_path(positions), "point set must stay a monotone path"
        bound = Dyadic(r - 1, 0)
        assert inserted.depth <= r - 1, "depth can grow by at most one per round"
        assert Dyadic(-(r - 1), 0) <= inserted <= bound, "positions stay within round range"

    def to_transcript(self) -> "Transcript":
        return Transcript(
            config=self.config,
            moves=list(self.history),
            status=self.status,
            witness=self.witness,
            final_word=self.word(),
            forfeit=self.forfeit,
        )


def new_game(config: GameConfig) -> GameState:
    return GameState(config)


def legal_slots(state: GameState) -> list[int]:
    return state.legal_slots()


def apply_bob(state: GameState, slot: int) -> GameState:
    state.apply_bob(slot)
    return state


def apply_alice(state: GameState, color: int) -> tuple[GameState, Optional[Repetition]]:
    witness = state.apply_alice(color)
    return state, witness


def word_of(state: GameState) -> Word:
    return state.word()


@dataclass
class Transcript:
    config: GameConfig
    moves: list[Move]
    status: str
    witness: Optional[Repetition]
    final_word: Word
    forfeit: Optional[Forfeit] = None

    def to_dict(self) -> dict:
        out = {
            "config": {"q": self.config.q, "max_rounds": self.config.max_rounds},
            "moves": [m.to_dict() for m in self.moves],
            "status": self.status,
            "final_word": list(self.final_word),
        }
        if self.witness is not None:
            out["witness"] = {"start": self.witness.start, "size": self.witness.size}
        if self.forfeit is not None:
            out["forfeit"] = {"actor": self.forfeit.actor, "reason": self.forfeit.reason}
        return out


def transcript_from_dict(data: dict) -> Transcript:
    config = GameConfig(q=data["config"]["q"], max_rounds=data["config"]["max_rounds"])
    moves = [
        Move(
            round=m["round"],
            slot=m["slot"],
            position=Dyadic(m["position"]["num"], m["position"]["depth"]),
            color=m["color"],
        )
        for m in data["moves"]
    ]
    witness = None
    if "witness" in data:
        witness = Repetition(start=data["witness"]["start"], size=data["witness"]["size"])
    forfeit = None
    if "forfeit" in data:
        forfeit = Forfeit(actor=data["forfeit"]["actor"], reason=data["forfeit"]["reason"])
    return Transcript(
        config=config,
        moves=moves,
        status=data["status"],
        witness=witness,
        final_word=tuple(data["final_word"]),
        forfeit=forfeit,
    )


def replay(transcript: Transcript) -> GameState:
    """Re-run a transcript's slots and colors through a fresh referee.

    Raises if the recorded positions or outcome disagree with the rules;
    used to validate stored transcripts and solver variations.
    """
    state = new_game(transcript.config)
    for move in transcript.moves:
        position = state.apply_bob(move.slot)
        if position != move.position:
            raise ValueError(
                f"round {move.round}: slot {move.slot} resolves to {position}, "
                f"transcript says {move.position}"
            )
        state.apply_alice(move.color)
    if state.status != transcript.status and transcript.status != STATUS_FORFEIT:
        raise ValueError("replayed status disagrees with transcript")
    if state.word() != transcript.final_word:
        raise ValueError("replayed word disagrees with transcript")
    return state


AliceStrategy = Callable[[GameState], int]
BobStrategy = Callable[[GameState], int]


def run_match(
    config: GameConfig,
    alice: AliceStrategy,
    bob: BobStrategy,
) -> Transcript:
    """Play up to max_rounds or until a repetition; illegal moves forfeit.

    Strategies see the live state: Bob is called with no pending position and
    returns a slot; Alice is called with the pending position staged and
    returns a color.
    """
    state = new_game(config)
    for _ in range(config.max_rounds):
        try:
            slot = bob(state)
            state.apply_bob(slot)
        except Exception as exc:  # noqa: BLE001 - buggy strategies forfeit
            state.forfeit = Forfeit(actor="bob", reason=str(exc))
            state.status = STATUS_FORFEIT
            break
        try:
            color = alice(state)
            witness = state.apply_alice(color)
        except Exception as exc:  # noqa: BLE001
            state.forfeit = Forfeit(actor="alice", reason=str(exc))
            state.status = STATUS_FORFEIT
            break
        if witness is not None:
            break
    return state.to_transcript()
