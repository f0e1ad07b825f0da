"""Command line entry point: solving, preparing colorings, play, verification.

Exit codes: 0 success or pass, 1 usage error, 2 incomplete result (a budget
bracket instead of an exact value), 3 verification failure.  Machine-readable
output is JSON in the formats the owning modules define; human-readable
tables go to standard output.  Every subcommand is deterministic given its
flags and input files; randomized trials run from a fixed seed that is
printed with the result.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Callable, Optional

from . import alice as alice_mod
from . import words
from .dyadic import Truncation, adjacent, adjacent_definitional, reachable_positions
from .game import GameConfig, GameState, new_game, run_match
from .solver import SolverConfig, naive_value, solve_game, value_of
from .service.store import (
    certified_coloring,
    pick_engine_alice,
    pick_engine_bob,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCOMPLETE = 2
EXIT_VERIFY_FAILED = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; usage errors must exit 1 here."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="thuegame", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_solve = sub.add_parser("solve", help="exact game value or budget bracket")
    p_solve.add_argument("--q", type=int, required=True)
    p_solve.add_argument("--budget", type=int, required=True)
    p_solve.add_argument("--no-reversal", action="store_true")

    p_prep = sub.add_parser("prepare", help="search and certify a coloring table")
    p_prep.add_argument("--rounds", type=int, required=True)
    p_prep.add_argument("--colors", type=int, required=True)
    p_prep.add_argument("--out", required=True)

    p_play = sub.add_parser("play", help="interactive or automatic match")
    p_play.add_argument(
        "--mode", choices=["human-bob", "human-alice", "auto"], required=True
    )
    p_play.add_argument("--q", type=int, required=True)
    p_play.add_argument("--rounds", type=int, required=True)
    p_play.add_argument("--coloring")

    p_verify = sub.add_parser("verify", help="oracle equivalence suites")
    p_verify.add_argument(
        "--suite",
        choices=["adjacency", "checker", "coloring", "solver-oracle"],
        required=True,
    )
    p_verify.add_argument("--coloring")
    p_verify.add_argument("--rounds", type=int)

    p_thue = sub.add_parser("gen-thue", help="print a square-free ternary word")
    p_thue.add_argument("--length", type=int, required=True)

    p_min = sub.add_parser("min-colors", help="minimum colors for a round budget")
    p_min.add_argument("--rounds", type=int, required=True)

    p_serve = sub.add_parser("serve", help="launch the HTTP service")
    p_serve.add_argument("--port", type=int, required=True)

    return parser


def cmd_solve(args: argparse.Namespace) -> int:
    config = SolverConfig(
        budget=args.budget, use_reversal_symmetry=not args.no_reversal
    )
    outcome = solve_game(args.q, config)
    print(json.dumps(outcome.to_dict(), indent=2))
    return EXIT_OK if outcome.exact else EXIT_INCOMPLETE


def cmd_prepare(args: argparse.Namespace) -> int:
    if args.rounds < 1:
        print("rounds must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if not 1 <= args.colors <= 64:
        print("colors must be in 1..64", file=sys.stderr)
        return EXIT_USAGE
    coloring = alice_mod.search_coloring_reachable(args.rounds, args.colors)
    if coloring is None:
        print(
            f"no {args.colors}-coloring satisfies the reachable sets of "
            f"{args.rounds} rounds",
            file=sys.stderr,
        )
        return EXIT_VERIFY_FAILED
    expected = reachable_positions(args.rounds)
    if coloring.domain != expected:
        print("searched domain does not match reachable positions", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    violation = alice_mod.verify_reachable(args.rounds, coloring)
    if violation is not None:
        print(
            f"coloring failed verification: {json.dumps(violation.to_dict())}",
            file=sys.stderr,
        )
        return EXIT_VERIFY_FAILED
    alice_mod.save_coloring(args.out, coloring)
    used = len(set(coloring.colors.values()))
    print(
        f"verified coloring for {args.rounds} rounds: "
        f"{len(coloring.colors)} positions, {used} of {args.colors} colors used, "
        f"written to {args.out}"
    )
    return EXIT_OK


def _engine_alice_for(
    q: int, rounds: int, coloring_path: Optional[str]
) -> tuple[str, Callable[[GameState], int]]:
    if coloring_path is not None:
        coloring = alice_mod.load_coloring(coloring_path)
        missing = reachable_positions(rounds) - coloring.domain
        if missing:
            raise ValueError(
                f"coloring file covers too little: {len(missing)} reachable "
                f"positions missing for {rounds} rounds"
            )
        return "coloring (from file)", alice_mod.alice_coloring(coloring)
    return pick_engine_alice(q, rounds)


def _print_board(state: GameState) -> None:
    parts = []
    for i, (pos, color) in enumerate(state.points):
        parts.append(f"[{i}]")
        parts.append(f"{pos}={color}")
    parts.append(f"[{len(state.points)}]")
    print("  board:", " ".join(parts))


def _print_outcome(state: GameState) -> None:
    word = state.word()
    if state.witness is not None:
        rep = state.witness
        block = word[rep.start : rep.start + rep.size]
        print(
            f"repetition after {state.round} rounds: block {block} doubled at "
            f"index {rep.start} (size {rep.size}) in {word}"
        )
    else:
        print(f"no repetition after {state.round} rounds; final word {word}")


def _prompt(text: str) -> Optional[str]:
    try:
        raw = input(text).strip()
    except (EOFError, KeyboardInterrupt):
        print()
        return None
    if raw.lower() in ("q", "quit", "exit"):
        return None
    return raw


def cmd_play(args: argparse.Namespace) -> int:
    try:
        config = GameConfig(q=args.q, max_rounds=args.rounds)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE

    if args.mode == "auto":
        alice_label, engine_alice = _engine_alice_for(args.q, args.rounds, args.coloring)
        bob_label, engine_bob = pick_engine_bob(args.q)
        print(f"auto match: Bob={bob_label}, Alice={alice_label}")
        transcript = run_match(config, engine_alice, engine_bob)
        for move in transcript.moves:
            print(
                f"  round {move.round}: slot {move.slot} -> {move.position}, "
                f"color {move.color}"
            )
        if transcript.witness is not None:
            rep = transcript.witness
            block = transcript.final_word[rep.start : rep.start + rep.size]
            print(
                f"repetition after {len(transcript.moves)} rounds: block {block} "
                f"doubled at index {rep.start} in {transcript.final_word}"
            )
        else:
            print(
                f"no repetition after {len(transcript.moves)} rounds; "
                f"final word {transcript.final_word}"
            )
        return EXIT_OK

    state = new_game(config)
    if args.mode == "human-bob":
        alice_label, engine_alice = _engine_alice_for(args.q, args.rounds, args.coloring)
        print(f"you are Bob; engine Alice: {alice_label}")
        while state.status == "ongoing" and state.round < config.max_rounds:
            _print_board(state)
            raw = _prompt(f"slot 0..{len(state.points)} (q quits): ")
            if raw is None:
                return EXIT_OK
            try:
                slot = int(raw)
                position = state.apply_bob(slot)
            except ValueError as exc:
                print(f"  rejected: {exc}")
                continue
            color = engine_alice(state)
            state.apply_alice(color)
            print(f"  Alice colors {position} with {color}")
        _print_outcome(state)
        return EXIT_OK

    bob_label, engine_bob = pick_engine_bob(args.q)
    print(f"you are Alice; engine Bob: {bob_label}")
    while state.status == "ongoing" and state.round < config.max_rounds:
        slot = engine_bob(state)
        position = state.apply_bob(slot)
        _print_board(state)
        print(f"  Bob inserts at slot {slot}: position {position}")
        while True:
            raw = _prompt(f"color 0..{config.q - 1} (q quits): ")
            if raw is None:
                return EXIT_OK
            try:
                state.apply_alice(int(raw))
                break
            except ValueError as exc:
                print(f"  rejected: {exc}")
    _print_outcome(state)
    return EXIT_OK


def _verify_adjacency() -> int:
    trunc = Truncation(range_=4, max_depth=6)
    vertices = trunc.vertices()
    mismatches = 0
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            if adjacent(u, v) != adjacent_definitional(u, v):
                mismatches += 1
    print(
        f"adjacency: {len(vertices)} vertices, "
        f"{len(vertices) * (len(vertices) - 1) // 2} pairs, "
        f"{mismatches} disagreements -> {'PASS' if mismatches == 0 else 'FAIL'}"
    )
    return EXIT_OK if mismatches == 0 else EXIT_VERIFY_FAILED


def _verify_checker() -> int:
    from itertools import product

    bad = 0
    total = 0
    for n in range(11):
        for w in product(range(3), repeat=n):
            total += 1
            if words.find_repetition(w) != words.find_repetition_bruteforce(w):
                bad += 1
    seed = 20250821
    rng = random.Random(seed)
    for _ in range(2000):
        q = rng.choice((2, 3, 4, 6))
        n = rng.randrange(1, 65)
        w = tuple(rng.randrange(q) for _ in range(n))
        total += 1
        if words.find_repetition(w) != words.find_repetition_bruteforce(w):
            bad += 1
    print(
        f"checker: {total} words (exhaustive q=3 len<=10 plus 2000 seeded "
        f"random, seed={seed}), {bad} disagreements -> "
        f"{'PASS' if bad == 0 else 'FAIL'}"
    )
    return EXIT_OK if bad == 0 else EXIT_VERIFY_FAILED


def _verify_coloring(args: argparse.Namespace) -> int:
    if args.coloring is None:
        print("--suite coloring needs --coloring <path>", file=sys.stderr)
        return EXIT_USAGE
    rounds = args.rounds if args.rounds is not None else 8
    coloring = alice_mod.load_coloring(args.coloring)
    missing = reachable_positions(rounds) - coloring.domain
    if missing:
        print(
            f"coloring: FAIL, {len(missing)} reachable positions uncovered "
            f"for {rounds} rounds"
        )
        return EXIT_VERIFY_FAILED
    violation = alice_mod.verify_reachable(rounds, coloring)
    if violation is not None:
        print(f"coloring: FAIL, violation {json.dumps(violation.to_dict())}")
        return EXIT_VERIFY_FAILED
    print(
        f"coloring: {len(coloring.colors)} positions certified for "
        f"{rounds} rounds -> PASS"
    )
    return EXIT_OK


def _verify_solver_oracle() -> int:
    from itertools import product

    bad = 0
    checks = 0
    for q, budget in ((1, 3), (2, 5), (3, 6)):
        checks += 1
        fast = value_of((), q, SolverConfig(budget=budget))
        slow = naive_value((), q, budget)
        if (fast.lower, fast.exact) != (slow.lower, slow.exact):
            bad += 1
    for n in range(4):
        for w in product(range(3), repeat=n):
            if words.find_repetition(w) is not None:
                continue
            checks += 1
            fast = value_of(w, 3, SolverConfig(budget=6))
            slow = naive_value(w, 3, 6)
            if (fast.lower, fast.exact) != (slow.lower, slow.exact):
                bad += 1
    print(
        f"solver-oracle: {checks} states compared against the unmemoized "
        f"search, {bad} disagreements -> {'PASS' if bad == 0 else 'FAIL'}"
    )
    return EXIT_OK if bad == 0 else EXIT_VERIFY_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "adjacency":
        return _verify_adjacency()
    if args.suite == "checker":
        return _verify_checker()
    if args.suite == "coloring":
        return _verify_coloring(args)
    return _verify_solver_oracle()


def cmd_gen_thue(args: argparse.Namespace) -> int:
    if args.length < 0:
        print("length must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    print("".join(str(s) for s in words.thue_word(args.length)))
    return EXIT_OK


def cmd_min_colors(args: argparse.Namespace) -> int:
    if args.rounds < 1:
        print("rounds must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    domain = reachable_positions(args.rounds)
    count, _ = alice_mod.min_colors(domain)
    print(
        f"minimum colors for the {len(domain)} positions reachable in "
        f"{args.rounds} rounds: {count}"
    )
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    port = args.port
    env_port = os.environ.get("PORT")
    if env_port is not None:
        try:
            port = int(env_port)
        except ValueError:
            print(f"ignoring non-numeric PORT={env_port!r}", file=sys.stderr)
    uvicorn.run(create_app(), host="127.0.0.1", port=port)
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "solve": cmd_solve,
        "prepare": cmd_prepare,
        "play": cmd_play,
        "verify": cmd_verify,
        "gen-thue": cmd_gen_thue,
        "min-colors": cmd_min_colors,
        "serve": cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except alice_mod.ColoringDefectError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
