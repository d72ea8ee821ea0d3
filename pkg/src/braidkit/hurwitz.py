"""Hurwitz moves on factorizations, orbit exploration, and path search.

The move R_k replaces the adjacent factors (t_k, t_{k+1}) by
(t_k t_{k+1} t_k^-1, t_k); its inverse replaces them by
(t_{k+1}, t_{k+1}^-1 t_k t_{k+1}).  Both leave the ordered product
unchanged, so the moves act on the set of factorizations of a fixed
braid.  Positions are 1-based.

Factorizations are compared by `tuple_key`, the per-factor canonical
keys joined with ";": two factorizations share a key exactly when their
factors are equal as braids position by position.  Orbit and path
search deduplicate on that key, expand states in a fixed order, and
sort emitted keys, so their output is reproducible run to run.

Serialized moves are signed integers: k stands for R_k and -k for
R_k^-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bands import Factorization
from .words import compose, inverse


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class Move:
    k: int
    direction: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise MoveError(f"move position must be >= 1, got {self.k}")
        if self.direction not in (1, -1):
            raise MoveError(f"move direction must be +1 or -1, got {self.direction}")

    def inverted(self) -> Move:
        return Move(self.k, -self.direction)

    def __str__(self) -> str:
        return f"R{self.k}" if self.direction == 1 else f"R{self.k}^-1"


def move_to_int(m: Move) -> int:
    return m.k * m.direction


def move_from_int(v: int) -> Move:
    if v == 0:
        raise MoveError("0 does not encode a move")
    return Move(abs(v), 1 if v > 0 else -1)


def apply_move(f: Factorization, m: Move) -> Factorization:
    if m.k > len(f) - 1:
        raise MoveError(
            f"move {m} out of range for a factorization of length {len(f)}"
        )
    i = m.k - 1
    x, y = f.factors[i], f.factors[i + 1]
    if m.direction == 1:
        pair = (compose(compose(x, y), inverse(x)), x)
    else:
        pair = (y, compose(compose(inverse(y), x), y))
    return Factorization(f.n, f.factors[:i] + pair + f.factors[i + 2 :])


def apply_sequence(f: Factorization, moves) -> Factorization:
    for idx, m in enumerate(moves):
        try:
            f = apply_move(f, m)
        except MoveError as exc:
            raise MoveError(f"move {idx + 1} of the sequence: {exc}") from None
    return f


def tuple_key(f: Factorization) -> str:
    return ";".join(f.factor_keys)


def _neighbors(f: Factorization):
    for k in range(1, len(f)):
        yield apply_move(f, Move(k, 1))
        yield apply_move(f, Move(k, -1))


@dataclass(frozen=True)
class OrbitReport:
    visited: int
    depth_counts: tuple[int, ...]
    truncated: bool
    keys: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "visited": self.visited,
            "depthCounts": list(self.depth_counts),
            "truncated": self.truncated,
            "keys": list(self.keys),
        }


def orbit_explore(
    f: Factorization,
    depth_cap: int | None = None,
    size_cap: int | None = None,
) -> OrbitReport:
    """Breadth-first closure of a factorization under all moves.

    `truncated` is False exactly when the reported keys are the whole
    orbit: a cap only sets the flag when it actually blocks an unvisited
    neighbor, so generous caps on a small orbit stay untruncated.
    """
    if size_cap is not None and size_cap < 1:
        return OrbitReport(0, (), True, ())
    visited: dict[str, None] = {tuple_key(f): None}
    frontier = [f]
    depth_counts = [1]
    truncated = False
    depth = 0
    while frontier:
        if depth_cap is not None and depth >= depth_cap:
            # Not allowed to expand further; the orbit is complete only
            # if the frontier has no unvisited neighbors.
            if not truncated:
                truncated = any(
                    tuple_key(nb) not in visited
                    for state in frontier
                    for nb in _neighbors(state)
                )
            break
        nxt: list[Factorization] = []
        for state in frontier:
            for nb in _neighbors(state):
                key = tuple_key(nb)
                if key in visited:
                    continue
                if size_cap is not None and len(visited) >= size_cap:
                    truncated = True
                    continue
                visited[key] = None
                nxt.append(nb)
        if nxt:
            depth_counts.append(len(nxt))
        frontier = nxt
        depth += 1
    return OrbitReport(
        len(visited), tuple(depth_counts), truncated, tuple(sorted(visited))
    )


@dataclass(frozen=True)
class PathResult:
    """Outcome of a path search between two factorizations.

    status "found" carries the move sequence, already replay-checked.
    "not_comparable" means the product keys differ, so no sequence can
    exist.  "not_found" with truncated False means the reachable orbit
    was exhausted; with truncated True a cap stopped the search and the
    result says nothing either way.
    """

    status: str
    moves: tuple[Move, ...] | None
    visited: int
    truncated: bool

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "moves": None if self.moves is None else [move_to_int(m) for m in self.moves],
            "visited": self.visited,
            "truncated": self.truncated,
        }


def _reconstruct(parents: dict[str, tuple[str | None, Move | None]], key: str) -> list[Move]:
    moves: list[Move] = []
    while True:
        parent, move = parents[key]
        if parent is None:
            break
        moves.append(move)
        key = parent
    moves.reverse()
    return moves


def find_path(
    f1: Factorization,
    f2: Factorization,
    depth_cap: int | None = None,
    size_cap: int | None = None,
) -> PathResult:
    """Bidirectional breadth-first search for a move sequence f1 -> f2.

    Found sequences are verified by replay before being returned: the
    final tuple matches f2 in per-factor keys, position by position.
    """
    if f1.n != f2.n:
        raise MoveError(f"strand counts differ: {f1.n} vs {f2.n}")
    if len(f1) != len(f2):
        raise MoveError(f"factorization lengths differ: {len(f1)} vs {len(f2)}")

    def finish(moves: list[Move], visited: int) -> PathResult:
        replayed = apply_sequence(f1, moves)
        assert replayed.factor_keys == f2.factor_keys, "path replay mismatch"
        return PathResult("found", tuple(moves), visited, False)

    k1, k2 = tuple_key(f1), tuple_key(f2)
    if k1 == k2:
        return finish([], 1)
    if f1.product_key != f2.product_key:
        return PathResult("not_comparable", None, 0, False)

    fwd_parents: dict[str, tuple[str | None, Move | None]] = {k1: (None, None)}
    bwd_parents: dict[str, tuple[str | None, Move | None]] = {k2: (None, None)}
    fwd_frontier: list[tuple[str, Factorization]] = [(k1, f1)]
    bwd_frontier: list[tuple[str, Factorization]] = [(k2, f2)]
    depth_fwd = depth_bwd = 0
    capped = False

    def stitch(meet: str) -> list[Move]:
        head = _reconstruct(fwd_parents, meet)
        tail = _reconstruct(bwd_parents, meet)
        return head + [m.inverted() for m in reversed(tail)]

    while fwd_frontier and bwd_frontier:
        if depth_cap is not None and depth_fwd + depth_bwd >= depth_cap:
            return PathResult(
                "not_found", None, len(fwd_parents) + len(bwd_parents), True
            )
        forward = len(fwd_frontier) <= len(bwd_frontier)
        frontier, parents, others = (
            (fwd_frontier, fwd_parents, bwd_parents)
            if forward
            else (bwd_frontier, bwd_parents, fwd_parents)
        )
        nxt: list[tuple[str, Factorization]] = []
        meet: str | None = None
        for key, state in frontier:
            for k in range(1, len(state)):
                for direction in (1, -1):
                    move = Move(k, direction)
                    nb = apply_move(state, move)
                    nb_key = tuple_key(nb)
                    if nb_key in parents:
                        continue
                    if (
                        size_cap is not None
                        and len(fwd_parents) + len(bwd_parents) >= size_cap
                    ):
                        capped = True
                        continue
                    parents[nb_key] = (key, move)
                    nxt.append((nb_key, nb))
                    if meet is None and nb_key in others:
                        meet = nb_key
            if meet is not None:
                break
        if meet is not None:
            return finish(stitch(meet), len(fwd_parents) + len(bwd_parents))
        if forward:
            fwd_frontier = nxt
            depth_fwd += 1
        else:
            bwd_frontier = nxt
            depth_bwd += 1

    return PathResult(
        "not_found", None, len(fwd_parents) + len(bwd_parents), capped
    )
