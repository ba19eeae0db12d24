"""Core model: games with exact rational pairwise values, coalitions, partitions.

A game is a fixed ordered set of player labels together with a value
``v_i(j)`` for every ordered pair of players. Values are exact rationals
(``fractions.Fraction``), the self-value ``v_i(i)`` is always zero, and all
derived quantities (utilities, comparisons) are computed exactly. Players are
addressed by dense 0-based index internally; labels exist for I/O.

Coalitions are frozensets of player indices; partitions keep their blocks in
a canonical order (ascending smallest member) so that every downstream
witness is deterministic.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union

from .errors import (
    DuplicatePlayer,
    EmptyCoalition,
    EmptyGame,
    GameFormatError,
    MissingPlayer,
    PlayerNotInCoalition,
    UnknownPlayer,
)

Rational = Union[int, Fraction]
Coalition = frozenset

_LABEL_RE = re.compile(r"^[^\s#]+$")


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise GameFormatError(f"floating-point value {value!r} rejected; use Fraction or int")
    return Fraction(value)


class Game:
    """An additively separable hedonic game over ``n`` labeled players."""

    __slots__ = ("labels", "_index", "matrix", "_scaled")

    def __init__(
        self,
        labels: Sequence[str],
        values: Mapping[Tuple[str, str], Rational] = (),
        default: Rational = 0,
    ):
        labels = tuple(labels)
        if not labels:
            raise EmptyGame()
        seen = set()
        for lab in labels:
            if not isinstance(lab, str) or not _LABEL_RE.match(lab):
                raise GameFormatError(f"bad player label: {lab!r}")
            if lab in seen:
                raise GameFormatError(f"duplicate player label: {lab!r}")
            seen.add(lab)
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        d = _as_fraction(default)
        mat = [[d] * n for _ in range(n)]
        for i in range(n):
            mat[i][i] = Fraction(0)
        for (a, b), v in dict(values).items():
            i, j = self.index(a), self.index(b)
            v = _as_fraction(v)
            if i == j:
                if v != 0:
                    raise GameFormatError(f"nonzero self-value for player {a!r}")
                continue
            mat[i][j] = v
        self.matrix = tuple(tuple(row) for row in mat)
        self._scaled = None

    @classmethod
    def from_matrix(cls, labels: Sequence[str], rows: Sequence[Sequence[Rational]]) -> "Game":
        """Build a game from a dense value matrix (diagonal must be zero)."""
        game = cls(labels)
        n = game.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise GameFormatError("matrix shape does not match the player count")
        mat = []
        for i in range(n):
            row = [_as_fraction(v) for v in rows[i]]
            if row[i] != 0:
                raise GameFormatError(f"nonzero self-value for player {labels[i]!r}")
            mat.append(tuple(row))
        game.matrix = tuple(mat)
        return game

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownPlayer(label) from None

    def label(self, player: int) -> str:
        self._check_player(player)
        return self.labels[player]

    def value(self, i: int, j: int) -> Fraction:
        self._check_player(i)
        self._check_player(j)
        return self.matrix[i][j]

    def _check_player(self, player) -> None:
        if not isinstance(player, int) or not 0 <= player < self.n:
            raise UnknownPlayer(player)

    def _check_members(self, members: Iterable[int]) -> None:
        for j in members:
            self._check_player(j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Game):
            return NotImplemented
        return self.labels == other.labels and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.labels, self.matrix))

    def __repr__(self) -> str:
        return f"Game({self.n} players: {' '.join(self.labels)})"


def scaled_rows(game: Game):
    """Integer-scaled value matrix (all values times the denominator lcm).

    Exact: comparisons between scaled sums agree with Fraction arithmetic.
    Cached on the game.
    """
    if game._scaled is None:
        scale = 1
        for row in game.matrix:
            for v in row:
                scale = scale * v.denominator // math.gcd(scale, v.denominator)
        rows = [[int(v * scale) for v in row] for row in game.matrix]
        game._scaled = rows
    return game._scaled


class Partition:
    """Disjoint coalitions; blocks kept in ascending-smallest-member order."""

    __slots__ = ("blocks", "_block_of")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        cleaned = []
        for b in blocks:
            fs = frozenset(b)
            if not fs:
                raise EmptyCoalition()
            cleaned.append(fs)
        block_of = {}
        for fs in cleaned:
            for p in fs:
                if p in block_of:
                    raise DuplicatePlayer(p)
                block_of[p] = fs
        self.blocks = tuple(sorted(cleaned, key=min))
        self._block_of = block_of

    def block_of(self, player: int) -> Coalition:
        try:
            return self._block_of[player]
        except KeyError:
            raise UnknownPlayer(player) from None

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls([p] for p in range(n))

    @classmethod
    def grand(cls, n: int) -> "Partition":
        return cls([range(n)])

    @classmethod
    def of_labels(cls, game: Game, groups: Iterable[Iterable[str]]) -> "Partition":
        return cls([game.index(lab) for lab in g] for g in groups)

    def players(self) -> frozenset:
        return frozenset(self._block_of)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return set(self.blocks) == set(other.blocks)

    def __hash__(self) -> int:
        return hash(frozenset(self.blocks))

    def __repr__(self) -> str:
        inner = " | ".join(" ".join(str(p) for p in sorted(b)) for b in self.blocks)
        return f"Partition({inner})"


def validate_partition(game: Game, partition) -> Partition:
    """Check that ``partition`` is a partition of the game's player set.

    Accepts a ``Partition`` or any iterable of coalitions. Raises
    ``DuplicatePlayer``, ``MissingPlayer``, ``UnknownPlayer``, or
    ``EmptyCoalition``; returns the validated ``Partition``.
    """
    if not isinstance(partition, Partition):
        partition = Partition(partition)
    covered = partition.players()
    for p in covered:
        game._check_player(p)
    for p in range(game.n):
        if p not in covered:
            raise MissingPlayer(p)
    return partition


def utility(game: Game, coalition: Iterable[int], player: int) -> Fraction:
    """Utility of ``player`` in ``coalition``: the sum of its values for the others."""
    members = frozenset(coalition)
    game._check_members(members)
    if player not in members:
        raise PlayerNotInCoalition(player)
    row = game.matrix[player]
    return sum((row[j] for j in members if j != player), Fraction(0))


def partition_utility(game: Game, partition: Partition, player: int) -> Fraction:
    part = validate_partition(game, partition)
    game._check_player(player)
    return utility(game, part.block_of(player), player)


def friends(game: Game, player: int, pool: Iterable[int]) -> frozenset:
    """Members of ``pool`` the player strictly likes (positive value)."""
    game._check_player(player)
    pool = frozenset(pool)
    game._check_members(pool)
    row = game.matrix[player]
    return frozenset(j for j in pool if row[j] > 0)


def is_symmetric(game: Game) -> bool:
    m = game.matrix
    n = game.n
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def is_strict(game: Game) -> bool:
    m = game.matrix
    n = game.n
    return all(m[i][j] != 0 for i in range(n) for j in range(n) if i != j)


def is_individually_rational(game: Game, partition: Partition) -> Tuple[bool, Optional[int]]:
    """Whether every player does at least as well as alone; else the lowest violator."""
    part = validate_partition(game, partition)
    rows = scaled_rows(game)
    for p in range(game.n):
        row = rows[p]
        if sum(row[j] for j in part.block_of(p)) < 0:
            return False, p
    return True, None
