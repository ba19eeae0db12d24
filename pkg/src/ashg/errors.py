"""Exception hierarchy for the ashg package."""


class AshgError(Exception):
    """Base class for all errors raised by this package."""


class GameFormatError(AshgError):
    """A game, partition, or instance file could not be parsed."""


class UnknownPlayer(AshgError):
    def __init__(self, player):
        super().__init__(f"unknown player: {player!r}")
        self.player = player


class PlayerNotInCoalition(AshgError):
    def __init__(self, player):
        super().__init__(f"player {player!r} is not a member of the coalition")
        self.player = player


class InvalidPartition(AshgError):
    """The given set system is not a partition of the player set."""


class DuplicatePlayer(InvalidPartition):
    def __init__(self, player):
        super().__init__(f"player {player!r} appears in more than one coalition")
        self.player = player


class MissingPlayer(InvalidPartition):
    def __init__(self, player):
        super().__init__(f"player {player!r} is not covered by any coalition")
        self.player = player


class EmptyCoalition(InvalidPartition):
    def __init__(self):
        super().__init__("coalitions must be nonempty")


class EmptyGame(AshgError):
    def __init__(self):
        super().__init__("a game needs at least one player")


class TooLarge(AshgError):
    """An exhaustive search was refused because the game exceeds the cap."""

    def __init__(self, n, cap):
        super().__init__(f"{n} players exceeds the exhaustive-search cap of {cap}")
        self.n = n
        self.cap = cap


class InconsistentTrace(AshgError):
    """A solver trace does not replay to a valid partition of the game."""


class InvalidInstance(AshgError):
    """A source-problem instance violates its invariants."""


class NotACover(AshgError):
    """The selected triples are not an exact cover of the universe."""


class NotAnEqualSplit(AshgError):
    """The selected weights do not sum to half the total."""
