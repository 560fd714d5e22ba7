"""Exception types raised across the package."""


class TransferError(ValueError):
    """Base class for all validation errors raised by this package."""


class BoundsError(TransferError):
    pass


class SizeMismatch(TransferError):
    pass


class EmptyPoset(TransferError):
    pass


class _MissingPair(TransferError):
    def __init__(self, missing, msg=None):
        self.missing = tuple(missing)
        super().__init__(msg or f"missing pair {self.missing}")


class NotTransitive(_MissingPair):
    def __init__(self, missing):
        super().__init__(missing, f"not transitive: missing {tuple(missing)}")


class RestrictionViolated(_MissingPair):
    def __init__(self, missing):
        super().__init__(missing, f"restriction condition fails: missing {tuple(missing)}")


class InfeasibleSize(TransferError):
    pass


class InvalidParams(TransferError):
    pass


class IncompatiblePair(TransferError):
    pass


class InvalidTuple(TransferError):
    pass


class NegativeEntry(InvalidTuple):
    pass


class TrailingZero(InvalidTuple):
    pass


class PrefixDominanceViolated(InvalidTuple):
    def __init__(self, index):
        self.index = index
        super().__init__(f"prefix sum through index {index} does not exceed {index}")


class EmptyTuple(InvalidTuple):
    pass


class ExcessExceeded(InvalidTuple):
    pass


class LevelOutOfRange(TransferError):
    pass
