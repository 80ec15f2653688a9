"""Exception types shared across the package."""


class PosetError(Exception):
    """Base class for invalid poset construction or queries."""


class CycleError(PosetError):
    """The closure of a cover relation is not antisymmetric."""


class DuplicateLabelError(PosetError):
    pass


class UnknownLabelError(PosetError, KeyError):
    pass


class PosetAxiomError(PosetError):
    """An explicitly given relation is not a partial order."""


class EmptySetError(PosetError, ValueError):
    pass


class NotAChainError(PosetError, ValueError):
    pass


class NotSubsetError(PosetError, ValueError):
    pass


class PartialMapError(PosetError, ValueError):
    pass


class CorrespondenceError(ValueError):
    """A correspondence has an empty image or refers to unknown elements."""


class BudgetExceeded(Exception):
    """No violation was found, but some chains were above the size budget.

    This is not a failure: it only separates "verified exhaustively" from
    "verified up to the budget".
    """

    def __init__(self, skipped: int, max_chain_size: int):
        self.skipped = skipped
        self.max_chain_size = max_chain_size
        super().__init__(
            f"{skipped} chain(s) longer than {max_chain_size} were not checked"
        )


class SeedNotExpansive(ValueError):
    def __init__(self, e: int):
        self.e = e
        super().__init__(f"seed element {e} has no z in F(e) with z >= e")


class StuckError(Exception):
    """No z in F(x) with z >= x exists at a reached point x."""

    def __init__(self, x: int, diagnostic: str):
        self.x = x
        self.diagnostic = diagnostic
        super().__init__(diagnostic)


class InvariantError(AssertionError):
    """A replayed proof step did not hold."""


class TooLarge(ValueError):
    pass


class NoTopElement(ValueError):
    pass


class EmptyChain(ValueError):
    pass


class InvalidDescriptor(ValueError):
    pass
