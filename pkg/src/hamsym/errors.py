"""Exception types shared across the package.

Every error raised by the library derives from HamsymError so callers can
catch the whole family at once.  The CLI maps these onto stable exit codes.
"""


class HamsymError(Exception):
    """Base class for all library errors."""


class SelfLoopError(HamsymError):
    """An edge list contained a self-loop."""


class VertexOutOfRangeError(HamsymError):
    """An edge endpoint was outside 0..n-1."""


class CapExceededError(HamsymError):
    """A configured size or enumeration cap was exceeded.

    Carries the partial result when one is meaningful.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class MalformedHeaderError(HamsymError):
    """graph6 input did not start with a valid size header."""


class TrailingGarbageError(HamsymError):
    """graph6 input had bytes left over after the adjacency bits."""


class EdgeNotPresentError(HamsymError):
    """An operation was given an edge that is not in the graph."""


class DegreeMismatchError(HamsymError):
    """Two permutations of different degree were combined."""


class NotAPermutationError(HamsymError):
    """An image array was not a bijection on 0..n-1."""


class TooSmallError(HamsymError):
    """A family constructor was given a parameter below its minimum."""


class TooLargeError(HamsymError):
    """Input exceeds a hard algorithmic bound (e.g. the counting DP's n <= 20)."""


class NotGeneratingError(HamsymError):
    """The connection set does not generate the group."""


class ContainsIdentityError(HamsymError):
    """The connection set contains the group identity."""


class NotInverseClosedError(HamsymError):
    """The connection set is not closed under negation."""


class NotCubicError(HamsymError):
    """Truncation requires a 3-regular input graph."""


class NotApplicableError(HamsymError):
    """A structural hypothesis of the requested decomposition fails."""


class NotHamiltonianError(HamsymError):
    """The graph has no Hamiltonian cycle."""


class NotACycleOfGError(HamsymError):
    """The given vertex sequence is not a Hamiltonian cycle of the graph."""


class SpecOutOfRangeError(HamsymError):
    """A zigzag parameter tuple is outside its allowed ranges."""


class LayersNotOddError(HamsymError):
    """Zigzag cycles are only defined for an odd number of layers l >= 5."""


class FactorNotHamiltonianError(HamsymError):
    """A product-cycle construction needs both factors to be Hamiltonian."""


class DisconnectedError(HamsymError):
    """The operation is only defined for connected graphs."""


class InconclusiveError(HamsymError):
    """Caps or budgets were hit before a decision was reached.

    Carries the partial ClassReport (if any) as `partial`.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class BudgetExceededError(HamsymError):
    """A census run exceeded its overall time budget.

    Carries the partial report as `partial`.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
