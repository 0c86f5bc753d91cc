"""Exception hierarchy shared by every layer of the kernel."""


class DlnlError(Exception):
    """Base class for all kernel errors."""


class ParseError(DlnlError):
    """Malformed input text; carries a character position when known."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class SortError(DlnlError):
    """A linear construct appeared where a non-linear one was required, or dually."""


class RuleMismatch(DlnlError):
    """A proof node does not match its rule schema; carries the node path."""

    def __init__(self, path, message):
        self.path = tuple(path)
        super().__init__(f"at node {'/'.join(map(str, path)) or '<root>'}: {message}")


class ArityError(RuleMismatch):
    """Wrong number of premises for a rule."""


class AdditiveContextError(RuleMismatch):
    """Minor premises of a coproduct elimination have unequal succedent shapes."""


class ShapeMismatch(DlnlError):
    """Two contexts that must be shape-equal are not."""


class BinderError(DlnlError):
    """A bound-occurrence term has no matching binder in its judgment."""


class PreconditionViolated(DlnlError):
    """An operation was invoked outside its stated precondition."""


class NotARedex(DlnlError):
    """The addressed position does not match the requested reduction rule."""


class NotACommute(DlnlError):
    """The addressed site does not match any commuting-conversion schema."""


class UnboundAtom(DlnlError):
    """A formula mentions an atom the valuation does not cover."""


class TooManyAtoms(DlnlError):
    """Exhaustive valuation sweep requested over too many atoms."""


class FuelExhausted(DlnlError):
    """Normalization ran out of fuel; carries the partial result."""

    def __init__(self, partial):
        self.partial = partial
        super().__init__("normalization fuel exhausted")
