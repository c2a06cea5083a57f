"""Exception types shared across the engine."""


class HopfkitError(Exception):
    """Base class for all engine errors."""


class IncompatibleTruncation(HopfkitError):
    """Arithmetic between scalars with clashing series truncations."""


class NonInvertibleSubstitution(HopfkitError):
    """A negative parameter power was substituted with a non-monomial."""


class DivergenceError(HopfkitError):
    """A limit p -> 0 hit terms with negative powers of p."""

    def __init__(self, param, witnesses):
        self.param = param
        self.witnesses = list(witnesses)
        super().__init__(
            f"divergent terms in {param}: " + ", ".join(str(w) for w in self.witnesses[:4])
        )


class ForeignGenerator(HopfkitError):
    """An element mentions a generator unknown to the presentation."""


class RewriteBudgetExceeded(HopfkitError):
    """The rewrite step budget was exhausted (non-terminating rule set?)."""


class NonClosedExponential(HopfkitError):
    """exp(c*a) cannot be adjoined exactly: some [g, a] fails to commute with a."""


class NoSeriesData(HopfkitError):
    """A group-like generator has no exponential expansion data."""


class UnderdeterminedDual(HopfkitError):
    """Dualization left free coefficients at the configured degree bound."""


class ModuleAxiomViolation(HopfkitError):
    """The supplied action is not a Hopf module(-algebra) action."""


class ComoduleAxiomViolation(HopfkitError):
    """The supplied coaction is not a comodule coaction."""


class CocycleConditionViolation(HopfkitError):
    """A (dual) two-cocycle fails its cocycle identity."""


class AntipodeUnsolvable(HopfkitError):
    """No antipode value satisfies the antipode axiom for an extension generator."""


class NonInvertiblePlan(HopfkitError):
    """A rescaling plan's generator map cannot be inverted."""


class NotFound(HopfkitError):
    """Unknown catalog name; carries a nearest-name suggestion."""

    def __init__(self, name, suggestion=None):
        self.name = name
        self.suggestion = suggestion
        msg = f"no catalog entry named {name!r}"
        if suggestion:
            msg += f" (did you mean {suggestion!r}?)"
        super().__init__(msg)


class ParseError(HopfkitError):
    """DSL syntax or semantic error with source position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)
