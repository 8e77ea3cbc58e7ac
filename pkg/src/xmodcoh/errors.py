"""Exception types shared across the package."""


class NotAGroup(ValueError):
    """A Cayley table violates a group axiom."""

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        msg = reason if witness is None else f"{reason} (witness {witness})"
        super().__init__(msg)


class NotASubgroup(ValueError):
    pass


class NotNormal(ValueError):
    pass


class NotAHomomorphism(ValueError):
    pass


class NotAnAction(ValueError):
    pass


class OrderBoundExceeded(ValueError):
    pass


class NotCentrable(ValueError):
    """Conditions (i)/(ii) of quasi-abelianness fail, so there is no center complex."""


class NotQuasiAbelian(ValueError):
    pass


class NoUniqueTranslate(RuntimeError):
    """The H^2(Z(G)) action on the lien fiber is not simply transitive."""


class BudgetExceeded(RuntimeError):
    def __init__(self, estimate, budget):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"enumeration needs ~{estimate} candidate evaluations, budget is {budget}"
        )
