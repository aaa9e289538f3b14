"""Exception hierarchy.

``ValidationError`` subclasses mean bad input (CLI exit code 2);
``IdentityViolation`` subclasses mean the engine computed something that
contradicts a proven identity (exit code 3).
"""


class MonodefError(Exception):
    pass


class ValidationError(MonodefError, ValueError):
    pass


class IdentityViolation(MonodefError, ArithmeticError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, location=None):
        self.location = location
        where = f" at {location}" if location else ""
        super().__init__(f"{message}{where}")


class NotAssociative(ValidationError):
    def __init__(self, i, j, k, defect):
        self.triple = (i, j, k)
        self.defect = defect
        super().__init__(f"(e{i} e{j}) e{k} != e{i} (e{j} e{k}); defect {defect}")


class UnitLawFailed(ValidationError):
    def __init__(self, side, i):
        self.side, self.index = side, i
        super().__init__(f"{side} unit law fails on basis element {i}")


class NotCoassociative(ValidationError):
    def __init__(self, i, defect):
        self.index, self.defect = i, defect
        super().__init__(f"coassociativity fails on basis element {i}")


class CounitLawFailed(ValidationError):
    def __init__(self, side, i):
        self.side, self.index = side, i
        super().__init__(f"{side} counit law fails on basis element {i}")


class NotBialgebraMorphism(ValidationError):
    def __init__(self, what, indices=()):
        self.what, self.indices = what, tuple(indices)
        super().__init__(f"{what} is not multiplicative/unital at {self.indices}")


class ModelMismatch(ValidationError):
    pass


class OverlappingPlacements(ValidationError):
    pass


class DegreeOverflow(ValidationError):
    pass


class NotSymmetricCapable(ValidationError):
    pass


class WrongBase(ValidationError):
    pass


class JetInvalid(ValidationError):
    def __init__(self, order, defect=None):
        self.order, self.defect = order, defect
        super().__init__(f"deformation equation fails at order {order}")


class OrderTooLow(ValidationError):
    pass


class NotACocycle(ValidationError):
    def __init__(self, defect):
        self.defect = defect
        super().__init__("cochain is not a cocycle")


class InternalCocycleFailure(IdentityViolation):
    pass
