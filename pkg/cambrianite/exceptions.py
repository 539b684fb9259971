class CambrianiteError(Exception):
    pass


class JobSpecError(CambrianiteError, ValueError):
    pass


class NonFinite(CambrianiteError, ValueError):
    pass


class GroupTooLarge(CambrianiteError):
    pass


class SystemMismatch(CambrianiteError, ValueError):
    pass


class DimensionMismatch(CambrianiteError, ValueError):
    pass


class NotSortable(CambrianiteError, ValueError):
    pass


class LabelConflict(CambrianiteError):
    pass


class SingularCone(CambrianiteError, ArithmeticError):
    pass


class PointingViolation(CambrianiteError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class CommutationClassTooLarge(CambrianiteError):
    pass


class NotInterior(CambrianiteError, ValueError):
    pass


class NotCrystallographic(CambrianiteError, ValueError):
    pass


class BasePointNotInLattice(CambrianiteError, ValueError):
    pass


class UnknownRoot(CambrianiteError, ValueError):
    pass
