"""Exception hierarchy shared by the engine and the CLI."""


class LiaisonError(Exception):
    """Base class for every engine error.

    The CLI prints ``<ClassName>: <message>`` and exits with status 1.
    """


class WindowUnderflow(LiaisonError):
    pass


class InconsistentProfile(LiaisonError):
    pass


class NotOnSurfaces(LiaisonError):
    pass


class DegenerateResidual(LiaisonError):
    pass


class PreconditionViolated(LiaisonError):
    pass


class TowerStepError(LiaisonError):
    def __init__(self, index, cause):
        self.index = index
        self.cause = cause
        super().__init__(f"step r={index} failed: {type(cause).__name__}: {cause}")


class RankInconsistent(LiaisonError):
    pass


class NotACurveResolution(LiaisonError):
    pass


class UnsupportedHeight(LiaisonError):
    pass


class RecursionMismatch(LiaisonError):
    pass


class NonInteger(LiaisonError):
    pass


class UnknownFamily(LiaisonError):
    pass
