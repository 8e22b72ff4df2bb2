"""Exception hierarchy shared by all subsystems.

Every domain error raised on purpose derives from :class:`CCTError`, so the
CLI can map them to exit code 1 with a structured JSON payload.
"""


class CCTError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def payload(self):
        return {"type": self.code, "message": str(self)}


class InvalidCurveError(CCTError):
    code = "invalid-curve"


class FieldError(CCTError):
    code = "field-error"


class LinalgError(CCTError):
    code = "linalg-error"


class PresentationError(CCTError):
    code = "presentation-error"


class WingUndefinedError(CCTError):
    code = "wing-undefined"


class NotBranchError(CCTError):
    code = "not-a-branch-module"


class LocalizationError(CCTError):
    code = "localization-error"


class PointSetError(CCTError):
    code = "point-set-error"


class SlopeError(CCTError):
    code = "slope-error"


class BoundarySlopeError(SlopeError):
    code = "boundary-slope"


class NotTubularError(CCTError):
    code = "not-tubular"


class ReprTypeError(CCTError):
    code = "representation-type-error"


class MetadataError(CCTError):
    code = "missing-structural-metadata"
