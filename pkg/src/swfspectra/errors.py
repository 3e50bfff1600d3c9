"""Domain exceptions.

Every error carries a stable ``code`` string; the CLI reports it verbatim.
"""


class SWFError(Exception):
    code = "SWFError"


class UnsupportedStem(SWFError):
    code = "UnsupportedStem"


class UnsupportedMorphismGroup(SWFError):
    code = "UnsupportedMorphismGroup"


class NonIntegralDimension(SWFError):
    code = "NonIntegralDimension"


class UnresolvedAttachment(SWFError):
    code = "UnresolvedAttachment"


class AmbiguousExtension(SWFError):
    code = "AmbiguousExtension"


class MissingFlowCounts(SWFError):
    code = "MissingFlowCounts"


class InvalidBrieskornParameter(SWFError):
    code = "InvalidBrieskornParameter"


class NonCoprimeParameters(SWFError):
    code = "NonCoprimeParameters"


class ParityViolation(SWFError):
    code = "ParityViolation"


class BasisMismatch(SWFError):
    code = "BasisMismatch"


class DegreeMismatch(SWFError):
    code = "DegreeMismatch"


class InvalidPresentation(SWFError):
    code = "InvalidPresentation"
