"""Exception taxonomy shared by all modules.

Every error carries a stable ``code`` string so the CLI can emit
machine-readable diagnostics.
"""


class SgeoError(Exception):
    code = "Error"


class DimensionTooLarge(SgeoError):
    code = "DimensionTooLarge"


class DisconnectedFamily(SgeoError):
    code = "DisconnectedFamily"


class ParseError(SgeoError):
    code = "ParseError"


class IndexOutOfRange(SgeoError):
    code = "IndexOutOfRange"


class Unreachable(SgeoError):
    code = "Unreachable"


class GeodesicExplosion(SgeoError):
    code = "GeodesicExplosion"


class Disconnected(SgeoError):
    code = "Disconnected"


class MalformedWitness(SgeoError):
    code = "MalformedWitness"


class DiameterTooSmall(SgeoError):
    code = "DiameterTooSmall"


class SizeLimitExceeded(SgeoError):
    code = "SizeLimitExceeded"


class OutOfRange(SgeoError):
    code = "OutOfRange"


class AssignmentInfeasible(SgeoError):
    code = "AssignmentInfeasible"
