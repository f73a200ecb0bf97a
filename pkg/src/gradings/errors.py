"""Exception hierarchy shared by all modules.

Every error carries a stable machine-readable ``name`` (used in CLI reports)
and a ``kind`` that maps to the CLI exit code: "schema" -> 2,
"precondition" -> 3, "certification" -> 1.
"""


class GradingsError(Exception):
    name = "Error"
    kind = "precondition"

    def __init__(self, message="", **data):
        super().__init__(message or self.name)
        self.data = data


class SchemaError(GradingsError):
    name = "SchemaError"
    kind = "schema"


class CertificationError(GradingsError):
    name = "CertificationFailed"
    kind = "certification"


# scalar / linear algebra
class NoSuchRoot(GradingsError):
    name = "NoSuchRoot"


class FieldTooSmall(GradingsError):
    name = "FieldTooSmall"


# abelian groups
class IllDefined(GradingsError):
    name = "IllDefined"


class InfiniteGroup(GradingsError):
    name = "InfiniteGroup"


class NoLift(GradingsError):
    name = "NoLift"


# algebras
class NotAnIdeal(GradingsError):
    name = "NotAnIdeal"


class ZeroQuotient(GradingsError):
    name = "ZeroQuotient"


class NotSemisimple(GradingsError):
    name = "NotSemisimple"


class Inconclusive(GradingsError):
    name = "Inconclusive"


# gradings
class NotDirectSum(GradingsError):
    name = "NotDirectSum"


class NotClosed(GradingsError):
    name = "NotClosed"


class NotGroupGrading(GradingsError):
    name = "NotGroupGrading"


class NotGradedSubalgebra(GradingsError):
    name = "NotGradedSubalgebra"


class IncompatibleDegrees(GradingsError):
    name = "IncompatibleDegrees"


# loop algebras
class InfiniteKernel(GradingsError):
    name = "InfiniteKernel"


class NotSurjective(GradingsError):
    name = "NotSurjective"


class BaseNotUniversal(GradingsError):
    name = "BaseNotUniversal"


class CentroidNotGraded(GradingsError):
    name = "CentroidNotGraded"


class CharDividesKernel(GradingsError):
    name = "CharDividesKernel"


class CharCoprime(GradingsError):
    name = "CharCoprime"


class NeedIsoCertificate(GradingsError):
    name = "NeedIsoCertificate"


# classification
class UnsupportedField(GradingsError):
    name = "UnsupportedField"


class NotSl2(GradingsError):
    name = "NotSl2"


class UnrecognizedGrading(GradingsError):
    name = "UnrecognizedGrading"


class MissingFinenessFlag(GradingsError):
    name = "MissingFinenessFlag"
