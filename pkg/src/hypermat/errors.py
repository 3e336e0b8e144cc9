"""Exception hierarchy.

Every domain error carries a short machine-readable ``code`` used by the
command-line front end when reporting failures.
"""


class HypermatError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class LengthMismatch(HypermatError):
    code = "length-mismatch"


class DimensionMismatch(HypermatError):
    code = "dimension-mismatch"


class ShapeMismatch(HypermatError):
    code = "shape-mismatch"


class FieldMismatch(HypermatError):
    code = "field-mismatch"


class BadPartition(HypermatError):
    code = "bad-partition"


class OrderTooLow(HypermatError):
    code = "order-too-low"


class ArityMismatch(HypermatError):
    code = "arity-mismatch"


class NotHypercubic(HypermatError):
    code = "not-hypercubic"


class NotHypersquare(HypermatError):
    code = "not-hypersquare"


class NotSquare(HypermatError):
    code = "not-square"


class MidMismatch(HypermatError):
    code = "mid-mismatch"


class MidsVectorMismatch(HypermatError):
    code = "mids-vector-mismatch"


class Singular(HypermatError):
    code = "singular"


class TallSlice(HypermatError):
    code = "tall-slice"


class TooLarge(HypermatError):
    code = "too-large"


class BadK(HypermatError):
    code = "bad-k"


class ZeroSliceVector(HypermatError):
    code = "zero-slice-vector"


class NotMember(HypermatError):
    code = "not-member"


class UnknownSuite(HypermatError):
    code = "unknown-suite"


class FormatError(HypermatError):
    """Raised for malformed input files; maps to the I/O exit code."""

    code = "format-error"
