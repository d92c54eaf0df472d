"""Exception hierarchy shared by the codecs and the command line."""


class NmiHideError(Exception):
    """Base class for all library errors."""

    code = "ERROR"
    exit_status = 1


class BadImageError(NmiHideError):
    code = "BAD_IMAGE"
    exit_status = 4


class DimensionError(BadImageError):
    """Image too small, wrong shape for a stego image, or out-of-bounds crop."""


class PgmError(BadImageError):
    """Base class for binary graymap parse failures."""


class MalformedHeaderError(PgmError):
    pass


class MaxvalError(PgmError):
    pass


class TruncatedDataError(PgmError):
    code = "IO"
    exit_status = 5


class CapacityError(NmiHideError):
    code = "CAPACITY_EXCEEDED"
    exit_status = 2

    def __init__(self, available: int, required: int):
        super().__init__(f"available={available} required={required}")
        self.available = available
        self.required = required


class CorruptStreamError(NmiHideError):
    code = "CORRUPT_STREAM"
    exit_status = 3
