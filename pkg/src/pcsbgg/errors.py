"""Exception types shared by every module."""


class InputError(ValueError):
    """Malformed or out-of-range input (bad rank, non-dominant weight, ...)."""


class ResourceGuardError(RuntimeError):
    """A computation would exceed one of the configured size guards."""
