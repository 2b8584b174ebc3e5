"""Exception types shared by the library and the CLI."""


class DomainError(ValueError):
    """Invalid parameters, or an element outside a channel's domain."""


class ResourceError(RuntimeError):
    """An enumeration or search guard was exceeded."""

    def __init__(self, message, size=None):
        super().__init__(message)
        self.size = size
