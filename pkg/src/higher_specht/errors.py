"""Exception types shared by every module."""


class InvalidArgument(ValueError):
    """An input violates an operation's precondition."""


class InternalInconsistency(RuntimeError):
    """A computed result contradicts a structural guarantee (signals a bug)."""
