"""Exception hierarchy shared by the kernel and the λ front end."""

from __future__ import annotations


class KernelError(Exception):
    """Base class for every error raised by this package."""


class ScopeMismatch(KernelError):
    """Two scopes that must agree do not. Always a caller bug."""


class NoFactor(KernelError):
    """A thinning does not factor through the proposed base."""


class IndexOutOfRange(KernelError):
    pass


class NotSingleton(KernelError):
    """A variable leaf was requested from a thinning whose source is not a single kind."""


class FlagMismatch(KernelError):
    """Covers with different overlap flags cannot be concatenated."""


class Unreachable(KernelError):
    """A state the constructor discipline should make impossible (e.g. a variable
    that is both active and passive in a substitution)."""


class PathError(KernelError):
    """An error located at a path inside a term."""

    def __init__(self, path: tuple[str, ...] | list[str], message: str):
        self.path = tuple(path)
        self.message = message
        super().__init__(f"{self.where}: {message}")

    @property
    def where(self) -> str:
        return "/".join(self.path) if self.path else "<root>"


class ShapeError(PathError):
    """A term does not inhabit the interpretation of its description."""


class RelevanceError(PathError):
    """A co-de-Bruijn term carries a variable in its support that it never uses."""


class ParseError(KernelError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnboundName(KernelError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unbound name {name!r}")


class NoRedex(KernelError):
    """The term is β-normal."""


class OutOfFuel(KernelError):
    """Normalization ran out of fuel; ``partial`` is the term reached."""

    def __init__(self, partial, steps: int):
        self.partial = partial
        self.steps = steps
        super().__init__(f"out of fuel after {steps} steps")
