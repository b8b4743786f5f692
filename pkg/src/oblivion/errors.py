"""Exception types shared across the package."""

from __future__ import annotations


class OblivionError(Exception):
    """Base class for all errors raised by this package."""


class FormulaSyntaxError(OblivionError):
    """Malformed formula text; `position` is the 1-based column of the fault."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (position {position})")
        self.position = position


class UnknownAtomError(OblivionError):
    """A formula or world mentions an atom outside the signature at hand."""

    def __init__(self, atom: str, context: str = "") -> None:
        suffix = f" in {context}" if context else ""
        super().__init__(f"unknown atom {atom!r}{suffix}")
        self.atom = atom


class SignatureError(OblivionError):
    """Invalid signature: bad atom name, duplicate atom, or size cap exceeded."""


class SignatureMismatchError(OblivionError):
    """Two values that must share (or nest) signatures do not."""


class FileFormatError(OblivionError):
    """Malformed .kb or .ocf input; `line` is the 1-based line number."""

    def __init__(self, message: str, line: int, source: str = "<string>") -> None:
        super().__init__(f"{source}:{line}: {message}")
        self.line = line
        self.source = source


class OcfValidationError(OblivionError):
    """Ranking is not total over the signature's worlds or not normalized."""


class InconsistentBeliefsError(OblivionError):
    """An operation requiring a consistent belief state got an empty one."""


class SizeCapError(OblivionError):
    """A brute-force sweep was requested beyond its enforced size cap."""


class OperatorContractError(OblivionError):
    """A forgetting operator returned a result over the wrong signature."""
