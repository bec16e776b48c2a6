"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible dimensions or valences."""


class SingularMatrixError(ValueError):
    """Inversion was attempted on a singular matrix."""


class SymmetryError(ValueError):
    """An input lacks a required symmetry or antisymmetry."""


class ExistenceError(ValueError):
    """The existence precondition of a construction does not hold."""


class ValidationError(ValueError):
    """A structure violates one of its defining identities."""


class StructureFileError(ValueError):
    """A structure file is malformed.  ``path`` points at the offending entry."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
