"""Exception and warning types shared across the pipeline."""


class BrandMatchError(Exception):
    """Base class for all errors raised by this package."""


class MalformedFileError(BrandMatchError):
    """A metadata file is not a JSON array or carries a field of the wrong type/value."""


class ScoreLengthMismatchError(BrandMatchError):
    """`image_contents` and `image_scores` differ in length: corrupted upstream classification."""


class MissingProfileFileError(BrandMatchError):
    """A username listed in the user-list file has no metadata file."""


class UnknownTargetError(BrandMatchError):
    """The requested target username is not in the user list."""


class DuplicateUsernameError(BrandMatchError):
    """The user list names the same username twice."""


class EmptyCorpusError(BrandMatchError):
    """No document contributed a single token; there is nothing to match on."""


class DimensionMismatchError(BrandMatchError):
    """Operands have incompatible shapes."""


class TargetOutOfRangeError(BrandMatchError):
    """Target row index outside the matrix."""


class SingletonSetError(BrandMatchError):
    """Fewer than two profiles: no neighbors exist."""


class AsymmetricInputError(BrandMatchError):
    """A distance matrix is not symmetric."""


class NonzeroDiagonalError(BrandMatchError):
    """A distance matrix has a nonzero diagonal."""


class UnknownCategoryError(BrandMatchError):
    """A category name is not known to the receiver (plot order or fixture spec)."""


class OverlappingPoolsError(BrandMatchError):
    """Fixture tag pools share tokens across categories."""


class DegenerateEmbeddingWarning(UserWarning):
    """Both leading eigenvalues were non-positive; the 2-D embedding collapsed to zero."""
