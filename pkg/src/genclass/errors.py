"""Exception hierarchy shared across the package.

Every error raised by library code derives from GenclassError so callers
(and the CLI) can distinguish our failures from genuine bugs.
"""


class GenclassError(Exception):
    """Base class for all genclass errors."""


class ArgumentError(GenclassError):
    """A caller-supplied argument is invalid (bad value, empty list, ...)."""


class DecodeError(GenclassError):
    """An image file could not be decoded."""


class ShapeError(GenclassError):
    """An array has the wrong shape or mismatched dimensions."""


class RangeError(GenclassError):
    """Pixel values do not match the declared value range."""


class EmptyClassError(GenclassError):
    """A dataset class directory or split contains no usable images."""


class ManifestError(GenclassError):
    """A dataset manifest is malformed (duplicate classes, bad entries)."""


class ConfigError(GenclassError):
    """A training / evaluation configuration violates its invariants."""


class LabelError(GenclassError):
    """A class label index is out of range for the given centers or head."""


class EmptyTripletError(GenclassError):
    """No valid (anchor, positive, negative) triple exists in the pool."""


class DuplicateClassError(GenclassError):
    """A class label is already present in the template library."""


class VersionError(GenclassError):
    """A template library and a model come from different model versions."""


class EmptyLibraryError(GenclassError):
    """The template library has no entries to match against."""


class DegenerateLabelsError(GenclassError):
    """A binary metric was asked for with only one label class present."""


class DegenerateResidualError(GenclassError):
    """A residual has zero variance and cannot be correlation-normalized."""


class DivergenceError(GenclassError):
    """Training produced a non-finite loss.

    Carries the last checkpoint that was still finite so callers can
    recover partial progress.
    """

    def __init__(self, message, last_checkpoint=None):
        super().__init__(message)
        self.last_checkpoint = last_checkpoint
