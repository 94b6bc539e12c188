"""Exception types shared across the package."""


class EnumerationCapError(ValueError):
    """An enumeration or moment computation exceeds its configured size cap."""


class GroundSetError(ValueError):
    """Two combinatorial objects live on different ground sets."""


class TruncationOverflowError(RuntimeError):
    """A creation operator would push a word past the truncation level.

    Raised instead of silently projecting: vacuum expectations are exact
    only while every intermediate word fits under the level bound.
    """
