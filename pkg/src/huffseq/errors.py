"""Exception types raised by the library.

Every error carries a short kebab-case ``code`` so the command line can
report failures in a machine-readable field.
"""

from __future__ import annotations


class HuffmanError(ValueError):
    code = "error"


class InvalidLength(HuffmanError):
    code = "invalid-length"


class InvalidScale(HuffmanError):
    code = "invalid-scale"


class DegenerateScale(HuffmanError):
    code = "degenerate-scale"


class PoleSingularity(HuffmanError):
    code = "pole-singularity"


class SynthesisFailure(HuffmanError):
    code = "synthesis-failure"


class RotationFailure(SynthesisFailure):
    code = "rotation-failure"


class OutOfRangeShift(HuffmanError):
    code = "out-of-range-shift"


class WrongMode(HuffmanError):
    code = "wrong-mode"


class InvalidIdentityCase(HuffmanError):
    code = "invalid-identity-case"


class DegenerateInput(HuffmanError):
    code = "degenerate-input"


class DegeneratePolynomial(HuffmanError):
    code = "degenerate-polynomial"


class SeriesUndefined(HuffmanError):
    code = "series-undefined"


class BoundUndefined(HuffmanError):
    code = "bound-undefined"


class RootAccuracy(HuffmanError):
    code = "root-accuracy"
