"""Exception hierarchy shared by all qchannels modules."""


class QChannelsError(ValueError):
    """Base class for every error raised by qchannels."""


class NonSquareLength(QChannelsError):
    pass


class NonSquareSide(QChannelsError):
    pass


class ShapeMismatch(QChannelsError):
    pass


class DimensionMismatch(QChannelsError):
    pass


class NotHermitian(QChannelsError):
    pass


class NotUnitary(QChannelsError):
    pass


class NotOrthonormal(QChannelsError):
    pass


class EmptyKrausSet(QChannelsError):
    pass


class ParameterOutOfRange(QChannelsError):
    pass


class UnknownParameter(QChannelsError):
    pass
