"""Exception hierarchy shared by all modules."""


class ThreeArcError(Exception):
    """Base class for every error raised by this package."""


class LoopArc(ThreeArcError, ValueError):
    pass


class CapExceeded(ThreeArcError):
    pass


class ChromaticMismatch(ThreeArcError, ValueError):
    pass


class ImproperInput(ThreeArcError, ValueError):
    pass


class NotTournament(ThreeArcError, ValueError):
    pass


class TooSmall(ThreeArcError, ValueError):
    pass


class CaseNotCovered(ThreeArcError):
    """No case of the net lemma applies to the given cardinalities."""


class ConstructionError(ThreeArcError):
    """A constructive step could not be carried out on this input."""


class NoOrientation(ConstructionError):
    pass


class MissingChoice(ConstructionError):
    pass


class ConstructionFailed(ConstructionError):
    pass


class ExtractionIncomplete(ThreeArcError):
    """Raised when extraction could not reach the colouring bound.

    Carries the best verified certificate found so far and the label of the
    pipeline stage that failed.
    """

    def __init__(self, message, certificate=None, label=None, trace=()):
        super().__init__(message)
        self.certificate = certificate
        self.label = label
        self.trace = list(trace)
