"""Exception hierarchy shared across the package."""


class WreError(Exception):
    """Base class for package errors."""


class ResourceLimitError(WreError):
    """System size exceeds the configured memory/compute cap."""


class EstimatorError(WreError):
    """A sampling estimator could not produce a usable value."""


class InsufficientShotsError(EstimatorError):
    """All protocol shots returned 0; -ln(mean) is undefined.

    Carries a one-sided (Clopper-Pearson style) upper confidence bound on
    the success probability so callers can still report a WRE lower bound.
    """

    def __init__(self, shots, confidence=0.95):
        self.shots = shots
        self.confidence = confidence
        # P(0 successes) = (1-p)^shots = 1-confidence at the bound
        self.p_upper_bound = 1.0 - (1.0 - confidence) ** (1.0 / shots)
        super().__init__(
            f"all {shots} shots returned outcome 0; success probability "
            f"<= {self.p_upper_bound:.3g} at {confidence:.0%} confidence"
        )


class StateFileError(WreError):
    """Base class for state-file loading problems."""


class StateFileParseError(StateFileError):
    """File is not valid JSON or lacks the required fields."""


class AmplitudeCountError(StateFileError):
    """Amplitude list length does not match 2**n_qubits."""


class NormalizationError(StateFileError):
    """State vector norm is outside tolerance."""
