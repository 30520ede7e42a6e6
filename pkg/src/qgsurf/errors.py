"""Exception hierarchy shared across the package."""


class QgsurfError(Exception):
    """Base class for all package errors."""


class SchemaError(QgsurfError):
    """Malformed input document: unknown field, missing field, bad type."""


class UnknownCurveError(QgsurfError):
    """A curve name does not resolve in the configuration."""


class ValidationError(QgsurfError):
    """A configuration failed validation; carries the violation list."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class ExcessMultiplicityError(QgsurfError):
    """Blow-up branches demand more local intersection than the pairing has."""


class NegativeGenusError(QgsurfError):
    """Blow-up multiplicity would push a curve's arithmetic genus below 0."""


class SingularMatrixError(QgsurfError):
    """solve_unique was given a square matrix with zero determinant."""


class NotSymmetricError(QgsurfError):
    """A symmetric matrix was required."""


class InvalidFractionError(QgsurfError):
    """chain_from_fraction needs m > q >= 1 with gcd(m, q) = 1."""


class NotClassTError(QgsurfError):
    """index() was asked for a chain the recognizer rejects."""


class UnknownTagError(QgsurfError):
    """Unrecognized Kodaira fiber tag."""


class UnknownExampleError(QgsurfError):
    """No built-in example with that name."""


class MissingPointDataError(QgsurfError):
    """A positive pairing entry inside an SNC divisor has no declared points."""


class CurveContractedError(QgsurfError):
    """pullback_degree was asked for a curve inside a contracted chain."""


class PlanInvalidError(QgsurfError):
    """A contraction plan with outstanding violations was used for invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class DomainError(QgsurfError):
    """Operation invoked outside its stated domain (e.g. chi != 1)."""
