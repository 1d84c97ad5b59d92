"""
Custom exceptions for torsion-lab
"""


class TorsionLabError(Exception):
    """Base exception for all torsion-lab errors"""

    pass


# ---------------------------------------------------------------------------
# Geometry
# ---------------------------------------------------------------------------


class GeometryError(TorsionLabError):
    """Pointwise geometry could not be assembled"""

    pass


class DegenerateMetricError(GeometryError):
    """Raised when det g is numerically zero at a chart point."""

    def __init__(self, determinant: float, threshold: float):
        self.determinant = determinant
        self.threshold = threshold
        super().__init__(f"Degenerate metric: |det g| = {abs(determinant):.3e} < {threshold:.3e}")


class NonFiniteError(GeometryError):
    """Raised when a field or partial contains NaN or infinity."""

    def __init__(self, what: str):
        self.what = what
        super().__init__(f"Non-finite values in {what}")


class NotSelfAdjointError(GeometryError):
    """Raised when f² is not self-adjoint with respect to g."""

    def __init__(self, residual: float, threshold: float):
        self.residual = residual
        self.threshold = threshold
        super().__init__(
            f"f^2 is not g-self-adjoint: residual {residual:.3e} exceeds {threshold:.3e}"
        )


class KernelSplitUnavailableError(GeometryError):
    """Raised when a formula needs the ker f splitting but it was not computed."""

    pass


class SymmetryError(GeometryError):
    """Raised when a tensor violates its declared index symmetry."""

    def __init__(self, symmetry: str, residual: float):
        self.symmetry = symmetry
        self.residual = residual
        super().__init__(f"Tensor is not {symmetry}: residual {residual:.3e}")


# ---------------------------------------------------------------------------
# Closed-form torsion
# ---------------------------------------------------------------------------


class TorsionFormulaError(TorsionLabError):
    """A closed-form torsion formula cannot be applied at this point"""

    pass


class SingularPError(TorsionFormulaError):
    """Raised when P = I - f² is not invertible."""

    def __init__(self, determinant: float):
        self.determinant = determinant
        super().__init__(f"P = I - f^2 is singular: |det P| = {abs(determinant):.3e}")


class NotAlmostHermitianError(TorsionFormulaError):
    """Raised when the Hermitian formula is used but f² != -I."""

    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"f^2 + I does not vanish: residual {residual:.3e}")


class StructureMismatchError(TorsionFormulaError):
    """Raised when f does not match the structure a formula was written for."""

    pass


class ReebNotParallelError(TorsionFormulaError):
    """
    Raised when the almost contact metric formula meets a Reeb field that is
    not parallel for the Levi-Civita connection.
    """

    def __init__(self, residual: float, threshold: float):
        self.residual = residual
        self.threshold = threshold
        super().__init__(
            f"Reeb field is not parallel: |nabla xi| = {residual:.3e} exceeds {threshold:.3e}"
        )


class InvalidLambdaError(TorsionFormulaError):
    """Raised when a weighted-product factor carries lambda <= 0."""

    def __init__(self, value: float):
        self.value = value
        super().__init__(f"Factor weight must be positive, got lambda = {value}")


# ---------------------------------------------------------------------------
# Identities
# ---------------------------------------------------------------------------


class IdentityError(TorsionLabError):
    """An identity could not be evaluated"""

    pass


class MissingInputError(IdentityError):
    """Raised when an identity needs an input (T, K, connection, Reeb data) that is absent."""

    def __init__(self, identity: str, missing: str):
        self.identity = identity
        self.missing = missing
        super().__init__(f"Identity {identity} needs {missing}")


class HypothesisNotMetError(IdentityError):
    """Raised when a conditional identity is evaluated outside its hypothesis."""

    def __init__(self, identity: str, hypothesis: str, residual: float):
        self.identity = identity
        self.hypothesis = hypothesis
        self.residual = residual
        super().__init__(
            f"Hypothesis '{hypothesis}' of {identity} not met (residual {residual:.3e})"
        )


class PreconditionNotMetError(IdentityError):
    """Raised when a chain or delta table is evaluated without the f²-torsion condition."""

    def __init__(self, message: str, residual: float | None = None):
        self.residual = residual
        super().__init__(message)


# ---------------------------------------------------------------------------
# Catalog and run
# ---------------------------------------------------------------------------


class CatalogError(TorsionLabError):
    """Catalog lookup or sampling failed"""

    pass


class UnknownManifoldError(CatalogError):
    """Raised when a manifold name is not registered."""

    def __init__(self, name: str, available: list[str] | None = None):
        self.name = name
        self.available = available or []
        super().__init__(f"Unknown manifold '{name}'")

    def get_user_guidance(self) -> str:
        """List the registered manifolds"""
        if not self.available:
            return "Run with --list-manifolds to see the catalog."
        return "Available manifolds:\n" + "\n".join(f"  - {n}" for n in self.available)


class InvalidParamsError(CatalogError):
    """Raised when manifold parameters are out of range or of the wrong shape."""

    def __init__(self, message: str, manifold: str | None = None):
        self.manifold = manifold
        if manifold:
            super().__init__(f"Invalid parameters for '{manifold}': {message}")
        else:
            super().__init__(f"Invalid parameters: {message}")


class SamplingExhaustedError(CatalogError):
    """Raised when rejection sampling cannot find enough admissible points."""

    def __init__(self, manifold: str, accepted: int, requested: int, draws: int):
        self.manifold = manifold
        self.accepted = accepted
        self.requested = requested
        self.draws = draws
        super().__init__(
            f"Sampling on '{manifold}' exhausted: {accepted}/{requested} points "
            f"accepted after {draws} draws"
        )


class UnknownSuiteError(TorsionLabError):
    """Raised when a suite name is not registered."""

    def __init__(self, name: str, available: list[str] | None = None):
        self.name = name
        self.available = available or []
        super().__init__(f"Unknown suite '{name}'")

    def get_user_guidance(self) -> str:
        """List the registered suites"""
        return "Available suites:\n" + "\n".join(f"  - {n}" for n in self.available)


class ConfigurationError(TorsionLabError):
    """
    Raised when required configuration values are missing or invalid.

    Missing required values are caught early rather than silently falling back
    to hardcoded defaults.
    """

    def __init__(self, message: str, config_key: str | None = None):
        self.config_key = config_key
        if config_key:
            super().__init__(f"Configuration error for '{config_key}': {message}")
        else:
            super().__init__(f"Configuration error: {message}")
