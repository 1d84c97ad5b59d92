"""
Registry of named example structures and their parameter schemas
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from src.exceptions import InvalidParamsError, UnknownManifoldError
from src.geometry import StructureFields
from src.logging_config import get_module_logger

logger = get_module_logger("catalog")

ParamValue = float | int | tuple[float, ...]
Builder = Callable[..., StructureFields]


@dataclass(frozen=True)
class ParamSpec:
    """One builder parameter; its type follows the default value."""

    name: str
    default: ParamValue
    description: str
    positive: bool = False

    def coerce(self, value: Any, manifold: str) -> ParamValue:
        try:
            if isinstance(self.default, tuple):
                if isinstance(value, str):
                    value = value.split("/")
                elif not isinstance(value, (list, tuple)):
                    value = (value,)
                coerced: ParamValue = tuple(float(v) for v in value)
                values = coerced
            elif isinstance(self.default, int):
                coerced = int(value)
                values = (coerced,)
            else:
                coerced = float(value)
                values = (coerced,)
        except (TypeError, ValueError) as e:
            raise InvalidParamsError(f"{self.name}={value!r} ({e})", manifold) from e

        if self.positive and any(v <= 0 for v in values):
            raise InvalidParamsError(f"{self.name} must be positive, got {value!r}", manifold)
        return coerced

    def schema(self) -> str:
        default = (
            "/".join(f"{v:g}" for v in self.default)
            if isinstance(self.default, tuple)
            else f"{self.default:g}"
        )
        return f"{self.name}={default}"


@dataclass(frozen=True)
class ManifoldSpec:
    """A registered instance: builder, parameters and what it is used for."""

    name: str
    description: str
    builder: Builder
    params: tuple[ParamSpec, ...] = ()
    almost_hermitian: bool = False
    box: float | None = None

    def resolve_params(self, overrides: dict[str, Any] | None = None) -> dict[str, ParamValue]:
        """
        Defaults merged with overrides, coerced to the declared types.

        Raises:
            InvalidParamsError: On unknown keys or out-of-range values
        """
        overrides = dict(overrides or {})
        known = {p.name: p for p in self.params}
        unknown = sorted(set(overrides) - set(known))
        if unknown:
            raise InvalidParamsError(
                f"unknown parameter(s) {', '.join(unknown)}; expected {', '.join(known) or 'none'}",
                self.name,
            )
        return {
            name: spec.coerce(overrides.get(name, spec.default), self.name)
            for name, spec in known.items()
        }


@dataclass(frozen=True)
class ManifoldInstance:
    """A spec bound to concrete parameters."""

    spec: ManifoldSpec
    params: dict[str, ParamValue]
    fields: StructureFields = field(compare=False)

    @property
    def name(self) -> str:
        return self.spec.name

    @property
    def dim(self) -> int:
        return self.fields.dim

    def report_params(self) -> dict[str, Any]:
        """JSON-friendly parameters (tuples become lists)."""
        return {k: list(v) if isinstance(v, tuple) else v for k, v in self.params.items()}

    def label(self) -> str:
        if not self.params:
            return self.name
        parts = []
        for key, value in self.params.items():
            shown = "/".join(f"{v:g}" for v in value) if isinstance(value, tuple) else f"{value:g}"
            parts.append(f"{key}={shown}")
        return f"{self.name}:{','.join(parts)}"


_REGISTRY: dict[str, ManifoldSpec] = {}


def register(
    name: str,
    description: str,
    params: tuple[ParamSpec, ...] = (),
    almost_hermitian: bool = False,
    box: float | None = None,
) -> Callable[[Builder], Builder]:
    """Decorator registering a builder under `name`."""

    def decorate(builder: Builder) -> Builder:
        if name in _REGISTRY:
            raise ValueError(f"Manifold '{name}' registered twice")
        _REGISTRY[name] = ManifoldSpec(name, description, builder, params, almost_hermitian, box)
        return builder

    return decorate


def get_spec(name: str) -> ManifoldSpec:
    if name not in _REGISTRY:
        raise UnknownManifoldError(name, sorted(_REGISTRY))
    return _REGISTRY[name]


def resolve(name: str, params: dict[str, Any] | None = None) -> ManifoldInstance:
    """
    Look up a manifold and build its fields.

    Raises:
        UnknownManifoldError: If the name is not registered
        InvalidParamsError: If the parameters are rejected
    """
    spec = get_spec(name)
    resolved = spec.resolve_params(params)
    fields = spec.builder(**resolved)
    logger.debug(f"Instantiated {name} with {resolved} (dim {fields.dim})")
    return ManifoldInstance(spec, resolved, fields)


def instantiate(name: str, params: dict[str, Any] | None = None) -> StructureFields:
    """StructureFields of a registered manifold."""
    return resolve(name, params).fields


def list_manifolds() -> list[ManifoldSpec]:
    return [_REGISTRY[name] for name in sorted(_REGISTRY)]


def parse_manifold_arg(text: str) -> tuple[str, dict[str, str]]:
    """
    Split "NAME:k=v,k2=a/b" into the name and raw parameter strings.

    Raises:
        InvalidParamsError: On a parameter without '='
    """
    name, _, rest = text.partition(":")
    name = name.strip()
    params: dict[str, str] = {}
    for item in filter(None, (part.strip() for part in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise InvalidParamsError(f"expected k=v, got '{item}'", name)
        params[key.strip()] = value.strip()
    return name, params
