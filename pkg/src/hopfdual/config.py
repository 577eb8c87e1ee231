"""Run configuration: per-family defaults, an optional YAML file, then CLI overrides."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Mapping

import yaml

from hopfdual.errors import ParameterError
from hopfdual.families.base import FamilyAlgebra
from hopfdual.families.dmx import DAlgebra, DParams, dihedral_algebra
from hopfdual.families.liu import LiuAlgebra, LiuParams
from hopfdual.families.taft import TaftAlgebra, TaftParams
from hopfdual.scalars.cyclotomic import CycloContext, CycloScalar, get_context, lcm_orders, parse_scalar, required_order

__all__ = [
    "ALL_SUITES",
    "Bounds",
    "FamilyDefaults",
    "RunConfig",
    "available_families",
    "load_yaml",
]

logger = logging.getLogger(__name__)

ALL_SUITES = (
    "hopf-axioms",
    "dual-lemmas",
    "theta",
    "pairing-axioms",
    "gram",
    "proof-matrix",
    "matrix-lemmas",
    "scalars",
)


@dataclass(frozen=True)
class Bounds:
    """Sizes of the basis slices and word sets every suite works on.

    ``j_max`` bounds |j| for Liu and D bases, ``l_max`` the x-degree for Taft.
    """

    j_max: int = 2
    l_max: int = 4
    s_max: int = 1
    word_length: int = 2
    gram_n: int = 1
    r: int = 1
    pair_count: int = 60

    def __post_init__(self) -> None:
        for item in fields(self):
            value = getattr(self, item.name)
            if value < 0:
                raise ParameterError(f"bound '{item.name}' must be non-negative", f"{item.name}={value}")
        if self.gram_n < 1:
            raise ParameterError("N >= 1", f"N={self.gram_n}")
        if self.r < 1:
            raise ParameterError("r must be positive", f"r={self.r}")


@dataclass(frozen=True)
class FamilyDefaults:
    key: str
    description: str
    params: dict[str, int]
    samples: tuple[str, ...]
    proof_samples: tuple[str, ...]
    bounds: Bounds


_FAMILY_DEFAULTS: dict[str, FamilyDefaults] = {
    "taft": FamilyDefaults(
        key="taft",
        description="Infinite-dimensional Taft algebra T(n, v, xi), xi a primitive n-th root.",
        params={"n": 3, "v": 1},
        samples=("0", "1", "2", "zeta3^1"),
        proof_samples=("0", "5"),
        bounds=Bounds(l_max=6, word_length=3),
    ),
    "liu": FamilyDefaults(
        key="liu",
        description="Generalized Liu algebra B(n, omega, gamma), gamma a primitive n-th root.",
        params={"n": 2, "omega": 2},
        samples=("1", "2"),
        proof_samples=("3",),
        bounds=Bounds(j_max=4, word_length=3, r=2),
    ),
    "dmx": FamilyDefaults(
        key="dmx",
        description="D(m, d, xi) with (1+m)d even, xi a primitive 2m-th root.",
        params={"m": 3, "d": 1},
        samples=("1", "2", "zeta6^1"),
        proof_samples=("2",),
        bounds=Bounds(j_max=3, word_length=2),
    ),
    "dihedral": FamilyDefaults(
        key="dihedral",
        description="The infinite dihedral group algebra, realized as D(1, 1, -1).",
        params={},
        samples=("2", "3"),
        proof_samples=("2",),
        bounds=Bounds(j_max=3, word_length=2),
    ),
}

_REQUIRED_PARAMS = {"taft": ("n", "v"), "liu": ("n", "omega"), "dmx": ("m", "d"), "dihedral": ()}


def available_families() -> list[str]:
    return sorted(_FAMILY_DEFAULTS)


def _default_root(family: str, params: Mapping[str, int]) -> str:
    if family == "dihedral":
        return "-1"
    if family == "dmx":
        return f"zeta{2 * params['m']}^1"
    return f"zeta{params['n']}^1"


def _family_order(family: str, params: Mapping[str, int]) -> int:
    if family == "taft":
        return params["n"]
    if family == "liu":
        return lcm_orders(params["n"], params["omega"])
    if family == "dmx":
        # 2omega-th and 2m-th roots are needed by the twisted proof matrices
        return 2 * params["m"] * params["d"]
    return 2


@dataclass(frozen=True)
class RunConfig:
    family: str
    params: dict[str, int] = field(default_factory=dict)
    root: str | None = None
    bounds: Bounds = field(default_factory=Bounds)
    samples: tuple[str, ...] = ()
    proof_samples: tuple[str, ...] = ()
    suites: tuple[str, ...] = ALL_SUITES
    output: Path | None = None
    summary: Path | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_DEFAULTS:
            raise ParameterError(
                f"unknown family '{self.family}'", f"expected one of {', '.join(available_families())}"
            )
        missing = [name for name in _REQUIRED_PARAMS[self.family] if name not in self.params]
        if missing:
            raise ParameterError(f"missing parameter(s) for {self.family}: {', '.join(missing)}")
        if any(value <= 0 for key, value in self.params.items() if key != "v"):
            raise ParameterError("family parameters must be positive", str(self.params))
        unknown = [suite for suite in self.suites if suite not in ALL_SUITES]
        if unknown:
            raise ParameterError(f"unknown suite(s): {', '.join(unknown)}", f"expected {', '.join(ALL_SUITES)}")

    # -- construction ---------------------------------------------------------------

    @classmethod
    def for_family(cls, family: str, **overrides: Any) -> RunConfig:
        """Family defaults with ``overrides`` applied; ``None`` values are ignored."""

        defaults = _FAMILY_DEFAULTS.get(family)
        if defaults is None:
            raise ParameterError(f"unknown family '{family}'", f"expected one of {', '.join(available_families())}")
        base = cls(
            family=family,
            params=dict(defaults.params),
            bounds=defaults.bounds,
            samples=defaults.samples,
            proof_samples=defaults.proof_samples,
        )
        return base.merged(overrides)

    def merged(self, overrides: Mapping[str, Any]) -> RunConfig:
        """A copy with non-None ``overrides`` applied; bounds and params merge key-wise."""

        changes: dict[str, Any] = {}
        for key, value in overrides.items():
            if value is None:
                continue
            if key == "params":
                changes["params"] = {**self.params, **_int_mapping(key, value)}
            elif key == "bounds":
                current = asdict(changes.get("bounds", self.bounds))
                given = _int_mapping(key, value)
                unknown = sorted(set(given) - set(current))
                if unknown:
                    raise ParameterError(f"unknown bound(s): {', '.join(unknown)}", f"expected {', '.join(current)}")
                current.update(given)
                changes["bounds"] = Bounds(**current)
            elif key in ("samples", "proof_samples", "suites"):
                if not isinstance(value, (list, tuple)):
                    raise ParameterError(f"'{key}' must be a list", repr(value))
                changes[key] = tuple(str(item) for item in value)
            elif key in ("output", "summary"):
                changes[key] = Path(value)
            elif key in ("root", "family"):
                changes[key] = str(value)
            elif key == "seed":
                changes[key] = _as_int(key, value)
            else:
                raise ParameterError(f"unknown configuration key '{key}'")
        return replace(self, **changes)

    @classmethod
    def from_sources(cls, family: str | None, yaml_path: Path | None, overrides: Mapping[str, Any]) -> RunConfig:
        """Defaults, then the YAML file, then explicit overrides (later wins)."""

        loaded = load_yaml(yaml_path) if yaml_path is not None else {}
        family = family or loaded.get("family")
        loaded = {key: value for key, value in loaded.items() if key != "family"}
        if family is None:
            raise ParameterError("a family is required", f"expected one of {', '.join(available_families())}")
        if not isinstance(family, str):
            raise ParameterError("family must be a name", repr(family))
        config = cls.for_family(family, **loaded)
        return config.merged(overrides)

    # -- derived objects ------------------------------------------------------------

    @property
    def root_text(self) -> str:
        return self.root or _default_root(self.family, self.params)

    @property
    def order(self) -> int:
        texts = (self.root_text, *self.samples, *self.proof_samples)
        return lcm_orders(_family_order(self.family, self.params), *(required_order(t) for t in texts))

    def context(self) -> CycloContext:
        return get_context(self.order)

    def scalars(self, texts: tuple[str, ...]) -> list[CycloScalar]:
        ctx = self.context()
        return [parse_scalar(text, ctx) for text in texts]

    def build_algebra(self) -> FamilyAlgebra:
        ctx = self.context()
        root = parse_scalar(self.root_text, ctx)
        p = self.params
        if self.family == "taft":
            return TaftAlgebra(TaftParams(p["n"], p["v"], root))
        if self.family == "liu":
            return LiuAlgebra(LiuParams(p["n"], p["omega"], root))
        if self.family == "dmx":
            return DAlgebra(DParams(p["m"], p["d"], root))
        return dihedral_algebra(ctx)

    @property
    def basis_bound(self) -> int:
        return self.bounds.l_max if self.family == "taft" else self.bounds.j_max

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "params": {key: str(value) for key, value in self.params.items()},
            "root": self.root_text,
            "order": self.order,
            "bounds": asdict(self.bounds),
            "samples": list(self.samples),
            "proof_samples": list(self.proof_samples),
            "suites": list(self.suites),
            "seed": self.seed,
        }


def _as_int(name: str, value: Any) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ParameterError(f"'{name}' must be an integer", repr(value)) from None


def _int_mapping(name: str, value: Any) -> dict[str, int]:
    if not isinstance(value, Mapping):
        raise ParameterError(f"'{name}' must be a mapping", repr(value))
    return {str(k): _as_int(f"{name}.{k}", v) for k, v in value.items() if v is not None}


def load_yaml(path: Path) -> dict[str, Any]:
    """Read a run file; top-level keys mirror RunConfig fields."""

    try:
        data = yaml.safe_load(Path(path).read_text()) or {}
    except yaml.YAMLError as exc:
        raise ParameterError(f"invalid YAML in {path}", str(exc)) from exc
    if not isinstance(data, dict):
        raise ParameterError(f"{path} must contain a mapping")
    logger.debug("loaded configuration keys %s from %s", sorted(data), path)
    return data
