"""Physical-constant registry and the derived cosmological quantities.

Default values reproduce a fixed historical constant set (2006 CODATA
plus the Chandra X-ray measurement of the Hubble constant, 77 km/s/Mpc)
so that downstream reference numbers are reproducible; every entry can
be overridden at load time. All stored values are SI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from .errors import BadOverride
from .quantity import (
    ACTION,
    DENSITY,
    Dimension,
    Exponent,
    FREQUENCY,
    GRAVITATIONAL,
    LENGTH,
    MASS,
    Quantity,
    SPEED,
    TIME,
    UncertainQuantity,
    propagate,
)

SPEED_OF_LIGHT = 2.99792458e8  # m/s, exact

# I/O conversion factors only; internal values are always SI.
LIGHTMINUTE_M = 60.0 * SPEED_OF_LIGHT
LIGHTYEAR_M = SPEED_OF_LIGHT * 365.25 * 86400.0  # julian year
MPC_M = 3.26e6 * LIGHTYEAR_M  # megaparsec via the 3.26e6 lightyear convention
DAY_S = 86400.0
SOLAR_MASS_KG = 1.98e30


@dataclass(frozen=True)
class PhysicalConstant:
    """A named constant with value, dimension and relative uncertainty."""

    name: str
    quantity: UncertainQuantity
    source: str = ""

    @property
    def value(self) -> float:
        return self.quantity.value

    @property
    def rel_sigma(self) -> float:
        return self.quantity.rel_sigma


# name -> (value, dimension, rel_sigma, source)
_DEFAULTS: Sequence[Tuple[str, float, Dimension, float, str]] = (
    ("c", SPEED_OF_LIGHT, SPEED, 0.0, "CODATA 2006 (exact)"),
    ("G", 6.67428e-11, GRAVITATIONAL, 1e-4, "CODATA 2006"),
    ("hbar", 1.054571628e-34, ACTION, 5e-5, "CODATA 2006"),
    ("H", 2.49e-18, FREQUENCY, 0.15, "Chandra X-ray Observatory, 77 km/s/Mpc"),
    ("M_sun", SOLAR_MASS_KG, MASS, 0.0, "solar mass"),
    ("day", DAY_S, TIME, 0.0, "mean solar day"),
    ("t", DAY_S, TIME, 0.0, "default energy-budget window (1 day)"),
    ("ell", 8.0 * LIGHTMINUTE_M, LENGTH, 0.0, "8 lightminutes (Earth-Sun distance)"),
    ("r_p", 1.616e-35, LENGTH, 0.0, "Planck length, CODATA"),
)

_NAMES = tuple(name for name, *_ in _DEFAULTS)


class ConstantRegistry(Mapping[str, PhysicalConstant]):
    """Immutable name -> PhysicalConstant mapping."""

    def __init__(self, constants: Iterable[PhysicalConstant]):
        table = {}
        for constant in constants:
            if constant.name in table:
                raise BadOverride(f"duplicate constant name {constant.name!r}")
            table[constant.name] = constant
        self._table = table

    def __getitem__(self, name: str) -> PhysicalConstant:
        try:
            return self._table[name]
        except KeyError:
            raise BadOverride(f"unknown constant {name!r}") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._table)

    def __len__(self) -> int:
        return len(self._table)

    def quantity(self, name: str) -> UncertainQuantity:
        return self[name].quantity

    def value(self, name: str) -> float:
        return self[name].value

    def rel_sigma(self, name: str) -> float:
        return self[name].rel_sigma


def load_registry(overrides: Optional[Mapping[str, float]] = None) -> ConstantRegistry:
    """Build the registry, applying value and uncertainty overrides.

    Override keys are constant names for values (SI units) and
    ``e_<name>`` for relative standard uncertainties. Unknown names,
    non-positive values and negative uncertainties raise BadOverride.
    """
    values = {name: value for name, value, _, _, _ in _DEFAULTS}
    sigmas = {name: rel for name, _, _, rel, _ in _DEFAULTS}
    sources = {name: src for name, _, _, _, src in _DEFAULTS}
    dims = {name: dim for name, _, dim, _, _ in _DEFAULTS}

    for key, raw in (overrides or {}).items():
        try:
            val = float(raw)
        except (TypeError, ValueError):
            raise BadOverride(f"override {key!r} is not a number: {raw!r}") from None
        if key.startswith("e_"):
            name = key[2:]
            if name not in values:
                raise BadOverride(f"unknown constant {name!r} in override {key!r}")
            if val < 0.0 or not math.isfinite(val):
                raise BadOverride(f"negative or non-finite uncertainty {key} = {val!r}")
            sigmas[name] = val
            sources[name] = "override"
        else:
            if key not in values:
                raise BadOverride(f"unknown constant {key!r}")
            if val <= 0.0 or not math.isfinite(val):
                raise BadOverride(f"constant {key} must be positive, got {val!r}")
            values[key] = val
            sources[key] = "override"

    return ConstantRegistry(
        PhysicalConstant(name, UncertainQuantity(values[name], sigmas[name], dims[name]),
                         sources[name])
        for name in _NAMES
    )


# config files: one "name = value [unit]" per line, '#' comments.
_UNIT_TABLE: Mapping[str, Tuple[float, Dimension]] = {
    "m": (1.0, LENGTH),
    "kg": (1.0, MASS),
    "s": (1.0, TIME),
    "1/s": (1.0, FREQUENCY),
    "s^-1": (1.0, FREQUENCY),
    "m/s": (1.0, SPEED),
    "km/s/Mpc": (1e3 / MPC_M, FREQUENCY),
    "Mpc": (MPC_M, LENGTH),
    "lightyear": (LIGHTYEAR_M, LENGTH),
    "lightminute": (LIGHTMINUTE_M, LENGTH),
    "lightminutes": (LIGHTMINUTE_M, LENGTH),
    "day": (DAY_S, TIME),
    "days": (DAY_S, TIME),
    "Msun": (SOLAR_MASS_KG, MASS),
}

_DIM_BY_NAME = {name: dim for name, _, dim, _, _ in _DEFAULTS}


def parse_config(text: str) -> dict[str, float]:
    """Parse override config text into an SI override mapping."""
    overrides: dict[str, float] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BadOverride(f"line {lineno}: expected 'name = value [unit]': {raw_line!r}")
        name, rhs = (part.strip() for part in line.split("=", 1))
        tokens = rhs.replace("[", " ").replace("]", " ").split()
        if not tokens or len(tokens) > 2:
            raise BadOverride(f"line {lineno}: expected 'name = value [unit]': {raw_line!r}")
        try:
            value = float(tokens[0])
        except ValueError:
            raise BadOverride(f"line {lineno}: bad number {tokens[0]!r}") from None
        if len(tokens) == 2:
            unit = tokens[1]
            if name.startswith("e_"):
                raise BadOverride(f"line {lineno}: uncertainties are dimensionless")
            if unit not in _UNIT_TABLE:
                raise BadOverride(f"line {lineno}: unknown unit {unit!r}")
            factor, dim = _UNIT_TABLE[unit]
            expected = _DIM_BY_NAME.get(name)
            if expected is not None and dim != expected:
                raise BadOverride(
                    f"line {lineno}: unit {unit!r} has dimension {dim}, "
                    f"constant {name!r} needs {expected}")
            value *= factor
        overrides[name] = value
    return overrides


def load_config(path: Union[str, Path]) -> dict[str, float]:
    return parse_config(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class CosmologyContext:
    """A constant registry plus the derived cosmological quantities.

    The critical density and Hubble radius are recomputed from the
    registry on every access, never cached, so overrides propagate.
    """

    registry: ConstantRegistry

    @classmethod
    def default(cls, overrides: Optional[Mapping[str, float]] = None) -> "CosmologyContext":
        return cls(load_registry(overrides))

    def constant(self, name: str) -> UncertainQuantity:
        return self.registry.quantity(name)

    def value(self, name: str) -> float:
        return self.registry.value(name)

    def quantity(self, name: str) -> Quantity:
        return self.registry.quantity(name).quantity()

    def product(self, powers: Mapping[str, Exponent], coeff: float = 1.0,
                extra: Iterable[Tuple[UncertainQuantity, Exponent]] = ()) -> UncertainQuantity:
        """Propagate a product of powers of registry constants.

        Derived quantities must be expressed in the base constants so
        shared dependencies (everything depends on H) are counted once.
        """
        terms = [(UncertainQuantity(coeff), 1)]
        terms += [(self.constant(name), p) for name, p in powers.items()]
        terms += list(extra)
        return propagate(terms)

    @property
    def rho_crit(self) -> UncertainQuantity:
        """Critical density 3*H**2/(8*pi*G), kg/m^3."""
        return self.product({"H": 2, "G": -1}, coeff=3.0 / (8.0 * math.pi))

    @property
    def hubble_radius(self) -> UncertainQuantity:
        """World radius R = c/H, the scale of the largest eddies, m."""
        return self.product({"c": 1, "H": -1})


def critical_density(ctx: CosmologyContext) -> UncertainQuantity:
    """rho_crit = 3*H**2/(8*pi*G) with uncertainty from H and G."""
    rho = ctx.rho_crit
    assert rho.dim == DENSITY
    return rho


def hubble_radius(ctx: CosmologyContext) -> UncertainQuantity:
    """R = c/H with uncertainty from H (c is exact)."""
    radius = ctx.hubble_radius
    assert radius.dim == LENGTH
    return radius
