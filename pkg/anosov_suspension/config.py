# -*- coding: utf-8 -*-

"""
Run configuration.

A run is described by a plain-text INI file (``configparser``)::

    [source]
    matrix = 2 1 1 1
    ceiling = trig
    c0 = 1.0
    terms = 0.2:1:0, 0.1:0:1:0.3

    [conjugacy]
    kind = linear
    matrix = 1 1 0 1

    [target]
    ceiling = trig
    c0 = 1.5
    terms = 0.3:1:1

Every value is parsed and validated up front; any problem raises
:class:`~anosov_suspension.exc.ConfigError` naming the ``section.key``.
"""

import typing as T
import re
import math
import configparser
import dataclasses
from pathlib import Path

from .constants import (
    BumpShapeEnum,
    CeilingKindEnum,
    ConjugacyKindEnum,
    DEFAULT_PLATEAU_DELTA,
    DEFAULT_SEED,
    DEFAULT_SAMPLES,
    DEFAULT_EQUIVALENCE_TOLERANCE,
    DEFAULT_SMOOTH_TOLERANCE,
    DEFAULT_T_RANGE,
    DEFAULT_FD_STEP,
    DEFAULT_CHART_STEP,
)
from .exc import AnosovSuspensionError, ConfigError, ConjugacyMismatch
from .torus import HyperbolicToralMap, IntMatrix2, BaseConjugacy
from .ceiling import CeilingFunction, CosineTerm
from .suspension import SuspensionSystem
from .equivalence import EquivalencePair
from .smoothing.reparam import SmoothedEquivalence

PUSHFORWARD = "pushforward"

ALLOWED_KEYS: T.Dict[str, T.Set[str]] = {
    "source": {"matrix", "translation", "ceiling", "c0", "terms", "alpha"},
    "target": {"matrix", "translation", "ceiling", "c0", "terms", "alpha"},
    "conjugacy": {"kind", "matrix", "offset"},
    "smoothing": {"shape", "delta"},
    "run": {"seed", "samples", "workers", "out", "t_range"},
    "flow": {"x1", "x2", "height", "t_stop", "t_step"},
    "verification": {"tolerance", "smooth_tolerance"},
    "probe": {
        "fd_step",
        "chart_step",
        "interior_samples",
        "section_samples",
        "fibers",
        "fiber_points",
    },
}

DEMO_CONFIG = """
[source]
matrix = 2 1 1 1
ceiling = trig
c0 = 1.0
terms = 0.2:1:0, 0.1:0:1:0.3

[conjugacy]
kind = linear
matrix = 1 1 0 1

[target]
ceiling = trig
c0 = 1.5
terms = 0.3:1:1, 0.1:0:1
"""


@dataclasses.dataclass(frozen=True)
class SmoothingOptions:
    shape: BumpShapeEnum = BumpShapeEnum.plateau
    delta: float = DEFAULT_PLATEAU_DELTA


@dataclasses.dataclass(frozen=True)
class RunOptions:
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    workers: int = 1
    out: T.Optional[str] = None
    t_range: float = DEFAULT_T_RANGE


@dataclasses.dataclass(frozen=True)
class FlowOptions:
    x1: float = 0.5
    x2: float = 0.5
    height: float = 0.0
    t_stop: float = 5.0
    t_step: float = 0.5

    def times(self) -> T.List[float]:
        """
        ``0, t_step, ..., t_stop``; the end point is included.
        """
        n = int(math.floor(self.t_stop / self.t_step + 1e-9))
        return [i * self.t_step for i in range(n + 1)]


@dataclasses.dataclass(frozen=True)
class VerificationOptions:
    tolerance: float = DEFAULT_EQUIVALENCE_TOLERANCE
    smooth_tolerance: float = DEFAULT_SMOOTH_TOLERANCE


@dataclasses.dataclass(frozen=True)
class ProbeOptions:
    fd_step: float = DEFAULT_FD_STEP
    chart_step: float = DEFAULT_CHART_STEP
    interior_samples: int = 100
    section_samples: int = 50
    fibers: int = 4
    fiber_points: int = 101


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """
    A validated run. ``target_map`` is derived from the conjugacy when
    ``None``; ``target_ceiling`` is ``c_f∘h^-1`` when ``None``.
    """

    source_map: HyperbolicToralMap = dataclasses.field()
    source_ceiling: CeilingFunction = dataclasses.field()
    conjugacy: BaseConjugacy = dataclasses.field()
    target_map: T.Optional[HyperbolicToralMap] = dataclasses.field(default=None)
    target_ceiling: T.Optional[CeilingFunction] = dataclasses.field(default=None)
    smoothing: SmoothingOptions = dataclasses.field(default_factory=SmoothingOptions)
    run: RunOptions = dataclasses.field(default_factory=RunOptions)
    flow: FlowOptions = dataclasses.field(default_factory=FlowOptions)
    verification: VerificationOptions = dataclasses.field(
        default_factory=VerificationOptions
    )
    probe: ProbeOptions = dataclasses.field(default_factory=ProbeOptions)

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        parser = configparser.ConfigParser(
            interpolation=None,
            inline_comment_prefixes=("#", ";"),
        )
        # keys are case sensitive
        parser.optionxform = str
        try:
            parser.read_string(text)
        except configparser.Error as e:
            raise ConfigError("<file>", f"malformed config: {e}")
        return parse_config(parser)

    @classmethod
    def from_path(cls, path: T.Union[str, Path]) -> "RunConfig":
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError("<file>", f"cannot read {path}: {e}")
        return cls.from_text(text)

    @classmethod
    def demo(cls) -> "RunConfig":
        return cls.from_text(DEMO_CONFIG)

    def with_overrides(self, **kwargs) -> "RunConfig":
        """
        Apply command line overrides. ``None`` values are ignored; keys are
        option names of the form ``seed``, ``samples``, ``shape``, ...
        """
        sections = {
            "smoothing": self.smoothing,
            "run": self.run,
            "verification": self.verification,
        }
        changes: T.Dict[str, T.Dict[str, T.Any]] = dict()
        for key, value in kwargs.items():
            if value is None:
                continue
            for name, options in sections.items():
                if key in {f.name for f in dataclasses.fields(options)}:
                    changes.setdefault(name, dict())[key] = value
                    break
            else:
                raise ConfigError(key, "unknown override")
        new = {
            name: validate_options(name, dataclasses.replace(sections[name], **kw))
            for name, kw in changes.items()
        }
        return dataclasses.replace(self, **new)

    def source_system(self) -> SuspensionSystem:
        return SuspensionSystem(map=self.source_map, ceiling=self.source_ceiling)

    def build_pair(self) -> EquivalencePair:
        source = self.source_system()
        h = self.conjugacy
        target_map = self.target_map
        if target_map is None:
            target_map = h.conjugate_map(self.source_map)
        target_ceiling = self.target_ceiling
        if target_ceiling is None:
            target_ceiling = h.push_ceiling(self.source_ceiling)
        target = SuspensionSystem(map=target_map, ceiling=target_ceiling)
        try:
            return EquivalencePair(source=source, target=target, h=h)
        except ConjugacyMismatch as e:
            raise ConfigError("target.matrix", str(e))

    def build_smoothed(self) -> SmoothedEquivalence:
        return SmoothedEquivalence(
            pair=self.build_pair(),
            shape=self.smoothing.shape,
            delta=self.smoothing.delta,
        )

    def to_text(self) -> str:
        """
        Serialize back to the INI form read by :meth:`from_text`.
        """
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str
        parser["source"] = {
            **_map_to_text(self.source_map),
            **self.source_ceiling.to_text(),
        }
        h = self.conjugacy
        conjugacy = {"kind": h.kind.value}
        if h.kind in (ConjugacyKindEnum.linear, ConjugacyKindEnum.affine):
            conjugacy["matrix"] = _matrix_to_text(h.b_matrix)
        if h.kind is ConjugacyKindEnum.affine:
            conjugacy["offset"] = _vec_to_text(h.offset)
        parser["conjugacy"] = conjugacy
        target = dict()
        if self.target_map is not None:
            target.update(_map_to_text(self.target_map))
        if self.target_ceiling is None:
            target["ceiling"] = PUSHFORWARD
        else:
            target.update(self.target_ceiling.to_text())
        parser["target"] = target
        for name in ("smoothing", "run", "flow", "verification", "probe"):
            options = getattr(self, name)
            parser[name] = {
                f.name: _scalar_to_text(getattr(options, f.name))
                for f in dataclasses.fields(options)
                if getattr(options, f.name) is not None
            }
        lines = list()
        for section in parser.sections():
            lines.append(f"[{section}]")
            for key, value in parser[section].items():
                lines.append(f"{key} = {value}")
            lines.append("")
        return "\n".join(lines)


# ------------------------------------------------------------------------------
# parsing helpers
# ------------------------------------------------------------------------------
def _split(text: str) -> T.List[str]:
    return [part for part in re.split(r"[\s,;]+", text.strip()) if part]


def _parse_int(key: str, text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ConfigError(key, f"expected an integer, got {text!r}")


def _parse_float(key: str, text: str) -> float:
    try:
        value = float(text.strip())
    except ValueError:
        raise ConfigError(key, f"expected a number, got {text!r}")
    if not math.isfinite(value):
        raise ConfigError(key, f"expected a finite number, got {text!r}")
    return value


def _parse_matrix(key: str, text: str) -> IntMatrix2:
    parts = _split(text)
    if len(parts) != 4:
        raise ConfigError(key, f"expected 4 integers 'a b c d', got {text!r}")
    a, b, c, d = (_parse_int(key, part) for part in parts)
    try:
        return IntMatrix2(a=a, b=b, c=c, d=d)
    except AnosovSuspensionError as e:
        raise ConfigError(key, str(e))


def _parse_vec(key: str, text: str) -> T.Tuple[float, float]:
    parts = _split(text)
    if len(parts) != 2:
        raise ConfigError(key, f"expected 2 numbers, got {text!r}")
    return (_parse_float(key, parts[0]), _parse_float(key, parts[1]))


def _parse_map(
    section: str,
    values: T.Mapping[str, str],
) -> T.Optional[HyperbolicToralMap]:
    if "matrix" not in values:
        if "translation" in values:
            raise ConfigError(f"{section}.translation", "given without a matrix")
        return None
    matrix = _parse_matrix(f"{section}.matrix", values["matrix"])
    translation = (0.0, 0.0)
    if "translation" in values:
        translation = _parse_vec(f"{section}.translation", values["translation"])
    try:
        return HyperbolicToralMap(matrix=matrix, translation=translation)
    except AnosovSuspensionError as e:
        raise ConfigError(f"{section}.matrix", str(e))


def _parse_ceiling(
    section: str,
    values: T.Mapping[str, str],
    allow_pushforward: bool,
) -> T.Optional[CeilingFunction]:
    kind = values.get("ceiling", PUSHFORWARD if allow_pushforward else None)
    key = f"{section}.ceiling"
    if kind is None:
        raise ConfigError(key, "missing")
    kind = kind.strip()
    if kind == PUSHFORWARD and allow_pushforward:
        for extra in ("c0", "terms", "alpha"):
            if extra in values:
                raise ConfigError(f"{section}.{extra}", "not used by a pushforward ceiling")
        return None
    if kind not in {e.value for e in CeilingKindEnum}:
        raise ConfigError(key, f"unknown ceiling kind {kind!r}")
    if "c0" not in values:
        raise ConfigError(f"{section}.c0", "missing")
    c0 = _parse_float(f"{section}.c0", values["c0"])
    alpha = None
    if "alpha" in values:
        alpha = _parse_float(f"{section}.alpha", values["alpha"])
    try:
        if kind == CeilingKindEnum.constant.value:
            if "terms" in values:
                raise ConfigError(f"{section}.terms", "a constant ceiling has no terms")
            ceiling = CeilingFunction.constant(c0)
            if alpha is not None and alpha != ceiling.alpha:
                ceiling = dataclasses.replace(ceiling, alpha=alpha)
            return ceiling
        terms = [
            CosineTerm.from_text(chunk)
            for chunk in values.get("terms", "").split(",")
            if chunk.strip()
        ]
        return CeilingFunction.trig(c0, terms, alpha=alpha)
    except ConfigError:
        raise
    except AnosovSuspensionError as e:
        raise ConfigError(f"{section}.terms" if "terms" in values else f"{section}.c0", str(e))


def _parse_conjugacy(values: T.Mapping[str, str]) -> BaseConjugacy:
    kind = values.get("kind", ConjugacyKindEnum.identity.value).strip()
    if kind not in (
        ConjugacyKindEnum.identity.value,
        ConjugacyKindEnum.linear.value,
        ConjugacyKindEnum.affine.value,
    ):
        raise ConfigError("conjugacy.kind", f"unsupported kind {kind!r}")
    if kind == ConjugacyKindEnum.identity.value:
        for extra in ("matrix", "offset"):
            if extra in values:
                raise ConfigError(f"conjugacy.{extra}", "not used by the identity")
        return BaseConjugacy.identity()
    if "matrix" not in values:
        raise ConfigError("conjugacy.matrix", "missing")
    matrix = _parse_matrix("conjugacy.matrix", values["matrix"])
    if kind == ConjugacyKindEnum.linear.value:
        if "offset" in values:
            raise ConfigError("conjugacy.offset", "not used by a linear conjugacy")
        return BaseConjugacy.linear(matrix.to_list())
    if "offset" not in values:
        raise ConfigError("conjugacy.offset", "missing")
    return BaseConjugacy.affine(matrix.to_list(), _parse_vec("conjugacy.offset", values["offset"]))


_OPTION_TYPES = {
    SmoothingOptions: "smoothing",
    RunOptions: "run",
    FlowOptions: "flow",
    VerificationOptions: "verification",
    ProbeOptions: "probe",
}


def _parse_options(section: str, klass, values: T.Mapping[str, str]):
    kwargs = dict()
    for f in dataclasses.fields(klass):
        if f.name not in values:
            continue
        key = f"{section}.{f.name}"
        raw = values[f.name]
        default = f.default
        if f.name == "shape":
            try:
                kwargs[f.name] = BumpShapeEnum(raw.strip())
            except ValueError:
                raise ConfigError(key, f"unknown bump shape {raw!r}")
        elif f.name == "out":
            kwargs[f.name] = raw.strip()
        elif isinstance(default, int):
            kwargs[f.name] = _parse_int(key, raw)
        else:
            kwargs[f.name] = _parse_float(key, raw)
    return validate_options(section, klass(**kwargs))


def validate_options(section: str, options):
    """
    Range checks shared by file parsing and command line overrides.
    """
    checks: T.Dict[str, T.Callable[[T.Any], bool]] = {
        "delta": lambda v: 0.0 < v < 1.0,
        "seed": lambda v: 0 <= v < 2**64,
        "samples": lambda v: v >= 1,
        "workers": lambda v: v >= 1,
        "t_range": lambda v: v >= 0,
        "height": lambda v: v >= 0,
        "t_stop": lambda v: v >= 0,
        "t_step": lambda v: v > 0,
        "tolerance": lambda v: v > 0,
        "smooth_tolerance": lambda v: v > 0,
        "fd_step": lambda v: v > 0,
        "chart_step": lambda v: v > 0,
        "interior_samples": lambda v: v >= 0,
        "section_samples": lambda v: v >= 0,
        "fibers": lambda v: v >= 1,
        "fiber_points": lambda v: v >= 2,
    }
    for f in dataclasses.fields(options):
        check = checks.get(f.name)
        value = getattr(options, f.name)
        if check is not None and not check(value):
            raise ConfigError(f"{section}.{f.name}", f"value {value!r} out of range")
    if section == "smoothing":
        object.__setattr__(options, "shape", BumpShapeEnum(options.shape))
    return options


def parse_config(parser: configparser.ConfigParser) -> RunConfig:
    for section in parser.sections():
        if section not in ALLOWED_KEYS:
            raise ConfigError(section, "unknown section")
        for key in parser[section]:
            if key not in ALLOWED_KEYS[section]:
                raise ConfigError(f"{section}.{key}", "unknown key")
    if "source" not in parser:
        raise ConfigError("source", "missing section")

    def values(section: str) -> T.Mapping[str, str]:
        return dict(parser[section]) if section in parser else dict()

    source_map = _parse_map("source", values("source"))
    if source_map is None:
        raise ConfigError("source.matrix", "missing")
    source_ceiling = _parse_ceiling("source", values("source"), allow_pushforward=False)
    kwargs = dict(
        source_map=source_map,
        source_ceiling=source_ceiling,
        conjugacy=_parse_conjugacy(values("conjugacy")),
        target_map=_parse_map("target", values("target")),
        target_ceiling=_parse_ceiling("target", values("target"), allow_pushforward=True),
    )
    for klass, section in _OPTION_TYPES.items():
        kwargs[section] = _parse_options(section, klass, values(section))
    return RunConfig(**kwargs)


def _matrix_to_text(m: IntMatrix2) -> str:
    return f"{m.a} {m.b} {m.c} {m.d}"


def _vec_to_text(v: T.Tuple[float, float]) -> str:
    return f"{v[0]!r} {v[1]!r}"


def _map_to_text(m: HyperbolicToralMap) -> T.Dict[str, str]:
    data = {"matrix": _matrix_to_text(m.matrix)}
    if not m.is_linear:
        data["translation"] = _vec_to_text(m.translation)
    return data


def _scalar_to_text(value: T.Any) -> str:
    if isinstance(value, BumpShapeEnum):
        return value.value
    if isinstance(value, float):
        return repr(value)
    return str(value)
