"""Feature configuration: which features matter and their target ranges."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from sumlens.metrics import FEATURES, LEVEL_TABLES, categorize, level_bounds, levels_for


@dataclass(frozen=True)
class FeatureTarget:
    included: bool = False
    level: str | None = None
    range: tuple[float, float] | None = None  # numeric [lo, hi], inclusive


@dataclass
class FeatureConfig:
    targets: dict[str, FeatureTarget] = field(default_factory=dict)

    def __post_init__(self):
        for name in FEATURES:
            self.targets.setdefault(name, FeatureTarget())
        self.validate()

    def validate(self) -> None:
        unknown = set(self.targets) - set(FEATURES)
        if unknown:
            raise ValueError(f"unknown features: {sorted(unknown)}")
        if not any(t.included for t in self.targets.values()):
            raise ValueError("at least one feature must be included")
        for name, target in self.targets.items():
            if target.level is not None and target.level not in levels_for(name):
                raise ValueError(
                    f"unknown level {target.level!r} for {name}; "
                    f"legal levels: {levels_for(name)}"
                )
            if target.range is not None:
                lo, hi = target.range
                domain_lo = LEVEL_TABLES[name][0][0]
                domain_hi = LEVEL_TABLES[name][-1][1]
                if lo > hi or lo < domain_lo or (not math.isinf(domain_hi) and hi > domain_hi):
                    raise ValueError(f"range {target.range} outside {name} domain")

    def included_features(self) -> list[str]:
        return [name for name in FEATURES if self.targets[name].included]

    def interval(self, feature: str) -> tuple[float, float] | None:
        """Numeric target interval for a feature, if any."""
        target = self.targets[feature]
        if target.range is not None:
            return target.range
        if target.level is not None:
            return level_bounds(feature, target.level)
        return None

    def contains(self, feature: str, score: float) -> bool:
        """Is a score inside the feature's target?

        Explicit numeric ranges are inclusive on both ends; level targets
        match when the score categorizes to that level.
        """
        target = self.targets[feature]
        if target.range is not None:
            lo, hi = target.range
            return lo <= score <= hi
        if target.level is not None:
            return categorize(feature, score) == target.level
        return True

    def to_dict(self) -> dict:
        return {
            name: {
                "included": t.included,
                "level": t.level,
                "range": list(t.range) if t.range else None,
            }
            for name, t in self.targets.items()
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FeatureConfig":
        targets = {}
        for name, spec in data.items():
            rng = spec.get("range")
            targets[name] = FeatureTarget(
                included=bool(spec.get("included", False)),
                level=spec.get("level"),
                range=tuple(rng) if rng else None,
            )
        return cls(targets=targets)
