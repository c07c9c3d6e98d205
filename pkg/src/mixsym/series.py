"""ScalingSeries: the shared result record for region-size sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ScalingSeries:
    """A sequence of (ell, value, stderr) triples plus free-form metadata.

    ``ell`` is the region size parameter (interval half-width, disk radius,
    insertion depth, ...).  ``errors`` holds one standard error per point;
    single-realization estimates carry error 0.
    """

    ell: tuple
    values: tuple
    errors: tuple
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if not (len(self.ell) == len(self.values) == len(self.errors)):
            raise ValueError("ell, values, errors must have equal lengths")
        if any(e < 0 for e in self.errors):
            raise ValueError("standard errors must be nonnegative")
        object.__setattr__(self, "ell", tuple(float(x) for x in self.ell))
        object.__setattr__(self, "values", tuple(float(x) for x in self.values))
        object.__setattr__(self, "errors", tuple(float(x) for x in self.errors))

    def __len__(self):
        return len(self.ell)

    def to_dict(self):
        return {
            "ell": list(self.ell),
            "values": list(self.values),
            "errors": list(self.errors),
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, obj):
        return cls(
            ell=tuple(obj["ell"]),
            values=tuple(obj["values"]),
            errors=tuple(obj["errors"]),
            meta=dict(obj.get("meta", {})),
        )
