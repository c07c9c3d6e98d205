"""Von Neumann entropy and conditional mutual information (natural log)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import partial_trace

CMI_CLIP = 1e-9


@dataclass(frozen=True)
class Tripartition:
    """Disjoint site-label lists A, B, C covering a register."""

    a: tuple
    b: tuple
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))
        parts = [set(self.a), set(self.b), set(self.c)]
        total = len(self.a) + len(self.b) + len(self.c)
        if len(parts[0] | parts[1] | parts[2]) != total:
            raise ValueError("tripartition parts must be disjoint")

    def validate_register(self, labels):
        if set(self.a) | set(self.b) | set(self.c) != set(labels):
            raise ValueError("tripartition must cover the full register")


def von_neumann_entropy(rho):
    """S(rho) = -sum w ln w in nats, with 0 ln 0 = 0."""
    w = np.linalg.eigvalsh(rho.data)
    w = np.clip(w, 0.0, None)
    nz = w[w > 0]
    return float(-np.sum(nz * np.log(nz)))


def cmi(rho, part):
    """I(A:C|B) = S(AB) + S(BC) - S(B) - S(ABC).

    Tiny negative values (|v| < 1e-9, pure roundoff) are clipped to zero;
    larger negatives indicate a numerical failure and raise.
    """
    part.validate_register(rho.labels)
    s_abc = von_neumann_entropy(rho)
    s_ab = von_neumann_entropy(partial_trace(rho, part.a + part.b))
    s_bc = von_neumann_entropy(partial_trace(rho, part.b + part.c))
    s_b = von_neumann_entropy(partial_trace(rho, part.b)) if part.b else 0.0
    val = s_ab + s_bc - s_b - s_abc
    if val < 0.0:
        if val > -CMI_CLIP:
            return 0.0
        raise ValueError(f"conditional mutual information came out negative: {val:.3e}")
    return float(val)
