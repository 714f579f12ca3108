"""Dimension caps guarding the expensive computation paths."""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass
class Caps:
    # max algebra dimension for Hopf-kernel / equalizer computations
    kernel: int = 512
    # max entry count of a dense structure-constant tensor (dim**3)
    materialize: int = 4096

    @classmethod
    def from_env(cls, override: int | None = None) -> "Caps":
        cap = override
        if cap is None:
            raw = os.environ.get("HOPF2X_CAP")
            if raw:
                cap = int(raw)
        if cap is None:
            return cls()
        return cls(kernel=cap, materialize=cap)


DEFAULT_CAPS = Caps()

# algebras up to this dimension memoize basis products and adjoint actions
MEMO_PAIR_DIM = 256
