import random
from dataclasses import asdict, dataclass
from typing import Any, Dict

import torch

from direction_space.constants import (
    END_THRESHOLD,
    EXPONENT_BOUND,
    HORIZON,
    MIN_POWER_BOUND,
    POWER_BOUND,
    SEED,
)


def set_seed(seed: int):
    random.seed(seed)
    torch.manual_seed(seed)


@dataclass(frozen=True)
class TruncationProfile:
    """The finite window standing in for every limit.

    Args:
        horizon (int): radius of ball scans and of breadth-first searches
        power_bound (int): largest power or window length N
        exponent_bound (int): largest exponent K of asymptotic exponent pairs; δ₊ widens it to the admissible bound
        threshold (int): Gromov-product threshold for ends
        seed (int): seed for every sampled scan
    """

    horizon: int = HORIZON
    power_bound: int = POWER_BOUND
    exponent_bound: int = EXPONENT_BOUND
    threshold: int = END_THRESHOLD
    seed: int = SEED

    def __post_init__(self):
        assert self.horizon > 0, f"horizon must be positive, got {self.horizon}"
        assert (
            self.power_bound >= MIN_POWER_BOUND
        ), f"power_bound must be at least {MIN_POWER_BOUND}, got {self.power_bound}"
        assert self.exponent_bound > 0, f"exponent_bound must be positive, got {self.exponent_bound}"
        assert self.threshold > 0, f"threshold must be positive, got {self.threshold}"
        assert self.seed >= 0, f"seed must be non-negative, got {self.seed}"

    @property
    def upper_half(self) -> range:
        """The window [⌈N/2⌉, N] over which limsups are truncated."""
        return range(-(-self.power_bound // 2), self.power_bound + 1)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
