"""Reproducible random number streams.

Every randomized operation in the package draws from a Philox counter-based
generator addressed by a ``(seed, stream)`` pair, so that independent stages
(enumeration, evolution, the official draw) never perturb one another and
identical specs replay bit-identically on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_UINT64_MAX = 2**64 - 1


@dataclass(frozen=True)
class RngSpec:
    """Address of a reproducible random stream.

    Args:
        seed: base seed (64-bit unsigned integer).
        stream: sub-stream index; distinct streams under the same seed are
            statistically independent.
    """

    seed: int
    stream: int = 0

    def __post_init__(self):
        for name in ("seed", "stream"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or not 0 <= value <= _UINT64_MAX:
                raise ValueError(f"{name} must be an integer in [0, 2^64), got {value!r}")

    def generator(self, *path: int) -> np.random.Generator:
        """Instantiate the generator for this spec.

        Optional ``path`` indices derive child streams (e.g. per replicate,
        per generation) without consuming state from the parent stream.
        """
        ss = np.random.SeedSequence(int(self.seed), spawn_key=(int(self.stream), *map(int, path)))
        return np.random.Generator(np.random.Philox(ss))

    def child(self, *path: int) -> "RngSpec":
        """Derive a new spec whose streams are disjoint from this one's.

        Child indices are folded into a fresh 64-bit stream id, so the result
        is itself a valid ``(seed, stream)`` address.
        """
        ss = np.random.SeedSequence(int(self.seed), spawn_key=(int(self.stream), *map(int, path)))
        derived = int(ss.generate_state(1, np.uint64)[0])
        return RngSpec(seed=self.seed, stream=derived)

    def to_dict(self) -> dict:
        return {"seed": int(self.seed), "stream": int(self.stream)}

    @classmethod
    def from_dict(cls, d: dict) -> "RngSpec":
        return cls(seed=int(d["seed"]), stream=int(d.get("stream", 0)))
