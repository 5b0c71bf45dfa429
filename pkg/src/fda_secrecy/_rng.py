"""Named, splittable random substreams.

All randomness in the package flows from a single 64-bit seed expanded into
named substreams via ``numpy.random.SeedSequence`` spawn keys.  A substream
is addressed by (purpose, *context), where context is typically a grid-cell
index.  Streams for different purposes or cells never overlap, so trials can
be generated per cell in any execution order (or in parallel) and still
reproduce bit-identically, and enlarging the trial count only extends each
stream without reshuffling earlier draws.
"""

from __future__ import annotations

import numpy as np

# Purpose tags (fixed; part of the reproducibility contract).
ALLOCATION = 0
ARTIFICIAL_NOISE = 1
RECEIVER_NOISE = 2


def substream(seed: int, purpose: int, *context: int) -> np.random.Generator:
    """Return a PCG64 generator for the given purpose/context address."""
    ss = np.random.SeedSequence(int(seed), spawn_key=(int(purpose), *map(int, context)))
    return np.random.Generator(np.random.PCG64(ss))
