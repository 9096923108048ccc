"""Counter-based pseudo-random streams.

Every variate is a pure function of ``(master_seed, domain, trial, kraus
index, row, col, slot)``: coordinates are folded one by one into a 64-bit
state through a SplitMix64-style avalanche mix, and the final state is
mapped to a uniform in (0, 1). There is no sequential stream state, so
draws are reproducible regardless of evaluation order, thread count, or
which other coordinates are ever sampled.

Scalar folds run on Python ints (masked to 64 bits); bulk coordinate
folds run vectorized on uint64 arrays. Both paths use identical
arithmetic, which is asserted by the test suite.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

# Domain tags keep unrelated uses of the same coordinates independent.
DOMAIN_ENTRIES = 0x7158442FD2EB1053  # matrix entry sampling
DOMAIN_PERMUTATION = 0x3E51A2F6B8C4D97B  # permutation keys for profiles
DOMAIN_START_VECTOR = 0x5B8C29D4E6F1A327  # Krylov start vectors


def mix64(x: int) -> int:
    """SplitMix64 finalizer on a 64-bit integer."""
    x &= _MASK64
    x ^= x >> 30
    x = (x * _MIX1) & _MASK64
    x ^= x >> 27
    x = (x * _MIX2) & _MASK64
    return x ^ (x >> 31)


def fold(state: int, word: int) -> int:
    """Absorb one coordinate into the state."""
    return mix64(state ^ ((word + _GAMMA) & _MASK64))


def fold_array(state: int, words: np.ndarray) -> np.ndarray:
    """Vectorized :func:`fold` over a uint64 coordinate array."""
    x = (np.asarray(words).astype(np.uint64) + np.uint64(_GAMMA)) ^ np.uint64(state)
    x ^= x >> np.uint64(30)
    x *= np.uint64(_MIX1)
    x ^= x >> np.uint64(27)
    x *= np.uint64(_MIX2)
    return x ^ (x >> np.uint64(31))


def _to_uniform(h: np.ndarray) -> np.ndarray:
    # 53-bit mantissa, offset by half an ulp so u is never 0 or 1
    return ((h >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


def entry_state(master_seed: int, domain: int, trial: int, kraus_index: int) -> int:
    """State shared by all entries of one sampled matrix."""
    state = mix64((master_seed & _MASK64) ^ domain)
    state = fold(state, trial)
    return fold(state, kraus_index)


def coordinate_uniforms(
    state: int, rows: np.ndarray, cols: np.ndarray, slot: int
) -> np.ndarray:
    """One uniform in (0, 1) per (row, col) coordinate."""
    h = fold_array(state, rows)
    # fold the column coordinate against the row-dependent states
    h = _fold_pairwise(h, cols)
    return _to_uniform(_fold_pairwise(h, np.full_like(np.asarray(cols), slot)))


def _fold_pairwise(states: np.ndarray, words: np.ndarray) -> np.ndarray:
    x = (np.asarray(words).astype(np.uint64) + np.uint64(_GAMMA)) ^ states
    x ^= x >> np.uint64(30)
    x *= np.uint64(_MIX1)
    x ^= x >> np.uint64(27)
    x *= np.uint64(_MIX2)
    return x ^ (x >> np.uint64(31))


def uniform_block(state: int, count: int, slot: int = 0) -> np.ndarray:
    """``count`` uniforms addressed by their index under the given state."""
    idx = np.arange(count, dtype=np.uint64)
    h = fold_array(state, idx)
    return _to_uniform(_fold_pairwise(h, np.full(count, slot, dtype=np.uint64)))


def standard_normal_block(state: int, count: int) -> np.ndarray:
    """``count`` N(0, 1) variates via Box-Muller, two uniforms per draw."""
    u1 = uniform_block(state, count, slot=0)
    u2 = uniform_block(state, count, slot=1)
    return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)
