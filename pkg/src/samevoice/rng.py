"""Deterministic splittable random number generator.

Everything random in this package flows through :class:`Rng` so that a single
64-bit seed pins down corpus generation, parameter init, batch order, dropout
masks, pair sampling, and bootstrap resampling. The platform RNGs (``random``,
``numpy.random``) are deliberately not used: their streams are not part of any
compatibility contract, ours is.

Algorithm
---------
The core is SplitMix64 (Steele, Lea & Flood's mixing function). The k-th raw
output for seed ``s`` is::

    mix64((s + (k + 1) * 0x9E3779B97F4A7C15) mod 2**64)

where ``mix64`` is the standard xor-shift/multiply finalizer. Because the
state update is a pure counter increment, a block of outputs can be produced
with vectorized uint64 arithmetic and is bit-identical to the scalar loop.

Reference vectors (first three outputs):

    seed 0    -> 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F
    seed 1337 -> 0xB6A8A9B313CAA00B, 0xCB7F284B67D605C9, 0x3440FCCF54082B5A

Splitting
---------
``split(label)`` derives an independent child stream from (seed, label)
without consuming the parent stream, so adding draws to one consumer never
shifts another consumer's stream. Labels are hashed with FNV-1a (not Python's
salted ``hash``).

Floating point
--------------
Uniform doubles are ``(raw >> 11) * 2**-53`` (exact arithmetic, so the float
stream is as portable as the integer stream). Gaussians use Box-Muller on top
of the uniform stream via numpy's ``log``/``cos``/``sqrt``; the integer and
uniform streams are bit-portable everywhere, the gaussian stream is
bit-reproducible for a fixed numpy build, which is what the determinism
contract (two runs on one machine) requires.
"""

from __future__ import annotations

import numpy as np

_MASK64 = np.uint64(0xFFFFFFFFFFFFFFFF)
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def _fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h ^= b
        h = (h * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def _mix64_scalar(z: int) -> int:
    z &= 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 30)) * _MIX1) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * _MIX2) & 0xFFFFFFFFFFFFFFFF
    return (z ^ (z >> 31)) & 0xFFFFFFFFFFFFFFFF


class Rng:
    """SplitMix64 stream with stateless child derivation.

    >>> r = Rng(1337)
    >>> r.next_uint64() == 0xB6A8A9B313CAA00B
    True
    """

    __slots__ = ("seed", "counter")

    def __init__(self, seed: int, counter: int = 0):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.counter = int(counter)

    def split(self, label) -> "Rng":
        """Child stream keyed by (seed, label); does not consume this stream."""
        if isinstance(label, int):
            key = label & 0xFFFFFFFFFFFFFFFF
        else:
            key = _fnv1a64(str(label).encode("utf-8"))
        child = _mix64_scalar(self.seed ^ _mix64_scalar(key ^ _GOLDEN))
        return Rng(child)

    # raw stream ----------------------------------------------------------

    def next_raw(self, n: int) -> np.ndarray:
        """Next n outputs as a uint64 array; advances the counter by n."""
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        with np.errstate(over="ignore"):
            idx = np.arange(self.counter + 1, self.counter + n + 1, dtype=np.uint64)
            z = (np.uint64(self.seed) + idx * np.uint64(_GOLDEN)) & _MASK64
            z = ((z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)) & _MASK64
            z = ((z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)) & _MASK64
            z = (z ^ (z >> np.uint64(31))) & _MASK64
        self.counter += n
        return z

    def next_uint64(self) -> int:
        return int(self.next_raw(1)[0])

    # floats ---------------------------------------------------------------

    def uniforms(self, n: int) -> np.ndarray:
        """n doubles uniform in [0, 1), 53-bit resolution."""
        return (self.next_raw(n) >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return float(lo + (hi - lo) * self.uniforms(1)[0])

    def normals(self, n: int) -> np.ndarray:
        """n standard gaussians via Box-Muller (two uniforms per draw)."""
        if n == 0:
            return np.zeros(0)
        u = self.uniforms(2 * n).reshape(n, 2)
        # u1 shifted into (0, 1] so log never sees zero
        u1 = (u[:, 0] * (1.0 - 2.0**-53)) + 2.0**-53
        r = np.sqrt(-2.0 * np.log(u1))
        return r * np.cos(2.0 * np.pi * u[:, 1])

    def normal(self, mu: float = 0.0, sigma: float = 1.0) -> float:
        return float(mu + sigma * self.normals(1)[0])

    # integers and sampling --------------------------------------------------

    def integers(self, n: int, size: int) -> np.ndarray:
        """size unbiased integers uniform in [0, n), by rejection."""
        if n <= 0:
            raise ValueError(f"n must be positive, got {n}")
        nn = np.uint64(n)
        # reject raws above the largest multiple of n to avoid modulo bias
        limit = np.uint64(0xFFFFFFFFFFFFFFFF - (0xFFFFFFFFFFFFFFFF % n + 1) % n)
        out = np.empty(size, dtype=np.int64)
        filled = 0
        while filled < size:
            raw = self.next_raw(size - filled)
            good = raw[raw <= limit]
            take = good[: size - filled]
            out[filled : filled + take.size] = (take % nn).astype(np.int64)
            filled += take.size
        return out

    def randint_below(self, n: int) -> int:
        return int(self.integers(n, 1)[0])

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint_below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_indices(self, n: int, k: int) -> list[int]:
        """k distinct indices from range(n), order random (partial Fisher-Yates)."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} of {n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.randint_below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def choice(self, items: list):
        return items[self.randint_below(len(items))]

    def __repr__(self) -> str:
        return f"Rng(seed={self.seed:#x}, counter={self.counter})"
