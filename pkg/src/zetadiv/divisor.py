"""Divisor-function sieve and elementary evaluators of the divisor remainder.

The remainder of the divisor summatory function is

    remainder(x) = sum_{n<=x} d(n) - x*(log x + 2*gamma - 1),

with d(n) the number of divisors of n and gamma Euler's constant.  This
module provides

* a sieved table of d(n) up to a limit (plain or segmented, cacheable),
* exact divisor sums via the table and via the hyperbola identity
  sum_{n<=x} d(n) = 2*sum_{n<=sqrt(x)} floor(x/n) - floor(sqrt(x))**2,
* the remainder ``delta`` itself, its sieve-free sawtooth evaluation
  delta_via_psi(x) = -2*sum_{n<=sqrt(x)} psi(x/n), and
* the alternating-sign variant ``delta_star`` defined by
  delta*(x) = -delta(x) + 2*delta(2x) - delta(4x)/2, whose arithmetic form
  is (1/2)*sum_{n<=4x} (-1)^n d(n) - x*(log x + 2*gamma - 1).

Integer sums are kept exact (int64 prefix tables); only the smooth main
term is floating point.
"""

from __future__ import annotations

import hashlib
import math
import struct
from dataclasses import dataclass, field

import numpy as np

from .errors import CacheError, InvalidArgumentError, OutOfRangeError, ResourceLimitError

#: Euler's constant, full double precision.  The leading digits 0.57721
#: are the usual 5-digit value; the cancellation in the remainder's main
#: term needs all 16.
EULER_GAMMA = 0.5772156649015329

#: Hard cap on sieve size (entries), to keep a single process well under
#: a few GiB:  2**28 entries = 1 GiB of uint32 values.  Raise explicitly
#: via ``sieve_divisors(..., max_limit=...)`` if you have the memory.
MAX_SIEVE_LIMIT = 2**28

#: Limits above this are sieved in fixed-length segments.
SEGMENTED_THRESHOLD = 10**8

#: Default segment length for the segmented sieve.
DEFAULT_SEGMENT = 2**22

_CACHE_MAGIC = b"ZDTABLE1"
_CACHE_VERSION = 1


@dataclass(eq=False)
class DivisorTable:
    """Sieved divisor counts d(1..limit).

    ``values`` has length ``limit + 1`` with ``values[n] == d(n)`` for
    ``1 <= n <= limit`` and ``values[0] == 0``.  The array is frozen
    (read-only) after construction, so a table can be shared freely
    across threads.  Prefix-sum tables are built lazily on first use.
    """

    limit: int
    values: np.ndarray
    _prefix: np.ndarray | None = field(default=None, repr=False, compare=False)
    _alt_prefix: np.ndarray | None = field(default=None, repr=False, compare=False)

    def prefix(self) -> np.ndarray:
        """int64 prefix sums: prefix()[m] == sum_{n<=m} d(n)."""
        if self._prefix is None:
            self._prefix = np.cumsum(self.values, dtype=np.int64)
        return self._prefix

    def alt_prefix(self) -> np.ndarray:
        """int64 alternating prefix sums: alt_prefix()[m] == sum_{n<=m} (-1)^n d(n)."""
        if self._alt_prefix is None:
            signed = self.values.astype(np.int64)
            signed[1::2] *= -1
            self._alt_prefix = np.cumsum(signed)
        return self._alt_prefix


def sieve_divisors(limit: int, *, segment_size: int | None = None,
                   max_limit: int = MAX_SIEVE_LIMIT) -> DivisorTable:
    """Sieve d(n) for 1 <= n <= limit.

    Uses the divisor-pairing pass: every d <= sqrt(limit) contributes +1
    at n = d*d and +2 at larger multiples of d (the pair (d, n/d)).  Only
    sqrt(limit) strided passes are needed, all vectorised.  For limits
    above ``SEGMENTED_THRESHOLD`` the passes run per fixed-length segment
    so the write working set stays bounded; the output array itself is
    still allocated in full (uint32, 4 bytes per entry - document your
    memory budget accordingly).
    """
    limit = int(limit)
    if limit < 1:
        raise InvalidArgumentError(f"sieve limit must be >= 1, got {limit}")
    if limit > max_limit:
        raise ResourceLimitError(
            f"sieve limit {limit} exceeds cap {max_limit} "
            f"(~{4 * (max_limit + 1) / 2**30:.1f} GiB of table)")
    if segment_size is None:
        segment_size = DEFAULT_SEGMENT if limit > SEGMENTED_THRESHOLD else limit + 1
    if segment_size < 1:
        raise InvalidArgumentError("segment_size must be >= 1")

    values = np.zeros(limit + 1, dtype=np.uint32)
    root = math.isqrt(limit)
    for lo in range(1, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)
        dmax = min(root, math.isqrt(hi - 1))
        for d in range(1, dmax + 1):
            sq = d * d
            if sq >= hi:
                break
            start = max(sq, ((lo + d - 1) // d) * d)
            if start == sq:
                values[sq] += 1
                start += d
            if start < hi:
                values[start:hi:d] += 2
    values.setflags(write=False)
    return DivisorTable(limit=limit, values=values)


def main_term(x):
    """Smooth main term x*(log x + 2*gamma - 1); 0 at x == 0."""
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)
    out = np.zeros_like(xs)
    nz = xs > 0
    out[nz] = xs[nz] * (np.log(xs[nz]) + 2.0 * EULER_GAMMA - 1.0)
    return float(out[0]) if scalar else out


def divisor_sum(table: DivisorTable, x) -> int:
    """Exact sum_{n<=x} d(n) from the table's prefix sums."""
    m = int(math.floor(x))
    if m > table.limit:
        raise OutOfRangeError(f"x={x} exceeds table limit {table.limit}")
    if m < 1:
        return 0
    return int(table.prefix()[m])


def hyperbola_divisor_sum(x) -> int:
    """sum_{n<=x} d(n) by the Dirichlet hyperbola identity, no table needed.

    Exact integer arithmetic; O(sqrt(x)) work.
    """
    m = int(math.floor(x))
    if m < 1:
        return 0
    r = math.isqrt(m)
    n = np.arange(1, r + 1, dtype=np.int64)
    return int(2 * np.sum(m // n) - r * r)


@dataclass(frozen=True)
class DeltaValue:
    """One evaluation of the divisor remainder at x."""

    x: float
    sum_d: int
    main_term: float
    delta: float


def delta(table: DivisorTable, x) -> DeltaValue:
    """Divisor remainder sum_{n<=x} d(n) - x*(log x + 2*gamma - 1) for x >= 1."""
    if x < 1:
        raise InvalidArgumentError(f"delta requires x >= 1, got {x}")
    s = divisor_sum(table, x)
    mt = main_term(float(x))
    return DeltaValue(x=float(x), sum_d=s, main_term=mt, delta=s - mt)


def delta_grid(table: DivisorTable, xs: np.ndarray) -> np.ndarray:
    """Vectorised remainder values over an array of abscissae in [1, limit]."""
    xs = np.asarray(xs, dtype=float)
    idx = np.floor(xs).astype(np.int64)
    if xs.size and (xs.min() < 1 or idx.max() > table.limit):
        raise OutOfRangeError("delta_grid abscissae must lie in [1, table.limit]")
    return table.prefix()[idx] - main_term(xs)


def psi(x):
    """Sawtooth x - floor(x) - 1/2, in [-1/2, 1/2).

    At integer x this returns exactly -1/2 (the bracket definition); the
    Fourier series of the sawtooth converges to 0 there instead, but the
    integer points form a measure-zero set absorbed by the O(1) term of
    every identity this feeds.
    """
    x = np.asarray(x, dtype=float)
    out = x - np.floor(x) - 0.5
    if out.ndim == 0:
        return float(out)
    return out


def delta_via_psi(x) -> float:
    """Sieve-free divisor remainder: -2*sum_{n<=sqrt(x)} psi(x/n).

    Differs from ``delta`` by a bounded term (observed well under 5 over
    [10, 1e7]); runs in O(sqrt(x)) with no divisor table.
    """
    if x < 1:
        raise InvalidArgumentError(f"delta_via_psi requires x >= 1, got {x}")
    r = math.isqrt(int(math.floor(x)))
    n = np.arange(1, r + 1, dtype=np.float64)
    return float(-2.0 * np.sum(psi(float(x) / n)))


def _check_star_range(table: DivisorTable, x) -> None:
    if x <= 0:
        raise InvalidArgumentError(f"delta_star requires x > 0, got {x}")
    if 4 * x > table.limit:
        raise OutOfRangeError(
            f"delta_star at x={x} needs the table to cover 4x={4 * x}, "
            f"limit is {table.limit}")


def delta_star(table: DivisorTable, x) -> float:
    """Alternating divisor remainder via -delta(x) + 2*delta(2x) - delta(4x)/2.

    Evaluated directly on divisor sums, so it is defined for every x > 0
    (the plain remainder's x >= 1 restriction does not apply: the main
    terms of the combination collapse to a single x*(log x + 2*gamma - 1)).
    Needs table coverage up to 4x.
    """
    _check_star_range(table, x)
    comb = (-divisor_sum(table, x)
            + 2 * divisor_sum(table, 2 * x)
            - 0.5 * divisor_sum(table, 4 * x))
    return comb - main_term(float(x))


def delta_star_alternating(table: DivisorTable, x) -> float:
    """Alternating divisor remainder via (1/2)*sum_{n<=4x} (-1)^n d(n) - main term.

    Arithmetically identical to ``delta_star``; kept as an independent
    route for cross-validation.
    """
    _check_star_range(table, x)
    m = int(math.floor(4 * x))
    alt = int(table.alt_prefix()[m]) if m >= 1 else 0
    return 0.5 * alt - main_term(float(x))


def delta_star_grid(table: DivisorTable, xs: np.ndarray) -> np.ndarray:
    """Vectorised ``delta_star`` over an array of x > 0 with 4x <= limit."""
    xs = np.asarray(xs, dtype=float)
    idx = np.floor(4 * xs).astype(np.int64)
    if xs.size and (xs.min() <= 0 or idx.max() > table.limit):
        raise OutOfRangeError("delta_star_grid needs 0 < x and 4x <= table.limit")
    return 0.5 * table.alt_prefix()[idx] - main_term(xs)


# ---------------------------------------------------------------------------
# Binary cache.  Layout (little endian):
#   8 bytes   magic  b"ZDTABLE1"
#   u32       version (currently 1)
#   u64       limit
#   32 bytes  sha256 of the raw values payload
#   payload   (limit+1) uint32 values
# ---------------------------------------------------------------------------

def save_table(table: DivisorTable, path) -> None:
    """Write a table to its binary cache format (atomic via temp rename)."""
    payload = np.ascontiguousarray(table.values, dtype="<u4").tobytes()
    digest = hashlib.sha256(payload).digest()
    header = _CACHE_MAGIC + struct.pack("<IQ", _CACHE_VERSION, table.limit) + digest
    tmp = str(path) + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(header)
        fh.write(payload)
    import os
    os.replace(tmp, str(path))


def load_table(path, *, limit: int | None = None) -> DivisorTable:
    """Load a cached table, verifying magic, version and checksum.

    If ``limit`` is given, the cached table must cover at least that
    limit; a larger cache is sliced down to the request.  Raises
    ``CacheError`` on any inconsistency (caller decides whether to
    rebuild).
    """
    with open(path, "rb") as fh:
        header = fh.read(8 + 4 + 8 + 32)
        if len(header) < 52 or header[:8] != _CACHE_MAGIC:
            raise CacheError(f"{path}: not a divisor-table cache")
        version, stored_limit = struct.unpack("<IQ", header[8:20])
        if version != _CACHE_VERSION:
            raise CacheError(f"{path}: unsupported cache version {version}")
        digest = header[20:52]
        payload = fh.read()
    expected = (stored_limit + 1) * 4
    if len(payload) != expected:
        raise CacheError(f"{path}: truncated payload ({len(payload)} != {expected} bytes)")
    if hashlib.sha256(payload).digest() != digest:
        raise CacheError(f"{path}: checksum mismatch")
    if limit is not None and stored_limit < limit:
        raise CacheError(f"{path}: cached limit {stored_limit} < requested {limit}")
    values = np.frombuffer(payload, dtype="<u4")
    if limit is not None and stored_limit > limit:
        values = values[:limit + 1]
        stored_limit = limit
    values = values.astype(np.uint32, copy=False)
    values.setflags(write=False)
    return DivisorTable(limit=int(stored_limit), values=values)
