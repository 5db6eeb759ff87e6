"""Domain types, the prime oracle and block-tuple algebra.

Colors and positions are 1-based everywhere. A coloring of ``{1, ..., n}``
is stored as a tuple whose ``j``-th entry (0-based) is the color of
position ``j + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# (bound, bases): Miller-Rabin with these bases is exact for n below bound
_MR_BASES = (
    (3_215_031_751, (2, 3, 5, 7)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (318_665_857_834_031_151_167_461, _SMALL_PRIMES),
)


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.18 * 10**23, probable-prime above."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n < 37 * 37:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = next((b for bound, b in _MR_BASES if n < bound), _SMALL_PRIMES)
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def largest_prime_leq(k: int) -> int:
    """Return the largest prime ``p <= k``."""
    if k < 2:
        raise DomainError(f"largest_prime_leq requires k >= 2, got {k}")
    if k == 2:
        return 2
    n = k if k % 2 else k - 1
    while not is_prime(n):
        n -= 2
    return n


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class Parameters:
    """Color count ``r``, progression length ``k`` and block prime ``p``."""

    r: int
    k: int
    p: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise DomainError(f"color count r must be >= 1, got {self.r}")
        if self.k < 2:
            raise DomainError(f"progression length k must be >= 2, got {self.k}")
        if not is_prime(self.p):
            raise DomainError(f"block size p must be prime, got {self.p}")

    @classmethod
    def of(cls, r: int, k: int) -> "Parameters":
        """Parameters with ``p`` chosen as the largest prime not exceeding ``k``."""
        if k < 2:
            raise DomainError(f"progression length k must be >= 2, got {k}")
        return cls(r, k, largest_prime_leq(k))

    @property
    def reduced_colors(self) -> int:
        """Color count of the base coloring one blow-up step consumes."""
        return self.r - ceil_div(self.r, self.p)


@dataclass(frozen=True)
class Coloring:
    """An ``r``-coloring of ``{1, ..., n}``; the empty coloring is allowed."""

    colors: tuple[int, ...]
    r: int

    def __post_init__(self) -> None:
        if not isinstance(self.colors, tuple):
            object.__setattr__(self, "colors", tuple(self.colors))
        if self.r < 1:
            raise DomainError(f"color count r must be >= 1, got {self.r}")
        if self.colors and (min(self.colors) < 1 or max(self.colors) > self.r):
            bad = next(c for c in self.colors if not 1 <= c <= self.r)
            raise DomainError(f"color {bad} outside 1..{self.r}")

    @classmethod
    def monochromatic(cls, n: int, r: int = 1) -> "Coloring":
        return cls((1,) * n, r)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, position: int) -> int:
        """Color at 1-based ``position``."""
        if not 1 <= position <= len(self.colors):
            raise IndexError(f"position {position} outside 1..{len(self.colors)}")
        return self.colors[position - 1]

    def __add__(self, other: "Coloring") -> "Coloring":
        return Coloring(self.colors + other.colors, max(self.r, other.r))

    def prefix(self, n: int) -> "Coloring":
        return Coloring(self.colors[:n], self.r)

    def used_colors(self) -> set[int]:
        return set(self.colors)


@dataclass(frozen=True)
class APWitness:
    """A monochromatic progression ``start, start+diff, ..., start+(length-1)*diff``."""

    start: int
    diff: int
    length: int
    color: int

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(self.start + j * self.diff for j in range(self.length))

    def holds_in(self, coloring: Coloring) -> bool:
        """Re-check the witness against ``coloring``."""
        if self.diff < 1 or self.start < 1 or self.length < 1:
            return False
        last = self.start + (self.length - 1) * self.diff
        if last > len(coloring):
            return False
        return all(coloring.colors[q - 1] == self.color for q in self.positions)


@dataclass(frozen=True)
class BlockTuple:
    """The length-``p`` tuple cycling through colors from ``start_color``."""

    start_color: int
    params: Parameters
    entries: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def index_positions(self, color: int) -> tuple[int, ...]:
        """1-based positions of ``color`` inside the tuple."""
        return tuple(j for j, c in enumerate(self.entries, start=1) if c == color)


def block_entries(i: int, r: int, p: int) -> tuple[int, ...]:
    return tuple((i - 1 + j) % r + 1 for j in range(p))


def block_tuple(i: int, r: int, k: int) -> BlockTuple:
    """Build ``S_i(r, k)``: ``p`` entries starting at ``i`` and cycling mod ``r``.

    >>> block_tuple(2, 4, 3).entries
    (2, 3, 4)
    """
    params = Parameters.of(r, k)
    if not 1 <= i <= r:
        raise DomainError(f"block index {i} outside 1..{r}")
    return BlockTuple(i, params, block_entries(i, r, params.p))


def excluded_block_indices(r: int, k: int) -> frozenset[int]:
    """Block types ``1 + p*m`` for ``m < ceil(r/p)`` that a blow-up must avoid."""
    if r < 2:
        raise DomainError(f"excluded_block_indices requires r >= 2, got {r}")
    p = Parameters.of(r, k).p
    return frozenset(i for i in (1 + p * m for m in range(ceil_div(r, p))) if i <= r)


def allowed_block_indices(r: int, k: int) -> tuple[int, ...]:
    excluded = excluded_block_indices(r, k)
    return tuple(i for i in range(1, r + 1) if i not in excluded)


def concatenate_blocks(indices: Iterable[int], r: int, k: int) -> Coloring:
    """Concatenate ``S_i(r, k)`` for each ``i`` in ``indices``."""
    p = largest_prime_leq(k)
    cache: dict[int, tuple[int, ...]] = {}
    out: list[int] = []
    for i in indices:
        if i not in cache:
            cache[i] = block_tuple(i, r, k).entries
        out.extend(cache[i])
    assert len(out) % p == 0
    return Coloring(tuple(out), r)


def as_coloring(colors: Coloring | Sequence[int], r: int | None = None) -> Coloring:
    """Accept a Coloring or a bare color sequence."""
    if isinstance(colors, Coloring):
        return colors
    colors = tuple(colors)
    if r is None:
        r = max(colors, default=1)
    return Coloring(colors, r)
