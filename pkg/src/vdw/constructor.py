"""Blow-up substitution and the recursive construction chain."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Mapping

from .core import (
    Coloring,
    Parameters,
    allowed_block_indices,
    block_entries,
    excluded_block_indices,
)
from .errors import DomainError, UnsupportedRangeError


@dataclass(frozen=True)
class BlockAssignment:
    """Injective map from base colors ``1..r'`` to allowed block indices for ``(r, k)``.

    ``blocks[j - 1]`` is the block index that replaces base color ``j``.
    """

    r: int
    k: int
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        params = Parameters.of(self.r, self.k)
        if len(self.blocks) != params.reduced_colors:
            raise DomainError(
                f"assignment for r={self.r}, k={self.k} needs {params.reduced_colors} "
                f"base colors, got {len(self.blocks)}"
            )
        if len(set(self.blocks)) != len(self.blocks):
            raise DomainError(f"assignment {self.blocks} is not injective")
        excluded = excluded_block_indices(self.r, self.k)
        for b in self.blocks:
            if not 1 <= b <= self.r or b in excluded:
                raise DomainError(f"block index {b} is not allowed for r={self.r}, k={self.k}")

    @classmethod
    def from_mapping(cls, r: int, k: int, mapping: Mapping[int, int]) -> "BlockAssignment":
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise DomainError(f"assignment domain must be 1..{len(mapping)}")
        return cls(r, k, tuple(mapping[j] for j in range(1, len(mapping) + 1)))

    @property
    def base_colors(self) -> int:
        return len(self.blocks)

    def as_dict(self) -> dict[int, int]:
        return {j: b for j, b in enumerate(self.blocks, start=1)}


def default_assignment(r: int, k: int) -> BlockAssignment:
    """Send base color ``j`` to the ``j``-th allowed block index in ascending order."""
    if r < 2:
        raise DomainError(f"blow-up target needs r >= 2, got {r}")
    return BlockAssignment(r, k, allowed_block_indices(r, k))


def blow_up(
    base: Coloring,
    r: int,
    k: int,
    assignment: BlockAssignment | None = None,
) -> Coloring:
    """Replace every base position by the block assigned to its color.

    The output has ``p * len(base)`` positions and ``r`` colors. If ``base``
    has no k-TMAP then neither does the output.
    """
    if assignment is None:
        assignment = default_assignment(r, k)
    elif (assignment.r, assignment.k) != (r, k):
        raise DomainError(
            f"assignment is for r={assignment.r}, k={assignment.k}, not r={r}, k={k}"
        )
    if base.r != assignment.base_colors:
        raise DomainError(
            f"base has {base.r} colors but a blow-up to r={r}, k={k} "
            f"consumes exactly {assignment.base_colors}"
        )
    p = Parameters.of(r, k).p
    blocks = {j: block_entries(b, r, p) for j, b in assignment.as_dict().items()}
    return Coloring(tuple(chain.from_iterable(blocks[c] for c in base.colors)), r)


def construct_chain(k: int, r: int, base: Coloring | None = None) -> Coloring:
    """Blow up color by color from ``base`` (default: ``k - 1`` ones) to ``r`` colors.

    Only ``2 <= r <= p`` is supported, where every step removes exactly one
    block type. The default seed yields length ``p**(r-1) * (k-1)``.
    """
    params = Parameters.of(r, k)
    if r < 2:
        raise DomainError(f"construct_chain needs r >= 2, got {r}")
    if r > params.p:
        raise UnsupportedRangeError(
            f"construct_chain covers r <= p = {params.p}; call blow_up with an "
            f"explicit {params.reduced_colors}-color base for r={r}"
        )
    current = Coloring.monochromatic(k - 1) if base is None else base
    if current.r >= r:
        raise DomainError(f"base already has {current.r} >= {r} colors")
    for step_r in range(current.r + 1, r + 1):
        current = blow_up(current, step_r, k)
    return current
