"""Exhaustive depth-first search for long colorings without a k-TMAP.

Positions are filled left to right; colors are tried in ascending order.
Position 1 is fixed to color 1 and a new color may only be the next unused
one, so each coloring is visited once up to renaming of colors. A branch is
cut as soon as its newest position closes a k-TMAP.

``nodes_expanded`` counts every partial coloring accepted onto the stack,
including the length-1 root.
"""

from __future__ import annotations

import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import APWitness, Coloring, as_coloring
from .errors import DomainError
from .io.certificate import Certificate
from .verifier import find_first_ktmap_brute

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchOutcome:
    best_length: int
    certificate: Certificate
    exhausted: bool
    nodes_expanded: int
    elapsed: float = 0.0

    @property
    def coloring(self) -> Coloring:
        return self.certificate.coloring

    @property
    def exact_value(self) -> int | None:
        """``w(r, k)`` when the search proved it, else ``None``."""
        return self.best_length + 1 if self.exhausted else None


def incremental_ktmap_at(coloring: Coloring | Sequence[int], position: int, k: int) -> APWitness | None:
    """A k-TMAP whose last term sits at ``position == len(coloring)``, if any.

    Differences are tried in ascending order.
    """
    col = as_coloring(coloring).colors
    if position != len(col):
        raise DomainError(f"position must equal the coloring length {len(col)}, got {position}")
    if k < 2:
        raise DomainError(f"progression length k must be >= 2, got {k}")
    if position == 0:
        return None
    c = col[position - 1]
    for d in range(1, (position - 1) // (k - 1) + 1):
        if all(col[position - 1 - j * d] == c for j in range(1, k)):
            return APWitness(position - (k - 1) * d, d, k, c)
    return None


def blocked_colors(col: Sequence[int], m: int, k: int) -> int:
    """Bitmask of colors that would close a k-TMAP at position ``m + 1``.

    ``col[:m]`` holds the current coloring (0-based storage).
    """
    blocked = 0
    for d in range(1, m // (k - 1) + 1):
        c = col[m - d]
        j = 2
        while j < k and col[m - j * d] == c:
            j += 1
        if j == k:
            blocked |= 1 << c
    return blocked


class _Budget(Exception):
    pass


class _DFS:
    def __init__(self, r, k, n_limit, budget, on_improve=None):
        self.r, self.k, self.n_limit, self.budget = r, k, n_limit, budget
        self.col = [0] * (n_limit + 1)
        self.best = 0
        self.best_colors: tuple[int, ...] = ()
        self.nodes = 0
        self.on_improve = on_improve
        self.t0 = time.perf_counter()

    def push(self, m, c):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            self.nodes -= 1
            raise _Budget
        self.col[m] = c
        if m + 1 > self.best:
            self.best = m + 1
            self.best_colors = tuple(self.col[: m + 1])
            if self.on_improve is not None:
                self.on_improve(self.best, self.nodes, time.perf_counter() - self.t0)

    def run_from(self, prefix: Sequence[int]) -> bool:
        """Explore the subtree under ``prefix``; False if the budget ran out."""
        try:
            for m, c in enumerate(prefix):
                self.push(m, c)
            self._rec(len(prefix), max(prefix))
        except _Budget:
            return False
        return True

    def _rec(self, m, maxc):
        if m == self.n_limit:
            return
        col, k = self.col, self.k
        blocked = blocked_colors(col, m, k)
        top = min(maxc + 1, self.r)
        for c in range(1, top + 1):
            if not (blocked >> c) & 1:
                self.push(m, c)
                self._rec(m + 1, maxc if c <= maxc else c)


def _frontier(r, k, n_limit, depth):
    """All valid symmetry-reduced prefixes of exactly ``depth`` positions, in DFS order,
    plus the number of internal nodes above them and the longest shorter dead end."""
    out, internal = [], 0
    longest: tuple[int, ...] = (1,)

    def rec(prefix, maxc):
        nonlocal internal, longest
        if len(prefix) > len(longest):
            longest = tuple(prefix)
        if len(prefix) == depth:
            out.append(tuple(prefix))
            return
        internal += 1
        blocked = blocked_colors(prefix, len(prefix), k)
        for c in range(1, min(maxc + 1, r) + 1):
            if not (blocked >> c) & 1:
                rec(prefix + [c], max(maxc, c))

    rec([1], 1)
    return out, internal, longest


def _subtree_task(args):
    r, k, n_limit, budget, prefix = args
    dfs = _DFS(r, k, n_limit, budget)
    done = dfs.run_from(prefix)
    return dfs.best, dfs.best_colors, dfs.nodes, done


def search_max_valid(
    r: int,
    k: int,
    n_limit: int,
    budget: int | None = None,
    *,
    workers: int = 1,
    split_depth: int = 8,
    on_improve: Callable[[int, int, float], None] | None = None,
) -> SearchOutcome:
    """Longest coloring of ``{1..n}``, ``n <= n_limit``, with ``r`` colors and no k-TMAP.

    ``exhausted`` is True only if the whole tree was explored within
    ``budget`` nodes and the best length stayed below ``n_limit``; then
    ``best_length + 1 == w(r, k)``.

    With ``workers > 1`` the tree is cut at ``split_depth`` and subtrees run
    in separate processes. When the search completes, best length, the
    returned coloring and the node count match the single-process run.
    Each subtree gets the full budget and ``exhausted`` also requires the
    summed node count to stay within it.
    """
    if r < 2:
        raise DomainError(f"search needs r >= 2, got {r}")
    if k < 3:
        raise DomainError(f"search needs k >= 3, got {k}")
    if n_limit < 1:
        raise DomainError(f"n_limit must be >= 1, got {n_limit}")
    if budget is not None and budget < 1:
        raise DomainError(f"budget must be >= 1, got {budget}")
    if on_improve is None:
        def on_improve(length, nodes, elapsed):
            log.info("length=%d nodes=%d elapsed=%.3fs", length, nodes, elapsed)

    # one Python frame per position
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n_limit + 200))
    t0 = time.perf_counter()
    if workers > 1 and split_depth < n_limit:
        best, best_colors, nodes, done = _parallel(r, k, n_limit, budget, workers, split_depth)
        on_improve(best, nodes, time.perf_counter() - t0)
    else:
        dfs = _DFS(r, k, n_limit, budget, on_improve)
        done = dfs.run_from([1])
        best, best_colors, nodes = dfs.best, dfs.best_colors, dfs.nodes

    coloring = Coloring(best_colors, r)
    # independent re-check of what we are about to certify
    if find_first_ktmap_brute(coloring, k) is not None:
        raise AssertionError("search produced an invalid coloring")
    cert = Certificate(coloring, k, "searched", "brute_verified")
    return SearchOutcome(
        best_length=best,
        certificate=cert,
        exhausted=done and best < n_limit,
        nodes_expanded=nodes,
        elapsed=time.perf_counter() - t0,
    )


def _parallel(r, k, n_limit, budget, workers, split_depth):
    prefixes, internal, longest = _frontier(r, k, n_limit, split_depth)
    best, best_colors = len(longest), longest
    nodes = internal
    done = True
    if prefixes:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tasks = [(r, k, n_limit, budget, p) for p in prefixes]
            for sub_best, sub_colors, sub_nodes, sub_done in pool.map(_subtree_task, tasks):
                # prefix nodes were counted inside each task; remove the shared ancestors
                nodes += sub_nodes - (split_depth - 1)
                done = done and sub_done
                if sub_best > best:
                    best, best_colors = sub_best, sub_colors
    if budget is not None and nodes > budget:
        done = False
    return best, best_colors, nodes, done
