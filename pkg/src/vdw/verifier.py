"""Detection of k-term monochromatic arithmetic progressions.

Two independent paths decide the same question:

* :func:`find_first_ktmap_brute` walks every ``(start, diff)`` pair in the
  fixed order (ascending diff, then ascending start) and compares colors
  position by position. Starts are compared in bulk with numpy, but no pair
  is skipped.
* :func:`find_first_ktmap_fast` keeps one Python-int bitmap per color and
  intersects shifted copies. Differences whose two-term intersection is
  already empty are skipped without building the remaining shifts.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .core import APWitness, Coloring, as_coloring, concatenate_blocks, excluded_block_indices, largest_prime_leq
from .errors import DomainError, LimitExceededError, PreconditionError

DEFAULT_N_MAX = 5_000_000

WitnessMode = Literal["any", "first"]


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    witness: APWitness | None
    progressions_scanned: int
    elapsed: float
    path: str = "fast"


def _check_k(k: int) -> None:
    if k < 2:
        raise DomainError(f"progression length k must be >= 2, got {k}")


def _max_diff(n: int, k: int) -> int:
    return (n - 1) // (k - 1) if n else 0


def _starts_for(n: int, k: int, d: int) -> int:
    return max(0, n - (k - 1) * d)


def find_first_ktmap_brute(coloring: Coloring | Sequence[int], k: int) -> APWitness | None:
    """First k-TMAP in (diff, start) order, or ``None`` if the coloring is valid."""
    _check_k(k)
    witness, _ = _brute_scan(as_coloring(coloring), k)
    return witness


def _brute_scan(coloring: Coloring, k: int) -> tuple[APWitness | None, int]:
    n = len(coloring)
    a = np.asarray(coloring.colors, dtype=np.int64)
    scanned = 0
    for d in range(1, _max_diff(n, k) + 1):
        m = _starts_for(n, k, d)
        head = a[:m]
        eq = head == a[d : d + m]
        for j in range(2, k):
            eq &= head == a[j * d : j * d + m]
        scanned += m
        hits = np.flatnonzero(eq)
        if hits.size:
            s = int(hits[0])
            return APWitness(s + 1, d, k, int(a[s])), scanned
    return None, scanned


def color_bitmaps(coloring: Coloring) -> dict[int, int]:
    """Map each color to an int whose bit ``q - 1`` is set iff position ``q`` has it."""
    a = np.asarray(coloring.colors, dtype=np.int64)
    maps = {}
    for c in np.unique(a):
        bits = np.packbits(a == c, bitorder="little")
        maps[int(c)] = int.from_bytes(bits.tobytes(), "little")
    return maps


def _scan_diffs(bitmaps: dict[int, int], n: int, k: int, lo: int, hi: int, mode: str):
    """Scan differences ``lo..hi`` inclusive; returns ``(witness, scanned)``."""
    scanned = 0
    for d in range(lo, hi + 1):
        best = None
        for c, m in bitmaps.items():
            acc = m & (m >> d)
            j = 2
            while acc and j < k:
                acc &= m >> (j * d)
                j += 1
            if acc:
                start = (acc & -acc).bit_length()
                if mode == "any":
                    return APWitness(start, d, k, c), scanned + _starts_for(n, k, d)
                if best is None or start < best.start:
                    best = APWitness(start, d, k, c)
        scanned += _starts_for(n, k, d)
        if best is not None:
            return best, scanned
    return None, scanned


def _scan_task(args):
    return _scan_diffs(*args)


def _partitions(max_d: int, chunks: int) -> list[tuple[int, int]]:
    chunks = max(1, min(chunks, max_d))
    step = -(-max_d // chunks)
    return [(lo, min(lo + step - 1, max_d)) for lo in range(1, max_d + 1, step)]


def find_first_ktmap_fast(
    coloring: Coloring | Sequence[int],
    k: int,
    *,
    mode: WitnessMode = "any",
    workers: int = 1,
    chunks: int | None = None,
    n_max: int = DEFAULT_N_MAX,
) -> APWitness | None:
    """Bitmap search for a k-TMAP.

    Agrees with :func:`find_first_ktmap_brute` on validity. With
    ``mode="first"`` the witness is also the brute oracle's witness; with
    ``mode="any"`` it is the first hit in the lowest difference that has one,
    which is still deterministic for a given partitioning.
    """
    witness, _ = _fast_scan(as_coloring(coloring), k, mode, workers, chunks, n_max)
    return witness


def _fast_scan(coloring, k, mode, workers, chunks, n_max):
    _check_k(k)
    n = len(coloring)
    if n > n_max:
        raise LimitExceededError(
            f"coloring of length {n} exceeds n_max={n_max}; rely on structural "
            "validity of blow-ups from a verified base or raise n_max"
        )
    max_d = _max_diff(n, k)
    if max_d == 0:
        return None, 0
    bitmaps = {c: m for c, m in color_bitmaps(coloring).items() if m.bit_count() >= k}
    if not bitmaps:
        return None, sum(_starts_for(n, k, d) for d in range(1, max_d + 1))
    parts = _partitions(max_d, chunks or workers)
    scanned = 0
    if workers > 1 and len(parts) > 1:
        tasks = [(bitmaps, n, k, lo, hi, mode) for lo, hi in parts]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # results come back in partition order, so the lowest-diff hit wins
            for witness, part_scanned in pool.map(_scan_task, tasks):
                scanned += part_scanned
                if witness is not None:
                    return witness, scanned
        return None, scanned
    for lo, hi in parts:
        witness, part_scanned = _scan_diffs(bitmaps, n, k, lo, hi, mode)
        scanned += part_scanned
        if witness is not None:
            return witness, scanned
    return None, scanned


def verify(
    coloring: Coloring | Sequence[int],
    k: int,
    *,
    oracle: bool = False,
    mode: WitnessMode = "any",
    workers: int = 1,
    n_max: int = DEFAULT_N_MAX,
) -> VerifyReport:
    """Decide validity and report the witness, work done and wall time."""
    coloring = as_coloring(coloring)
    t0 = time.perf_counter()
    if oracle:
        _check_k(k)
        if len(coloring) > n_max:
            raise LimitExceededError(f"coloring of length {len(coloring)} exceeds n_max={n_max}")
        witness, scanned = _brute_scan(coloring, k)
    else:
        witness, scanned = _fast_scan(coloring, k, mode, workers, None, n_max)
    return VerifyReport(
        valid=witness is None,
        witness=witness,
        progressions_scanned=scanned,
        elapsed=time.perf_counter() - t0,
        path="brute" if oracle else "fast",
    )


def all_ktmaps(coloring: Coloring, k: int) -> list[APWitness]:
    """Every k-TMAP of the coloring, in (diff, start) order."""
    _check_k(k)
    n = len(coloring)
    a = np.asarray(coloring.colors, dtype=np.int64)
    found = []
    for d in range(1, _max_diff(n, k) + 1):
        m = _starts_for(n, k, d)
        head = a[:m]
        eq = head == a[d : d + m]
        for j in range(2, k):
            eq &= head == a[j * d : j * d + m]
        found.extend(APWitness(int(s) + 1, d, k, int(a[s])) for s in np.flatnonzero(eq))
    return found


def lemma1_holds(block_sequence: Sequence[int], r: int, k: int) -> bool:
    """Concatenate allowed blocks and check every k-TMAP has diff divisible by p."""
    if not block_sequence:
        raise PreconditionError("block sequence must be nonempty")
    excluded = excluded_block_indices(r, k)
    bad = sorted(set(block_sequence) & excluded)
    if bad:
        raise PreconditionError(f"block indices {bad} are excluded for r={r}, k={k}")
    p = largest_prime_leq(k)
    t = concatenate_blocks(block_sequence, r, k)
    return all(w.diff % p == 0 for w in all_ktmaps(t, k))
