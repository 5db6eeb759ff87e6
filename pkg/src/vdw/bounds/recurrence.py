"""Exact-integer bound recurrence ``w(r, k) > p * (w(r - ceil(r/p), k) - 1)``.

Bounds are carried as *valid lengths*: ``w > n`` is stored as ``n``, the
length of a known coloring with no k-TMAP, and an exact ``w`` as ``w - 1``.
One recurrence step is then a plain multiplication by ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from ..core import ceil_div, is_prime, largest_prime_leq
from ..errors import DomainError, NoBasisError, UnsupportedRangeError

Kind = Literal["exact", "strict_lower"]
Reading = Literal["as-printed", "corrected"]


@dataclass(frozen=True)
class KnownBound:
    """``w(r, k) = value`` (exact) or ``w(r, k) > value`` (strict_lower)."""

    r: int
    k: int
    kind: Kind
    value: int
    source: str = ""

    def __post_init__(self) -> None:
        if self.r < 1 or self.k < 2:
            raise DomainError(f"bad (r, k) = ({self.r}, {self.k})")
        if self.kind not in ("exact", "strict_lower"):
            raise DomainError(f"kind must be 'exact' or 'strict_lower', got {self.kind!r}")
        if self.valid_length < self.k - 1:
            raise DomainError(
                f"w({self.r},{self.k}) bound {self.value} is below the trivial valid length {self.k - 1}"
            )

    @property
    def valid_length(self) -> int:
        """Length of a coloring that is known to exist without a k-TMAP."""
        return self.value - 1 if self.kind == "exact" else self.value

    def as_strict_lower(self) -> "KnownBound":
        return KnownBound(self.r, self.k, "strict_lower", self.valid_length, self.source)


@dataclass(frozen=True)
class BoundStep:
    r: int
    k: int
    p: int
    source_r: int
    source_length: int
    value: int


@dataclass(frozen=True)
class BoundDerivation:
    r: int
    k: int
    basis: KnownBound
    steps: tuple[BoundStep, ...] = ()
    final: int = field(default=0)

    def replay(self) -> int:
        """Recompute ``final`` from the basis, checking every recorded step."""
        n = self.basis.valid_length
        at = self.basis.r
        for step in self.steps:
            if step.source_r != at or step.source_length != n:
                raise AssertionError(f"step {step} does not continue from ({at}, {n})")
            if step.source_r != step.r - ceil_div(step.r, step.p):
                raise AssertionError(f"step {step} uses the wrong source color count")
            n = step.p * n
            if n != step.value:
                raise AssertionError(f"step {step} recorded {step.value}, replay gives {n}")
            at = step.r
        return n

    @property
    def bound(self) -> KnownBound:
        if not self.steps:
            return self.basis.as_strict_lower()
        return KnownBound(self.r, self.k, "strict_lower", self.final, "recurrence")

    def describe(self) -> str:
        parts = [f"({self.basis.r},{self.k})={self.basis.valid_length} [{self.basis.source or self.basis.kind}]"]
        parts += [f"x{s.p} -> ({s.r},{s.k})={s.value}" for s in self.steps]
        return " ".join(parts)


def recurrence_step(source: KnownBound, r: int, k: int) -> KnownBound:
    """One application of the recurrence, lifting ``source`` to ``r`` colors."""
    p = largest_prime_leq(k)
    want = r - ceil_div(r, p)
    if source.k != k or source.r != want:
        raise DomainError(
            f"lifting to (r={r}, k={k}) needs a bound at ({want}, {k}), got ({source.r}, {source.k})"
        )
    return KnownBound(r, k, "strict_lower", p * source.valid_length, f"recurrence p={p} from ({source.r},{k})")


def index_bounds(db: Iterable[KnownBound]) -> dict[tuple[int, int], KnownBound]:
    """Best (longest valid length) bound per ``(r, k)``."""
    best: dict[tuple[int, int], KnownBound] = {}
    for b in db:
        cur = best.get((b.r, b.k))
        if cur is None or b.valid_length > cur.valid_length:
            best[(b.r, b.k)] = b
    return best


def trivial_bound(k: int) -> KnownBound:
    """One color: ``k - 1`` equal positions are valid, ``k`` are not."""
    return KnownBound(1, k, "exact", k, "one color")


class _Chain:
    def __init__(self, k: int, db, trivial_seed: bool):
        self.k = k
        self.p = largest_prime_leq(k)
        self.known = {r: b for (r, kk), b in index_bounds(db).items() if kk == k}
        if trivial_seed and 1 not in self.known:
            self.known[1] = trivial_bound(k)
        self.memo: dict[int, BoundDerivation | None] = {}

    def via_recurrence(self, r: int) -> BoundDerivation | None:
        if r < 2:
            return None
        src_r = r - ceil_div(r, self.p)
        sub = self.best(src_r)
        if sub is None:
            return None
        value = self.p * sub.final
        step = BoundStep(r, self.k, self.p, src_r, sub.final, value)
        return BoundDerivation(r, self.k, sub.basis, sub.steps + (step,), value)

    def best(self, r: int) -> BoundDerivation | None:
        if r in self.memo:
            return self.memo[r]
        options = []
        if r in self.known:
            b = self.known[r]
            options.append(BoundDerivation(r, self.k, b, (), b.valid_length))
        lifted = self.via_recurrence(r)
        if lifted is not None:
            options.append(lifted)
        # ties go to the stored bound: fewer steps to audit
        result = max(options, key=lambda d: d.final, default=None)
        self.memo[r] = result
        return result


def recurrence_chain(
    r: int, k: int, db: Iterable[KnownBound], *, trivial_seed: bool = True
) -> BoundDerivation:
    """Best strict lower bound for ``w(r, k)`` reachable from ``db`` by the recurrence.

    Every ``(r', k)`` on the way takes the larger of its stored bound and
    ``p`` times the best bound at ``r' - ceil(r'/p)``. With
    ``trivial_seed`` the one-color value ``w(1, k) = k`` is available too.
    """
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    db = list(db)
    if not any(b.k == k for b in db):
        raise NoBasisError(f"no known bound in column k={k}")
    derivation = _Chain(k, db, trivial_seed).best(r)
    if derivation is None:
        raise NoBasisError(f"no bound for w({r},{k}) is derivable from the given data")
    return derivation


def recurrence_only(r: int, k: int, db: Iterable[KnownBound], *, trivial_seed: bool = True) -> BoundDerivation | None:
    """Like :func:`recurrence_chain` but forbids using a stored value at ``(r, k)`` itself."""
    return _Chain(k, list(db), trivial_seed).via_recurrence(r)


def berlekamp_base(p: int) -> KnownBound:
    """``w(2, p + 1) > p * 2**p``."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return KnownBound(2, p + 1, "strict_lower", p * 2**p, "Berlekamp")


def berlekamp_chain_value(r: int, p: int) -> int:
    """Closed form ``p**(r-1) * 2**p`` of the chain seeded by the Berlekamp base."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not 2 <= r <= p:
        raise UnsupportedRangeError(f"need 2 <= r <= p, got r={r}, p={p}")
    return p ** (r - 1) * 2**p


def berlekamp_chain_derivation(r: int, p: int) -> BoundDerivation:
    """The recurrence chain from the Berlekamp base alone, for comparison with the closed form."""
    berlekamp_chain_value(r, p)  # range checks
    return recurrence_chain(r, p + 1, [berlekamp_base(p)], trivial_seed=False)


def strengthened_prime_candidates(r: int, k: int, reading: Reading = "corrected") -> list[int]:
    """Primes above the default block prime that pass the larger-prime condition.

    ``as-printed``: ``q - floor(r/q) < k``.  ``corrected``: ``q - floor(q/r) < k``.
    Candidates only; nothing here is used by :func:`recurrence_chain`.
    """
    if r < 2 or k < 3:
        raise DomainError(f"need r >= 2 and k >= 3, got r={r}, k={k}")
    if reading == "as-printed":
        ok = lambda q: q - r // q < k  # noqa: E731
    elif reading == "corrected":
        ok = lambda q: q - q // r < k  # noqa: E731
    else:
        raise DomainError(f"unknown reading {reading!r}")
    p = largest_prime_leq(k)
    # q - r//q >= q - r/2 and q - q//r >= q/2, so nothing beyond 2k + r qualifies
    return [q for q in range(p + 1, 2 * k + r + 2) if is_prime(q) and ok(q)]


def strengthened_candidates(
    r: int, k: int, db: Iterable[KnownBound], reading: Reading = "corrected"
) -> list[dict]:
    """Candidate values ``q * best(r - 1, k)`` for each candidate prime ``q``.

    These follow the one-block-removed argument and are reported, not certified.
    """
    primes = strengthened_prime_candidates(r, k, reading)
    if not primes:
        return []
    source = recurrence_chain(r - 1, k, db)
    return [
        {"prime": q, "source_r": r - 1, "source_length": source.final, "value": q * source.final, "reading": reading}
        for q in primes
    ]
