"""Closed-form lower bounds and the harmonic-number growth estimate.

Real-valued results are computed in the log domain and exponentiated at the
end (relative error around 1e-12 for moderate inputs); values too large
for a float come back as ``math.inf``. Use the ``log_*`` helpers when the
magnitude matters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Mapping

from ..core import is_prime, largest_prime_leq
from ..errors import DomainError, MissingConstantError

PARAMETERIZED_FORMS = ("schmidt", "moser", "kozik_shabanov", "obryant")


def _check_rk(r: int, k: int) -> None:
    if r < 2 or k < 2:
        raise DomainError(f"need r >= 2 and k >= 2, got r={r}, k={k}")


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def erdos_rado_floor(r: int, k: int) -> int:
    """``floor(sqrt(2 (k-1) r**(k-1)))`` in exact integer arithmetic."""
    _check_rk(r, k)
    return math.isqrt(2 * (k - 1) * r ** (k - 1))


def eval_erdos_rado(r: int, k: int) -> float:
    """Counting bound ``sqrt(2 (k-1) r**(k-1)) <= w(r, k)``."""
    _check_rk(r, k)
    x = 2 * (k - 1) * r ** (k - 1)
    if x.bit_length() < 1000:
        return math.sqrt(x)
    return _exp(0.5 * (math.log(2 * (k - 1)) + (k - 1) * math.log(r)))


def eval_erdos_lovasz(r: int, k: int) -> Fraction:
    """Local-lemma bound ``r**(k-1) / (4k) * (1 - 1/k)`` as an exact rational."""
    _check_rk(r, k)
    return Fraction(r ** (k - 1) * (k - 1), 4 * k * k)


def _constant(constants: Mapping, name: str, form: str):
    if constants is None or name not in constants or constants[name] is None:
        raise MissingConstantError(f"{form} bound needs constant {name!r}; there is no default")
    return constants[name]


def log_parameterized(form: str, r: int, k: int, constants: Mapping) -> float:
    """Natural log of :func:`eval_parameterized`."""
    _check_rk(r, k)
    lr = math.log(r)
    if form == "schmidt":
        c = float(_constant(constants, "c", form))
        return (k - c * math.sqrt(k * math.log(k))) * lr
    if form == "moser":
        big_c = float(_constant(constants, "C", form))
        return math.log(k - 1) + big_c * lr * lr
    if form == "kozik_shabanov":
        c = float(_constant(constants, "c", form))
        if c <= 0:
            raise DomainError("kozik_shabanov constant must be positive")
        return math.log(c) + (k - 1) * lr
    if form == "obryant":
        f = _constant(constants, "f", form)
        if isinstance(f, Mapping):
            fk = f.get(k, f.get(str(k)))
            if fk is None:
                raise MissingConstantError(f"obryant table has no f({k})")
        else:
            fk = f
        return float(fk) * lr ** ((k - 1).bit_length())  # exponent is ceil(log2 k)
    raise DomainError(f"unknown form {form!r}; expected one of {PARAMETERIZED_FORMS}")


def eval_parameterized(form: str, r: int, k: int, constants: Mapping) -> float:
    """Evaluate a literature bound whose constant is not known explicitly.

    ``schmidt``: ``r**(k - c sqrt(k ln k))`` with ``c``;
    ``moser``: ``(k-1) r**(C ln r)`` with ``C``;
    ``kozik_shabanov``: ``c r**(k-1)`` with ``c``;
    ``obryant``: ``exp(f(k) (ln r)**ceil(log2 k))`` with ``f`` (number or ``{k: value}``).
    """
    return _exp(log_parameterized(form, r, k, constants))


@dataclass(frozen=True)
class HarmonicDecomposition:
    r: int
    p: int
    ell: int
    s: int

    @cached_property
    def harmonic(self) -> Fraction:
        """``H_ell``, exact."""
        return harmonic_number(self.ell)

    @property
    def exponent(self) -> Fraction:
        """``p * H_ell + s / (ell + 1)``."""
        return self.p * self.harmonic + Fraction(self.s, self.ell + 1)


def harmonic_number(n: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


def harmonic_decompose(r: int, p: int) -> HarmonicDecomposition:
    """Write ``r = ell * p + s`` with ``0 <= s < p``."""
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    ell, s = divmod(r, p)
    return HarmonicDecomposition(r, p, ell, s)


def log_harmonic_estimate(r: int, k: int) -> float:
    p = largest_prime_leq(k)
    if k < 3:
        raise DomainError(f"need k >= 3, got {k}")
    if r < p:
        raise DomainError(f"estimate needs r >= p = {p}, got r={r}")
    h = harmonic_decompose(r, p)
    return float(h.exponent) * math.log(p) + math.log(p) + p * math.log(2)


def harmonic_estimate(r: int, k: int) -> float:
    """Growth estimate ``p**(p H_ell + s/(ell+1)) * p * 2**p`` for the iterated recurrence."""
    return _exp(log_harmonic_estimate(r, k))


def log_harmonic_asymptotic(r: int, k: int) -> float:
    """Natural log of ``p**(p ln(r/p)) * 2**p``."""
    p = largest_prime_leq(k)
    if r < p:
        raise DomainError(f"need r >= p = {p}, got r={r}")
    return p * math.log(r / p) * math.log(p) + p * math.log(2)
