"""
Exact Convolution Engine

Number-theoretic transforms over word-sized primes with Garner (CRT)
reconstruction. Every correlation is exact: the engine picks the shortest
prefix of its prime set whose product covers the largest coefficient the
inputs can produce, and refuses inputs it cannot reconstruct.

Transforms are written as generators that yield the number of work units
(butterflies, pointwise products, reconstruction steps) done since the last
yield, so the same code runs monolithically or sliced into bounded steps.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Generator, List, Optional, Sequence, Tuple

import numpy as np

from ..core.constants import NTT_PRIMES
from ..core.exceptions import CoefficientBoundError, ConvolutionError
from ..core.utils import next_power_of_two

logger = logging.getLogger(__name__)

WorkSteps = Generator[int, None, np.ndarray]

INT64_LIMIT = 2 ** 63 - 1


@dataclass(frozen=True)
class NTTPrime:
    """A prime p = c * 2^k + 1 with a known primitive root"""
    modulus: int
    generator: int
    max_log: int

    def root_of_order(self, size: int) -> int:
        return pow(self.generator, (self.modulus - 1) // size, self.modulus)


def run_steps(steps: WorkSteps) -> Tuple[np.ndarray, int]:
    """Drive a work generator to completion; returns (result, work units)"""
    work = 0
    while True:
        try:
            work += next(steps)
        except StopIteration as done:
            return done.value, work


class ConvolutionEngine:
    """Exact integer cross-correlation via NTTs and CRT reconstruction"""

    def __init__(self, primes: Sequence[Tuple[int, int, int]] = NTT_PRIMES):
        self.primes: List[NTTPrime] = [NTTPrime(*p) for p in primes]
        if not self.primes:
            raise ConvolutionError("At least one NTT prime is required")
        for prime in self.primes:
            root = prime.root_of_order(1 << prime.max_log)
            if pow(root, 1 << (prime.max_log - 1), prime.modulus) != prime.modulus - 1:
                raise ConvolutionError(
                    f"{prime.generator} does not generate order 2^{prime.max_log} mod {prime.modulus}"
                )
        self._twiddle_cache: Dict[Tuple[int, int, bool], np.ndarray] = {}
        self._bitrev_cache: Dict[int, np.ndarray] = {}

    # ------------------------------------------------------------------
    # Capacity planning
    # ------------------------------------------------------------------

    @property
    def capacity(self) -> int:
        """Product of all moduli"""
        product = 1
        for prime in self.primes:
            product *= prime.modulus
        return product

    def moduli_needed(self, bound: int, signed: bool = False) -> int:
        """Number of primes whose product exceeds the coefficient range"""
        span = 2 * bound + 1 if signed else bound + 1
        product = 1
        for count, prime in enumerate(self.primes, start=1):
            product *= prime.modulus
            if product >= span:
                return count
        raise CoefficientBoundError(
            f"Coefficient bound {bound} exceeds the modulus capacity {self.capacity}"
        )

    @staticmethod
    def coefficient_bound(
        a: np.ndarray, b: np.ndarray, a_power: int = 1, b_power: int = 1
    ) -> int:
        max_a = int(np.abs(a).max()) if a.size else 0
        max_b = int(np.abs(b).max()) if b.size else 0
        return (max_a ** a_power) * (max_b ** b_power) * int(b.size)

    @staticmethod
    def transform_size(len_a: int, len_b: int) -> int:
        return next_power_of_two(len_a + len_b - 1)

    def correlation_work(self, len_a: int, len_b: int, moduli: int) -> int:
        """Exact work units a correlation of these lengths will report"""
        size = self.transform_size(len_a, len_b)
        log_size = size.bit_length() - 1
        per_prime = 3 * (size // 2) * log_size + size
        return moduli * per_prime + (moduli - 1) * (len_a - len_b + 1)

    # ------------------------------------------------------------------
    # Correlation
    # ------------------------------------------------------------------

    def cross_correlate(self, a, b) -> np.ndarray:
        """output[i] = sum_j b[j] * a[i + j] for every full alignment"""
        result, _ = run_steps(self.correlate_steps(np.asarray(a), np.asarray(b)))
        return result

    def correlate_powers(self, a, b, a_power: int, b_power: int) -> np.ndarray:
        """output[i] = sum_j b[j]**b_power * a[i + j]**a_power, powers taken mod each prime"""
        result, _ = run_steps(
            self.correlate_steps(np.asarray(a), np.asarray(b), a_power, b_power)
        )
        return result

    def correlate_steps(
        self,
        a: np.ndarray,
        b: np.ndarray,
        a_power: int = 1,
        b_power: int = 1,
        grain: Optional[int] = None,
    ) -> WorkSteps:
        """Resumable correlation of a**a_power against b**b_power.

        Yields work units after every slice of at most `grain` units and
        returns the exact integer correlation (int64, or object dtype when
        values can exceed 63 bits).
        """
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if b.size < 1 or a.size < b.size:
            raise ConvolutionError(
                f"Correlation needs 1 <= len(b) <= len(a), got {b.size} and {a.size}"
            )
        signed = bool((a < 0).any() or (b < 0).any())
        bound = self.coefficient_bound(a, b, a_power, b_power)
        moduli = self.moduli_needed(bound, signed)
        size = self.transform_size(a.size, b.size)
        out_len = a.size - b.size + 1
        for prime in self.primes[:moduli]:
            if size > (1 << prime.max_log):
                raise ConvolutionError(
                    f"Transform size {size} exceeds 2^{prime.max_log} for modulus {prime.modulus}"
                )

        residues: List[np.ndarray] = []
        for index in range(moduli):
            residue = yield from self._correlate_mod(
                index, a, b[::-1], a_power, b_power, size, grain
            )
            residues.append(residue[b.size - 1:b.size - 1 + out_len])

        values = yield from self._reconstruct(residues, grain)
        if signed:
            modulus = self._product(moduli)
            if values.dtype == object:
                values = np.array([v - modulus if v > modulus // 2 else v for v in values], dtype=object)
            else:
                values = np.where(values > modulus // 2, values - modulus, values)
        return values

    def _product(self, moduli: int) -> int:
        product = 1
        for prime in self.primes[:moduli]:
            product *= prime.modulus
        return product

    def _residues(self, values: np.ndarray, power: int, p: int, size: int) -> np.ndarray:
        base = values % p
        out = base.copy()
        for _ in range(power - 1):
            out = out * base % p
        padded = np.zeros(size, dtype=np.int64)
        padded[:values.size] = out
        return padded

    def _correlate_mod(
        self,
        index: int,
        a: np.ndarray,
        b_reversed: np.ndarray,
        a_power: int,
        b_power: int,
        size: int,
        grain: Optional[int],
    ) -> WorkSteps:
        p = self.primes[index].modulus
        fa = self._residues(a, a_power, p, size)
        fb = self._residues(b_reversed, b_power, p, size)
        yield from self._transform(fa, index, False, grain)
        yield from self._transform(fb, index, False, grain)
        inv_size = pow(size, p - 2, p)
        step = grain or size
        for lo in range(0, size, step):
            hi = min(lo + step, size)
            fa[lo:hi] = fa[lo:hi] * fb[lo:hi] % p * inv_size % p
            yield hi - lo
        yield from self._transform(fa, index, True, grain)
        return fa

    def _transform(
        self, arr: np.ndarray, index: int, inverse: bool, grain: Optional[int]
    ) -> Generator[int, None, None]:
        p = self.primes[index].modulus
        size = arr.size
        arr[:] = arr[self._bit_reverse(size)]
        table = self._twiddles(index, size, inverse)
        total = size // 2
        step = grain or max(total, 1)
        half = 1
        while half < size:
            stride = size // (2 * half)
            for lo in range(0, total, step):
                hi = min(lo + step, total)
                k = np.arange(lo, hi, dtype=np.int64)
                block, j = np.divmod(k, half)
                i1 = block * (2 * half) + j
                i2 = i1 + half
                v = arr[i2] * table[j * stride] % p
                u = arr[i1]
                arr[i1] = (u + v) % p
                arr[i2] = (u - v) % p
                yield hi - lo
            half *= 2

    def _reconstruct(self, residues: List[np.ndarray], grain: Optional[int]) -> WorkSteps:
        """Garner's algorithm over the used primes"""
        moduli = len(residues)
        if moduli == 1:
            return residues[0].astype(np.int64)
        length = residues[0].size
        primes = [prime.modulus for prime in self.primes[:moduli]]
        coeffs = [residues[0]]
        step = max(1, (grain or length) // (moduli - 1)) if length else 1
        for i in range(1, moduli):
            coeffs.append(np.zeros(length, dtype=np.int64))
        for lo in range(0, length, step):
            hi = min(lo + step, length)
            for i in range(1, moduli):
                p = primes[i]
                acc = np.zeros(hi - lo, dtype=np.int64)
                weight = 1
                for j in range(i):
                    acc = (acc + coeffs[j][lo:hi] * (weight % p)) % p
                    weight *= primes[j]
                inverse = pow(weight % p, p - 2, p)
                coeffs[i][lo:hi] = (residues[i][lo:hi] - acc) % p * inverse % p
            yield (moduli - 1) * (hi - lo)

        if self._product(moduli) <= INT64_LIMIT:
            values = np.zeros(length, dtype=np.int64)
            weight = 1
            for j in range(moduli):
                values += coeffs[j] * weight
                weight *= primes[j]
            return values
        values = np.zeros(length, dtype=object)
        weight = 1
        for j in range(moduli):
            values = values + coeffs[j].astype(object) * weight
            weight *= primes[j]
        return values

    def _twiddles(self, index: int, size: int, inverse: bool) -> np.ndarray:
        key = (index, size, inverse)
        table = self._twiddle_cache.get(key)
        if table is None:
            prime = self.primes[index]
            p = prime.modulus
            root = prime.root_of_order(size)
            if inverse:
                root = pow(root, p - 2, p)
            table = np.ones(1, dtype=np.int64)
            while table.size < size // 2:
                table = np.concatenate([table, table * pow(root, table.size, p) % p])
            table = table[:max(size // 2, 1)]
            self._twiddle_cache[key] = table
        return table

    def _bit_reverse(self, size: int) -> np.ndarray:
        rev = self._bitrev_cache.get(size)
        if rev is None:
            bits = size.bit_length() - 1
            idx = np.arange(size, dtype=np.int64)
            rev = np.zeros(size, dtype=np.int64)
            for b in range(bits):
                rev |= ((idx >> b) & 1) << (bits - 1 - b)
            self._bitrev_cache[size] = rev
        return rev


@lru_cache(maxsize=1)
def default_engine() -> ConvolutionEngine:
    return ConvolutionEngine()


def cross_correlate(a, b) -> np.ndarray:
    """Exact cross-correlation with the shared default engine"""
    return default_engine().cross_correlate(a, b)
