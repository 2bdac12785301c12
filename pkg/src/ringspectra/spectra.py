"""Exact characteristic polynomials and integer spectra.

No floating point anywhere: coefficients are Python ints of arbitrary size,
and integrality of a spectrum is decided by exact root extraction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import isqrt

from . import _kernels
from .errors import CharPolyCapError
from .graphs import CliqueDecomposition, CommutingGraph

DEFAULT_CHAR_POLY_CAP = 256


@dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial with exact integer coefficients, ascending degree."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("need at least the constant coefficient")
        if len(self.coefficients) > 1 and self.coefficients[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntegerPolynomial(tuple(out))

    def deflate(self, root: int) -> "IntegerPolynomial":
        """Exact synthetic division by (x - root); root must be a root."""
        quotient = [0] * self.degree
        acc = 0
        for i in range(self.degree, 0, -1):
            acc = acc * root + self.coefficients[i]
            quotient[i - 1] = acc
        assert acc * root + self.coefficients[0] == 0, "not a root"
        return IntegerPolynomial(tuple(quotient))


@dataclass(frozen=True)
class SpectrumResult:
    """Integer eigenvalues with multiplicities plus any non-integral residual."""

    eigenvalues: tuple[tuple[int, int], ...]  # (value, multiplicity), ascending
    residual: IntegerPolynomial               # degree 0 when fully integral
    is_integral: bool

    def __post_init__(self):
        values = [v for v, _ in self.eigenvalues]
        if values != sorted(set(values)):
            raise ValueError("eigenvalues must be ascending and distinct")
        if any(m < 1 for _, m in self.eigenvalues):
            raise ValueError("multiplicities must be >= 1")
        if self.is_integral != (self.residual.degree == 0):
            raise ValueError("is_integral must mirror the residual degree")

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.eigenvalues) + self.residual.degree


def char_poly(graph: CommutingGraph,
              cap: int = DEFAULT_CHAR_POLY_CAP) -> IntegerPolynomial:
    """Exact monic characteristic polynomial of the adjacency matrix.

    Uses the division-free kernel (Berkowitz) over arbitrary-precision
    integers.  Refuses graphs above `cap` vertices.
    """
    if graph.order > cap:
        raise CharPolyCapError(
            f"graph has {graph.order} vertices, above the cap of {cap}")
    rows = graph.adjacency.astype(int).tolist()
    return IntegerPolynomial(tuple(_kernels.charpoly_int(rows)))


def spectrum_from_counter(counts: Counter,
                          residual: IntegerPolynomial | None = None
                          ) -> SpectrumResult:
    residual = residual if residual is not None else IntegerPolynomial((1,))
    eigenvalues = tuple(sorted((v, m) for v, m in counts.items() if m))
    return SpectrumResult(eigenvalues, residual, residual.degree == 0)


def clique_union_spectrum(decomposition: CliqueDecomposition) -> SpectrumResult:
    """Spectrum of a disjoint clique union in closed form.

    Each K_m contributes eigenvalue m-1 once and -1 with multiplicity m-1;
    zero-multiplicity entries (all cliques of size 1) are omitted.
    """
    counts: Counter = Counter()
    for m in decomposition.sizes:
        counts[m - 1] += 1
        counts[-1] += m - 1
    return spectrum_from_counter(counts)


def _iroot(x: int, k: int) -> int:
    """Floor of the k-th root of a non-negative integer."""
    if x < 0 or k < 1:
        raise ValueError("x must be >= 0 and k >= 1")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return isqrt(x)
    guess = int(round(x ** (1.0 / k))) if x.bit_length() < 900 else \
        1 << ((x.bit_length() + k - 1) // k)
    while guess ** k > x:
        guess -= 1
    while (guess + 1) ** k <= x:
        guess += 1
    return guess


def _root_bound(coeffs: tuple[int, ...]) -> int:
    """Upper bound on |root| for a monic integer polynomial (ascending coeffs).

    Minimum of the Cauchy bound 1 + max|a_i| and an integer ceiling of the
    Fujiwara bound 2 * max_i |a_{n-i}|^(1/i).
    """
    n = len(coeffs) - 1
    cauchy = 1 + max(abs(c) for c in coeffs[:-1])
    fujiwara = 1
    for i in range(1, n + 1):
        a = abs(coeffs[n - i])
        if a:
            fujiwara = max(fujiwara, _iroot(a, i) + 1)
    return min(cauchy, 2 * fujiwara)


def _divisors_up_to(value: int, bound: int) -> list[int]:
    """Ascending positive divisors of value that are <= bound.

    Complete: either every integer up to bound is tested directly, or the
    full divisor set is enumerated via trial division up to isqrt(value).
    """
    value = abs(value)
    root = isqrt(value)
    if bound <= root:
        return [d for d in range(1, bound + 1) if value % d == 0]
    found = set()
    for d in range(1, root + 1):
        if value % d == 0:
            found.add(d)
            if value // d <= bound:
                found.add(value // d)
    return sorted(found)


def integer_spectrum(poly: IntegerPolynomial) -> SpectrumResult:
    """All integer roots with multiplicity; the unfactored part is the residual.

    Strips trailing zero coefficients for the root 0, then repeatedly tests
    signed divisors of the deflated polynomial's constant term (bounded by the
    root bound) and deflates by synthetic division.
    """
    if not poly.is_monic:
        raise ValueError("polynomial must be monic")
    counts: Counter = Counter()
    coeffs = list(poly.coefficients)
    nz = 0
    while nz < len(coeffs) - 1 and coeffs[nz] == 0:
        nz += 1
    if nz:
        counts[0] = nz
        coeffs = coeffs[nz:]
    current = IntegerPolynomial(tuple(coeffs))
    while current.degree >= 1:
        bound = _root_bound(current.coefficients)
        root = None
        for d in _divisors_up_to(current.coefficients[0], bound):
            if current(d) == 0:
                root = d
                break
            if current(-d) == 0:
                root = -d
                break
        if root is None:
            break
        counts[root] += 1
        current = current.deflate(root)
    return spectrum_from_counter(counts, residual=current)
