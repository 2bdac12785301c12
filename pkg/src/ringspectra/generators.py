"""Witness ring families and exhaustive enumeration of small bilinear rings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

import numpy as np

from . import _kernels
from .errors import SearchSpaceTooLargeError
from .ring import (AbelianGroupType, FiniteRing, additive_quotient_structure,
                   center, centralizer_family, commuting_probability,
                   is_cc_ring, is_prime, validate_ring)

# Hard bound on p**(k**3) and the threshold above which opting in is required.
_SPACE_CAP = 1 << 30
_OPT_IN_THRESHOLD = 1 << 24


def cyclic_ring(n: int, label: Optional[str] = None) -> FiniteRing:
    """Z_n with addition and multiplication mod n (commutative)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return validate_ring(n, add, mul, label=label or f"Z{n}")


def zero_ring(n: int, label: Optional[str] = None) -> FiniteRing:
    """Z_n addition with identically-zero multiplication (commutative)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = np.zeros((n, n), dtype=np.int64)
    return validate_ring(n, add, mul, label=label or f"zero{n}")


def row_matrix_ring(m: int) -> FiniteRing:
    """Pairs (a, b) over Z_m with (a,b)*(c,d) = (ac, ad); order m^2.

    Matrix model: 2x2 matrices with zero bottom row.  Non-commutative with
    trivial center for every m >= 2.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    a, b = np.divmod(np.arange(m * m, dtype=np.int64), m)
    add = ((a[:, None] + a[None, :]) % m) * m + (b[:, None] + b[None, :]) % m
    mul = ((a[:, None] * a[None, :]) % m) * m + (a[:, None] * b[None, :]) % m
    return validate_ring(m * m, add, mul, label=f"row_matrix_{m}")


def upper_triangular_ring(m: int) -> FiniteRing:
    """2x2 upper-triangular matrices over Z_m; order m^3.

    Element (a, b, d) is [[a, b], [0, d]], indexed a*m^2 + b*m + d.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    n = m ** 3
    rest, d = np.divmod(np.arange(n, dtype=np.int64), m)
    a, b = np.divmod(rest, m)

    def pack(x, y, z):
        return (x % m) * m * m + (y % m) * m + (z % m)

    add = pack(a[:, None] + a[None, :], b[:, None] + b[None, :],
               d[:, None] + d[None, :])
    mul = pack(a[:, None] * a[None, :],
               a[:, None] * b[None, :] + b[:, None] * d[None, :],
               d[:, None] * d[None, :])
    return validate_ring(n, add, mul, label=f"upper_triangular_{m}")


def full_matrix_ring(p: int) -> FiniteRing:
    """All 2x2 matrices over Z_p for prime p <= 3; order p^4."""
    if not is_prime(p) or p > 3:
        raise ValueError("p must be a prime <= 3")
    n = p ** 4
    digits = np.arange(n, dtype=np.int64)
    a = digits // p ** 3 % p
    b = digits // p ** 2 % p
    c = digits // p % p
    d = digits % p

    def pack(w, x, y, z):
        return ((w % p) * p ** 3 + (x % p) * p ** 2 + (y % p) * p + z % p)

    add = pack(a[:, None] + a[None, :], b[:, None] + b[None, :],
               c[:, None] + c[None, :], d[:, None] + d[None, :])
    mul = pack(a[:, None] * a[None, :] + b[:, None] * c[None, :],
               a[:, None] * b[None, :] + b[:, None] * d[None, :],
               c[:, None] * a[None, :] + d[:, None] * c[None, :],
               c[:, None] * b[None, :] + d[:, None] * d[None, :])
    return validate_ring(n, add, mul, label=f"full_matrix_{p}")


@dataclass(frozen=True)
class StructureConstants:
    """Basis products e_i * e_j = sum_t c[i][j][t] e_t over (Z_p)^k."""

    p: int
    k: int
    c: tuple  # k x k x k nested tuples with entries in 0..p-1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("p must be prime")
        arr = np.asarray(self.c)
        if arr.shape != (self.k, self.k, self.k):
            raise ValueError("constants must form a k x k x k tensor")
        if ((arr < 0) | (arr >= self.p)).any():
            raise ValueError("constant entries must lie in 0..p-1")

    @classmethod
    def from_tensor_index(cls, p: int, k: int, index: int) -> "StructureConstants":
        """Decode a base-p index, most significant digit = first flat position."""
        kk = k ** 3
        digits = []
        for q in range(kk):
            digits.append(index // p ** (kk - 1 - q) % p)
        arr = np.asarray(digits, dtype=np.int64).reshape(k, k, k)
        return cls(p, k, tuple(tuple(tuple(int(x) for x in row) for row in plane)
                               for plane in arr))

    def tensor_index(self) -> int:
        index = 0
        for plane in self.c:
            for row in plane:
                for x in row:
                    index = index * self.p + int(x)
        return index

    def associativity_witness(self) -> Optional[tuple[int, int, int]]:
        """First basis triple (i, j, l) violating (e_i e_j) e_l = e_i (e_j e_l)."""
        c = np.asarray(self.c, dtype=np.int64)
        p, k = self.p, self.k
        for i in range(k):
            for j in range(k):
                for l in range(k):
                    lhs = c[i, j] @ c[:, l, :] % p
                    rhs = c[j, l] @ c[i, :, :] % p
                    if not np.array_equal(lhs, rhs):
                        return (i, j, l)
        return None


def ring_from_structure_constants(sc: StructureConstants) -> FiniteRing:
    """Ring of order p^k induced by bilinear extension of the basis products.

    Element index encodes the coordinate vector base p, first coordinate most
    significant.  Raises ValueError naming the first failing basis triple if
    the constants are not associative.
    """
    w = sc.associativity_witness()
    if w is not None:
        raise ValueError(f"structure constants not associative, "
                         f"witness basis triple {w}")
    p, k = sc.p, sc.k
    n = p ** k
    c = np.asarray(sc.c, dtype=np.int64)
    coords = np.zeros((n, k), dtype=np.int64)
    rem = np.arange(n, dtype=np.int64)
    for i in range(k):
        coords[:, i] = rem // p ** (k - 1 - i) % p
    weights = np.asarray([p ** (k - 1 - i) for i in range(k)], dtype=np.int64)
    add = ((coords[:, None, :] + coords[None, :, :]) % p) @ weights
    prod_vec = np.einsum("xi,yj,ijt->xyt", coords, coords, c) % p
    mul = prod_vec @ weights
    label = f"bilinear_p{p}k{k}_t{sc.tensor_index()}"
    return validate_ring(n, add, mul, label=label)


@dataclass(frozen=True)
class CatalogEntry:
    """An enumerated ring with its provenance and cached invariants."""

    ring: FiniteRing
    provenance: str
    center_size: int = field(init=False)
    n_centralizers: int = field(init=False)
    commuting_probability: Fraction = field(init=False)
    quotient_type: AbelianGroupType = field(init=False)
    is_cc: Optional[bool] = field(init=False)  # None for commutative rings

    def __post_init__(self):
        object.__setattr__(self, "center_size", len(center(self.ring)))
        object.__setattr__(self, "n_centralizers",
                           centralizer_family(self.ring)[1])
        object.__setattr__(self, "commuting_probability",
                           commuting_probability(self.ring))
        object.__setattr__(self, "quotient_type",
                           additive_quotient_structure(self.ring))
        cc = None if self.ring.is_commutative() else is_cc_ring(self.ring).is_cc
        object.__setattr__(self, "is_cc", cc)


def tensor_space_size(p: int, k: int) -> int:
    return p ** (k ** 3)


def scan_associative_tensor_indices(p: int, k: int,
                                    allow_large: bool = False) -> list[int]:
    """All tensor indices over (Z_p)^k whose bilinear product is associative.

    Refuses spaces above 2^30 outright, and spaces above 2^24 unless
    allow_large is set (the p=2, k=3 scan visits 2^27 tensors).
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if k < 1:
        raise ValueError("k must be >= 1")
    size = tensor_space_size(p, k)
    if size > _SPACE_CAP:
        raise SearchSpaceTooLargeError(
            f"p={p}, k={k} scans {size} tensors, above the 2^30 cap")
    if size > _OPT_IN_THRESHOLD and not allow_large:
        raise SearchSpaceTooLargeError(
            f"p={p}, k={k} scans {size} tensors; pass allow_large to proceed")
    return _kernels.scan_assoc_tensors(p, k, 0, size)


def enumerate_bilinear_rings(
    p: int, k: int,
    predicate: Optional[Callable[[FiniteRing], bool]] = None,
    allow_large: bool = False,
) -> Iterator[CatalogEntry]:
    """Stream catalog entries for associative bilinear products on (Z_p)^k.

    Deterministic: ascending tensor index = lexicographic on the flattened
    tensor.  The predicate filters built rings (e.g. non-commutativity).
    """
    for index in scan_associative_tensor_indices(p, k, allow_large=allow_large):
        sc = StructureConstants.from_tensor_index(p, k, index)
        ring = ring_from_structure_constants(sc)
        if predicate is not None and not predicate(ring):
            continue
        yield CatalogEntry(ring, provenance=f"bilinear(p={p}, k={k}, "
                                            f"tensor_index={index})")
