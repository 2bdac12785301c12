"""Finite rings as explicit Cayley tables, and their commutativity invariants.

Elements are integer indices 0..n-1.  Everything is exact: probabilities are
`fractions.Fraction`, group structure is computed on integer tables, and no
operation mutates a validated ring.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional

import numpy as np

from . import _kernels
from .errors import CommutativeRingError, RingValidationError


class FiniteRing:
    """Validated ring with order-n addition and multiplication tables.

    Immutable after construction; do not build directly, use `validate_ring`
    or a constructor from `ringspectra.generators`.
    """

    __slots__ = ("order", "add", "mul", "zero", "label")

    def __init__(self, order: int, add: np.ndarray, mul: np.ndarray, zero: int,
                 label: Optional[str] = None):
        self.order = order
        self.add = add
        self.mul = mul
        self.zero = zero
        self.label = label if label is not None else f"ring_of_order_{order}"
        add.setflags(write=False)
        mul.setflags(write=False)

    def __repr__(self) -> str:
        return f"FiniteRing(order={self.order}, label={self.label!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return (self.order == other.order and self.zero == other.zero
                and np.array_equal(self.add, other.add)
                and np.array_equal(self.mul, other.mul))

    __hash__ = None  # type: ignore[assignment]

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def neg(self, a: int) -> int:
        """Additive inverse of a."""
        return int(np.flatnonzero(self.add[a] == self.zero)[0])

    def _commute_matrix(self) -> np.ndarray:
        return np.asarray(self.mul == self.mul.T)


@dataclass(frozen=True)
class ElementSet:
    """A set of elements of a fixed ring, kept sorted."""

    ring: FiniteRing
    members: tuple[int, ...]

    def __post_init__(self):
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be sorted and distinct")
        if self.members and self.members[-1] >= self.ring.order:
            raise ValueError("member index out of range")

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.ring is other.ring and self.members == other.members


@dataclass(frozen=True)
class AbelianGroupType:
    """Invariant-factor type d1 | d2 | ... | dk of a finite abelian group."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        prev = None
        for d in self.invariant_factors:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
            if prev is not None and d % prev != 0:
                raise ValueError("each invariant factor must divide the next")
            prev = d

    @property
    def group_order(self) -> int:
        order = 1
        for d in self.invariant_factors:
            order *= d
        return order


class CCResult(NamedTuple):
    """Outcome of the commutative-centralizer test."""

    is_cc: bool
    witness: Optional[tuple[int, int, int]]  # (r, s, t): s,t in C(r), st != ts


def _fail(code: str, reason: str, witness: tuple, detail: str):
    raise RingValidationError(code, reason, witness,
                              f"{code} ({reason}), witness {witness}: {detail}")


def validate_ring(order: int, add_table, mul_table,
                  label: Optional[str] = None) -> FiniteRing:
    """Check the ring axioms on a pair of n x n tables.

    Raises RingValidationError naming the first violated axiom with a witness;
    axioms are checked in the order: additive abelian group (closure,
    associativity, commutativity, identity, inverses), multiplicative closure
    and associativity, then both distributive laws.
    """
    add = np.ascontiguousarray(add_table, dtype=np.int32)
    mul = np.ascontiguousarray(mul_table, dtype=np.int32)
    n = int(order)
    if n < 1:
        raise ValueError("ring order must be >= 1")
    if add.shape != (n, n) or mul.shape != (n, n):
        raise ValueError(f"tables must be {n}x{n}")

    bad = np.argwhere((add < 0) | (add >= n))
    if bad.size:
        a, b = (int(x) for x in bad[0])
        _fail("not-abelian-group", "add-not-closed", (a, b),
              f"add({a},{b}) = {int(add[a, b])} out of range")
    w = _kernels.assoc_witness(add)
    if w is not None:
        _fail("not-abelian-group", "add-not-associative", w,
              "(a+b)+c != a+(b+c)")
    bad = np.argwhere(add != add.T)
    if bad.size:
        a, b = (int(x) for x in bad[0])
        _fail("not-abelian-group", "add-not-commutative", (a, b),
              "a+b != b+a")
    idn = np.arange(n, dtype=np.int32)
    zeros = np.flatnonzero((add == idn[None, :]).all(axis=1))
    if zeros.size == 0:
        _fail("not-abelian-group", "no-additive-identity", (),
              "no element e with e+a = a for all a")
    zero = int(zeros[0])
    missing = np.flatnonzero(~(add == zero).any(axis=1))
    if missing.size:
        _fail("not-abelian-group", "no-additive-inverse", (int(missing[0]),),
              f"element {int(missing[0])} has no additive inverse")

    bad = np.argwhere((mul < 0) | (mul >= n))
    if bad.size:
        a, b = (int(x) for x in bad[0])
        _fail("mul-not-associative", "mul-not-closed", (a, b),
              f"mul({a},{b}) = {int(mul[a, b])} out of range")
    w = _kernels.assoc_witness(mul)
    if w is not None:
        _fail("mul-not-associative", "mul-not-associative", w,
              "(a*b)*c != a*(b*c)")

    w = _kernels.distrib_witness(add, mul)
    if w is not None:
        side, a, b, c = w
        _fail("not-distributive", f"{side}-distributive-law", (a, b, c),
              "a*(b+c) != a*b + a*c" if side == "left"
              else "(a+b)*c != a*c + b*c")

    # Forced by distributivity plus additive cancellation; asserted anyway.
    assert (mul[zero] == zero).all() and (mul[:, zero] == zero).all(), \
        "zero element fails to annihilate despite distributivity"

    return FiniteRing(n, add, mul, zero, label)


def _assert_subring(ring: FiniteRing, members: tuple[int, ...], what: str):
    idx = np.asarray(members)
    inside = np.zeros(ring.order, dtype=bool)
    inside[idx] = True
    sub_add = ring.add[np.ix_(idx, idx)]
    sub_mul = ring.mul[np.ix_(idx, idx)]
    negs = np.asarray([ring.neg(int(a)) for a in idx])
    ok = inside[sub_add].all() and inside[sub_mul].all() and inside[negs].all()
    assert ok, f"{what} is not closed as a subring"


def center(ring: FiniteRing) -> ElementSet:
    """Elements commuting with everything; always a subring containing zero."""
    mask = ring._commute_matrix().all(axis=1)
    members = tuple(int(i) for i in np.flatnonzero(mask))
    result = ElementSet(ring, members)
    _assert_subring(ring, members, "center")
    return result


def centralizer(ring: FiniteRing, r: int) -> ElementSet:
    """Elements commuting with r; a subring containing the center and r."""
    if not 0 <= r < ring.order:
        raise IndexError(f"element {r} out of range for order {ring.order}")
    mask = ring.mul[r] == ring.mul[:, r]
    members = tuple(int(i) for i in np.flatnonzero(mask))
    result = ElementSet(ring, members)
    _assert_subring(ring, members, f"centralizer of {r}")
    return result


def centralizer_family(ring: FiniteRing) -> tuple[list[ElementSet], int]:
    """Distinct centralizers over all elements, and their count |Cent(R)|.

    Ordered by the smallest element realizing each centralizer.  Central
    elements contribute C(z) = R, so the full ring is always first.
    """
    cm = ring._commute_matrix()
    first_seen: dict[bytes, int] = {}
    for r in range(ring.order):
        key = cm[r].tobytes()
        if key not in first_seen:
            first_seen[key] = r
    reps = sorted(first_seen.values())
    family = [ElementSet(ring, tuple(int(i) for i in np.flatnonzero(cm[r])))
              for r in reps]
    count = len(family)
    if count in (2, 3):
        # No ring is known to realize these counts; surface loudly for review.
        warnings.warn(
            f"ring {ring.label!r} reports |Cent(R)| = {count}; "
            "no 2- or 3-centralizer ring should exist",
            RuntimeWarning, stacklevel=2)
    return family, count


def is_cc_ring(ring: FiniteRing) -> CCResult:
    """Whether every centralizer of a non-central element is commutative.

    Returns a witness (r, s, t) with s, t in C(r) and st != ts on failure.
    Raises CommutativeRingError on commutative input: the predicate is about
    non-central elements.
    """
    if ring.is_commutative():
        raise CommutativeRingError(
            f"{ring.label}: CC predicate undefined for commutative rings")
    cm = ring._commute_matrix()
    central = cm.all(axis=1)
    for r in range(ring.order):
        if central[r]:
            continue
        members = np.flatnonzero(cm[r])
        sub = cm[np.ix_(members, members)]
        bad = np.argwhere(~sub)
        if bad.size:
            s, t = bad[0]
            return CCResult(False, (r, int(members[s]), int(members[t])))
    return CCResult(True, None)


def commuting_probability(ring: FiniteRing) -> Fraction:
    """Exact fraction of ordered pairs (r, s) with rs = sr."""
    commuting = int(ring._commute_matrix().sum())
    return Fraction(commuting, ring.order * ring.order)


def _group_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    idn = np.arange(n, dtype=table.dtype)
    e = np.flatnonzero((table == idn[None, :]).all(axis=1))
    assert e.size == 1, "group table without unique identity"
    return int(e[0])


def _group_quotient(table: np.ndarray, subgroup: np.ndarray) -> np.ndarray:
    """Cayley table of G/S for an abelian group table and subgroup members."""
    n = table.shape[0]
    coset = np.full(n, -1, dtype=np.int64)
    reps = []
    for x in range(n):
        if coset[x] < 0:
            coset[table[x, subgroup]] = len(reps)
            reps.append(x)
    reps_arr = np.asarray(reps)
    return coset[table[np.ix_(reps_arr, reps_arr)]]


def _element_orders(table: np.ndarray) -> list[int]:
    e = _group_identity(table)
    orders = []
    for x in range(table.shape[0]):
        y, k = x, 1
        while y != e:
            y = int(table[y, x])
            k += 1
        orders.append(k)
    return orders


def _invariant_factors(table: np.ndarray) -> tuple[int, ...]:
    """Invariant factors by repeatedly splitting off an element of maximal order."""
    factors_desc = []
    while table.shape[0] > 1:
        orders = _element_orders(table)
        top = max(orders)
        g = orders.index(top)
        cyc = [g]
        y = int(table[g, g])
        e = _group_identity(table)
        while y != e:
            cyc.append(y)
            y = int(table[y, g])
        cyc.append(e)
        factors_desc.append(top)
        table = _group_quotient(table, np.asarray(sorted(set(cyc))))
    return tuple(reversed(factors_desc))


def additive_quotient_structure(ring: FiniteRing) -> AbelianGroupType:
    """Invariant factors of the additive group (R,+)/(Z(R),+)."""
    z = np.asarray(center(ring).members)
    quotient = _group_quotient(ring.add, z)
    return AbelianGroupType(_invariant_factors(quotient))


def smallest_prime_divisor(n: int) -> int:
    """Least prime dividing n, by trial division."""
    if n < 2:
        raise ValueError("argument must be >= 2")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_prime_divisor(n) == n


def direct_product(r1: FiniteRing, r2: FiniteRing) -> FiniteRing:
    """Componentwise product ring on pairs flattened row-major (r1 major)."""
    m = r2.order
    add = (r1.add[:, None, :, None].astype(np.int64) * m
           + r2.add[None, :, None, :]).reshape(r1.order * m, r1.order * m)
    mul = (r1.mul[:, None, :, None].astype(np.int64) * m
           + r2.mul[None, :, None, :]).reshape(r1.order * m, r1.order * m)
    label = f"({r1.label} x {r2.label})"
    product = validate_ring(r1.order * m, add, mul, label=label)
    if r2.is_commutative():
        expected = tuple(sorted(int(z) * m + a
                                for z in center(r1).members
                                for a in range(m)))
        got = center(product).members
        assert got == expected, "Z(R x A) != Z(R) x A for commutative A"
    return product
