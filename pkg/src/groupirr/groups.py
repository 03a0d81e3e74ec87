"""Finite Abelian groups as direct products of cyclic groups.

A group is given by the list of orders of its cyclic factors, e.g. ``[4, 3]``
for Z4 x Z3 or ``[6]`` for Z6.  Elements are residue tuples in the
user-supplied basis, one coordinate per factor, with coordinate-wise modular
arithmetic.  Internally every factor is refined into cyclic factors of
prime-power order (Z6 splits into Z2 x Z3); the refined basis drives the
classification of elements into identity / involutions / inverse pairs and
the constructive selection of zero-sum subsets of involutions.  A fixed
bijection between the two bases is maintained through the Chinese Remainder
correspondence, so callers always see their own coordinates.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

Element = tuple[int, ...]


def _prime_power_factors(m: int) -> list[int]:
    """Prime-power decomposition of m, primes ascending: 12 -> [4, 3]."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            q = 1
            while m % d == 0:
                q *= d
                m //= d
            out.append(q)
        d += 1
    if m > 1:
        out.append(m)
    return out


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    # m1, m2 coprime here
    g, x = m1 * m2, pow(m1, -1, m2)
    r = (r1 + m1 * ((r2 - r1) * x % m2)) % g
    return r, g


@dataclass(frozen=True)
class ElementClassification:
    """Partition of a group into identity, involutions and inverse pairs."""

    identity: Element
    involutions: tuple[Element, ...]
    inverse_pairs: tuple[tuple[Element, Element], ...]


class AbelianGroup:
    """Z_{m1} x ... x Z_{mk} with coordinate-wise addition mod m_j."""

    def __init__(self, factor_orders) -> None:
        orders = tuple(int(m) for m in factor_orders)
        if not orders:
            raise ValueError("factor order list must be non-empty")
        if any(m < 2 for m in orders):
            raise ValueError(f"every factor order must be >= 2, got {orders}")
        self.factor_orders: tuple[int, ...] = orders
        self.order: int = math.prod(orders)
        self.rank: int = len(orders)
        # refined prime-power basis: (user coordinate index, prime power)
        self._refined: tuple[tuple[int, int], ...] = tuple(
            (i, q) for i, m in enumerate(orders) for q in _prime_power_factors(m)
        )
        self.refined_orders: tuple[int, ...] = tuple(q for _, q in self._refined)
        self.even_factor_count: int = sum(1 for q in self.refined_orders if q % 2 == 0)

    # -- basics --------------------------------------------------------

    @property
    def zero(self) -> Element:
        return (0,) * self.rank

    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianGroup) and self.factor_orders == other.factor_orders

    def __hash__(self) -> int:
        return hash(self.factor_orders)

    def __repr__(self) -> str:
        return f"AbelianGroup({list(self.factor_orders)})"

    def __str__(self) -> str:
        return "Z" + "xZ".join(str(m) for m in self.factor_orders)

    def __contains__(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == self.rank
            and all(isinstance(c, int) and 0 <= c < m for c, m in zip(x, self.factor_orders))
        )

    def _check(self, x: Element) -> None:
        if not isinstance(x, tuple) or len(x) != self.rank:
            raise ValueError(f"element {x!r} does not have {self.rank} coordinates")

    def canonical(self, x) -> Element:
        x = tuple(x)
        self._check(x)
        return tuple(int(c) % m for c, m in zip(x, self.factor_orders))

    def elements(self):
        """All elements in lexicographic order."""
        return itertools.product(*(range(m) for m in self.factor_orders))

    # -- arithmetic ----------------------------------------------------

    def add(self, x: Element, y: Element) -> Element:
        self._check(x)
        self._check(y)
        return tuple((a + b) % m for a, b, m in zip(x, y, self.factor_orders))

    def neg(self, x: Element) -> Element:
        self._check(x)
        return tuple((-a) % m for a, m in zip(x, self.factor_orders))

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def scalar_mul(self, n: int, x: Element) -> Element:
        self._check(x)
        return tuple((n * a) % m for a, m in zip(x, self.factor_orders))

    def element_order(self, x: Element) -> int:
        """Smallest n >= 1 with n*x = 0; the lcm of the coordinate orders."""
        self._check(x)
        return math.lcm(*(m // math.gcd(a, m) for a, m in zip(x, self.factor_orders)))

    # -- refined prime-power basis --------------------------------------

    def to_refined(self, x: Element) -> Element:
        self._check(x)
        return tuple(x[i] % q for i, q in self._refined)

    def from_refined(self, y: Element) -> Element:
        if len(y) != len(self._refined):
            raise ValueError(f"refined element {y!r} has wrong length")
        coords = [0] * self.rank
        mods = [1] * self.rank
        for (i, q), r in zip(self._refined, y):
            coords[i], mods[i] = _crt_pair(coords[i], mods[i], r % q, q)
        return tuple(coords)

    # -- classification --------------------------------------------------

    def involutions(self) -> list[Element]:
        """All x != 0 with x + x = 0, in lexicographic order.

        An element doubles to zero exactly when every coordinate is 0 or
        m_j/2 (even m_j only), so the 2^p - 1 involutions are constructed
        directly, never searched for.
        """
        choices = [(0, m // 2) if m % 2 == 0 else (0,) for m in self.factor_orders]
        return [x for x in itertools.product(*choices) if any(x)]

    def classify_elements(self) -> ElementClassification:
        """Split the group into identity, involutions and pairs {a, -a}.

        One lexicographic sweep; a pair is reported at its lex-smaller
        member, so the output order is canonical.
        """
        invs = []
        pairs = []
        for x in self.elements():
            if not any(x):
                continue
            nx = self.neg(x)
            if nx == x:
                invs.append(x)
            elif x < nx:
                pairs.append((x, nx))
        return ElementClassification(self.zero, tuple(invs), tuple(pairs))

    # -- zero-sum involution subsets --------------------------------------

    def zero_sum_involution_subset(self, r: int) -> list[Element] | None:
        """A size-r subset of I = involutions + {0} summing to zero.

        Returns None (infeasible) exactly for r in {2, 2^p - 2}; every other
        0 <= r <= 2^p admits such a subset, built constructively in the
        refined basis.  Requires at least three involutions (p >= 2).
        """
        p = self.even_factor_count
        if p < 2:
            raise ValueError(f"need >= 3 involutions (p >= 2), group has p = {p}")
        if not 0 <= r <= 2**p:
            raise ValueError(f"subset size r = {r} out of range 0..{2**p}")
        if r in (2, 2**p - 2):
            return None
        masks = self._zero_sum_masks(r, p)
        out = sorted(self._mask_to_element(mask) for mask in masks)
        return out

    def _zero_sum_masks(self, r: int, p: int) -> set[int]:
        # A mask's bit b sets coordinate number p-b (counting even refined
        # coordinates 1..p) to its half-order, so mask order 0,1,2,...
        # walks (0,..,0), (0,..,h_p), (0,..,h_{p-1},0), ... and masks
        # 0..2^(p-1)-1 never touch the first even coordinate, which stays
        # reserved for the repair step.
        if r == 0:
            return set()
        if r == 1:
            return {0}
        if r == 2**p - 1:
            return set(range(1, 2**p))
        if r == 2**p:
            return set(range(2**p))
        if r <= 2 ** (p - 1):
            chosen = set(range(r - 1))
            s = 0
            for mask in chosen:
                s ^= mask
            if s not in chosen:
                chosen.add(s)
                return chosen
            # the sum is already on the list: flip the reserved first even
            # coordinate of it and of a neighbour, then append the sum
            first = 1 << (p - 1)
            other = 1 if s == 0 else s - 1
            chosen.discard(s)
            chosen.discard(other)
            chosen.update({s | first, other | first, s})
            return chosen
        # upper half: complement of a small zero-sum subset
        small = self._zero_sum_masks(2**p - r, p)
        return set(range(2**p)) - small

    def _mask_to_element(self, mask: int) -> Element:
        even_positions = [j for j, q in enumerate(self.refined_orders) if q % 2 == 0]
        p = len(even_positions)
        refined = [0] * len(self.refined_orders)
        for b in range(p):
            if (mask >> b) & 1:
                j = even_positions[p - 1 - b]
                refined[j] = self.refined_orders[j] // 2
        return self.from_refined(tuple(refined))


def make_group(orders) -> AbelianGroup:
    """Group from a list of cyclic factor orders (each >= 2)."""
    return AbelianGroup(orders)


_GROUP_SPEC = re.compile(r"^z?(\d+)$", re.IGNORECASE)


def parse_group_spec(spec: str) -> AbelianGroup:
    """Parse 'Z4xZ3', 'z4Xz3' or bare '4x3' into a group."""
    parts = re.split(r"[xX]", spec.strip())
    orders = []
    for part in parts:
        m = _GROUP_SPEC.match(part.strip())
        if not m:
            raise ValueError(f"cannot parse group spec {spec!r}")
        orders.append(int(m.group(1)))
    return AbelianGroup(orders)


def format_element(x: Element) -> str:
    return "(" + ",".join(str(c) for c in x) + ")"


def parse_element(text: str, group: AbelianGroup) -> Element:
    """Parse '(1,2)' (or bare '3' for rank one) into a canonical element."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts = [p for p in text.split(",") if p.strip() != ""]
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse group element {text!r}") from None
    return group.canonical(coords)
