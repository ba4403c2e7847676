"""Root data with an ambient rational weight space, Levi subsets and a Galois action.

Weights live in ``Q^dim``. Central (similitude) coordinates are ordinary
ambient axes on which every root and coroot vanishes, so dominance and cone
tests ignore them through the coroot pairings.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .._internal.limits import MAX_ROOTS, check_bound
from .errors import ConfigError, DimensionMismatchError, RootDatumError
from .models import Chamber, CocharacterValuation, Coweight, Order, SlopeVector, Weight
from .utils import Matrix, left_inverse, span_coordinates

logger = logging.getLogger("Cousin")

Permutation = tuple[int, ...]


def _permute(perm: Permutation, vector: Weight) -> Weight:
    # perm[i] is the image of coordinate i
    out = [Fraction(0)] * len(vector)
    for i, image in enumerate(perm):
        out[image] = vector[i]
    return type(vector)(tuple(out))


def _compose(a: Permutation, b: Permutation) -> Permutation:
    return tuple(a[b[i]] for i in range(len(b)))


@dataclass(frozen=True)
class RootDatum:
    """Simple roots and coroots in a common ambient space plus a Galois action.

    ``gamma`` holds generators of a permutation group on the coordinates;
    the group acts linearly on weights and must permute the simple roots.
    """

    dim: int
    simple_roots: tuple[Weight, ...]
    simple_coroots: tuple[Coweight, ...]
    gamma: tuple[Permutation, ...] = ()
    preset_tag: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "simple_roots", tuple(Weight(tuple(r)) for r in self.simple_roots))
        object.__setattr__(
            self, "simple_coroots", tuple(Coweight(tuple(c)) for c in self.simple_coroots)
        )
        object.__setattr__(self, "gamma", tuple(tuple(int(i) for i in g) for g in self.gamma))
        self._validate()

    # ========== validation ==========

    def _fail(self, message: str) -> RootDatumError:
        return RootDatumError(message, module="root_datum", operation="RootDatum")

    def _validate(self) -> None:
        if self.dim <= 0:
            raise self._fail("dim must be positive")
        if len(self.simple_roots) != len(self.simple_coroots):
            raise self._fail("simple roots and coroots must have the same count")
        for vec in (*self.simple_roots, *self.simple_coroots):
            if len(vec) != self.dim:
                raise self._fail(f"vector {vec} does not have dimension {self.dim}")
        cartan = self.cartan_matrix
        for i, row in enumerate(cartan):
            if row[i] != 2:
                raise self._fail(f"Cartan entry A[{i}][{i}] = {row[i]} must be 2")
            for j, entry in enumerate(row):
                if i == j:
                    continue
                if entry > 0 or entry.denominator != 1:
                    raise self._fail(f"Cartan entry A[{i}][{j}] = {entry} must be a nonpositive integer")
                if (entry == 0) != (cartan[j][i] == 0):
                    raise self._fail(f"Cartan entries A[{i}][{j}] and A[{j}][{i}] must vanish together")
        if self.simple_roots and self._root_inverse is None:
            raise self._fail("simple roots must be linearly independent")
        roots = set(self.simple_roots)
        coroots = set(self.simple_coroots)
        for perm in self.gamma:
            if sorted(perm) != list(range(self.dim)):
                raise self._fail(f"gamma generator {perm} is not a permutation of the coordinates")
            if {_permute(perm, r) for r in self.simple_roots} != roots:
                raise self._fail(f"gamma generator {perm} does not permute the simple roots")
            if {_permute(perm, c) for c in self.simple_coroots} != coroots:
                raise self._fail(f"gamma generator {perm} does not permute the simple coroots")

    # ========== basic structure ==========

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """``A[i][j] = <alpha_i, alpha_j^vee>``."""
        return tuple(
            tuple(pairing(a, c) for c in self.simple_coroots) for a in self.simple_roots
        )

    @cached_property
    def _root_inverse(self) -> Matrix | None:
        return left_inverse([r.coords for r in self.simple_roots])

    @cached_property
    def central_axes(self) -> tuple[int, ...]:
        """Ambient coordinates on which every simple root and coroot vanishes."""
        return tuple(
            i
            for i in range(self.dim)
            if all(r[i] == 0 for r in self.simple_roots)
            and all(c[i] == 0 for c in self.simple_coroots)
        )

    def simple_coefficients(self, weight: Weight) -> tuple[Fraction, ...] | None:
        """Exact coordinates of *weight* in the simple-root basis, None outside the span."""
        self.check_dim(weight)
        if not self.simple_roots:
            return () if weight.is_zero() else None
        assert self._root_inverse is not None
        return span_coordinates([r.coords for r in self.simple_roots], self._root_inverse, weight.coords)

    def height(self, weight: Weight) -> Fraction:
        coeffs = self.simple_coefficients(weight)
        if coeffs is None:
            raise DimensionMismatchError(
                f"{weight} is not in the root span", module="root_datum", operation="height"
            )
        return sum(coeffs, Fraction(0))

    def from_coefficients(self, coeffs: Sequence[Fraction | int]) -> Weight:
        total = Weight.zero(self.dim)
        for c, root in zip(coeffs, self.simple_roots):
            if c:
                total = total + root * c
        return total

    def check_dim(self, vector: Weight) -> None:
        if len(vector) != self.dim:
            raise DimensionMismatchError(
                f"expected a vector of dimension {self.dim}, got {len(vector)}",
                module="root_datum",
                operation="check_dim",
            )

    # ========== roots ==========

    @cached_property
    def _root_table(self) -> dict[Weight, Coweight]:
        """All roots mapped to their coroots, by closure under simple reflections."""
        table: dict[Weight, Coweight] = dict(zip(self.simple_roots, self.simple_coroots))
        frontier = list(table.items())
        while frontier:
            next_frontier: list[tuple[Weight, Coweight]] = []
            for root, coroot in frontier:
                for alpha, alpha_v in zip(self.simple_roots, self.simple_coroots):
                    image = root - alpha * pairing(root, alpha_v)
                    if image in table:
                        continue
                    image_v = coroot - alpha_v * pairing(alpha, coroot)
                    table[image] = image_v
                    next_frontier.append((image, image_v))
                    check_bound(
                        len(table),
                        MAX_ROOTS,
                        context="root closure",
                        module="root_datum",
                        operation="roots",
                    )
            frontier = next_frontier
        logger.debug("Root closure of %s has %d roots", self.preset_tag or "datum", len(table))
        return table

    @cached_property
    def _positive(self) -> tuple[tuple[Weight, tuple[Fraction, ...]], ...]:
        positive: list[tuple[Weight, tuple[Fraction, ...]]] = []
        for root in self._root_table:
            coeffs = self.simple_coefficients(root)
            if coeffs is None or any(c.denominator != 1 for c in coeffs):
                raise self._fail(f"root {root} is not an integral combination of simple roots")
            if all(c >= 0 for c in coeffs):
                positive.append((root, coeffs))
            elif not all(c <= 0 for c in coeffs):
                raise self._fail(f"root {root} is neither positive nor negative")
            if -root not in self._root_table:
                raise self._fail(f"root system is not closed under negation at {root}")
        positive.sort(key=lambda item: (sum(item[1]), tuple(-c for c in item[1])))
        return tuple(positive)

    @property
    def positive_roots(self) -> tuple[Weight, ...]:
        """Positive roots ordered by height, simple roots first."""
        return tuple(root for root, _ in self._positive)

    @cached_property
    def negative_roots(self) -> tuple[Weight, ...]:
        return tuple(-root for root in self.positive_roots)

    @cached_property
    def positive_root_set(self) -> frozenset[Weight]:
        return frozenset(self.positive_roots)

    @cached_property
    def positive_root_coefficients(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(c) for c in coeffs) for _, coeffs in self._positive)

    @property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + self.negative_roots

    def coroot_of(self, root: Weight) -> Coweight:
        try:
            return self._root_table[root]
        except KeyError:
            raise DimensionMismatchError(
                f"{root} is not a root", module="root_datum", operation="coroot_of"
            ) from None

    def is_positive_root(self, vector: Weight) -> bool:
        return Weight(vector.coords) in self.positive_root_set

    @cached_property
    def dynkin_components(self) -> tuple[frozenset[int], ...]:
        """Connected components of the Dynkin diagram as sets of simple indices."""
        remaining = set(range(self.rank))
        components: list[frozenset[int]] = []
        while remaining:
            start = min(remaining)
            stack, seen = [start], {start}
            while stack:
                i = stack.pop()
                for j in range(self.rank):
                    if j not in seen and self.cartan_matrix[i][j] != 0:
                        seen.add(j)
                        stack.append(j)
            remaining -= seen
            components.append(frozenset(seen))
        return tuple(components)

    # ========== rho ==========

    @cached_property
    def rho(self) -> Weight:
        total = Weight.zero(self.dim)
        for root in self.positive_roots:
            total = total + root
        return total * Fraction(1, 2)

    # ========== Levi subsets ==========

    def levi(self, theta: Iterable[int] = ()) -> LeviDatum:
        return LeviDatum(self, frozenset(theta))

    # ========== Galois action and the split part ==========

    @cached_property
    def gamma_group(self) -> tuple[Permutation, ...]:
        identity = tuple(range(self.dim))
        group = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for element in frontier:
                for gen in self.gamma:
                    product = _compose(gen, element)
                    if product not in group:
                        group.add(product)
                        nxt.append(product)
            frontier = nxt
        return tuple(sorted(group))

    def gamma_act(self, perm: Permutation, vector: Weight) -> Weight:
        return _permute(perm, vector)

    @cached_property
    def split_simple_roots(self) -> tuple[Weight, ...]:
        """Gamma-averaged simple roots without repetition, in first-seen order."""
        seen: list[Weight] = []
        for alpha in self.simple_roots:
            avg = restrict_to_split(self, alpha).cast(Weight)
            if avg not in seen:
                seen.append(avg)
        return tuple(seen)

    @cached_property
    def split_index(self) -> tuple[int, ...]:
        """The restriction map from simple indices to indices of ``split_simple_roots``."""
        return tuple(
            self.split_simple_roots.index(restrict_to_split(self, alpha).cast(Weight))
            for alpha in self.simple_roots
        )

    @cached_property
    def _split_inverse(self) -> Matrix | None:
        return left_inverse([r.coords for r in self.split_simple_roots])

    def split_coefficients(self, weight: Weight) -> tuple[Fraction, ...] | None:
        """Coordinates of the restriction of *weight* in ``split_simple_roots``."""
        restricted = restrict_to_split(self, weight)
        if not self.split_simple_roots:
            return () if restricted.is_zero() else None
        assert self._split_inverse is not None
        return span_coordinates(
            [r.coords for r in self.split_simple_roots], self._split_inverse, restricted.coords
        )

    # ========== cocharacter valuations ==========

    def classify_cocharacter(self, t: Coweight) -> CocharacterValuation:
        self.check_dim(t)
        return CocharacterValuation(
            coords=Coweight(t.coords),
            pairings=tuple(pairing(root, t) for root in self.positive_roots),
        )


@dataclass(frozen=True)
class LeviDatum:
    """A standard Levi ``M`` given by a subset ``theta`` of the simple indices."""

    datum: RootDatum
    theta: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", frozenset(int(i) for i in self.theta))
        bad = sorted(i for i in self.theta if not 0 <= i < self.datum.rank)
        if bad:
            raise RootDatumError(
                f"levi indices {bad} out of range for rank {self.datum.rank}",
                module="root_datum",
                operation="LeviDatum",
            )

    def _in_levi(self, coeffs: Sequence[int]) -> bool:
        return all(c == 0 for i, c in enumerate(coeffs) if i not in self.theta)

    @cached_property
    def positive_roots_m(self) -> tuple[Weight, ...]:
        return tuple(
            root
            for root, coeffs in zip(self.datum.positive_roots, self.datum.positive_root_coefficients)
            if self._in_levi(coeffs)
        )

    @cached_property
    def positive_roots_outside(self) -> tuple[Weight, ...]:
        """``Phi^{+,M}``: positive roots not in the Levi."""
        inside = set(self.positive_roots_m)
        return tuple(root for root in self.datum.positive_roots if root not in inside)

    @property
    def negative_roots_m(self) -> tuple[Weight, ...]:
        return tuple(-r for r in self.positive_roots_m)

    @property
    def negative_roots_outside(self) -> tuple[Weight, ...]:
        return tuple(-r for r in self.positive_roots_outside)

    @property
    def d(self) -> int:
        return len(self.positive_roots_outside)

    @property
    def simple_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.theta))

    @property
    def simple_roots_m(self) -> tuple[Weight, ...]:
        return tuple(self.datum.simple_roots[i] for i in self.simple_indices)

    @property
    def simple_coroots_m(self) -> tuple[Coweight, ...]:
        return tuple(self.datum.simple_coroots[i] for i in self.simple_indices)

    @cached_property
    def b_simple_indices(self) -> tuple[int, ...]:
        """Simple indices lying in Dynkin components where ``M`` is a proper Levi."""
        out: list[int] = []
        for component in self.datum.dynkin_components:
            if not component <= self.theta:
                out.extend(component)
        return tuple(sorted(out))


# ========== operations ==========


def pairing(weight: Weight, covector: Weight) -> Fraction:
    """Standard bilinear pairing of a weight with a coweight."""
    if len(weight) != len(covector):
        raise DimensionMismatchError(
            f"cannot pair vectors of dimension {len(weight)} and {len(covector)}",
            module="root_datum",
            operation="pairing",
        )
    return weight.dot(covector)


def rho(datum: RootDatum) -> Weight:
    return datum.rho


def rho_m(datum: RootDatum, levi: LeviDatum) -> Weight:
    total = Weight.zero(datum.dim)
    for root in levi.positive_roots_m:
        total = total + root
    return total * Fraction(1, 2)


def two_rho_nc(datum: RootDatum, levi: LeviDatum) -> Weight:
    return datum.rho * 2 - rho_m(datum, levi) * 2


def restrict_to_split(datum: RootDatum, weight: Weight) -> SlopeVector:
    """Average over the Galois group, kept in ambient coordinates."""
    datum.check_dim(weight)
    group = datum.gamma_group
    if len(group) == 1:
        return SlopeVector(weight.coords)
    total = Weight.zero(datum.dim)
    for perm in group:
        total = total + _permute(perm, weight)
    return SlopeVector((total * Fraction(1, len(group))).coords)


def is_dominant(
    datum: RootDatum,
    weight: Weight,
    chamber: Chamber = Chamber.G,
    levi: LeviDatum | None = None,
) -> bool:
    datum.check_dim(weight)
    if chamber is Chamber.M:
        if levi is None:
            raise ConfigError(
                "M-dominance needs a Levi", module="root_datum", operation="is_dominant"
            )
        coroots = levi.simple_coroots_m
    else:
        coroots = datum.simple_coroots
    return all(pairing(weight, c) >= 0 for c in coroots)


def is_regular(datum: RootDatum, weight: Weight) -> bool:
    """True when *weight* pairs nontrivially with every coroot."""
    return all(pairing(weight, datum.coroot_of(root)) != 0 for root in datum.positive_roots)


def is_integral(datum: RootDatum, weight: Weight) -> bool:
    return all(pairing(weight, c).denominator == 1 for c in datum.simple_coroots)


def leq(datum: RootDatum, lower: Weight, upper: Weight, order: Order = Order.ABSOLUTE) -> bool:
    """``lower <= upper``: the difference lies in the nonnegative rational root cone.

    A difference with a component outside the root span (for example in a
    central coordinate) is never comparable.
    """
    difference = upper - lower
    if order is Order.SPLIT:
        coeffs = datum.split_coefficients(difference)
    else:
        coeffs = datum.simple_coefficients(difference)
    return coeffs is not None and all(c >= 0 for c in coeffs)


__all__ = [
    "LeviDatum",
    "RootDatum",
    "is_dominant",
    "is_integral",
    "is_regular",
    "leq",
    "pairing",
    "restrict_to_split",
    "rho",
    "rho_m",
    "two_rho_nc",
]
