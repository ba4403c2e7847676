"""Weyl groups: enumeration, Bruhat order, Kostant representatives and the dot action."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .._internal.limits import MAX_GROUP_ORDER, check_bound
from .errors import ConfigError, NotKostantRepresentativeError
from .models import Sign, Weight
from .root_datum import LeviDatum, RootDatum, is_dominant
from .utils import Matrix, format_word, identity_matrix, mat_mul, mat_vec, transpose

logger = logging.getLogger("Cousin")


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element: canonical reduced word plus its matrix.

    The word is the lexicographically least reduced word. Equality and
    hashing use the matrix only.
    """

    word: tuple[int, ...]
    matrix: Matrix
    group: WeylGroup = field(repr=False, compare=False)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeylElement):
            return self.matrix == other.matrix
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.matrix)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def name(self) -> str:
        return format_word(self.word)

    def act(self, weight: Weight) -> Weight:
        return type(weight)(mat_vec(self.matrix, weight.coords))

    def act_coweight(self, coweight: Weight) -> Weight:
        """Contragredient action, so pairings are W-invariant."""
        return type(coweight)(mat_vec(self.group.inverse(self).transposed, coweight.coords))

    @cached_property
    def transposed(self) -> Matrix:
        return transpose(self.matrix)

    @property
    def inverse(self) -> WeylElement:
        return self.group.inverse(self)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return self.group.multiply(self, other)

    def __str__(self) -> str:
        return self.name


class WeylGroup:
    """The finite Weyl group of a root datum.

    Elements are produced layer by layer; within a layer words are extended
    in lexicographic order, which makes each stored word the lexicographically
    least reduced word of its element.
    """

    def __init__(self, datum: RootDatum) -> None:
        self.datum = datum
        self._simple_matrices: tuple[Matrix, ...] = tuple(
            _reflection_matrix(alpha, alpha_v)
            for alpha, alpha_v in zip(datum.simple_roots, datum.simple_coroots)
        )
        self._by_matrix: dict[Matrix, WeylElement] = {}
        self._inverses: dict[Matrix, WeylElement] = {}
        self._lower_intervals: dict[Matrix, frozenset[Matrix]] = {}
        self.elements: tuple[WeylElement, ...] = self._enumerate()
        logger.debug("Enumerated Weyl group of order %d", len(self.elements))

    def _enumerate(self) -> tuple[WeylElement, ...]:
        identity = WeylElement((), identity_matrix(self.datum.dim), self)
        self._by_matrix[identity.matrix] = identity
        ordered = [identity]
        layer = [identity]
        while layer:
            next_layer: list[WeylElement] = []
            for element in layer:
                for i, simple in enumerate(self._simple_matrices):
                    matrix = mat_mul(element.matrix, simple)
                    if matrix in self._by_matrix:
                        continue
                    child = WeylElement(element.word + (i,), matrix, self)
                    self._by_matrix[matrix] = child
                    next_layer.append(child)
            check_bound(
                len(self._by_matrix),
                MAX_GROUP_ORDER,
                context="Weyl group order",
                module="weyl",
                operation="enumerate_group",
            )
            ordered.extend(next_layer)
            layer = next_layer
        return tuple(ordered)

    # ========== container protocol ==========

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: object) -> bool:
        return isinstance(element, WeylElement) and element.matrix in self._by_matrix

    # ========== group structure ==========

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def simple(self, i: int) -> WeylElement:
        return self.from_matrix(self._simple_matrices[i])

    def from_matrix(self, matrix: Matrix) -> WeylElement:
        try:
            return self._by_matrix[matrix]
        except KeyError:
            raise ConfigError(
                "matrix is not an element of the Weyl group", module="weyl", operation="from_matrix"
            ) from None

    def element(self, word: Sequence[int]) -> WeylElement:
        """The element of an arbitrary (not necessarily reduced) word."""
        matrix = identity_matrix(self.datum.dim)
        for i in word:
            if not 0 <= i < len(self._simple_matrices):
                raise ConfigError(
                    f"simple index {i} out of range", module="weyl", operation="element"
                )
            matrix = mat_mul(matrix, self._simple_matrices[i])
        return self.from_matrix(matrix)

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self.from_matrix(mat_mul(a.matrix, b.matrix))

    def inverse(self, element: WeylElement) -> WeylElement:
        cached = self._inverses.get(element.matrix)
        if cached is None:
            cached = self.element(tuple(reversed(element.word)))
            self._inverses[element.matrix] = cached
        return cached

    def reflection(self, root: Weight) -> WeylElement:
        return self.from_matrix(_reflection_matrix(root, self.datum.coroot_of(root)))

    def parabolic_subgroup(self, levi: LeviDatum) -> tuple[WeylElement, ...]:
        """``W_M``: elements whose reduced words only use letters from ``theta``."""
        return tuple(w for w in self.elements if set(w.word) <= levi.theta)

    def longest_element(self, levi: LeviDatum | None = None) -> WeylElement:
        if levi is None:
            return self.longest
        return max(self.parabolic_subgroup(levi), key=lambda w: w.length)

    # ========== Bruhat order ==========

    def lower_interval(self, element: WeylElement) -> frozenset[Matrix]:
        """All ``u <= element``: products of subwords of the canonical word."""
        cached = self._lower_intervals.get(element.matrix)
        if cached is not None:
            return cached
        products = {identity_matrix(self.datum.dim)}
        for i in element.word:
            simple = self._simple_matrices[i]
            products |= {mat_mul(m, simple) for m in products}
        interval = frozenset(products)
        self._lower_intervals[element.matrix] = interval
        return interval

    def bruhat_leq(self, u: WeylElement, v: WeylElement) -> bool:
        if u.length > v.length:
            return False
        return u.matrix in self.lower_interval(v)


def _reflection_matrix(root: Weight, coroot: Weight) -> Matrix:
    """Matrix of ``lambda -> lambda - <lambda, coroot> root``."""
    dim = len(root)
    return tuple(
        tuple(Fraction(int(r == c)) - root[r] * coroot[c] for c in range(dim)) for r in range(dim)
    )


# ========== operations ==========


@lru_cache(maxsize=32)
def _build_group(datum: RootDatum) -> WeylGroup:
    return WeylGroup(datum)


def enumerate_group(datum: RootDatum) -> WeylGroup:
    """The Weyl group of *datum*, rechecked against the current order bound on every call."""
    group = _build_group(datum)
    check_bound(
        len(group),
        MAX_GROUP_ORDER,
        context="Weyl group order",
        module="weyl",
        operation="enumerate_group",
    )
    return group


def is_kostant(levi: LeviDatum, w: WeylElement) -> bool:
    """``Phi_M^+`` lies in ``w Phi^+``, tested on the simple roots of ``M``."""
    w_inv = w.inverse
    return all(levi.datum.is_positive_root(w_inv.act(beta)) for beta in levi.simple_roots_m)


def kostant_reps(datum: RootDatum, levi: LeviDatum) -> tuple[WeylElement, ...]:
    """Minimal-length representatives of ``W_M \\ W``, by length then word."""
    return _kostant_reps(enumerate_group(datum), levi)


@lru_cache(maxsize=256)
def _kostant_reps(group: WeylGroup, levi: LeviDatum) -> tuple[WeylElement, ...]:
    return tuple(w for w in group if is_kostant(levi, w))


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    return u.group.bruhat_leq(u, v)


def dot_action(w: WeylElement, weight: Weight) -> Weight:
    """``w . lambda = w(lambda + rho) - rho``."""
    rho = w.group.datum.rho
    return w.act(weight + rho) - rho


@lru_cache(maxsize=256)
def longest_element(datum: RootDatum, levi: LeviDatum | None = None) -> WeylElement:
    return enumerate_group(datum).longest_element(levi)


@lru_cache(maxsize=256)
def parabolic_subgroup(datum: RootDatum, levi: LeviDatum) -> tuple[WeylElement, ...]:
    return enumerate_group(datum).parabolic_subgroup(levi)


def inversion_set(w: WeylElement) -> tuple[Weight, ...]:
    """Positive roots sent to negative roots by ``w^{-1}``."""
    datum = w.group.datum
    w_inv = w.inverse
    return tuple(a for a in datum.positive_roots if not datum.is_positive_root(w_inv.act(a)))


def reduced_words(w: WeylElement) -> tuple[tuple[int, ...], ...]:
    """Every reduced word of *w*, in lexicographic order."""
    group = w.group
    found: dict[WeylElement, tuple[tuple[int, ...], ...]] = {}

    def words_of(v: WeylElement) -> tuple[tuple[int, ...], ...]:
        if v.length == 0:
            return ((),)
        if v not in found:
            words: set[tuple[int, ...]] = set()
            for i in range(group.datum.rank):
                shorter = v * group.simple(i)
                if shorter.length < v.length:
                    words.update(word + (i,) for word in words_of(shorter))
            found[v] = tuple(sorted(words))
        return found[v]

    return words_of(w)


def cell_dimension(w: WeylElement, levi: LeviDatum) -> int:
    """``#(w^{-1} Phi^{-,M} cap Phi^+)``, the dimension of the Bruhat cell of ``w``."""
    datum = levi.datum
    w_inv = w.inverse
    return sum(1 for beta in levi.negative_roots_outside if datum.is_positive_root(w_inv.act(beta)))


def ell_pm(w: WeylElement, levi: LeviDatum, sign: Sign = Sign.PLUS) -> int:
    if not is_kostant(levi, w):
        raise NotKostantRepresentativeError(
            f"{w.name} is not a Kostant representative", module="weyl", operation="ell_pm"
        )
    return w.length if sign is Sign.PLUS else levi.d - w.length


def dominant_decomposition(datum: RootDatum, weight: Weight) -> tuple[WeylElement, Weight]:
    """First ``v`` (group order) with ``v^{-1} weight`` dominant, and that dominant weight."""
    for v in enumerate_group(datum):
        candidate = v.inverse.act(weight)
        if is_dominant(datum, candidate):
            return v, candidate
    raise AssertionError("every W-orbit meets the dominant chamber")


@lru_cache(maxsize=4096)
def stabilizer(datum: RootDatum, weight: Weight) -> tuple[WeylElement, ...]:
    """Linear stabilizer; ``stabilizer(nu + rho)`` is the dot stabilizer of ``nu``."""
    return tuple(w for w in enumerate_group(datum) if w.act(weight) == weight)


__all__ = [
    "WeylElement",
    "WeylGroup",
    "bruhat_leq",
    "cell_dimension",
    "dominant_decomposition",
    "dot_action",
    "ell_pm",
    "enumerate_group",
    "inversion_set",
    "is_kostant",
    "kostant_reps",
    "longest_element",
    "parabolic_subgroup",
    "reduced_words",
    "stabilizer",
]
