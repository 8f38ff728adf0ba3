"""Monomial basis of global q-forms on X^n and the signed S_n action on it.

By Kunneth, H^0(X^n, Omega^q) is the sum over degree compositions
(q_1, ..., q_n), q_i in {0, 1, 2}, sum = q, of the tensor products
H^0(Omega^{q_1}) x ... x H^0(Omega^{q_n}) pulled back along the projections.
A basis vector is such a composition together with a choice of basis form in
each slot.  Only the dimensions h^{q,0}(X) matter, so basis forms are just
indices.

A permutation moves the content of slot ``i`` to slot ``perm[i]`` and picks up
the Koszul sign -1 for every pair of odd-degree (1-form) slots whose order it
reverses.  In characteristic 2 that sign is +1.

Permutations are 0-based throughout: ``Permutation((1, 0))`` is the swap of
the two factors of X^2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import prod
from typing import Iterator, Sequence

from .exact_algebra import FieldScalar, FieldSpec

MAX_FORM_DEGREE = 2


@dataclass(frozen=True)
class SurfaceHodgeData:
    """h^{0,0}, h^{1,0}, h^{2,0} of a surface and the ground characteristic."""

    h00: int
    h10: int
    h20: int
    field: FieldSpec = dc_field(default_factory=lambda: FieldSpec(0))
    label: str = ""

    def __post_init__(self):
        for name in ("h00", "h10", "h20"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
        if isinstance(self.field, int):
            object.__setattr__(self, "field", FieldSpec(self.field))

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def hodge(self) -> tuple[int, int, int]:
        return (self.h00, self.h10, self.h20)

    def h(self, degree: int) -> int:
        if not 0 <= degree <= MAX_FORM_DEGREE:
            return 0
        return self.hodge[degree]

    def with_characteristic(self, characteristic: int) -> "SurfaceHodgeData":
        return SurfaceHodgeData(self.h00, self.h10, self.h20,
                                FieldSpec(characteristic), self.label)


@dataclass(frozen=True)
class DegreeComposition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(not 0 <= d <= MAX_FORM_DEGREE for d in self.parts):
            raise ValueError(f"slot degrees must lie in 0..{MAX_FORM_DEGREE}: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class TensorBasisElement:
    """p_1^* a_1 x ... x p_n^* a_n, with a_i the ``choices[i]``-th basis form
    of degree ``composition.parts[i]``."""

    composition: DegreeComposition
    choices: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.composition, DegreeComposition):
            object.__setattr__(self, "composition", DegreeComposition(self.composition))
        object.__setattr__(self, "choices", tuple(self.choices))
        if len(self.choices) != len(self.composition):
            raise ValueError("choices and composition differ in length")

    @property
    def n(self) -> int:
        return len(self.choices)

    def check(self, data: SurfaceHodgeData) -> None:
        for d, c in zip(self.composition, self.choices):
            if not 0 <= c < data.h(d):
                raise ValueError(f"choice {c} out of range for degree {d} (h={data.h(d)})")


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., n-1}; slot ``i`` is sent to ``images[i]``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(n))
        images[i], images[j] = images[j], images[i]
        return cls(tuple(images))

    @classmethod
    def adjacent(cls, n: int, i: int) -> "Permutation":
        return cls.transposition(n, i, i + 1)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(s * t)(i) == s(t(i))``."""
        if other.n != self.n:
            raise ValueError("permutations of different degree")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class SignedBasisElement:
    sign: FieldScalar
    element: TensorBasisElement


def enumerate_compositions(n: int, q: int) -> list[DegreeComposition]:
    """All (q_1, ..., q_n) in {0,1,2}^n summing to q, lexicographically."""
    if n < 1:
        raise ValueError("n must be positive")
    if q < 0:
        raise ValueError("q must be non-negative")
    return [DegreeComposition(parts)
            for parts in itertools.product(range(MAX_FORM_DEGREE + 1), repeat=n)
            if sum(parts) == q]


def enumerate_basis(data: SurfaceHodgeData, n: int, q: int) -> list[TensorBasisElement]:
    """Composition-major, then choice-lexicographic."""
    out = []
    for comp in enumerate_compositions(n, q):
        ranges = [range(data.h(d)) for d in comp]
        for choices in itertools.product(*ranges):
            out.append(TensorBasisElement(comp, choices))
    return out


def basis_size(data: SurfaceHodgeData, n: int, q: int) -> int:
    return sum(prod(data.h(d) for d in comp) for comp in enumerate_compositions(n, q))


def _raw_sign(images: Sequence[int], parts: Sequence[int]) -> int:
    odd = [images[i] for i, d in enumerate(parts) if d % 2]
    inversions = 0
    for a in range(len(odd)):
        for b in range(a + 1, len(odd)):
            if odd[a] > odd[b]:
                inversions += 1
    return -1 if inversions % 2 else 1


def permute_raw(images: Sequence[int], parts: Sequence[int],
                choices: Sequence[int]) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """The signed action on plain tuples; the engines' inner loop."""
    new_parts = [0] * len(parts)
    new_choices = [0] * len(parts)
    for i, j in enumerate(images):
        new_parts[j] = parts[i]
        new_choices[j] = choices[i]
    return _raw_sign(images, parts), tuple(new_parts), tuple(new_choices)


def koszul_sign(perm: Permutation, degrees: Sequence[int] | DegreeComposition) -> int:
    """(-1)^m, m = number of odd-degree slot pairs whose order perm reverses."""
    degrees = tuple(degrees)
    if len(degrees) != perm.n:
        raise ValueError("degree sequence and permutation differ in length")
    return _raw_sign(perm.images, degrees)


def permute_slots(perm: Permutation, e: TensorBasisElement) -> tuple[int, TensorBasisElement]:
    """Integer-signed action, before reduction into a field."""
    if perm.n != e.n:
        raise ValueError("permutation and element differ in length")
    sign, parts, choices = permute_raw(perm.images, e.composition.parts, e.choices)
    return sign, TensorBasisElement(DegreeComposition(parts), choices)


def act(perm: Permutation, e: TensorBasisElement, field: FieldSpec) -> SignedBasisElement:
    sign, image = permute_slots(perm, e)
    return SignedBasisElement(FieldScalar(field, sign), image)


def iter_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(n)):
        yield Permutation(images)
