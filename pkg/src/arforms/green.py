"""The split Grothendieck group A(C) and the hom-dimension form on it."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InfiniteOrbit
from .category import ARTriangle, CategoryPresentation, ObjectRef
from .intmat import IntMatrix, integer_nullspace, lattice_equal

__all__ = [
    "GreenElement",
    "form",
    "gram_matrix",
    "z_hat",
    "OrthogonalityReport",
    "check_ar_orthogonality",
    "kernel_closed_form",
    "kernel_bruteforce",
    "element_to_vector",
    "vector_to_element",
    "KernelComparison",
    "compare_kernels",
]


class GreenElement:
    """Finite integer combination of indecomposable objects."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[ObjectRef, int] | Iterable[tuple[ObjectRef, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[ObjectRef, int] = {}
        for ref, c in items:
            acc[ref] = acc.get(ref, 0) + c
        self._coeffs = {r: c for r, c in sorted(acc.items()) if c}

    @classmethod
    def basis(cls, ref: ObjectRef) -> "GreenElement":
        return cls({ref: 1})

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, ref: ObjectRef) -> int:
        return self._coeffs.get(ref, 0)

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __add__(self, other: "GreenElement") -> "GreenElement":
        return GreenElement(list(self.items()) + list(other.items()))

    def __neg__(self):
        return GreenElement({r: -c for r, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return GreenElement({r: k * c for r, c in self.items()})

    def __eq__(self, other):
        if not isinstance(other, GreenElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def canonical(self, p: CategoryPresentation) -> "GreenElement":
        return GreenElement((p.canonical(r), c) for r, c in self.items())

    def format(self, p: CategoryPresentation | None = None) -> str:
        if not self._coeffs:
            return "0"
        out = []
        for i, (r, c) in enumerate(self.items()):
            name = p.display(r) if p is not None else str(r)
            mag = abs(c)
            body = f"[{name}]" if mag == 1 else f"{mag}[{name}]"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"GreenElement({self.format()})"


def form(p: CategoryPresentation, x: GreenElement, y: GreenElement) -> int:
    """Bilinear extension of (C, D) -> dim Hom(C, D)."""
    return sum(a * b * p.hom_dim(r, s) for r, a in x.items() for s, b in y.items())


def gram_matrix(p: CategoryPresentation) -> IntMatrix:
    objs = p.enumerate_objects()
    return IntMatrix([[p.hom_dim(a, b) for b in objs] for a in objs], len(objs))


def z_hat(tr: ARTriangle, p: CategoryPresentation | None = None) -> GreenElement:
    """[Z] + [X] - sum of the middle summands."""
    terms = [(tr.Z, 1), (tr.X, 1)] + [(y, -1) for y in tr.Y]
    if p is not None:
        terms = [(p.canonical(r), c) for r, c in terms]
    return GreenElement(terms)


@dataclass(frozen=True)
class Mismatch:
    triangle: int
    W: ObjectRef
    expected: int
    got: int


@dataclass
class OrthogonalityReport:
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    # Triangles whose end term is fixed by the shift (value 2 branch).
    fixed_point_triangles: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def expected_pairing(p: CategoryPresentation, tr: ARTriangle, w: ObjectRef) -> int:
    """Value <W, Z^> forced by the AR property of ``tr``."""
    z = p.canonical(tr.Z)
    w = p.canonical(w)
    if p.canonical(z.shifted(1)) == z:
        return 2 if w == z else 0
    return 1 if w in (z, p.canonical(z.shifted(-1))) else 0


def check_ar_orthogonality(p: CategoryPresentation) -> OrthogonalityReport:
    """Compare <W, Z^> with its forced value for every triangle and every object W."""
    if not p.triangles:
        raise ValueError("presentation has no AR triangles")
    objs = p.enumerate_objects()
    report = OrthogonalityReport()
    for k, tr in enumerate(p.triangles):
        zh = z_hat(tr, p)
        z = p.canonical(tr.Z)
        if p.canonical(z.shifted(1)) == z:
            report.fixed_point_triangles.append(k)
        for w in objs:
            got = form(p, GreenElement.basis(w), zh)
            want = expected_pairing(p, tr, w)
            report.checked += 1
            if got != want:
                report.mismatches.append(Mismatch(k, w, want, got))
    return report


def kernel_closed_form(p: CategoryPresentation) -> list[GreenElement]:
    """One alternating orbit sum sum_{i=1}^{2s} (-1)^i [M[i]] per even-period orbit."""
    out = []
    for o in p.orbits:
        if o.infinite:
            raise InfiniteOrbit(f"orbit {o.name} is infinite")
        if o.period % 2 == 0:
            terms = [(ObjectRef(o.name, i % o.period), (-1) ** i) for i in range(1, o.period + 1)]
            out.append(GreenElement(terms))
    return out


def element_to_vector(p: CategoryPresentation, x: GreenElement) -> tuple[int, ...]:
    index = {r: i for i, r in enumerate(p.enumerate_objects())}
    v = [0] * len(index)
    for r, c in x.canonical(p).items():
        v[index[r]] += c
    return tuple(v)


def vector_to_element(p: CategoryPresentation, v) -> GreenElement:
    return GreenElement(zip(p.enumerate_objects(), v))


def kernel_bruteforce(p: CategoryPresentation) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """(left kernel, right kernel) of the Gram matrix as saturated lattice bases."""
    g = gram_matrix(p)
    return integer_nullspace(g.transpose()), integer_nullspace(g)


@dataclass
class KernelComparison:
    closed: list[GreenElement]
    left: list[tuple[int, ...]]
    right: list[tuple[int, ...]]
    equal: bool


def compare_kernels(p: CategoryPresentation) -> KernelComparison:
    closed = kernel_closed_form(p)
    left, right = kernel_bruteforce(p)
    closed_vecs = [element_to_vector(p, x) for x in closed]
    equal = lattice_equal(closed_vecs, left) and lattice_equal(closed_vecs, right)
    return KernelComparison(closed, left, right, equal)
