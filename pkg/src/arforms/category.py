"""Finite presentations of Krull-Schmidt triangulated categories.

A presentation lists the shift orbits of indecomposable objects, one Laurent
polynomial of hom dimensions per ordered pair of orbits, and a list of
Auslander-Reiten triangles.  For orbits ``A`` and ``B`` with representatives
``a`` and ``b`` the stored polynomial is ``sum_i dim Hom(a, b[i]) t^i``.
When a pair involves finite orbits the exponents live in the window
``0 .. g-1`` and are read cyclically, where ``g`` is the gcd of the finite
periods involved.

File format (UTF-8, line oriented, ``#`` starts a comment)::

    category <name>
    flag hypothesis-4.2 <true|false>
    flag serre-trivial <true|false>
    orbit <name> period <n|inf>
    label <name> <objref>
    hom <orbitA> <orbitB> : <laurent>
    triangle <objref> | <objref> (+ <objref>)* | <objref>

An objref is ``name[shift]`` with ``[0]`` optional; ``name`` may be an orbit
or a label.  A triangle with no middle term is written with ``-``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InfiniteOrbit, ParseError, UnknownObject
from .laurent import LaurentPoly, ZERO, format_laurent, parse_laurent

__all__ = [
    "OrbitDecl",
    "ObjectRef",
    "ARTriangle",
    "CategoryPresentation",
    "ValidationReport",
    "parse",
    "parse_file",
    "emit",
    "validate",
    "hom_dim",
    "enumerate_objects",
    "parse_objref",
]

FLAG_FINITE_SUPPORT = "hypothesis-4.2"
FLAG_SERRE_TRIVIAL = "serre-trivial"

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_OBJREF = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\[([+-]?\d+)\])?$")


@dataclass(frozen=True)
class OrbitDecl:
    name: str
    period: Optional[int]  # None means the orbit is infinite

    @property
    def infinite(self) -> bool:
        return self.period is None


@dataclass(frozen=True, order=True)
class ObjectRef:
    orbit: str
    shift: int = 0

    def shifted(self, k: int) -> "ObjectRef":
        return ObjectRef(self.orbit, self.shift + k)

    def __str__(self):
        return self.orbit if self.shift == 0 else f"{self.orbit}[{self.shift}]"


@dataclass(frozen=True)
class ARTriangle:
    """X -> Y -> Z -> X[1], recorded by its end terms and middle summands."""

    X: ObjectRef
    Y: tuple[ObjectRef, ...]
    Z: ObjectRef

    def __post_init__(self):
        object.__setattr__(self, "Y", tuple(self.Y))


@dataclass(frozen=True)
class CategoryPresentation:
    name: str
    orbits: tuple[OrbitDecl, ...]
    homs: Mapping[tuple[str, str], LaurentPoly]
    triangles: tuple[ARTriangle, ...] = ()
    hypothesis_42: bool = False
    serre_trivial: bool = False
    labels: Mapping[str, ObjectRef] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "orbits", tuple(self.orbits))
        object.__setattr__(self, "triangles", tuple(self.triangles))
        object.__setattr__(self, "homs", {k: v for k, v in dict(self.homs).items() if v})
        object.__setattr__(self, "labels", dict(self.labels))
        object.__setattr__(self, "_by_name", {o.name: o for o in self.orbits})

    # -- lookups ------------------------------------------------------------

    def orbit(self, name: str) -> OrbitDecl:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownObject(name) from None

    def has_orbit(self, name: str) -> bool:
        return name in self._by_name

    def orbit_index(self, name: str) -> int:
        return self.orbits.index(self.orbit(name))

    def period(self, name: str) -> Optional[int]:
        return self.orbit(name).period

    def window(self, a: str, b: str) -> Optional[int]:
        """Cyclic modulus for hom exponents between two orbits (None if both infinite)."""
        pa, pb = self.period(a), self.period(b)
        if pa is None and pb is None:
            return None
        if pa is None:
            return pb
        if pb is None:
            return pa
        return gcd(pa, pb)

    def canonical(self, ref: ObjectRef) -> ObjectRef:
        n = self.period(ref.orbit)
        return ref if n is None else ObjectRef(ref.orbit, ref.shift % n)

    def hom_poly(self, a: str, b: str) -> LaurentPoly:
        self.orbit(a)
        self.orbit(b)
        return self.homs.get((a, b), ZERO)

    def hom_dim(self, a: ObjectRef, b: ObjectRef) -> int:
        poly = self.hom_poly(a.orbit, b.orbit)
        d = b.shift - a.shift
        g = self.window(a.orbit, b.orbit)
        if g is None:
            return poly.coeff(d)
        return poly.cyclic_reduce(g)[d % g]

    def all_finite(self) -> bool:
        return all(not o.infinite for o in self.orbits)

    def enumerate_objects(self) -> list[ObjectRef]:
        out = []
        for o in self.orbits:
            if o.infinite:
                raise InfiniteOrbit(f"orbit {o.name} is infinite; objects cannot be enumerated")
            out.extend(ObjectRef(o.name, i) for i in range(o.period))
        return out

    # -- naming -------------------------------------------------------------

    def resolve(self, text: str) -> ObjectRef:
        """Parse an objref, accepting labels, and return its canonical form."""
        ref = parse_objref(text)
        if ref.orbit in self.labels:
            ref = self.labels[ref.orbit].shifted(ref.shift)
        if not self.has_orbit(ref.orbit):
            raise UnknownObject(text)
        return self.canonical(ref)

    def display(self, ref: ObjectRef) -> str:
        ref = self.canonical(ref)
        for label, target in self.labels.items():
            if self.canonical(target) == ref:
                return label
        return str(ref)


def parse_objref(text: str) -> ObjectRef:
    m = _OBJREF.match(text.strip())
    if not m:
        raise ValueError(f"malformed object reference {text!r}")
    return ObjectRef(m.group(1), int(m.group(2)) if m.group(2) is not None else 0)


# -- parsing ---------------------------------------------------------------------

def _parse_bool(word: str, line: int) -> bool:
    if word == "true":
        return True
    if word == "false":
        return False
    raise ParseError(line, f"expected true or false, got {word!r}")


def parse(text: str) -> CategoryPresentation:
    name = None
    flags = {FLAG_FINITE_SUPPORT: False, FLAG_SERRE_TRIVIAL: False}
    orbits: list[OrbitDecl] = []
    seen_orbits: set[str] = set()
    label_lines: list[tuple[int, str, str]] = []
    hom_lines: list[tuple[int, str, str, str]] = []
    tri_lines: list[tuple[int, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        kw = words[0]
        if kw == "category":
            if name is not None:
                raise ParseError(lineno, "duplicate category line")
            if len(words) != 2:
                raise ParseError(lineno, "expected: category <name>")
            name = words[1]
        elif kw == "flag":
            if len(words) != 3 or words[1] not in flags:
                raise ParseError(lineno, f"expected: flag {FLAG_FINITE_SUPPORT}|{FLAG_SERRE_TRIVIAL} <true|false>")
            flags[words[1]] = _parse_bool(words[2], lineno)
        elif kw == "orbit":
            if len(words) != 4 or words[2] != "period":
                raise ParseError(lineno, "expected: orbit <name> period <n|inf>")
            oname = words[1]
            if not _IDENT.fullmatch(oname):
                raise ParseError(lineno, f"bad orbit name {oname!r}")
            if oname in seen_orbits:
                raise ParseError(lineno, f"duplicate orbit {oname!r}")
            if words[3] == "inf":
                period = None
            else:
                try:
                    period = int(words[3])
                except ValueError:
                    raise ParseError(lineno, f"bad period {words[3]!r}") from None
                if period < 1:
                    raise ParseError(lineno, "period must be positive")
            seen_orbits.add(oname)
            orbits.append(OrbitDecl(oname, period))
        elif kw == "label":
            if len(words) != 3 or not _IDENT.fullmatch(words[1]):
                raise ParseError(lineno, "expected: label <name> <objref>")
            label_lines.append((lineno, words[1], words[2]))
        elif kw == "hom":
            head, sep, poly = line.partition(":")
            hw = head.split()
            if not sep or len(hw) != 3:
                raise ParseError(lineno, "expected: hom <orbitA> <orbitB> : <laurent>")
            hom_lines.append((lineno, hw[1], hw[2], poly))
        elif kw == "triangle":
            tri_lines.append((lineno, line[len("triangle"):]))
        else:
            raise ParseError(lineno, f"unknown directive {kw!r}")

    if name is None:
        raise ParseError(max(1, len(text.splitlines())), "missing category line")

    proto = CategoryPresentation(name, orbits, {})

    labels: dict[str, ObjectRef] = {}
    for lineno, lname, target in label_lines:
        if lname in labels:
            raise ParseError(lineno, f"duplicate label {lname!r}")
        try:
            ref = parse_objref(target)
        except ValueError as e:
            raise ParseError(lineno, str(e)) from None
        if not proto.has_orbit(ref.orbit):
            raise ParseError(lineno, f"label target {target!r} is not in a declared orbit")
        ref = proto.canonical(ref)
        if proto.has_orbit(lname) and ref != ObjectRef(lname, 0):
            raise ParseError(lineno, f"label {lname!r} clashes with an orbit name")
        labels[lname] = ref
    proto = CategoryPresentation(name, orbits, {}, labels=labels)

    homs: dict[tuple[str, str], LaurentPoly] = {}
    for lineno, a, b, poly_text in hom_lines:
        for o in (a, b):
            if not proto.has_orbit(o):
                raise ParseError(lineno, f"unknown orbit {o!r}")
        if (a, b) in homs:
            raise ParseError(lineno, f"duplicate hom line for {a} {b}")
        try:
            poly = parse_laurent(poly_text)
        except ValueError as e:
            raise ParseError(lineno, str(e)) from None
        g = proto.window(a, b)
        if g is not None and poly and (poly.min_exp < 0 or poly.max_exp >= g):
            raise ParseError(lineno, f"exponents for {a} {b} must lie in 0..{g - 1}")
        homs[(a, b)] = poly

    def obj(lineno: int, text: str) -> ObjectRef:
        try:
            return proto.resolve(text)
        except (ValueError, UnknownObject):
            raise ParseError(lineno, f"cannot resolve object {text.strip()!r}") from None

    triangles = []
    for lineno, body in tri_lines:
        parts = body.split("|")
        if len(parts) != 3:
            raise ParseError(lineno, "expected: triangle X | Y1 + Y2 ... | Z")
        x = obj(lineno, parts[0])
        z = obj(lineno, parts[2])
        mid = parts[1].strip()
        if mid == "-":
            ys: tuple[ObjectRef, ...] = ()
        else:
            ys = tuple(obj(lineno, y) for y in mid.split("+"))
        triangles.append(ARTriangle(x, ys, z))

    return CategoryPresentation(
        name,
        orbits,
        homs,
        triangles,
        hypothesis_42=flags[FLAG_FINITE_SUPPORT],
        serre_trivial=flags[FLAG_SERRE_TRIVIAL],
        labels=labels,
    )


def parse_file(path) -> CategoryPresentation:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def emit(p: CategoryPresentation) -> str:
    """Canonical text: orbits in index order, hom pairs in index order, zero homs omitted."""
    tf = lambda b: "true" if b else "false"  # noqa: E731
    lines = [
        f"category {p.name}",
        f"flag {FLAG_FINITE_SUPPORT} {tf(p.hypothesis_42)}",
        f"flag {FLAG_SERRE_TRIVIAL} {tf(p.serre_trivial)}",
    ]
    for o in p.orbits:
        lines.append(f"orbit {o.name} period {'inf' if o.infinite else o.period}")
    for label, ref in p.labels.items():
        lines.append(f"label {label} {ref}")
    for a in p.orbits:
        for b in p.orbits:
            poly = p.homs.get((a.name, b.name))
            if poly:
                lines.append(f"hom {a.name} {b.name} : {format_laurent(poly)}")
    for tr in p.triangles:
        mid = " + ".join(str(y) for y in tr.Y) if tr.Y else "-"
        lines.append(f"triangle {tr.X} | {mid} | {tr.Z}")
    return "\n".join(lines) + "\n"


# -- validation ------------------------------------------------------------------

@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "VALID"
        return "\n".join(f"VIOLATION: {v}" for v in self.violations)


def validate(p: CategoryPresentation) -> ValidationReport:
    report = ValidationReport()
    v = report.violations

    for (a, b), poly in sorted(p.homs.items()):
        if not (p.has_orbit(a) and p.has_orbit(b)):
            v.append(f"hom {a} {b}: unknown orbit")
            continue
        for e, c in poly.terms():
            if c < 0:
                v.append(f"hom {a} {b}: negative dimension {c} at t^{e}")

    for o in p.orbits:
        if p.hom_poly(o.name, o.name).coeff(0) < 1:
            v.append(f"orbit {o.name}: representative has no identity endomorphism")

    if p.hypothesis_42:
        for o in p.orbits:
            if not o.infinite:
                touching = [k for k in p.homs if o.name in k]
                if touching:
                    v.append(
                        f"orbit {o.name} has period {o.period} and nonzero homs, so "
                        f"Hom(M, N[i]) is nonzero for infinitely many i"
                    )

    if p.serre_trivial:
        names = [o.name for o in p.orbits]
        for i, a in enumerate(names):
            for b in names[i:]:
                if not _hermitian_pair(p, a, b):
                    v.append(f"serre-trivial: hom {a} {b} is not the bar of hom {b} {a}")

    for k, tr in enumerate(p.triangles):
        for ref in (tr.X, *tr.Y, tr.Z):
            if not p.has_orbit(ref.orbit):
                v.append(f"triangle {k}: object {ref} is not in a declared orbit")
    return report


def _hermitian_pair(p: CategoryPresentation, a: str, b: str) -> bool:
    ab, ba = p.hom_poly(a, b), p.hom_poly(b, a)
    g = p.window(a, b)
    if g is None:
        return ab == ba.bar()
    x, y = ab.cyclic_reduce(g), ba.cyclic_reduce(g)
    return all(x[k] == y[-k % g] for k in range(g))


def hom_dim(p: CategoryPresentation, a: ObjectRef, b: ObjectRef) -> int:
    return p.hom_dim(a, b)


def enumerate_objects(p: CategoryPresentation) -> list[ObjectRef]:
    return p.enumerate_objects()
