"""Words, monomials and exact-coefficient elements of the dense *-subalgebras
of the Cuntz algebras O_n (n generators, n >= 2) and O_inf.

An element is a finite linear combination of reduced monomials s_J s_K*
with Gaussian-rational coefficients.  All operations are pure; elements are
immutable by convention (term tables are never mutated after construction).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .scalars import GaussianRational, ONE, Rationalish

Word = Tuple[int, ...]
EPS: Word = ()


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraTag:
    """Ambient algebra: O_ngens for finite ngens >= 2, O_inf for ngens=None."""

    ngens: Optional[int]

    def __post_init__(self):
        if self.ngens is not None and self.ngens < 2:
            raise AlgebraError("finite Cuntz algebra needs at least 2 generators")

    @property
    def is_finite(self) -> bool:
        return self.ngens is not None

    def check_index(self, k: int) -> None:
        if k < 1:
            raise AlgebraError("generator index %r out of range" % (k,))
        if self.ngens is not None and k > self.ngens:
            raise AlgebraError(
                "generator index %d out of range for O_%d" % (k, self.ngens)
            )

    def check_word(self, w: Word) -> None:
        for k in w:
            self.check_index(k)

    def __str__(self) -> str:
        return "Oinf" if self.ngens is None else "O%d" % self.ngens


O_INF = AlgebraTag(None)


def O(n: int) -> AlgebraTag:
    return AlgebraTag(n)


@dataclass(frozen=True)
class Monomial:
    """Reduced monomial s_J s_K*; (EPS, EPS) is the unit."""

    left: Word
    right: Word

    @property
    def grade(self) -> int:
        return len(self.left) - len(self.right)

    @property
    def depth(self) -> int:
        return len(self.left) + len(self.right)


Key = Tuple[Word, Word]  # internal dict key (left, right)


class Element:
    """Linear combination of monomials over a fixed algebra tag.

    The term table never stores zero coefficients.  Public operations
    return fully collapsed (normalized) elements.
    """

    __slots__ = ("tag", "terms")

    def __init__(self, tag: AlgebraTag, terms: Mapping[Key, GaussianRational] = ()):
        combined: Dict[Key, GaussianRational] = {}
        for (left, right), c in dict(terms).items():
            tag.check_word(left)
            tag.check_word(right)
            c = GaussianRational.of(c)
            if (left, right) in combined:
                c = combined[left, right] + c
            if c.is_zero():
                combined.pop((left, right), None)
            else:
                combined[left, right] = c
        self.tag = tag
        self.terms = combined

    def monomials(self) -> Iterable[Monomial]:
        return (Monomial(l, r) for (l, r) in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, left: Word, right: Word) -> GaussianRational:
        from .scalars import ZERO

        return self.terms.get((tuple(left), tuple(right)), ZERO)

    # -- convenience operators (all delegate to module functions) --
    def __add__(self, other: "Element") -> "Element":
        return add(self, other)

    def __sub__(self, other: "Element") -> "Element":
        return add(self, scale(-ONE, other))

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __rmul__(self, c: Rationalish) -> "Element":
        return scale(c, self)

    def __neg__(self) -> "Element":
        return scale(-ONE, self)

    def star(self) -> "Element":
        return adjoint(self)

    def __eq__(self, other) -> bool:
        # structural table equality; use equals() for the algebra oracle
        return (
            isinstance(other, Element)
            and self.tag == other.tag
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.tag, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        from .parser import render

        return "<%s: %s>" % (self.tag, render(self))


def zero(tag: AlgebraTag) -> Element:
    return Element(tag)

def unit(tag: AlgebraTag) -> Element:
    return Element(tag, {(EPS, EPS): ONE})

def gen(tag: AlgebraTag, i: int) -> Element:
    tag.check_index(i)
    return Element(tag, {((i,), EPS): ONE})

def mono(tag: AlgebraTag, left: Iterable[int], right: Iterable[int] = (),
         c: Rationalish = 1) -> Element:
    return Element(tag, {(tuple(left), tuple(right)): GaussianRational.of(c)})


def _check_tags(a: Element, b: Element) -> None:
    if a.tag != b.tag:
        raise AlgebraError("algebra mismatch: %s vs %s" % (a.tag, b.tag))


def _mul_key(a: Key, b: Key) -> Optional[Key]:
    """(s_J s_K*)(s_L s_M*) under the Cuntz relations, or None if zero."""
    (j, k), (l, m) = a, b
    if len(k) <= len(l):
        if l[: len(k)] == k:
            return (j + l[len(k):], m)
        return None
    if k[: len(l)] == l:
        return (j, m + k[len(l):])
    return None


def multiply(a: Element, b: Element) -> Element:
    _check_tags(a, b)
    acc: Dict[Key, GaussianRational] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            key = _mul_key(ka, kb)
            if key is None:
                continue
            c = ca * cb
            if key in acc:
                c = acc[key] + c
            if c.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = c
    return normalize(Element(a.tag, acc))


def adjoint(e: Element) -> Element:
    return normalize(
        Element(e.tag, {(r, l): c.conjugate() for (l, r), c in e.terms.items()})
    )


def add(a: Element, b: Element) -> Element:
    _check_tags(a, b)
    acc = dict(a.terms)
    for key, c in b.terms.items():
        s = acc.get(key)
        s = c if s is None else s + c
        if s.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = s
    return normalize(Element(a.tag, acc))


def scale(c: Rationalish, e: Element) -> Element:
    c = GaussianRational.of(c)
    if c.is_zero():
        return zero(e.tag)
    return normalize(Element(e.tag, {k: c * v for k, v in e.terms.items()}))


def _collapse_once(terms: Dict[Key, GaussianRational], base: Key, n: int) -> None:
    """Extract the common summand of the full sibling set over `base` in place.

    The extracted coefficient is the minimum under the scalar sort key, which
    zeroes at least one sibling; uniqueness of the collapsed form relies on
    processing deeper sets first (see normalize).
    """
    j, k = base
    sibs = [(j + (i,), k + (i,)) for i in range(1, n + 1)]
    coeffs = [terms.get(s) for s in sibs]
    if any(c is None for c in coeffs):
        return
    c = min(coeffs, key=GaussianRational.sort_key)
    for s, cs in zip(sibs, coeffs):
        rest = cs - c
        if rest.is_zero():
            del terms[s]
        else:
            terms[s] = rest
    tot = terms.get(base)
    tot = c if tot is None else tot + c
    if tot.is_zero():
        terms.pop(base, None)
    else:
        terms[base] = tot


def normalize(e: Element) -> Element:
    """Unique fully collapsed form.

    Like terms are already combined on construction.  For finite tags, full
    sibling sets {(J.i, K.i) : i=1..n} are collapsed onto (J, K), sweeping
    from the deepest monomials upward so that contributions flowing to
    shorter words are seen before their own sibling sets are inspected.
    O_inf has no completeness relation, so only combination applies.
    """
    n = e.tag.ngens
    if n is None or not e.terms:
        return e
    terms = dict(e.terms)
    depth = max(len(l) + len(r) for (l, r) in terms)
    while depth >= 2:
        bases = {
            (l[:-1], r[:-1])
            for (l, r) in terms
            if len(l) + len(r) == depth and l and r and l[-1] == r[-1]
        }
        for base in sorted(bases):
            _collapse_once(terms, base, n)
        depth -= 1
    out = Element.__new__(Element)
    out.tag = e.tag
    out.terms = terms
    return out


def grade_components(e: Element) -> Dict[int, Element]:
    """Partition by the gauge grade |J| - |K|; the parts sum back to e."""
    buckets: Dict[int, Dict[Key, GaussianRational]] = {}
    for (l, r), c in e.terms.items():
        buckets.setdefault(len(l) - len(r), {})[(l, r)] = c
    return {g: Element(e.tag, t) for g, t in sorted(buckets.items())}


def _expand_table(terms: Mapping[Key, GaussianRational], n: int) -> Dict[Key, GaussianRational]:
    """Expand every monomial of a single-grade table to the maximal right
    length via s_J s_K* = sum_{|L|=d} s_JL s_KL*; the expanded monomials are
    linearly independent, so the table is zero iff all entries cancel."""
    if not terms:
        return {}
    m = max(len(r) for (_, r) in terms)
    acc: Dict[Key, GaussianRational] = {}
    for (l, r), c in terms.items():
        d = m - len(r)
        stack = [EPS]
        for _ in range(d):
            stack = [w + (i,) for w in stack for i in range(1, n + 1)]
        for w in stack:
            key = (l + w, r + w)
            s = acc.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = s
    return acc


def equals(a: Element, b: Element) -> bool:
    """Exact equality oracle: a - b is split by grade and each grade is
    expanded to a common right length before coefficient comparison."""
    _check_tags(a, b)
    diff = a - b
    if diff.is_zero():
        return True
    n = a.tag.ngens
    if n is None:
        return False  # reduced monomials are independent in O_inf
    for comp in grade_components(diff).values():
        if _expand_table(comp.terms, n):
            return False
    return True
