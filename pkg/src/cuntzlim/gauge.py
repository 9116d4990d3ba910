"""Gauge and torus-diagonal fixed-point checks, and the graded analysis of
the generator-doubling chain whose limit is uniformly hyperfinite."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra import AlgebraError, AlgebraTag, Element, O, Word
from .homs import GenHom, apply, compose, make_hom, q, rn, validate_prefix_code


def is_gauge_invariant(e: Element) -> bool:
    """Fixed under the circle action: every monomial has |J| = |K|."""
    return all(len(l) == len(r) for (l, r) in e.terms)


def is_diagonal(e: Element) -> bool:
    """Fixed under the full torus action: every monomial has J = K."""
    return all(l == r for (l, r) in e.terms)


@dataclass
class FixedPointReport:
    diagonal_preserved: bool
    diagonal_failures: List[Tuple[Word, Word]]
    gauge_witness: Optional[Tuple[Tuple[Word, Word], Element]]


def _words(n: int, max_len: int, min_len: int = 0):
    for length in range(min_len, max_len + 1):
        yield from itertools.product(range(1, n + 1), repeat=length)


def fixed_point_report(h: GenHom, sample_len: int) -> FixedPointReport:
    """Checks that diagonal monomials stay diagonal, and hunts for a
    gauge-invariant monomial whose image leaves the gauge-invariant part."""
    if not (h.domain.is_finite and h.codomain.is_finite):
        raise AlgebraError("fixed-point checks need finite Cuntz tags")
    from .algebra import mono

    m = h.domain.ngens
    failures = []
    for w in _words(m, sample_len, 1):
        img = apply(h, mono(h.domain, w, w))
        if not is_diagonal(img):
            failures.append((w, w))
    witness = None
    for length in range(1, sample_len + 1):
        for l in _words(m, length, length):
            for r in _words(m, length, length):
                img = apply(h, mono(h.domain, l, r))
                if not is_gauge_invariant(img):
                    witness = ((l, r), img)
                    break
            if witness:
                break
        if witness:
            break
    return FixedPointReport(not failures, failures, witness)


def uhf_member(r: int, n: int, left: Word, right: Word) -> bool:
    """Membership in the n-th block subalgebra of O_r: both word lengths
    must be multiples of 2^(n-1)."""
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    block = 2 ** (n - 1)
    return len(left) % block == 0 and len(right) % block == 0


def uhf_graded_vanishing(r: int, n: int, l: int, max_len: int) -> bool:
    """True iff no block-subalgebra monomial of length <= max_len has grade l
    when 2^(n-1) does not divide l (enumeration verdict over lengths only:
    grades depend only on |J| and |K|)."""
    block = 2 ** (n - 1)
    if l % block == 0:
        # a witness of grade l exists whenever lengths fit the cap
        for a in range(0, max_len + 1, block):
            b = a - l
            if 0 <= b <= max_len and b % block == 0:
                return False
        return True
    for a in range(0, max_len + 1, block):
        b = a - l
        if 0 <= b <= max_len and b % block == 0:
            return False
    return True


@dataclass
class UhfLevelCheck:
    n: int
    code_maximal: bool
    member_ok: bool
    grade_scale: int


@dataclass
class UhfChainReport:
    r: int
    depth: int
    levels: List[UhfLevelCheck]
    vanishing: Dict[Tuple[int, int], bool]  # (n, l) -> vanishes as required
    ok: bool


def uhf_chain_check(r: int, depth: int, max_len: int = 12,
                    grade_range: int = 6) -> UhfChainReport:
    """Validates the squaring maps q(r, n) for n < depth, pushes their images
    down to O_r, and records block membership, grade doubling, and the graded
    vanishing pattern."""
    if depth < 2:
        raise ValueError("depth must be >= 2")
    levels = []
    push = None  # composed map A_{r,n+1} -> A_{r,1}
    for n in range(1, depth):
        step = q(r, n, validate=True)
        words = step.image_words()
        report = validate_prefix_code(words, rn(r, n))
        push = step if push is None else compose(push, step, validate=False)
        member_ok = True
        scale = 2 ** n
        for k in push.gens():
            img = push.image(k)
            ((l, rt), _), = img.terms.items()
            if rt != () or len(l) != scale or not uhf_member(r, n + 1, l, rt):
                member_ok = False
        levels.append(UhfLevelCheck(n, report.maximal, member_ok, scale))
    vanishing = {}
    for n in range(1, depth + 1):
        block = 2 ** (n - 1)
        for l in range(-grade_range, grade_range + 1):
            if l != 0 and l % block:
                vanishing[(n, l)] = uhf_graded_vanishing(r, n, l, max_len)
    ok = all(lv.code_maximal and lv.member_ok for lv in levels) and all(
        vanishing.values()
    )
    return UhfChainReport(r, depth, levels, vanishing, ok)
