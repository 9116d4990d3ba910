"""Truncated profinite integers (factorial-base residue towers), p-adic
integers, K0 bookkeeping for Cuntz algebras, and the report showing that
K0 does not commute with the inverse limit at desk scale."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple, Union

from .algebra import AlgebraTag
from .homs import GenHom, HomError


# ---------------------------------------------------------------------------
# Z-hat truncated along the cofinal factorial chain
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProfiniteInt:
    """Residue class mod (depth+1)!, exposing residues mod every divisor.

    Equivalent data: factorial-base digits (c_1..c_depth) with 0 <= c_k <= k;
    the factorial chain is cofinal in the divisibility poset, so one chain
    covers every modulus up to the depth."""

    depth: int
    value: int

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def modulus(self) -> int:
        return math.factorial(self.depth + 1)

    @property
    def digits(self) -> Tuple[int, ...]:
        out, v = [], self.value
        for k in range(1, self.depth + 1):
            v, d = divmod(v, k + 1)
            out.append(d)
        return tuple(out)

    def residue(self, n: int) -> int:
        if n < 1 or self.modulus % n:
            raise ValueError("%d does not divide %d" % (n, self.modulus))
        return self.value % n

    def _match(self, other: "ProfiniteInt") -> None:
        if self.depth != other.depth:
            raise ValueError("depth mismatch")

    def __add__(self, other: "ProfiniteInt") -> "ProfiniteInt":
        self._match(other)
        return ProfiniteInt(self.depth, self.value + other.value)

    def __mul__(self, other: "ProfiniteInt") -> "ProfiniteInt":
        self._match(other)
        return ProfiniteInt(self.depth, self.value * other.value)

    def __neg__(self) -> "ProfiniteInt":
        return ProfiniteInt(self.depth, -self.value)

    def __sub__(self, other: "ProfiniteInt") -> "ProfiniteInt":
        return self + (-other)


def from_integer(z: int, depth: int) -> ProfiniteInt:
    return ProfiniteInt(depth, z)


def from_digits(digits) -> ProfiniteInt:
    digits = list(digits)
    v = 0
    for k, d in enumerate(digits, start=1):
        if not 0 <= d <= k:
            raise ValueError("digit %d out of range at position %d" % (d, k))
        v += d * math.factorial(k)
    return ProfiniteInt(len(digits), v)


def all_ones(depth: int) -> ProfiniteInt:
    """The standard non-integral witness: every factorial digit is 1."""
    return from_digits([1] * depth)


def project(x: ProfiniteInt, n: int) -> int:
    return x.residue(n)


def natural_surjection(m: int, n: int) -> Callable[[int], int]:
    """Reduction Z/mZ -> Z/nZ along divisibility."""
    if n < 1 or m % n:
        raise ValueError("%d does not divide %d" % (n, m))
    return lambda r: (r % m) % n


# ---------------------------------------------------------------------------
# p-adic integers at finite precision
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PAdicInt:
    p: int
    precision: int
    value: int

    def __post_init__(self):
        if self.p < 2 or self.precision < 1:
            raise ValueError("need prime p >= 2 and precision >= 1")
        object.__setattr__(self, "value", self.value % self.p ** self.precision)

    @property
    def digits(self) -> Tuple[int, ...]:
        out, v = [], self.value
        for _ in range(self.precision):
            v, d = divmod(v, self.p)
            out.append(d)
        return tuple(out)

    def _match(self, other: "PAdicInt") -> None:
        if self.p != other.p or self.precision != other.precision:
            raise ValueError("precision mismatch")

    def __add__(self, other):
        self._match(other)
        return PAdicInt(self.p, self.precision, self.value + other.value)

    def __mul__(self, other):
        self._match(other)
        return PAdicInt(self.p, self.precision, self.value * other.value)

    def __neg__(self):
        return PAdicInt(self.p, self.precision, -self.value)


def from_integer_p(z: int, p: int, precision: int) -> PAdicInt:
    return PAdicInt(p, precision, z)


def project_pk(x: PAdicInt, k: int) -> int:
    if not 1 <= k <= x.precision:
        raise ValueError("projection exponent out of range")
    return x.value % x.p ** k


# ---------------------------------------------------------------------------
# K0 bookkeeping
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UHF:
    r: int


@dataclass(frozen=True)
class K0Descriptor:
    kind: str  # "CyclicMod" | "FreeRankOne" | "DenominatorGroup"
    n: Optional[int] = None


def k0(tag: Union[AlgebraTag, UHF]) -> K0Descriptor:
    if isinstance(tag, UHF):
        return K0Descriptor("DenominatorGroup", tag.r)
    if tag.is_finite:
        return K0Descriptor("CyclicMod", tag.ngens - 1)
    return K0Descriptor("FreeRankOne")


@dataclass(frozen=True)
class K0Map:
    """Unit-class bookkeeping: 1 -> 1 from Z/source (or Z if None) onto
    Z/target; always surjective since the unit class generates."""

    source_mod: Optional[int]
    target_mod: int
    surjective: bool = True

    def __call__(self, cls: int) -> int:
        return cls % self.target_mod

    def compose(self, inner: "K0Map") -> "K0Map":
        # self : K0 of inner's codomain onward; inner feeds into self
        if inner.target_mod != (self.source_mod or inner.target_mod):
            raise ValueError("noncomposable K0 maps")
        return K0Map(inner.source_mod, self.target_mod)


def induced_k0_map(h: GenHom) -> K0Map:
    src = k0(h.domain)
    tgt = k0(h.codomain)
    if tgt.kind != "CyclicMod":
        raise HomError("K0 bookkeeping targets finite Cuntz algebras only")
    if src.kind == "CyclicMod":
        if src.n % tgt.n:
            raise HomError("unit classes do not align: %d -> %d" % (src.n, tgt.n))
        return K0Map(src.n, tgt.n)
    return K0Map(None, tgt.n)


# ---------------------------------------------------------------------------
# the discontinuity report
# ---------------------------------------------------------------------------

def nonintegrality_witness(x: ProfiniteInt, bound: int) -> Optional[int]:
    """Smallest d <= x.depth at which no integer z with |z| <= bound matches
    x mod (d+1)!; None means inconclusive at this depth."""
    for d in range(1, x.depth + 1):
        m = math.factorial(d + 1)
        r = x.value % m
        if r > bound and m - r > bound:
            return d
    return None


@dataclass
class DiscontinuityReport:
    depth: int
    bound: int
    limit_k0: K0Descriptor
    residue_moduli: List[int]
    residues: List[int]
    injectivity_guaranteed: bool
    witness_depth: Optional[int]
    witness_residue: Optional[int]
    witness_beyond_requested: bool
    max_separating_bound: int
    max_bound_witness_depth: Optional[int]
    p: int
    p_precision: int
    p_limit_k0: K0Descriptor
    p_digits: Tuple[int, ...]

    def to_kv(self) -> str:
        lines = [
            "depth=%d" % self.depth,
            "bound=%d" % self.bound,
            "limit_k0=%s" % self.limit_k0.kind,
            "residue_moduli=%s" % ",".join(map(str, self.residue_moduli)),
            "all_ones_residues=%s" % ",".join(map(str, self.residues)),
            "injectivity_guaranteed=%s" % str(self.injectivity_guaranteed).lower(),
            "witness_depth=%s" % (
                self.witness_depth if self.witness_depth is not None else "inconclusive"
            ),
            "witness_residue=%s" % (
                self.witness_residue if self.witness_residue is not None else ""
            ),
            "witness_beyond_requested=%s" % str(self.witness_beyond_requested).lower(),
            "max_separating_bound=%d" % self.max_separating_bound,
            "max_bound_witness_depth=%s" % (
                self.max_bound_witness_depth
                if self.max_bound_witness_depth is not None
                else "inconclusive"
            ),
            "p=%d" % self.p,
            "p_precision=%d" % self.p_precision,
            "p_limit_k0=%s" % self.p_limit_k0.kind,
            "p_all_ones_digits=%s" % ",".join(map(str, self.p_digits)),
        ]
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        w = []
        w.append("K0 discontinuity report (depth %d, bound %d)" % (self.depth, self.bound))
        w.append("  limit side:      K0(lim O_n) = Z (%s)" % self.limit_k0.kind)
        w.append("  residue side:    lim K0(O_n) truncated along the factorial chain")
        w.append("    moduli:        %s" % ", ".join(map(str, self.residue_moduli)))
        w.append("    all-ones elt:  %s" % ", ".join(map(str, self.residues)))
        w.append(
            "  injectivity of Z -> Z-hat on [-%d, %d]: %s"
            % (self.bound, self.bound,
               "guaranteed ((depth+1)! > 2*bound)" if self.injectivity_guaranteed else "NOT guaranteed")
        )
        if self.witness_depth is not None and not self.witness_beyond_requested:
            w.append(
                "  non-surjectivity witness: all-ones element separates from"
                " [-%d, %d] at depth %d" % (self.bound, self.bound, self.witness_depth)
            )
        elif self.witness_depth is not None:
            w.append(
                "  non-surjectivity witness vs bound %d needs depth %d"
                " (beyond the requested depth %d)"
                % (self.bound, self.witness_depth, self.depth)
            )
        else:
            w.append("  non-surjectivity witness vs bound %d: inconclusive" % self.bound)
        w.append(
            "  at depth %d the all-ones element separates from every integer"
            " bound up to %d (witness depth %s)"
            % (self.depth, self.max_separating_bound, self.max_bound_witness_depth)
        )
        w.append(
            "  p-adic variant (p=%d, precision %d): K0(lim O_{p^n+1}) = Z (%s)"
            " vs truncated Z_p digits %s"
            % (self.p, self.p_precision, self.p_limit_k0.kind, list(self.p_digits))
        )
        return "\n".join(w) + "\n"


def discontinuity_report(depth: int, bound: int, p: int = 2,
                         p_precision: int = 8) -> DiscontinuityReport:
    x = all_ones(depth)
    moduli = [math.factorial(k) for k in range(2, depth + 2)]
    residues = [x.residue(m) for m in moduli]
    injective = math.factorial(depth + 1) > 2 * bound

    wit = nonintegrality_witness(x, bound)
    beyond = False
    if wit is None:
        # extend the element until the requested bound is separated; the
        # all-ones digit pattern determines the extension uniquely
        d = depth
        while wit is None and d < depth + 64:
            d += 1
            wit = nonintegrality_witness(all_ones(d), bound)
        beyond = wit is not None
    wit_res = (
        all_ones(max(wit, depth)).value % math.factorial(wit + 1)
        if wit is not None else None
    )

    # largest bound separable at the requested depth: both representatives
    # of the class mod (d+1)! must exceed the bound for some d <= depth
    best = 0
    best_depth = None
    for d in range(1, depth + 1):
        m = math.factorial(d + 1)
        r = x.value % m
        sep = min(r, m - r) - 1
        if sep > best:
            best, best_depth = sep, d

    px = PAdicInt(p, p_precision, x.value)
    return DiscontinuityReport(
        depth=depth,
        bound=bound,
        limit_k0=K0Descriptor("FreeRankOne"),
        residue_moduli=moduli,
        residues=residues,
        injectivity_guaranteed=injective,
        witness_depth=wit,
        witness_residue=wit_res,
        witness_beyond_requested=beyond,
        max_separating_bound=best,
        max_bound_witness_depth=best_depth,
        p=p,
        p_precision=p_precision,
        p_limit_k0=K0Descriptor("FreeRankOne"),
        p_digits=px.digits,
    )
