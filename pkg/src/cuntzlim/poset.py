"""The divisibility poset on the positive integers, cofinal chains, order
homomorphism checks, and the embeddability graph between Cuntz algebras."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from .homs import hom_exists

TOP = math.inf  # formal top element: every n divides it


def leq(n: int, m) -> bool:
    """n precedes m iff n divides m; TOP dominates everything."""
    if m == TOP:
        return True
    if n == TOP:
        return False
    if n < 1 or m < 1:
        raise ValueError("poset carrier is the positive integers")
    return m % n == 0


def join(n: int, m: int) -> int:
    """Least upper bound (lcm), witnessing directedness."""
    return math.lcm(n, m)


@dataclass(frozen=True)
class Chain:
    """A finite divisibility chain n_1 | n_2 | ... of positive integers."""

    elements: Tuple[int, ...]

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if not elems:
            raise ValueError("chain must be nonempty")
        for a, b in zip(elems, elems[1:]):
            if not leq(a, b) or a == b:
                raise ValueError("not strictly increasing under divisibility: %r" % (elems,))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]


def cofinal_chain(enumeration: Sequence[int], length: int) -> Chain:
    """Totally ordered cofinal subsequence: y_1 = x_1 and y_k = lcm(y_{k-1}, x_k).

    Every enumerated x_i with i <= length divides some chain element."""
    xs = list(enumeration)
    if not xs:
        raise ValueError("empty enumeration")
    ys: List[int] = []
    for x in xs[:length]:
        y = x if not ys else join(ys[-1], x)
        ys.append(y)
    # drop repeats so the Chain is strictly increasing
    out = [ys[0]]
    for y in ys[1:]:
        if y != out[-1]:
            out.append(y)
    return Chain(tuple(out))


def check_order_hom(
    system_ranks: Mapping, order: Callable[[object, object], bool]
) -> bool:
    """True iff d <= e implies rank(d) | rank(e) over all sampled pairs."""
    keys = list(system_ranks)
    for d in keys:
        for e in keys:
            if order(d, e) and not leq(system_ranks[d], system_ranks[e]):
                return False
    return True


@dataclass
class Digraph:
    vertices: List[str]
    edges: List[Tuple[str, str]] = field(default_factory=list)

    def to_dot(self, name: str = "g") -> str:
        lines = ["digraph %s {" % name]
        for v in self.vertices:
            lines.append('  "%s";' % v)
        for a, b in self.edges:
            lines.append('  "%s" -> "%s";' % (a, b))
        lines.append("}")
        return "\n".join(lines) + "\n"


def _transitive_reduction(edges: Set[Tuple[int, int]]) -> Set[Tuple[int, int]]:
    out = set(edges)
    for a, b in edges:
        for c, d in edges:
            if b == c and (a, d) in out:
                out.discard((a, d))
    return out


def embeddability_edges(max_generators: int, reduce: bool = False) -> List[Tuple[int, int]]:
    """Edges O_m -> O_n (as generator-count pairs) for unital embeddings;
    with reduce=True only covering arrows are kept (the Hasse diagram)."""
    if max_generators < 2:
        raise ValueError("need at least O_2")
    es = {
        (m, n)
        for m in range(2, max_generators + 1)
        for n in range(2, max_generators + 1)
        if m != n and hom_exists(m, n)
    }
    if reduce:
        es = _transitive_reduction(es)
    return sorted(es)


def divisibility_edges(max_n: int, reduce: bool = False) -> List[Tuple[int, int]]:
    """Edges n -> m for n | m, n != m, on {1..max_n}."""
    es = {
        (n, m)
        for n in range(1, max_n + 1)
        for m in range(1, max_n + 1)
        if n != m and leq(n, m)
    }
    if reduce:
        es = _transitive_reduction(es)
    return sorted(es)


def reversed_relabeled(edges: Iterable[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Reverse each O_m -> O_n arrow and relabel k -> k-1; this turns the
    embeddability graph into the divisibility graph."""
    return sorted((n - 1, m - 1) for (m, n) in edges)


def embeddability_graph(max_generators: int, reduce: bool = False) -> Digraph:
    verts = ["O%d" % k for k in range(2, max_generators + 1)]
    edges = [
        ("O%d" % m, "O%d" % n) for m, n in embeddability_edges(max_generators, reduce)
    ]
    return Digraph(verts, edges)
