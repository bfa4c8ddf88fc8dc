"""Finite-dimensional representations of the classical Lie algebras A-D.

Weights are integer vectors in the epsilon basis.  Type A_r uses GL(r+1)
coordinates (length r+1), so determinant twists and duals such as
``(0, ..., 0, -1)`` are representable.  Only integral weights are supported
for B and D (no spin representations).

Internally everything is done with ``2*rho`` so that all inner products stay
integral:

* Weyl dimension: ``prod (2w + 2rho, a) / (2rho, a)`` over positive roots.
* Freudenthal:    ``m(mu) * (l - mu, l + mu + 2rho)
                     = 2 * sum_a sum_k m(mu + k a) (mu + k a, a)``.
* Klimyk: reflect ``2(w1 + beta) + 2rho`` into the open dominant chamber.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Mapping, Sequence

__all__ = [
    "RootSystem",
    "TensorTerm",
    "TensorDecomposition",
    "parse_root_system",
    "weyl_dimension",
    "dominant_weights",
    "weight_system",
    "klimyk_tensor",
    "character",
    "character_product",
    "peel_character",
    "brute_force_tensor",
]

Vec = tuple[int, ...]


@dataclass(frozen=True, order=True)
class RootSystem:
    type: str
    rank: int

    def __post_init__(self) -> None:
        if self.type not in "ABCD" or len(self.type) != 1:
            raise ValueError(f"unknown type {self.type!r}")
        if self.rank < 1 or (self.type == "D" and self.rank < 2):
            raise ValueError(f"invalid rank {self.rank} for type {self.type}")

    @property
    def dim(self) -> int:
        """Length of a coordinate vector."""
        return self.rank + 1 if self.type == "A" else self.rank

    def __str__(self) -> str:
        return f"{self.type}{self.rank}"

    @property
    def positive_roots(self) -> tuple[Vec, ...]:
        return _positive_roots(self.type, self.rank)

    @property
    def two_rho(self) -> Vec:
        k, t = self.dim, self.type
        if t == "A":
            return tuple(2 * (k - 1 - i) for i in range(k))
        if t == "B":
            return tuple(2 * (k - i) - 1 for i in range(k))
        if t == "C":
            return tuple(2 * (k - i) for i in range(k))
        return tuple(2 * (k - 1 - i) for i in range(k))

    def is_dominant(self, w: Sequence[int]) -> bool:
        w = tuple(w)
        if len(w) != self.dim:
            return False
        dec = all(a >= b for a, b in zip(w, w[1:]))
        if self.type == "A":
            return dec
        if self.type in "BC":
            return dec and w[-1] >= 0
        return all(a >= b for a, b in zip(w[:-1], w[1:-1])) and w[-2] >= abs(w[-1])

    def dominant_rep(self, w: Sequence[int]) -> Vec:
        """Dominant element of the Weyl orbit of ``w``."""
        t = self.type
        if t == "A":
            return tuple(sorted(w, reverse=True))
        a = sorted((abs(x) for x in w), reverse=True)
        if t == "D" and a[-1] != 0 and sum(1 for x in w if x < 0) % 2:
            a[-1] = -a[-1]
        return tuple(a)

    def orbit(self, w: Sequence[int]) -> set[Vec]:
        w = tuple(w)
        if self.type == "A":
            return set(_distinct_perms(w))
        base = tuple(sorted((abs(x) for x in w), reverse=True))
        out: set[Vec] = set()
        for p in _distinct_perms(base):
            choices = [(x, -x) if x else (0,) for x in p]
            out.update(product(*choices))
        if self.type == "D" and 0 not in w:
            neg = sum(1 for x in w if x < 0) % 2
            out = {v for v in out if sum(1 for x in v if x < 0) % 2 == neg}
        return out

    def orbit_size(self, w: Sequence[int]) -> int:
        w = tuple(w)
        vals = w if self.type == "A" else tuple(abs(x) for x in w)
        size = factorial(len(vals))
        for c in Counter(vals).values():
            size //= factorial(c)
        if self.type != "A":
            nz = sum(1 for x in w if x)
            size *= 2**nz
            if self.type == "D" and nz == len(w):
                size //= 2
        return size


def _distinct_perms(seq: Sequence[int]):
    """Distinct permutations in lexicographic order, without duplicates."""
    a = sorted(seq)
    k = len(a)
    while True:
        yield tuple(a)
        i = k - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = k - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


@lru_cache(maxsize=None)
def _positive_roots(t: str, rank: int) -> tuple[Vec, ...]:
    k = rank + 1 if t == "A" else rank
    roots = []

    def e(*pairs):
        v = [0] * k
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    for i in range(k):
        for j in range(i + 1, k):
            roots.append(e((i, 1), (j, -1)))
            if t != "A":
                roots.append(e((i, 1), (j, 1)))
        if t == "B":
            roots.append(e((i, 1)))
        elif t == "C":
            roots.append(e((i, 2)))
    return tuple(roots)


def parse_root_system(text: str) -> RootSystem:
    text = text.strip().upper()
    return RootSystem(text[0], int(text[1:]))


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _check(g: RootSystem, w: Sequence[int]) -> Vec:
    w = tuple(int(x) for x in w)
    if not g.is_dominant(w):
        raise ValueError(f"{list(w)} is not a dominant weight for {g}")
    return w


def weyl_dimension(g: RootSystem, w: Sequence[int]) -> int:
    w = _check(g, w)
    tr = g.two_rho
    v = tuple(2 * x + r for x, r in zip(w, tr))
    num = den = 1
    for a in g.positive_roots:
        num *= _dot(v, a)
        den *= _dot(tr, a)
    q, r = divmod(num, den)
    assert r == 0, (g, w)
    return q


def dominant_weights(g: RootSystem, w: Sequence[int]) -> list[Vec]:
    """Dominant weights of V(w), highest first (by height)."""
    w = _check(g, w)
    seen = {w}
    todo = [w]
    while todo:
        mu = todo.pop()
        for a in g.positive_roots:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in seen and g.is_dominant(nu):
                seen.add(nu)
                todo.append(nu)
    tr = g.two_rho
    return sorted(seen, key=lambda mu: (-_dot(mu, tr), tuple(-x for x in mu)))


def _freudenthal(g: RootSystem, w: Vec) -> dict[Vec, int]:
    tr = g.two_rho
    mult: dict[Vec, int] = {}
    for mu in dominant_weights(g, w):
        if mu == w:
            mult[mu] = 1
            continue
        num = 0
        for a in g.positive_roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = mult.get(g.dominant_rep(nu))
                if m is None:
                    break
                num += m * _dot(nu, a)
                k += 1
        diff = tuple(x - y for x, y in zip(w, mu))
        summ = tuple(x + y + r for x, y, r in zip(w, mu, tr))
        den = _dot(diff, summ)
        q, r = divmod(2 * num, den)
        assert r == 0 and den > 0, (g, w, mu)
        mult[mu] = q
    return {mu: m for mu, m in mult.items() if m}


class _Memo:
    """In-process memo of dominant multiplicities, optionally backed by disk."""

    def __init__(self) -> None:
        self.table: dict[tuple[RootSystem, Vec], dict[Vec, int]] = {}

    def get(self, g: RootSystem, w: Vec) -> dict[Vec, int]:
        key = (g, w)
        hit = self.table.get(key)
        if hit is None:
            from .cache import default_cache

            disk = default_cache()
            hit = disk.load(g, w) if disk else None
            if hit is None:
                hit = _freudenthal(g, w)
                if disk:
                    disk.store(g, w, hit)
            self.table[key] = hit
        return hit


_memo = _Memo()


def dominant_multiplicities(g: RootSystem, w: Sequence[int], *, use_cache: bool = True) -> dict[Vec, int]:
    w = _check(g, w)
    if not use_cache:
        return _freudenthal(g, w)
    return dict(_memo.get(g, w))


def weight_system(g: RootSystem, w: Sequence[int], *, use_cache: bool = True) -> dict[Vec, int]:
    """All weights of V(w) with multiplicities."""
    out: dict[Vec, int] = {}
    for mu, m in dominant_multiplicities(g, w, use_cache=use_cache).items():
        for nu in g.orbit(mu):
            out[nu] = m
    return out


def _reflect_regular(g: RootSystem, v: Vec) -> tuple[int, Vec] | None:
    """``(det w, w v)`` with ``w v`` strictly dominant, or None on a wall."""
    t = g.type
    if t == "A":
        if len(set(v)) < len(v):
            return None
        order = sorted(range(len(v)), key=lambda i: -v[i])
        return _perm_sign(order), tuple(v[i] for i in order)
    a = [abs(x) for x in v]
    if len(set(a)) < len(a):
        return None
    if t in "BC" and 0 in a:
        return None
    order = sorted(range(len(a)), key=lambda i: -a[i])
    sign = _perm_sign(order)
    neg = sum(1 for x in v if x < 0)
    out = [a[i] for i in order]
    if t in "BC":
        return sign * (-1) ** neg, tuple(out)
    if neg % 2 and out[-1] != 0:
        out[-1] = -out[-1]
    return sign, tuple(out)


def _perm_sign(order: Sequence[int]) -> int:
    seen = [False] * len(order)
    sign = 1
    for i in range(len(order)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True, order=True)
class TensorTerm:
    weight: Vec
    multiplicity: int
    dimension: int


@dataclass(frozen=True)
class TensorDecomposition:
    root_system: RootSystem
    terms: tuple[TensorTerm, ...]  # sorted, highest weight first

    def as_dict(self) -> dict[Vec, int]:
        return {t.weight: t.multiplicity for t in self.terms}

    @property
    def total_dimension(self) -> int:
        return sum(t.multiplicity * t.dimension for t in self.terms)


def _decomposition(g: RootSystem, mults: Mapping[Vec, int]) -> TensorDecomposition:
    terms = [
        TensorTerm(w, m, weyl_dimension(g, w)) for w, m in mults.items() if m
    ]
    terms.sort(key=lambda t: tuple(-x for x in t.weight))
    return TensorDecomposition(g, tuple(terms))


def klimyk_tensor(g: RootSystem, w1: Sequence[int], w2: Sequence[int]) -> TensorDecomposition:
    """Decompose ``V(w1) (x) V(w2)`` by the Brauer-Klimyk rule."""
    w1, w2 = _check(g, w1), _check(g, w2)
    # iterate over the smaller weight system
    if weyl_dimension(g, w2) > weyl_dimension(g, w1):
        w1, w2 = w2, w1
    tr = g.two_rho
    acc: Counter[Vec] = Counter()
    for beta, m in weight_system(g, w2).items():
        v = tuple(2 * (x + b) + r for x, b, r in zip(w1, beta, tr))
        hit = _reflect_regular(g, v)
        if hit is None:
            continue
        sign, u = hit
        nu = tuple((x - r) // 2 for x, r in zip(u, tr))
        acc[nu] += sign * m
    if any(m < 0 for m in acc.values()):
        raise AssertionError(f"negative multiplicity in {g} {w1} x {w2}")
    return _decomposition(g, acc)


# brute-force oracle ---------------------------------------------------------


def character(g: RootSystem, w: Sequence[int]) -> Counter[Vec]:
    return Counter(weight_system(g, w))


def character_product(c1: Mapping[Vec, int], c2: Mapping[Vec, int]) -> Counter[Vec]:
    out: Counter[Vec] = Counter()
    for a, m in c1.items():
        for b, n in c2.items():
            out[tuple(x + y for x, y in zip(a, b))] += m * n
    return out


def peel_character(g: RootSystem, ch: Mapping[Vec, int]) -> TensorDecomposition:
    """Split a character into irreducibles by repeatedly removing the top weight.

    Every positive root has a positive leading coordinate, so the
    lexicographically largest surviving weight is a highest weight.
    """
    rest: Counter[Vec] = Counter({k: v for k, v in ch.items() if v})
    found: Counter[Vec] = Counter()
    while rest:
        top = max(rest)
        m = rest[top]
        if m < 0 or not g.is_dominant(top):
            raise ValueError("not the character of a representation")
        found[top] += m
        for k, v in weight_system(g, top).items():
            rest[k] -= m * v
            if rest[k] == 0:
                del rest[k]
    return _decomposition(g, found)


def brute_force_tensor(g: RootSystem, w1: Sequence[int], w2: Sequence[int]) -> TensorDecomposition:
    return peel_character(g, character_product(character(g, w1), character(g, w2)))
