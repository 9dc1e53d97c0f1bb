"""Group descriptors ("Z12", "Z2xZ2xZ3", "Q8", "Z7:Z3(2)", "file:t.tbl")
and catalog generation.

A descriptor is either ``file:<path>`` or factors joined by ``x``. Each
factor is one of::

    Z<n>            cyclic
    Z<n>:Z<m>(<k>)  Z_n semidirect Z_m, b^-1 a b = a^k
    D<n>            dihedral of order n
    Q<n>  SD<n>     generalized quaternion / semidihedral, n = 2^k
    M<n>            modular p-group, n = p^k with k >= 3
    E<n>            elementary abelian of order n = p^k
    S<n>  A<n>      symmetric / alternating on n points
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import reduce
from math import gcd
from pathlib import Path

from . import groups
from .groups import FiniteGroup
from .numth import factorize, is_prime, primes_of

FAMILIES = (
    "cyclic", "abelian", "dihedral", "quaternion", "semidihedral",
    "modular", "elementary", "semidirect_pq", "permutation_named",
)
MAX_CATALOG_ORDER = 5000


class DescriptorError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message}\n  {text}\n  {' ' * pos}^")
        self.text = text
        self.pos = pos
        self.message = message


@dataclass(frozen=True)
class Factor:
    family: str
    params: tuple[int, ...]

    def render(self) -> str:
        if self.family == "semidirect":
            n, m, k = self.params
            return f"Z{n}:Z{m}({k})"
        return f"{_PREFIX[self.family]}{self.params[0]}"


@dataclass(frozen=True)
class GroupDescriptor:
    factors: tuple[Factor, ...] = ()
    path: str | None = None

    def render(self) -> str:
        if self.path is not None:
            return f"file:{self.path}"
        return "x".join(f.render() for f in self.factors)

    def __str__(self) -> str:
        return self.render()


_PREFIX = {
    "cyclic": "Z", "dihedral": "D", "quaternion": "Q", "semidihedral": "SD",
    "modular": "M", "elementary": "E", "symmetric": "S", "alternating": "A",
}
_FACTOR = re.compile(r"Z(\d+):Z(\d+)\((-?\d+)\)|(SD|Z|D|Q|M|E|S|A)(\d+)")


def _prime_power(n: int) -> tuple[int, int] | None:
    f = factorize(n)
    return f[0] if len(f) == 1 else None


def _validate(family: str, params: tuple[int, ...]) -> str | None:
    if family == "semidirect":
        n, m, k = params
        if n < 1 or m < 1:
            return "semidirect factors need positive orders"
        if n > 1 and (gcd(k, n) != 1 or pow(k, m, n) != 1):
            return f"multiplier {k} does not define an action of Z{m} on Z{n}"
        return None
    (n,) = params
    if n < 1:
        return "order must be positive"
    if family == "dihedral" and n % 2:
        return "dihedral order must be even"
    if family in ("quaternion", "semidihedral"):
        if n < 8 or n & (n - 1):
            return f"{family} order must be 2^k with k >= 3"
    if family == "modular":
        pp = _prime_power(n)
        if pp is None or pp[1] < 3:
            return "modular order must be p^k with k >= 3"
    if family == "elementary" and _prime_power(n) is None:
        return "elementary abelian order must be a prime power"
    return None


def parse(text: str) -> GroupDescriptor:
    """Parse a descriptor; errors carry the offending position."""
    if text.startswith("file:"):
        if len(text) == 5:
            raise DescriptorError(text, 5, "missing path after 'file:'")
        return GroupDescriptor(path=text[5:])
    pos = 0
    factors = []
    while True:
        m = _FACTOR.match(text, pos)
        if m is None:
            raise DescriptorError(text, pos, "expected a group factor such as Z12, D8, Q8 or Z7:Z3(2)")
        if m.group(1) is not None:
            n, mm = int(m.group(1)), int(m.group(2))
            k = int(m.group(3))
            family, params = "semidirect", (n, mm, k % n if n > 1 else 0)
        else:
            family = {v: k for k, v in _PREFIX.items()}[m.group(4)]
            params = (int(m.group(5)),)
        err = _validate(family, params)
        if err:
            raise DescriptorError(text, pos, err)
        factors.append(Factor(family, params))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "x":
            raise DescriptorError(text, pos, "expected 'x' between factors")
        pos += 1
    return GroupDescriptor(tuple(factors))


def canonical(text: str) -> str:
    return parse(text).render()


def _build_factor(f: Factor, bound: int) -> FiniteGroup:
    fam, ps = f.family, f.params
    if fam == "cyclic":
        return groups.cyclic(ps[0], bound=bound)
    if fam == "semidirect":
        return groups.semidirect_cyclic(*ps, bound=bound)
    if fam == "dihedral":
        return groups.dihedral(ps[0], bound=bound)
    if fam == "quaternion":
        return groups.generalized_quaternion(ps[0], bound=bound)
    if fam == "semidihedral":
        return groups.semidihedral(ps[0], bound=bound)
    if fam == "modular":
        p, k = _prime_power(ps[0])
        return groups.modular(p, k, bound=bound)
    if fam == "elementary":
        if ps[0] == 1:
            return groups.cyclic(1, bound=bound)
        p, k = _prime_power(ps[0])
        return groups.elementary_abelian(p, k, bound=bound)
    if fam == "symmetric":
        return groups.symmetric(ps[0], bound=bound)
    if fam == "alternating":
        return groups.alternating(ps[0], bound=bound)
    raise ValueError(f"unknown family {fam!r}")


def build(desc: GroupDescriptor | str, bound: int = groups.DEFAULT_BOUND) -> FiniteGroup:
    if isinstance(desc, str):
        desc = parse(desc)
    label = desc.render()
    if desc.path is not None:
        table = groups.read_cayley_table(Path(desc.path).read_text())
        G = groups.from_cayley_table(table, label)
        if G.n > bound:
            raise groups.OrderBoundExceeded(f"group order {G.n} exceeds bound {bound}")
        return G
    parts = [_build_factor(f, bound) for f in desc.factors]
    G = reduce(lambda a, b: groups.direct_product(a, b, bound=bound), parts)
    G.label = label
    return G


# ------------------------------------------------------------------ catalog


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first, *rest)


def abelian_invariants(n: int) -> list[tuple[int, ...]]:
    """All abelian groups of order ``n`` as invariant factors, largest first."""
    per_prime = [[tuple(p**e for e in part) for part in _partitions(k)] for p, k in factorize(n)]
    out = []
    for choice in itertools.product(*per_prime):
        width = max((len(c) for c in choice), default=0)
        inv = []
        for i in range(width):
            d = 1
            for c in choice:
                if i < len(c):
                    d *= c[i]
            inv.append(d)
        out.append(tuple(inv) or (1,))
    return out


def _smallest_multiplier(q: int, p: int) -> int:
    return next(k for k in range(2, q) if pow(k, p, q) == 1)


def catalog(max_order: int, families=FAMILIES) -> list[str]:
    """Canonical descriptors sorted by (order, label), without duplicates."""
    if max_order > MAX_CATALOG_ORDER:
        raise ValueError(f"max_order {max_order} exceeds {MAX_CATALOG_ORDER}")
    unknown = set(families) - set(FAMILIES)
    if unknown:
        raise ValueError(f"unknown families: {sorted(unknown)}")
    fams = set(families)
    found: dict[str, int] = {}

    def add(label: str, order: int) -> None:
        if order <= max_order:
            found.setdefault(label, order)

    if "cyclic" in fams:
        for n in range(1, max_order + 1):
            add(f"Z{n}", n)
    if "abelian" in fams:
        for n in range(1, max_order + 1):
            for inv in abelian_invariants(n):
                add("x".join(f"Z{d}" for d in inv), n)
    if "dihedral" in fams:
        for n in range(6, max_order + 1, 2):
            add(f"D{n}", n)
    if "quaternion" in fams:
        for k in range(3, max_order.bit_length()):
            add(f"Q{2**k}", 2**k)
    if "semidihedral" in fams:
        for k in range(4, max_order.bit_length()):
            add(f"SD{2**k}", 2**k)
    if "modular" in fams:
        for p in range(2, max_order + 1):
            if not is_prime(p):
                continue
            k = 3 if p > 2 else 4  # M8 is D8
            while p**k <= max_order:
                add(f"M{p**k}", p**k)
                k += 1
    if "elementary" in fams:
        k = 1
        while 2**k <= max_order:
            add(f"E{2**k}", 2**k)
            k += 1
    if "semidirect_pq" in fams:
        for q in range(3, max_order + 1):
            if not is_prime(q):
                continue
            for p in primes_of(q - 1):
                if p * q <= max_order:
                    add(f"Z{q}:Z{p}({_smallest_multiplier(q, p)})", p * q)
    if "permutation_named" in fams:
        for label, order in (("S3", 6), ("A4", 12), ("S4", 24), ("A5", 60), ("S5", 120)):
            add(label, order)
    return sorted(found, key=lambda lab: (found[lab], lab))
