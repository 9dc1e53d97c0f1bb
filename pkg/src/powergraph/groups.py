"""Finite groups as Cayley tables.

Every group is an ``n x n`` table of element indices together with cached
identity, inverses and element orders. Subsets of a group are Python ints
used as bit sets; :class:`ElementSet` wraps one with a back-reference to
its group. Most subgroup operations accept ``within=`` so they can be run
inside a subgroup without relabeling elements.

Element orderings are fixed per constructor so that witnesses are stable:

* ``cyclic(n)``: ``k`` is the residue ``k`` mod ``n``.
* ``direct_product(G, H)``: ``(g, h)`` is ``g * |H| + h`` (lexicographic).
* metacyclic families: ``a**i * b**j`` is ``j * |a| + i``.
* ``from_permutations``: breadth-first discovery order from the identity.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import bits
from .numth import factorize, is_prime, lcm, p_part, primes_of

DEFAULT_BOUND = 5000
FULL_ASSOCIATIVITY_LIMIT = 256
ASSOCIATIVITY_SAMPLES = 200_000


class GroupError(ValueError):
    pass


class NotLatinSquare(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NotAssociative(GroupError):
    def __init__(self, triple: tuple[int, int, int]):
        a, b, c = triple
        super().__init__(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")
        self.witness = triple


class NoInverse(GroupError):
    def __init__(self, element: int):
        super().__init__(f"element {element} has no two-sided inverse")
        self.element = element


class InvalidParameters(GroupError):
    pass


class InvalidAction(InvalidParameters):
    pass


class OrderBoundExceeded(GroupError):
    pass


class ClosureExceedsBound(OrderBoundExceeded):
    pass


class SearchExhausted(RuntimeError):
    """Raised when a search that must succeed on a valid group fails."""


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[i, j]`` is the index of ``i * j``. Construction validates the
    table (Latin square, associativity, identity, inverses) unless
    ``verify=False``, which constructors use only for tables they derive
    from already-verified groups.
    """

    def __init__(self, table, label: str = "G", *, verify: bool = True):
        t = np.array(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise NotLatinSquare(f"table must be a non-empty square array, got shape {t.shape}")
        n = t.shape[0]
        if verify:
            _check_table(t)
        ident = _find_identity(t)
        if ident is None:
            raise NoIdentity("no two-sided identity element")
        rows, cols = np.nonzero(t == ident)
        inverses = np.empty(n, dtype=np.int64)
        inverses[rows] = cols
        bad = np.flatnonzero(t[inverses, np.arange(n)] != ident)
        if bad.size:
            raise NoInverse(int(bad[0]))
        t.setflags(write=False)
        inverses.setflags(write=False)
        self.n = n
        self.table = t
        self.identity = ident
        self.inverses = inverses
        self.label = label
        self.orders = _element_orders(t, ident)
        self.orders.setflags(write=False)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.n})"

    def __len__(self) -> int:
        return self.n

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, a: int, k: int) -> int:
        k %= int(self.orders[a])
        result, base = self.identity, a
        while k:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    def conjugate(self, x: int, g: int) -> int:
        """``g**-1 * x * g``."""
        return int(self.table[self.table[self.inverses[g], x], g])

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def cyclic_masks(self) -> tuple[int, ...]:
        """``cyclic_masks[x]`` is the bit set of ``<x>``."""
        masks = []
        for x in range(self.n):
            m, y = 1 << self.identity, x
            while y != self.identity:
                m |= 1 << y
                y = int(self.table[y, x])
            masks.append(m)
        return tuple(masks)

    def elements(self, within: "ElementSet | int | None" = None) -> np.ndarray:
        if within is None:
            return np.arange(self.n)
        return bits.to_array(_mask(within))


@dataclass(frozen=True, eq=False)
class ElementSet:
    """A subset of a group's elements. ``is_subgroup`` is set only by
    operations that guarantee closure."""

    group: FiniteGroup
    mask: int
    is_subgroup: bool = False

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return bits.iter_bits(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __eq__(self, other) -> bool:
        if isinstance(other, ElementSet):
            return self.group is other.group and self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __repr__(self) -> str:
        return f"ElementSet({sorted(self)}, subgroup={self.is_subgroup})"

    def members(self) -> list[int]:
        return list(self)


@dataclass(frozen=True)
class CyclicSubgroup:
    generator: int
    members: int
    order: int

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)


def _mask(s) -> int:
    return s.mask if isinstance(s, ElementSet) else int(s)


def _check_table(t: np.ndarray) -> None:
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise NotLatinSquare(f"entries must lie in 0..{n - 1}")
    target = np.arange(n)
    for axis, what in ((1, "row"), (0, "column")):
        srt = np.sort(t, axis=axis)
        ok = (srt == target[None, :]).all(axis=1) if axis == 1 else (srt == target[:, None]).all(axis=0)
        if not ok.all():
            raise NotLatinSquare(f"{what} {int(np.flatnonzero(~ok)[0])} is not a permutation")
    triple = _associativity_violation(t)
    if triple is not None:
        raise NotAssociative(triple)


def _associativity_violation(t: np.ndarray) -> tuple[int, int, int] | None:
    n = t.shape[0]
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            # (a*b)*c vs a*(b*c) for all b, c
            left = t[t[a]]
            right = t[a][t]
            bad = np.argwhere(left != right)
            if bad.size:
                b, c = bad[0]
                return a, int(b), int(c)
        return None
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
    bad = np.flatnonzero(t[t[a, b], c] != t[a, t[b, c]])
    if bad.size:
        i = bad[0]
        return int(a[i]), int(b[i]), int(c[i])
    return None


def _find_identity(t: np.ndarray) -> int | None:
    n = t.shape[0]
    target = np.arange(n)
    for e in range(n):
        if (t[e] == target).all() and (t[:, e] == target).all():
            return e
    return None


def _element_orders(t: np.ndarray, ident: int) -> np.ndarray:
    n = t.shape[0]
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    cur = idx.copy()
    k = 1
    while (orders == 0).any():
        hit = (cur == ident) & (orders == 0)
        orders[hit] = k
        cur = t[cur, idx]
        k += 1
        if k > n + 1:
            raise GroupError("element order exceeds group order")
    return orders


# ---------------------------------------------------------------- constructors


def from_cayley_table(table, label: str = "G") -> FiniteGroup:
    return FiniteGroup(table, label)


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise OrderBoundExceeded(f"group order {n} exceeds bound {bound}")


def cyclic(n: int, *, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    if n < 1:
        raise InvalidParameters(f"cyclic group order must be positive, got {n}")
    _check_bound(n, bound)
    i = np.arange(n)
    return FiniteGroup((i[:, None] + i[None, :]) % n, f"Z{n}", verify=False)


def direct_product(G: FiniteGroup, H: FiniteGroup, *, bound: int = DEFAULT_BOUND,
                   label: str | None = None) -> FiniteGroup:
    n = G.n * H.n
    _check_bound(n, bound)
    table = (G.table[:, None, :, None] * H.n + H.table[None, :, None, :]).reshape(n, n)
    return FiniteGroup(table, label or f"{G.label}x{H.label}", verify=False)


def abelian(factors: Sequence[int], *, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """``Z_{f1} x Z_{f2} x ...`` with lexicographic element order."""
    if not factors:
        raise InvalidParameters("abelian group needs at least one factor")
    _check_bound(int(np.prod(factors)), bound)
    groups = [cyclic(f, bound=bound) for f in factors]
    return reduce(lambda a, b: direct_product(a, b, bound=bound), groups)


def elementary_abelian(p: int, k: int, *, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    if not is_prime(p) or k < 1:
        raise InvalidParameters(f"elementary abelian group needs prime p and k >= 1, got p={p}, k={k}")
    G = abelian([p] * k, bound=bound)
    G.label = f"E{p**k}"
    return G


def metacyclic(N: int, s: int, t: int, k: int, label: str, *,
               bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """``<a, b | a^N = 1, b^s = a^t, b^-1 a b = a^k>`` on elements ``a^i b^j``.

    Raises InvalidAction unless the data define a group of order ``N*s``.
    """
    if N < 1 or s < 1:
        raise InvalidParameters(f"metacyclic needs N, s >= 1, got N={N}, s={s}")
    n = N * s
    _check_bound(n, bound)
    k %= N
    if N > 1 and (gcd(k, N) != 1 or pow(k, s, N) != 1 % N):
        raise InvalidAction(f"a -> a^{k} is not an automorphism of order dividing {s} on Z{N}")
    u = pow(k, -1, N) if N > 1 else 0  # b a b^-1 = a^u
    t %= N
    if N > 1 and (t * k - t) % N:
        raise InvalidAction(f"b^{s} = a^{t} must commute with b")
    upow = [pow(u, j, N) if N > 1 else 0 for j in range(s)]
    i = np.arange(N)
    j = np.arange(s)
    # (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2*u^j1) b^(j1 + j2), wrap b^s = a^t
    I1, J1, I2, J2 = np.meshgrid(i, j, i, j, indexing="ij")
    U = np.array(upow)[J1]
    exp_a = I1 + I2 * U
    exp_b = J1 + J2
    wrap = exp_b >= s
    exp_b = np.where(wrap, exp_b - s, exp_b)
    exp_a = np.where(wrap, exp_a + t, exp_a) % N
    # row index for a^i b^j is j*N + i; meshgrid order is (i1, j1, i2, j2)
    table = (exp_b * N + exp_a).transpose(1, 0, 3, 2).reshape(n, n)
    G = FiniteGroup(table, label)
    a, b = (1 if N > 1 else 0), (N % n)
    if N > 1 and int(G.orders[a]) != N:
        raise InvalidAction(f"generator a has order {G.orders[a]}, expected {N}")
    if G.power(b, s) != G.power(a, t):
        raise InvalidAction("relation b^s = a^t fails")
    if G.conjugate(a, b) != G.power(a, k):
        raise InvalidAction("relation b^-1 a b = a^k fails")
    return G


def semidirect_cyclic(n: int, m: int, k: int, *, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """``Z_n`` semidirect ``Z_m`` with ``b^-1 a b = a^k``."""
    if n < 1 or m < 1:
        raise InvalidParameters(f"semidirect product needs n, m >= 1, got n={n}, m={m}")
    if n > 1 and (gcd(k, n) != 1 or pow(k, m, n) != 1):
        raise InvalidAction(f"k={k} does not define an action of Z{m} on Z{n}")
    return metacyclic(n, m, 0, k, f"Z{n}:Z{m}({k % n if n > 1 else k})", bound=bound)


def dihedral(order: int, *, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    if order < 2 or order % 2:
        raise InvalidParameters(f"dihedral group order must be even and >= 2, got {order}")
    return metacyclic(order // 2, 2, 0, -1, f"D{order}", bound=bound)


def _two_power_exponent(order: int, family: str) -> int:
    n = order.bit_length() - 1
    if order != 1 << n or n < 3:
        raise InvalidParameters(f"{family} group order must be 2^n with n >= 3, got {order}")
    return n


def generalized_quaternion(order: int, *, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    n = _two_power_exponent(order, "generalized quaternion")
    return metacyclic(2 ** (n - 1), 2, 2 ** (n - 2), -1, f"Q{order}", bound=bound)


def semidihedral(order: int, *, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    n = _two_power_exponent(order, "semidihedral")
    return metacyclic(2 ** (n - 1), 2, 0, 2 ** (n - 2) - 1, f"SD{order}", bound=bound)


def modular(p: int, n: int, *, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """The modular p-group ``M_{p^n}`` (n >= 3)."""
    if not is_prime(p) or n < 3:
        raise InvalidParameters(f"modular group needs prime p and n >= 3, got p={p}, n={n}")
    return metacyclic(p ** (n - 1), p, 0, p ** (n - 2) + 1, f"M{p**n}", bound=bound)


def from_permutations(degree: int, generators: Iterable[Sequence[int]], *,
                      label: str | None = None, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Closure of permutation generators (image lists on ``0..degree-1``).

    The product ``g*h`` applies ``g`` first, then ``h``.
    """
    gens = [tuple(int(v) for v in g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise InvalidParameters(f"{list(g)} is not a permutation of 0..{degree - 1}")
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for h in gens:
            gh = tuple(h[i] for i in g)
            if gh not in index:
                if len(elements) >= bound:
                    raise ClosureExceedsBound(f"closure exceeds {bound} elements")
                index[gh] = len(elements)
                elements.append(gh)
                queue.append(gh)
    perms = np.array(elements, dtype=np.int64).reshape(len(elements), degree)
    n = len(elements)
    # composite[i, j] = perms[j][perms[i]]
    composite = perms[np.arange(n)[None, :, None], perms[:, None, :]]
    codes = _perm_codes(composite.reshape(n * n, degree), degree)
    lookup = dict(zip(_perm_codes(perms, degree).tolist(), range(n)))
    table = np.fromiter((lookup[c] for c in codes.tolist()), dtype=np.int64, count=n * n).reshape(n, n)
    G = FiniteGroup(table, label or f"Perm{degree}", verify=False)
    G.permutations = elements
    return G


def _perm_codes(perms: np.ndarray, degree: int) -> np.ndarray:
    weights = degree ** np.arange(degree, dtype=np.int64)
    return perms @ weights


def cycles_to_perm(degree: int, cycles: Iterable[Sequence[int]]) -> list[int]:
    perm = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            perm[a] = b
    return perm


def symmetric(n: int, *, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    if n < 1:
        raise InvalidParameters(f"symmetric group degree must be >= 1, got {n}")
    gens = [cycles_to_perm(n, [[0, 1]]), cycles_to_perm(n, [list(range(n))])] if n > 1 else []
    return from_permutations(n, gens, label=f"S{n}", bound=bound)


def alternating(n: int, *, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    if n < 1:
        raise InvalidParameters(f"alternating group degree must be >= 1, got {n}")
    gens = [cycles_to_perm(n, [[i, i + 1, i + 2]]) for i in range(n - 2)]
    return from_permutations(n, gens, label=f"A{n}", bound=bound)


# ------------------------------------------------------------ subgroup tools


def cyclic_subgroup(G: FiniteGroup, x: int) -> CyclicSubgroup:
    return CyclicSubgroup(x, G.cyclic_masks[x], int(G.orders[x]))


def _closure(G: FiniteGroup, seed: np.ndarray) -> np.ndarray:
    cur = np.union1d(seed, [G.identity])
    while True:
        nxt = np.unique(G.table[np.ix_(cur, cur)])
        if nxt.size == cur.size:
            return cur
        cur = nxt


def subgroup_generated(G: FiniteGroup, S: ElementSet | int | Iterable[int] = 0) -> ElementSet:
    """Smallest subgroup containing ``S``."""
    if isinstance(S, (ElementSet, int)):
        elems = bits.to_array(_mask(S))
    else:
        elems = np.fromiter(S, dtype=np.int64)
    # pick a small generating subset first: skip elements already covered
    mask = 1 << G.identity
    gens: list[int] = []
    for x in elems.tolist():
        if not mask >> x & 1:
            gens.append(x)
            mask = bits.from_indices(_closure(G, np.array(gens)).tolist())
    return ElementSet(G, mask, True)


def is_subgroup(G: FiniteGroup, S) -> bool:
    m = _mask(S)
    if not m >> G.identity & 1:
        return False
    idx = bits.to_array(m)
    prods = np.unique(G.table[np.ix_(idx, idx)])
    return prods.size == idx.size


def is_normal(G: FiniteGroup, H, within=None) -> bool:
    """``H`` normal in the subgroup ``within`` (default ``G``)."""
    h = bits.to_array(_mask(H))
    hm = _mask(H)
    for g in G.elements(within).tolist():
        conj = G.table[G.table[G.inverses[g], h], g]
        if bits.from_indices(conj.tolist()) != hm:
            return False
    return True


def centralizer(G: FiniteGroup, x: int, within=None) -> ElementSet:
    scope = G.elements(within)
    comm = scope[G.table[scope, x] == G.table[x, scope]]
    return ElementSet(G, bits.from_indices(comm.tolist()), True)


def center(G: FiniteGroup, within=None) -> ElementSet:
    scope = G.elements(within)
    sub = G.table[np.ix_(scope, scope)]
    central = (sub == sub.T).all(axis=1)
    return ElementSet(G, bits.from_indices(scope[central].tolist()), True)


def is_abelian(G: FiniteGroup, within=None) -> bool:
    scope = G.elements(within)
    sub = G.table[np.ix_(scope, scope)]
    return bool((sub == sub.T).all())


def _group_order(G: FiniteGroup, within) -> int:
    return G.n if within is None else _mask(within).bit_count()


def exponent(G: FiniteGroup, within=None) -> int:
    return reduce(lcm, set(G.orders[G.elements(within)].tolist()), 1)


def order_spectrum(G: FiniteGroup, within=None) -> set[int]:
    return set(G.orders[G.elements(within)].tolist())


def is_cyclic(G: FiniteGroup, within=None) -> bool:
    return bool((G.orders[G.elements(within)] == _group_order(G, within)).any())


def is_p_group(G: FiniteGroup, within=None) -> bool:
    return len(factorize(_group_order(G, within))) <= 1


def sylow_elements(G: FiniteGroup, p: int, within=None) -> ElementSet:
    scope = G.elements(within)
    o = G.orders[scope]
    keep = scope[np.array([p_part(int(v), p) == v for v in o.tolist()], dtype=bool)] if scope.size else scope
    return ElementSet(G, bits.from_indices(keep.tolist()), False)


def sylow_subgroup(G: FiniteGroup, p: int, within=None) -> ElementSet:
    """One Sylow p-subgroup of ``within`` (default ``G``).

    Starts from a cyclic p-subgroup of maximal order and adds p-elements
    in ascending index order while the closure stays a p-group,
    backtracking on failure. The result has exactly the p-part of the order.
    """
    target = p_part(_group_order(G, within), p)
    if target == 1:
        return ElementSet(G, 1 << G.identity, True)
    pel = G.elements(sylow_elements(G, p, within))
    orders = G.orders[pel]
    seed = int(pel[np.argmax(orders)])
    seen: set[int] = set()

    def grow(gens: list[int], mask: int) -> int | None:
        if mask.bit_count() == target:
            return mask
        if mask in seen:
            return None
        seen.add(mask)
        for g in pel.tolist():
            if mask >> g & 1:
                continue
            closed = _closure(G, np.array(gens + [g]))
            if p_part(closed.size, p) != closed.size or closed.size > target:
                continue
            found = grow(gens + [g], bits.from_indices(closed.tolist()))
            if found is not None:
                return found
        return None

    result = grow([seed], G.cyclic_masks[seed])
    if result is None or result.bit_count() != target:
        raise SearchExhausted(f"no Sylow {p}-subgroup found in {G.label}")
    return ElementSet(G, result, True)


def hughes_subgroup(G: FiniteGroup, p: int, within=None) -> ElementSet:
    """Subgroup generated by the elements whose order is not ``p``."""
    scope = G.elements(within)
    return subgroup_generated(G, scope[G.orders[scope] != p])


def is_nilpotent(G: FiniteGroup, within=None) -> bool:
    """Each set of p-elements is closed, i.e. the group is the direct
    product of its Sylow subgroups."""
    n = _group_order(G, within)
    for p in primes_of(n):
        pel = sylow_elements(G, p, within)
        if len(pel) != p_part(n, p):
            return False
    return True


def maximal_cyclic_subgroups(G: FiniteGroup, within=None) -> list[CyclicSubgroup]:
    """Distinct maximal cyclic subgroups, by decreasing order then generator.

    The generator reported is the smallest index generating that subgroup.
    """
    scope = G.elements(within).tolist()
    masks = G.cyclic_masks
    by_mask: dict[int, int] = {}
    for x in scope:
        by_mask.setdefault(masks[x], x)
    cands = sorted(by_mask.items(), key=lambda kv: (-kv[0].bit_count(), kv[1]))
    chosen: list[CyclicSubgroup] = []
    for m, g in cands:
        if any(m & c.members == m for c in chosen):
            continue
        chosen.append(CyclicSubgroup(g, m, m.bit_count()))
    return chosen


def maximal_cyclics_partition(G: FiniteGroup, within=None) -> bool:
    ident = 1 << G.identity
    comps = maximal_cyclic_subgroups(G, within)
    return all(a.members & b.members == ident for a, b in itertools.combinations(comps, 2))


def restrict(G: FiniteGroup, S: ElementSet, label: str | None = None) -> tuple[FiniteGroup, np.ndarray]:
    """Subgroup ``S`` as a standalone group; also returns the index map
    (new index -> old index)."""
    idx = bits.to_array(S.mask)
    if not is_subgroup(G, S):
        raise InvalidParameters("set is not a subgroup")
    back = np.full(G.n, -1, dtype=np.int64)
    back[idx] = np.arange(idx.size)
    table = back[G.table[np.ix_(idx, idx)]]
    return FiniteGroup(table, label or f"sub({G.label})", verify=False), idx


# ---------------------------------------------------------------- file format


def read_cayley_table(text: str) -> np.ndarray:
    """Parse the plain table format: first line ``n``, then ``n`` rows of
    ``n`` whitespace-separated 0-based indices. ``#`` starts a comment line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GroupError("empty Cayley table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise GroupError(f"first line must be the group order, got {lines[0]!r}") from None
    if n < 1:
        raise GroupError(f"group order must be positive, got {n}")
    rows = lines[1:]
    if len(rows) != n:
        raise GroupError(f"expected {n} table rows, found {len(rows)}")
    table = []
    for k, ln in enumerate(rows):
        try:
            row = [int(v) for v in ln.split()]
        except ValueError:
            raise GroupError(f"row {k}: non-integer entry") from None
        if len(row) != n:
            raise GroupError(f"row {k}: expected {n} entries, found {len(row)}")
        table.append(row)
    return np.array(table, dtype=np.int64)


def write_cayley_table(G: FiniteGroup) -> str:
    out = [f"# {G.label}", str(G.n)]
    out += [" ".join(str(v) for v in row) for row in G.table.tolist()]
    return "\n".join(out) + "\n"
