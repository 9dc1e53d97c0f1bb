"""Classification predicates and per-group structural audits.

The structural predicates decide graph properties from group invariants
alone. ``audit_group`` runs them next to the brute-force detectors and
records one :class:`Verdict` per claim. Claims of kind ``"iff"`` compare
both routes; ``"necessary-only"`` claims only state a property that must
hold under the claim's hypothesis, and a failure there is a finding.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Literal

from . import bits
from .forbidden import (
    Witness,
    c4_free_structural,
    has_induced_c4,
    is_claw_free,
    is_k1r_free,
    is_triangle_free,
)
from .groups import (
    ElementSet,
    FiniteGroup,
    center,
    centralizer,
    exponent,
    hughes_subgroup,
    is_abelian,
    is_cyclic,
    is_nilpotent,
    is_normal,
    maximal_cyclic_subgroups,
    sylow_subgroup,
)
from .numth import (
    Nonconforming,
    PrimePowerTimesPrime,
    ThreeDistinctPrimes,
    factorize,
    is_prime_power,
    order_form,
    primes_of,
)
from .pgraph import INDEPENDENCE_LIMIT, PowerGraph, independence_number, power_graph

DEFAULT_AUDIT_BOUND = 200

Kind = Literal["iff", "necessary-only"]


class PreconditionViolated(ValueError):
    pass


@dataclass
class Verdict:
    claim: str
    kind: Kind
    structural: bool
    brute_force: bool | None = None
    witness: tuple[int, ...] | None = None
    note: str = ""

    @property
    def agrees(self) -> bool:
        if self.brute_force is None:
            return self.structural
        return self.structural == self.brute_force


@dataclass
class AuditReport:
    group_label: str
    group_order: int
    verdicts: list[Verdict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def add(self, v: Verdict) -> None:
        if any(old.claim == v.claim for old in self.verdicts):
            raise ValueError(f"duplicate claim {v.claim!r} in report for {self.group_label}")
        self.verdicts.append(v)

    def verdict(self, claim: str) -> Verdict | None:
        return next((v for v in self.verdicts if v.claim == claim), None)

    @property
    def disagreements(self) -> list[str]:
        return [v.claim for v in self.verdicts if not v.agrees]


# ------------------------------------------------------------ predicates


def claw_free_structural(G: FiniteGroup) -> bool:
    """Cyclic of order ``p^m q^n`` with ``min(m, n) <= 1``."""
    if not is_cyclic(G):
        return False
    f = factorize(G.n)
    return len(f) <= 1 or (len(f) == 2 and min(e for _, e in f) <= 1)


def _count_involutions(G: FiniteGroup) -> int:
    return int((G.orders == 2).sum())


def is_klein(G: FiniteGroup) -> bool:
    return G.n == 4 and exponent(G) == 2


def is_q8(G: FiniteGroup) -> bool:
    # the only non-cyclic group of order 8 with a unique involution
    return G.n == 8 and not is_cyclic(G) and _count_involutions(G) == 1


def k14_free_structural(G: FiniteGroup) -> bool:
    """One of Q8, Z2xZ2, Z_{p^k}, Z_{pqr}, Z_{p^m q^n} with min(m, n) <= 2."""
    if is_klein(G) or is_q8(G):
        return True
    if not is_cyclic(G):
        return False
    f = factorize(G.n)
    exps = [e for _, e in f]
    if len(f) <= 1:
        return True
    if len(f) == 2:
        return min(exps) <= 2
    return exps == [1, 1, 1]


def eppo(G: FiniteGroup) -> bool:
    return all(is_prime_power(int(o)) for o in set(G.orders.tolist()))


def order_spectrum_conforms(G: FiniteGroup) -> int | None:
    """First element whose order is not p^m, p^m*q or p*q*r, else None."""
    for x in range(G.n):
        if isinstance(order_form(int(G.orders[x])), Nonconforming):
            return x
    return None


def is_cyclic_z_pqr(G: FiniteGroup) -> bool:
    return is_cyclic(G) and isinstance(order_form(G.n), ThreeDistinctPrimes)


def nilpotent_c4_structural(G: FiniteGroup) -> bool:
    """Nilpotent ``G`` has a C4-free power graph iff it is a p-group, is
    cyclic of order pqr, or is ``P x Q`` with ``H_p(P)`` cyclic and
    ``exp(Q) = q`` for some labeling of its two Sylow subgroups."""
    if not is_nilpotent(G):
        raise PreconditionViolated(f"{G.label} is not nilpotent")
    primes = primes_of(G.n)
    if len(primes) <= 1:
        return True
    if len(primes) == 3:
        return is_cyclic_z_pqr(G)
    if len(primes) > 3:
        return False
    p, q = primes
    P, Q = sylow_subgroup(G, p), sylow_subgroup(G, q)
    for A, a, B, b in ((P, p, Q, q), (Q, q, P, p)):
        if exponent(G, B) == b and is_cyclic(G, hughes_subgroup(G, a, within=A)):
            return True
    return False


# ------------------------------------------------------------ helpers


def _pi(G: FiniteGroup, S) -> set[int]:
    return set(primes_of(len(S) if isinstance(S, ElementSet) else int(S)))


def _exp_divides(G: FiniteGroup, S: ElementSet, p: int) -> bool:
    return p % exponent(G, S) == 0


def _normal_cyclic(G: FiniteGroup, H: ElementSet, C: ElementSet) -> bool:
    return is_cyclic(G, H) and is_normal(G, H, within=C)


def _is_cyclic_or_dihedral_2group(G: FiniteGroup, S: ElementSet) -> bool:
    if is_cyclic(G, S):
        return True
    size = len(S)
    if size < 4 or size & (size - 1):
        return False
    elems = G.elements(S)
    for a in elems[G.orders[elems] == size // 2].tolist():
        outside = S.mask & ~G.cyclic_masks[a]
        if all(G.orders[y] == 2 for y in bits.iter_bits(outside)):
            return True
    return False


def _require_c4_free(G: FiniteGroup, graph: PowerGraph | None) -> PowerGraph:
    graph = graph or power_graph(G)
    w = has_induced_c4(graph)
    if w is not None:
        raise PreconditionViolated(f"power graph of {G.label} has an induced C4 at {w.vertices}")
    return graph


class _Aggregate:
    """Collect per-element checks into one verdict per claim."""

    def __init__(self):
        self.ok: dict[str, bool] = {}
        self.witness: dict[str, int] = {}
        self.notes: dict[str, str] = {}

    def record(self, claim: str, x: int, ok: bool, why: str = "") -> None:
        if claim not in self.ok:
            self.ok[claim] = True
            self.witness[claim] = x
        if not ok and self.ok[claim]:
            self.ok[claim] = False
            self.witness[claim] = x
            self.notes[claim] = why

    def verdicts(self) -> list[Verdict]:
        return [
            Verdict(c, "necessary-only", self.ok[c], None, (self.witness[c],), self.notes.get(c, ""))
            for c in sorted(self.ok)
        ]


# ------------------------------------------------------------ audits


def centralizer_audits(G: FiniteGroup, graph: PowerGraph | None = None) -> list[Verdict]:
    """Check the centralizer constraints for elements of order pqr, p^m q
    (m > 1) and pq in a group with C4-free power graph.

    The semidirect decomposition of ``C_G(x)`` for order pq is not
    recognized; only its exponent, normality and cyclicity conditions are.
    """
    _require_c4_free(G, graph)
    agg = _Aggregate()
    seen: set[int] = set()
    for x in range(G.n):
        cm = G.cyclic_masks[x]
        if cm in seen:
            continue
        seen.add(cm)
        o = int(G.orders[x])
        form = order_form(o)
        if isinstance(form, ThreeDistinctPrimes):
            C = centralizer(G, x)
            agg.record(f"audit-centralizer-pqr[{o}]", x, C.mask == cm, "C_G(x) != <x>")
        elif isinstance(form, PrimePowerTimesPrime) and form.m > 1:
            p, q = form.p, form.q
            C = centralizer(G, x)
            Sp = sylow_subgroup(G, p, within=C)
            Sq = sylow_subgroup(G, q, within=C)
            H = hughes_subgroup(G, p, within=Sp)
            ok_q = _exp_divides(G, Sq, q)
            ok_h = _normal_cyclic(G, H, C)
            why = "" if ok_q else f"exp(S_{q}(C_G(x))) != {q}; "
            why += "" if ok_h else f"H_{p}(S_{p}(C_G(x))) not normal cyclic"
            agg.record(f"audit-centralizer-pmq[{o}]", x, ok_q and ok_h, why.strip("; "))
        elif isinstance(form, PrimePowerTimesPrime):
            p, q = form.p, form.q
            C = centralizer(G, x)
            extra = _pi(G, C) - {p, q}
            claim = f"audit-centralizer-pq[{o}]"
            if len(extra) > 1:
                agg.record(claim, x, False, f"|C_G(x)| has primes {sorted(extra)} beyond {p},{q}")
                continue
            if extra:
                (r,) = extra
                sylows = {s: sylow_subgroup(G, s, within=C) for s in (p, q, r)}
                ok_exp = all(_exp_divides(G, S, s) for s, S in sylows.items())
                ok_r = _normal_cyclic(G, sylows[r], C)
                why = ("" if ok_exp else "Sylow subgroups of C_G(x) not of prime exponent; ") + (
                    "" if ok_r else f"S_{r}(C_G(x)) not normal cyclic")
                agg.record(claim, x, ok_exp and ok_r, why.strip("; "))
            else:
                ok = False
                for r, s in ((p, q), (q, p)):
                    Sr = sylow_subgroup(G, r, within=C)
                    Ss = sylow_subgroup(G, s, within=C)
                    if _exp_divides(G, Sr, r) and _normal_cyclic(G, hughes_subgroup(G, s, within=Ss), C):
                        ok = True
                        break
                agg.record(claim, x, ok, "no labeling of {p,q} satisfies the exponent/Hughes conditions")
    return agg.verdicts()


def center_audits(G: FiniteGroup, graph: PowerGraph | None = None) -> tuple[list[Verdict], list[str]]:
    """Necessary conditions on groups with C4-free power graph, by the
    shape of the center. Returns the verdicts and notes on clauses that
    are not checked."""
    if is_prime_power(G.n):
        raise PreconditionViolated(f"{G.label} is a prime-power group")
    _require_c4_free(G, graph)
    Z = center(G)
    zprimes = primes_of(len(Z))
    out: list[Verdict] = []
    notes: list[str] = []

    def claim(name: str, ok: bool, witness=None, note: str = "") -> None:
        out.append(Verdict(name, "necessary-only", bool(ok), None, witness, note))

    gprimes = set(primes_of(G.n))
    if len(zprimes) >= 3:
        claim("audit-center-three-primes", is_cyclic_z_pqr(G))
    elif len(zprimes) == 2:
        p, q = zprimes
        P, Q = sylow_subgroup(G, p, within=Z), sylow_subgroup(G, q, within=Z)
        big = [s for s, S in ((p, P), (q, Q)) if not _exp_divides(G, S, s)]
        claim("audit-center-two-primes-exponents", len(big) <= 1,
              note="" if len(big) <= 1 else "both central Sylow subgroups have non-prime exponent")
        notes.append("center clause 'C_G(P) = P x Q' skipped: ambiguous Sylow reference")
        if len(big) == 1:
            if big[0] == q:
                p, q, P, Q = q, p, Q, P
            Sp = sylow_subgroup(G, p)
            claim("audit-center-two-primes-pi", gprimes == {p, q})
            claim("audit-center-two-primes-factors", is_cyclic(G, P) and _exp_divides(G, Q, q))
            claim("audit-center-two-primes-sylow", _normal_cyclic(G, Sp, ElementSet(G, G.full_mask, True)))
            if is_cyclic(G, Sp):
                gen = int(G.elements(Sp)[G.orders[G.elements(Sp)] == len(Sp)][0])
                index = G.n // len(centralizer(G, gen))
                claim("audit-center-two-primes-action", index in (1, q))
        elif len(big) == 0:
            others = gprimes - {p, q}
            claim("audit-center-two-primes-other-sylows",
                  all(_exp_divides(G, sylow_subgroup(G, r), r) for r in others))
            Sp, Sq = sylow_subgroup(G, p), sylow_subgroup(G, q)
            wide = [s for s, S in ((p, Sp), (q, Sq)) if not _exp_divides(G, S, s)]
            if wide:
                if wide[0] == q:
                    p, q, Sp, Sq = q, p, Sq, Sp
                claim("audit-center-two-primes-pi", gprimes == {p, q})
                claim("audit-center-two-primes-exponent", _exp_divides(G, Sq, q))
                claim("audit-center-two-primes-sylow-shape", _is_cyclic_or_dihedral_2group(G, Sp))
            elif others:
                ok = len(others) == 1
                if ok:
                    (r,) = others
                    Sr = sylow_subgroup(G, r)
                    ok = len(Sr) == r and is_normal(G, Sr)
                    if ok:
                        z = next(v for v in Sr if v != G.identity)
                        Cz = centralizer(G, z)
                        ok = len(Cz) == p * q * r and is_cyclic(G, Cz)
                claim("audit-center-two-primes-third-prime", ok)
                notes.append("semidirect factorizations of the three-prime case are not recognized")
    elif len(zprimes) == 1:
        p = zprimes[0]
        if not _exp_divides(G, Z, p):
            claim("audit-center-pgroup-cyclic", is_cyclic(G, Z))
            claim("audit-center-pgroup-exponents",
                  all(_exp_divides(G, sylow_subgroup(G, q), q) for q in gprimes - {p}))
            agg = _Aggregate()
            for x in range(G.n):
                o = int(G.orders[x])
                f = factorize(o)
                if len(f) != 1 or f[0][0] == p:
                    continue
                q = f[0][0]
                C = centralizer(G, x)
                ok_pi = _pi(G, C) == {p, q}
                ok_s = _normal_cyclic(G, sylow_subgroup(G, p, within=C), C)
                agg.record(f"audit-center-pgroup-centralizer[{q}]", x, ok_pi and ok_s,
                           ("" if ok_pi else "pi(C_G(x)) != {p,q}; ") + ("" if ok_s else "S_p(C_G(x)) not normal cyclic"))
            out.extend(agg.verdicts())
            notes.append("center p-group clause (3) decomposition of C_G(x) not recognized")
        elif len(Z) > p:
            agg = _Aggregate()
            for x in range(G.n):
                o = int(G.orders[x])
                f = factorize(o)
                if len(f) != 1 or f[0][0] == p:
                    continue
                q = f[0][0]
                C = centralizer(G, x)
                ok = _pi(G, C) == {p, q}
                why = "" if ok else "pi(C_G(x)) != {p,q}"
                if ok and o > q:
                    Sp, Sq = sylow_subgroup(G, p, within=C), sylow_subgroup(G, q, within=C)
                    ok = _exp_divides(G, Sp, p) and _normal_cyclic(G, Sq, C)
                    why = "" if ok else "S_p(C_G(x)) exponent or S_q(C_G(x)) normal cyclic fails"
                agg.record(f"audit-center-elementary-centralizer[{q}]", x, ok, why)
            out.extend(agg.verdicts())
            notes.append("center elementary clause (2) decomposition of C_G(x) not recognized")
    return out, notes


def three_cover_check(G: FiniteGroup) -> tuple[bool, str]:
    """For a group covered by three maximal cyclic subgroups: indices 2,
    equal pairwise intersections, quotient by the triple intersection of
    exponent 2 and order 4."""
    comps = maximal_cyclic_subgroups(G)
    if len(comps) != 3:
        return False, f"{len(comps)} maximal cyclic subgroups"
    a, b, c = (m.members for m in comps)
    if a | b | c != G.full_mask:
        return False, "maximal cyclic subgroups do not cover the group"
    if not (a & b == b & c == c & a):
        return False, "pairwise intersections differ"
    if any(m.order * 2 != G.n for m in comps):
        return False, "some maximal cyclic subgroup has index != 2"
    N = a & b & c
    if G.n != 4 * N.bit_count():
        return False, "quotient by the triple intersection is not of order 4"
    if not all(N >> G.power(g, 2) & 1 for g in range(G.n)):
        return False, "quotient by the triple intersection is not elementary abelian"
    return True, ""


def audit_group(G: FiniteGroup, bound: int = DEFAULT_AUDIT_BOUND) -> AuditReport:
    """Run every applicable claim on ``G`` and return the report."""
    if G.n > bound:
        raise ValueError(f"{G.label} has order {G.n}, above the audit bound {bound}")
    start = time.perf_counter()
    rep = AuditReport(G.label, G.n)
    graph = power_graph(G)

    claw = is_claw_free(graph)
    k14 = is_k1r_free(graph, 4)
    c4 = has_induced_c4(graph)
    tri = is_triangle_free(graph)
    claw_free, k14_free, c4_free = claw is None, k14 is None, c4 is None
    cyclic = is_cyclic(G)

    def wit(w: Witness | None):
        return w.vertices if w is not None else None

    rep.add(Verdict("thm-clawfree", "iff", claw_free_structural(G), claw_free, wit(claw)))
    if is_prime_power(G.n):
        rep.add(Verdict("lemma-pgroup-clawfree", "iff", cyclic, claw_free, wit(claw)))
    rep.add(Verdict("thm-k14free", "iff", k14_free_structural(G), k14_free, wit(k14)))

    pair_all = c4_free_structural(G, "all_pairs")
    pair_max = c4_free_structural(G, "maximal_only")
    rep.add(Verdict("lemma-c4", "iff", pair_all is None, c4_free, pair_all or wit(c4)))
    rep.add(Verdict("lemma-c4-maximal", "iff", pair_max is None, c4_free, pair_max or wit(c4)))

    if is_nilpotent(G):
        rep.add(Verdict("thm-nilpotent-c4", "iff", nilpotent_c4_structural(G), c4_free, wit(c4)))
    if eppo(G):
        rep.add(Verdict("cor-eppo-c4free", "necessary-only", c4_free, None, wit(c4)))

    elementary_2 = exponent(G) <= 2 and is_abelian(G)
    rep.add(Verdict("remark-triangle-free", "iff", elementary_2, tri is None, wit(tri)))

    hughes_ok, bad_p = True, None
    for p in primes_of(G.n):
        H = hughes_subgroup(G, p)
        if hughes_subgroup(G, p, within=H) != H:
            hughes_ok, bad_p = False, p
            break
    rep.add(Verdict("remark-hughes-idempotent", "necessary-only", hughes_ok,
                    note="" if hughes_ok else f"fails for p={bad_p}"))

    if claw_free_structural(G) and G.n <= INDEPENDENCE_LIMIT:
        alpha = independence_number(graph)
        rep.add(Verdict("thm-clawfree-alpha", "necessary-only", alpha in (1, 2), note=f"alpha={alpha}"))

    if not cyclic and k14_free:
        comps = maximal_cyclic_subgroups(G)
        rep.add(Verdict("lemma-three-maximal-cyclics", "necessary-only", len(comps) == 3,
                        witness=tuple(c.generator for c in comps)))
        ok, why = three_cover_check(G)
        rep.add(Verdict("thm-three-cover", "necessary-only", ok, note=why))

    if c4_free:
        bad = order_spectrum_conforms(G)
        rep.add(Verdict("thm-order-form", "necessary-only", bad is None,
                        witness=None if bad is None else (bad,)))
        for v in centralizer_audits(G, graph):
            rep.add(v)
        rep.notes.append("order-pq centralizer decomposition <x> x (<y> : <z>) not recognized")
        if not is_prime_power(G.n):
            vs, notes = center_audits(G, graph)
            for v in vs:
                rep.add(v)
            rep.notes.extend(notes)
    rep.elapsed = time.perf_counter() - start
    return rep


def witness_pairs(G: FiniteGroup, witness) -> list[list[int]] | None:
    """``[[element, order], ...]`` for human-checkable output."""
    if witness is None:
        return None
    return [[int(x), int(G.orders[x])] for x in witness]


def report_to_dict(rep: AuditReport, G: FiniteGroup | None = None, timing: bool = False) -> dict:
    """JSON-ready dict with a fixed key order; ``elapsed`` only with ``timing``."""

    def w(v: Verdict):
        if v.witness is None:
            return None
        return witness_pairs(G, v.witness) if G is not None else list(v.witness)

    doc = {
        "group": rep.group_label,
        "order": rep.group_order,
        "verdicts": [
            {
                "claim": v.claim,
                "kind": v.kind,
                "structural": v.structural,
                "brute_force": v.brute_force,
                "agrees": v.agrees,
                "witness": w(v),
                "note": v.note,
            }
            for v in rep.verdicts
        ],
        "notes": list(rep.notes),
        "disagreements": rep.disagreements,
    }
    if timing:
        doc["elapsed"] = round(rep.elapsed, 6)
    return doc
