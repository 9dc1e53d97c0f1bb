import pytest

from powergraph.catalog import build
from powergraph.classify import (
    AuditReport, PreconditionViolated, Verdict, audit_group, center_audits, centralizer_audits,
    claw_free_structural, eppo, is_klein, is_q8, k14_free_structural, nilpotent_c4_structural,
    order_spectrum_conforms, report_to_dict, three_cover_check,
)
from powergraph.forbidden import has_induced_c4
from powergraph.numth import Nonconforming, order_form
from powergraph.pgraph import power_graph

from conftest import EXTRA_GROUPS


@pytest.mark.parametrize("label, expected", [
    ("Z9", True), ("Z12", True), ("Z36", False), ("Z1", True), ("Z30", False),
    ("Z2xZ2", False), ("Q8", False), ("S3", False),
])
def test_claw_free_structural(label, expected):
    assert claw_free_structural(build(label)) is expected


@pytest.mark.parametrize("label, expected", [
    ("Q8", True), ("Z30", True), ("Z8xZ2", False), ("E4", True), ("Z36", True),
    ("Z72", True), ("Z216", False), ("Z210", False), ("Z60", False), ("D8", False),
])
def test_k14_free_structural(label, expected):
    assert k14_free_structural(build(label)) is expected


def test_klein_and_q8_recognizers():
    assert is_klein(build("Z2xZ2")) and not is_klein(build("Z4"))
    assert is_q8(build("Q8")) and not is_q8(build("D8")) and not is_q8(build("Z8"))
    assert not is_q8(build("Z4xZ2"))


@pytest.mark.parametrize("label, expected", [
    ("S4", True), ("Z6", False), ("Z7:Z3(2)", True), ("A4", True), ("S3", True), ("Q16", True),
])
def test_eppo(label, expected):
    assert eppo(build(label)) is expected


def test_order_spectrum_conforms():
    G = build("Z60")
    x = order_spectrum_conforms(G)
    assert x is not None and isinstance(order_form(int(G.orders[x])), Nonconforming)
    assert G.orders[x] == 60
    assert order_spectrum_conforms(build("Z12")) is None
    assert order_spectrum_conforms(build("D16")) is None


@pytest.mark.parametrize("label, expected", [
    ("Z6xZ2", True), ("Z4xZ2xZ3", False), ("Z30", True), ("Q8", True), ("Z210", False),
    ("Q8xZ3", False), ("Z2xZ2xZ9", True), ("Z4xZ2xZ5xZ5", False),
])
def test_nilpotent_c4_structural(label, expected):
    G = build(label)
    assert nilpotent_c4_structural(G) is expected
    assert (has_induced_c4(power_graph(G)) is None) is expected


def test_nilpotent_precondition():
    with pytest.raises(PreconditionViolated):
        nilpotent_c4_structural(build("S3"))


def test_centralizer_audit_examples():
    vs = centralizer_audits(build("Z30"))
    assert [v.claim for v in vs] == ["audit-centralizer-pq[10]", "audit-centralizer-pq[15]",
                                    "audit-centralizer-pq[6]", "audit-centralizer-pqr[30]"]
    assert all(v.structural for v in vs)
    vs = centralizer_audits(build("Z12"))
    pmq = [v for v in vs if v.claim == "audit-centralizer-pmq[12]"]
    assert len(pmq) == 1 and pmq[0].structural
    assert centralizer_audits(build("S3")) == []
    with pytest.raises(PreconditionViolated):
        centralizer_audits(build("Z60"))


def test_center_audit_examples():
    vs, _ = center_audits(build("Z30"))
    assert [(v.claim, v.structural) for v in vs] == [("audit-center-three-primes", True)]
    vs, _ = center_audits(build("S3"))
    assert vs == []
    vs, notes = center_audits(build("Z12"))
    assert vs and all(v.structural for v in vs)
    assert any("skipped" in n for n in notes)
    with pytest.raises(PreconditionViolated):
        center_audits(build("Q8"))
    with pytest.raises(PreconditionViolated):
        center_audits(build("Z60"))


def test_three_cover():
    for label in ("Q8", "E4"):
        ok, why = three_cover_check(build(label))
        assert ok, (label, why)
    ok, why = three_cover_check(build("Z8xZ2"))
    assert not ok and why


def test_audit_q8():
    rep = audit_group(build("Q8"))
    assert rep.disagreements == []
    assert rep.verdict("thm-three-cover").structural
    assert len(rep.verdict("lemma-three-maximal-cyclics").witness) == 3


def test_audit_z36_claw_both_paths():
    rep = audit_group(build("Z36"))
    v = rep.verdict("thm-clawfree")
    assert v.structural is False and v.brute_force is False and v.agrees
    assert v.witness is not None


def test_audit_s4():
    rep = audit_group(build("S4"))
    assert rep.verdict("cor-eppo-c4free").structural
    assert rep.verdict("lemma-c4").brute_force is True
    assert rep.disagreements == []


def test_audit_bound():
    with pytest.raises(ValueError):
        audit_group(build("Z30"), bound=20)


def test_report_rejects_duplicate_claims():
    rep = AuditReport("Z1", 1)
    rep.add(Verdict("x", "iff", True, True))
    with pytest.raises(ValueError):
        rep.add(Verdict("x", "iff", True, True))


def test_verdict_agreement():
    assert Verdict("a", "iff", True, True).agrees
    assert not Verdict("a", "iff", True, False).agrees
    assert Verdict("a", "necessary-only", True).agrees
    assert not Verdict("a", "necessary-only", False).agrees


def test_report_dict_shape():
    G = build("Z60")
    doc = report_to_dict(audit_group(G), G)
    assert list(doc) == ["group", "order", "verdicts", "notes", "disagreements"]
    v = next(v for v in doc["verdicts"] if v["claim"] == "lemma-c4")
    assert v["brute_force"] is False and all(len(p) == 2 for p in v["witness"])
    assert "elapsed" in report_to_dict(audit_group(G), G, timing=True)


@pytest.mark.parametrize("label", EXTRA_GROUPS)
def test_extra_groups_audit(label):
    rep = audit_group(build(label))
    assert rep.disagreements == [], [v for v in rep.verdicts if not v.agrees]


def test_center_branches_reached():
    # the direct products above between them reach every center branch
    prefixes = set()
    for label in EXTRA_GROUPS:
        for v in audit_group(build(label)).verdicts:
            if v.claim.startswith("audit-center-"):
                prefixes.add(v.claim.split("[")[0])
    for needed in ("audit-center-pgroup-cyclic", "audit-center-elementary-centralizer",
                   "audit-center-two-primes-exponents"):
        assert needed in prefixes
