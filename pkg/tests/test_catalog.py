import pytest
from hypothesis import given, strategies as st

from powergraph import groups as g
from powergraph.catalog import (
    FAMILIES, DescriptorError, abelian_invariants, build, canonical, catalog, parse,
)
from powergraph.numth import is_prime

from conftest import is_isomorphic_small


@pytest.mark.parametrize("text", [
    "Z12", "Z2xZ2xZ3", "D8", "Q16", "SD16", "M27", "E8", "Z7:Z3(2)", "S4", "A5", "file:t.tbl",
])
def test_roundtrip(text):
    assert canonical(text) == text
    assert canonical(canonical(text)) == text


def test_canonical_reduces_multiplier():
    assert canonical("Z7:Z3(9)") == "Z7:Z3(2)"
    assert canonical("Z7:Z3(-5)") == "Z7:Z3(2)"


@pytest.mark.parametrize("text, pos", [
    ("Z12x", 4), ("Q12", 0), ("Z4xD7", 3), ("Z7:Z4(2)", 0), ("M8xM4", 3), ("X3", 0),
    ("Z3+Z4", 2), ("", 0), ("file:", 5), ("E6", 0), ("SD4", 0),
])
def test_parse_errors_have_positions(text, pos):
    with pytest.raises(DescriptorError) as exc:
        parse(text)
    assert exc.value.pos == pos
    assert str(exc.value).splitlines()[-1].index("^") == pos + 2


def test_build_examples():
    assert build("Z2xZ2xZ3").n == 12
    assert build("M27").n == 27
    assert build("E8").n == 8 and g.exponent(build("E8")) == 2
    assert build("A5").n == 60
    assert build("Z7:Z3(2)").label == "Z7:Z3(2)"
    assert is_isomorphic_small(build("D6"), build("S3"))
    assert is_isomorphic_small(build("Z3:Z2(2)"), build("S3"))
    assert is_isomorphic_small(build("M16"), g.modular(2, 4))


def test_build_bound():
    with pytest.raises(g.OrderBoundExceeded):
        build("Z100xZ100")


def test_build_from_file(tmp_path):
    path = tmp_path / "q8.tbl"
    path.write_text(g.write_cayley_table(build("Q8")))
    G = build(f"file:{path}")
    assert G.n == 8 and G.label == f"file:{path}"


def test_catalog_examples():
    assert catalog(8, ["cyclic"]) == [f"Z{n}" for n in range(1, 9)]
    assert catalog(8, ["quaternion"]) == ["Q8"]
    assert catalog(1) == ["Z1"]
    assert catalog(8, ["quaternion", "elementary"]) == ["E2", "E4", "E8", "Q8"]


def test_semidirect_pq_count():
    got = catalog(21, ["semidirect_pq"])
    expected = sum(1 for q in range(3, 22) if is_prime(q)
                   for p in range(2, q) if is_prime(p) and (q - 1) % p == 0 and p * q <= 21)
    assert len(got) == expected == 4
    assert got == ["Z3:Z2(2)", "Z5:Z2(4)", "Z7:Z2(6)", "Z7:Z3(2)"]


def test_catalog_invariants():
    labels = catalog(200)
    assert labels == catalog(200)
    assert len(labels) == len(set(labels))
    keys = [(build(lab).n, lab) for lab in labels]
    assert keys == sorted(keys) and all(n <= 200 for n, _ in keys)
    assert all(canonical(lab) == lab for lab in labels)


def test_catalog_rejects():
    with pytest.raises(ValueError):
        catalog(5001)
    with pytest.raises(ValueError):
        catalog(10, ["bogus"])


@pytest.mark.parametrize("n, count", [(1, 1), (8, 3), (16, 5), (72, 6), (144, 10), (30, 1)])
def test_abelian_counts(n, count):
    invs = abelian_invariants(n)
    assert len(invs) == count
    for inv in invs:
        assert all(inv[i] % inv[i + 1] == 0 for i in range(len(inv) - 1))


@given(st.lists(st.sampled_from(["Z2", "Z3", "Z4", "D6", "Q8", "E4", "S3", "Z5:Z4(2)"]), min_size=1, max_size=3))
def test_product_descriptor_roundtrip(parts):
    text = "x".join(parts)
    assert canonical(text) == text
    n = 1
    for p in parts:
        n *= build(p).n
    if n <= 500:
        assert build(text).n == n


def test_families_constant():
    assert set(FAMILIES) == {"cyclic", "abelian", "dihedral", "quaternion", "semidihedral",
                             "modular", "elementary", "semidirect_pq", "permutation_named"}
