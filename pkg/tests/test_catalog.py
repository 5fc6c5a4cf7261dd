import csv
import io
import json

import numpy as np
import pytest

from negacyclic import tables
from negacyclic.catalog import (
    COLUMNS,
    Family,
    catalog_codes,
    catalog_entry,
    coefficient_choices,
    divisors,
    enumerate_skeletons,
    reproduce_tables,
    row_agreement,
    verify_suite,
    write_csv,
    write_json,
)
from negacyclic.codes import NegacyclicCode
from negacyclic.config import Settings
from negacyclic.errors import BudgetExceeded, NotApplicable
from negacyclic.field import get_field

F3 = get_field(3)
F5 = get_field(5)


def test_family_registry():
    assert sorted(Family.registry) == ["all", "free", "single-nonfree", "uv-only"]
    with pytest.raises(ValueError, match="Unknown family"):
        catalog_codes(3, 3, "cyclic")


def test_divisors():
    g = F3.poly((1, 1))
    assert divisors(F3, 9) == [g ** t for t in range(10)]
    assert divisors(F3, 1) == [F3.one, g]
    assert [d.degree for d in divisors(F3, 5)] == [0, 1, 4, 5]


@pytest.mark.parametrize("p,n,count", [(5, 5, 196), (3, 1, 6), (3, 3, 50), (3, 5, 36)])
def test_enumerate_skeletons(p, n, count):
    skeletons = enumerate_skeletons(p, n)
    assert len(skeletons) == count
    assert len(set(skeletons)) == count
    for g1, g2, g3, g4 in skeletons:
        assert g2.divides(g1) and g3.divides(g1)
        assert g4.divides(g2) and g4.divides(g3)
    assert skeletons == sorted(skeletons, key=lambda s: s.key())


def test_skeleton_degrees():
    skeletons = enumerate_skeletons(3, 3)
    assert (3, 3, 1, 1) in [s.degrees for s in skeletons]
    assert str(skeletons[0]) == "(0, 0, 0, 0)"


def test_skeleton_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_skeletons(3, 5, budget=1)


def test_coefficient_choices():
    rng = np.random.default_rng(0)
    exhaustive = list(coefficient_choices(F3, (1, 1), Settings(), rng))
    assert len(exhaustive) == 9
    assert len(set(exhaustive)) == 9

    sampled = list(coefficient_choices(F3, (5,), Settings(samples=3), rng))
    assert len(sampled) == 4
    assert sampled[0] == (F3.zero,)
    assert all(choice[0].degree is None or choice[0].degree < 5 for choice in sampled)

    assert list(coefficient_choices(F3, (), Settings(), rng)) == [()]


def test_uv_only_catalog():
    entries = catalog_codes(3, 9, "uv-only")
    rows = [entry.as_dict() for entry in entries]
    assert [row["t4"] for row in rows] == list(range(1, 9))
    assert [row["d_oracle"] for row in rows] == [2, 2, 2, 3, 3, 3, 6, 9]
    assert [row["d_formula"] for row in rows] == [2, 2, 2, 4, 6, 3, 6, 9]
    assert all(row["source"] == "enumerated" for row in rows)
    assert all(row["hypothesis_met"] is False for row in rows)
    assert all(row["rank_proven"] is True for row in rows)
    assert set(rows[0]) == set(COLUMNS)


def test_uv_only_catalog_of_coprime_length():
    rows = [entry.as_dict() for entry in catalog_codes(3, 5, "uv-only")]
    assert [row["t4"] for row in rows] == [1, 4]
    assert [row["d_oracle"] for row in rows] == [2, 5]
    assert all(row["d_formula"] == "not-applicable" for row in rows)
    assert all(row["rank_proven"] is False for row in rows)


def test_free_catalog():
    entries = catalog_codes(3, 3, "free")
    assert {entry.code.r1 for entry in entries} == {0, 1, 2}
    for entry in entries:
        assert entry.code.is_free()
        assert entry.rank == entry.free_rank == 3 - entry.code.r1
    assert entries == sorted(entries, key=lambda e: e.code.key())


def test_single_nonfree_catalog_covers_printed_families():
    entries = catalog_codes(5, 5, "single-nonfree", Settings(samples=1))
    found = {entry.code for entry in entries}
    g, x = F5.poly((1, 1)), F5.x
    for row in tables.TABLE_2:
        zero = (0,) * row.coefficients
        code = NegacyclicCode.from_generators(row.build(g, x, zero), F5, 5)
        assert code in found, row.label
    for entry in entries:
        assert not entry.code.present[0]
        assert len(entry.code.reduced_generators()) == 1


@pytest.mark.parametrize("p", [3, 5])
def test_length_one_catalog_lists_ideals_of_the_ring(p):
    entries = catalog_codes(p, 1)
    assert len(entries) == p + 4
    assert sorted(entry.code.dim for entry in entries) == [1] + [2] * (p + 1) + [3, 4]


def test_catalog_is_deterministic():
    first = [entry.as_dict() for entry in catalog_codes(3, 3, "free")]
    second = [entry.as_dict() for entry in catalog_codes(3, 3, "free")]
    assert first == second


def test_catalog_entry():
    code = NegacyclicCode.from_generators(["0;0;0;(x+1)^4"], F5, 5)
    entry = catalog_entry(code, Settings(), "manual")
    row = entry.as_dict()
    assert row["rank"] == 1
    assert row["dim_fp"] == 1
    assert row["is_free"] is False
    assert row["d_oracle"] == 5
    assert row["source"] == "manual"


def test_printed_tables_sizes():
    assert [len(tables.TABLES[t]) for t in (1, 2, 3)] == [5, 15, 20]
    assert len(tables.rows()) == 40
    assert tables.rows(2)[0].label == "<ug^4+vc_0g^4+uvc_1g^3>"


def test_row_conditions():
    row = tables.TABLE_1[0]
    assert row.admits((0, 3, 1))
    assert not row.admits((1, 1, 1))
    assert tables.TABLE_2[2].admits(())


def test_free_and_single_generator_tables_match():
    verdicts = reproduce_tables(settings=Settings(samples=2), which=(1, 2))
    assert len(verdicts) == 20
    assert [v.verdict for v in verdicts] == ["match"] * 20
    assert row_agreement(verdicts) == 1.0
    first = verdicts[0].as_dict()
    assert first["got_rank"] == 1
    assert first["got_d"] == 5
    assert first["verdict"] == "match"


def test_multi_generator_table_findings():
    verdicts = reproduce_tables(settings=Settings(samples=0), which=(3,))
    by_row = {v.row: v for v in verdicts}
    assert len(by_row) == 20
    for row in (17, 18, 19, 20):
        assert by_row[row].verdict == "match"

    # a nonzero c_0 puts uv into the code
    finding = by_row[12]
    assert finding.got_rank == [7, 8]
    assert finding.got_d == [2, 1]
    assert finding.verdict.startswith("mismatch(")
    assert row_agreement(verdicts) < 1.0


def test_tables_need_p5():
    with pytest.raises(NotApplicable):
        reproduce_tables(p=3)


@pytest.mark.parametrize("p,n", [(3, 3), (3, 9), (5, 3)])
def test_verify_suite(p, n):
    results = verify_suite(p, n, count=8)
    for name, (passed, checked) in results.items():
        assert passed == checked, name
    assert results["generators_in_code"] == (8, 8)
    if n % p:
        assert results["spanning_set"] == (0, 0)


def test_writers():
    entries = catalog_codes(3, 9, "uv-only")
    records = [entry.as_dict() for entry in entries]
    header = {"p": 3, "n": 9, "family": "uv-only"}

    stream = io.StringIO()
    write_csv(records, stream, header)
    lines = stream.getvalue().splitlines()
    assert lines[0] == "# p=3 n=9 family=uv-only"
    assert lines[1] == ",".join(COLUMNS)
    rows = list(csv.DictReader(lines[1:]))
    assert len(rows) == 8
    assert rows[3]["d_formula"] == "4"

    stream = io.StringIO()
    write_json(records, stream, header)
    document = json.loads(stream.getvalue())
    assert document["header"] == header
    assert document["entries"][0]["g33"] == "0"
