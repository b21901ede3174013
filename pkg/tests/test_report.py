import logging
from pathlib import Path

import pytest

from biquandle.config import get_settings
from biquandle.format.report import (
    build_report,
    conjecture_violations,
    load_report,
    run_batch,
    summarize,
    write_report,
)
from biquandle.format.table import load_table
from biquandle.models.batch import BatchRow
from biquandle.models.table import TableEntry
from tests.conftest import CLASSICAL_TREFOIL, KNOT_3_1, KNOT_3_1_VIRTUAL

FAMILIES = ["sawollek", "z-parity"]


@pytest.fixture
def entries() -> list[TableEntry]:
    return [
        TableEntry(name="3.1", code=KNOT_3_1),
        TableEntry(name="3.1v", code=KNOT_3_1_VIRTUAL),
        TableEntry(name="3.1c", code=CLASSICAL_TREFOIL),
    ]


def test_run_batch(entries: list[TableEntry]) -> None:
    report = run_batch(entries, FAMILIES)
    assert [(row.name, row.family) for row in report.entries] == [
        ("3.1", "sawollek"),
        ("3.1", "z-parity"),
        ("3.1c", "sawollek"),
        ("3.1c", "z-parity"),
        ("3.1v", "sawollek"),
        ("3.1v", "z-parity"),
    ]
    summary = report.summary
    assert summary.entries == 3
    assert summary.zero == {"sawollek": 1, "z-parity": 1}
    assert summary.nonzero == {"sawollek": 1, "z-parity": 1}
    assert summary.errors == {"sawollek": 1, "z-parity": 1}
    assert summary.detection("sawollek", "z-parity") == 0
    assert summary.detection("z-parity", "sawollek") == 0
    assert report.conjecture_violations == []


def test_error_rows(entries: list[TableEntry]) -> None:
    report = run_batch(entries[1:2], ["sawollek"])
    (row,) = report.entries
    assert row.polynomial is None
    assert row.crossings == 3
    assert row.error is not None
    assert "virtual" in row.error


def test_alpha_rows_carry_the_base_point_flag(entries: list[TableEntry]) -> None:
    report = run_batch(entries[:2], ["alpha-sawollek"])
    assert {row.name: row.base_point_dependent for row in report.entries} == {"3.1": False, "3.1v": True}


def test_empty_batch() -> None:
    report = run_batch([], FAMILIES)
    assert report.entries == []
    assert report.summary.entries == 0
    assert report.summary.zero == {"sawollek": 0, "z-parity": 0}


def test_batch_is_deterministic(entries: list[TableEntry]) -> None:
    first = run_batch(entries, FAMILIES)
    assert run_batch(list(reversed(entries)), FAMILIES).model_dump_json() == first.model_dump_json()
    assert run_batch(entries, FAMILIES, jobs=2).model_dump_json() == first.model_dump_json()


def test_summary_counts_detections() -> None:
    rows = [
        BatchRow(name="a", family="sawollek", polynomial="0"),
        BatchRow(name="a", family="z-parity", polynomial="1 - z^2"),
        BatchRow(name="b", family="sawollek", polynomial="1 - s*t"),
        BatchRow(name="b", family="z-parity", polynomial="1 - s*t"),
    ]
    summary = summarize(rows, FAMILIES)
    assert summary.detection("sawollek", "z-parity") == 1
    assert summary.detection("z-parity", "sawollek") == 0


def test_conjecture_violations() -> None:
    rows = [
        BatchRow(name="a", family="z-parity", polynomial="z^2 - z^-2", z_span=4, crossings=3),
        BatchRow(name="b", family="z-parity", polynomial="z^2 - z^-2", z_span=4, crossings=4),
        BatchRow(name="c", family="sawollek", polynomial="1"),
    ]
    (violation,) = conjecture_violations(rows)
    assert violation.name == "a"
    assert build_report(rows, ["z-parity", "sawollek"]).conjecture_violations == [violation]


@pytest.mark.parametrize("suffix", [".csv", ".json"])
def test_report_files_round_trip(entries: list[TableEntry], tmp_path: Path, suffix: str) -> None:
    report = run_batch(entries, FAMILIES)
    path = write_report(report, tmp_path / "reports" / f"batch{suffix}")
    loaded = load_report(path)
    assert loaded.entries == report.entries
    assert loaded.summary == report.summary


def test_unsupported_report_format(tmp_path: Path) -> None:
    with pytest.raises(ValueError):
        write_report(build_report([], FAMILIES), tmp_path / "batch.txt")


@pytest.mark.slow
def test_four_crossing_table_statistics() -> None:
    table = get_settings().resolve_four_crossing_table()
    if table is None:
        logging.warning("No four-crossing table configured, skipping statistics check")
        pytest.skip("four-crossing table not available")
    report = run_batch(load_table(table), FAMILIES)
    summary = report.summary
    assert summary.zero["sawollek"] == 19
    assert summary.detection("sawollek", "z-parity") == 3
    assert summary.zero["z-parity"] == 54
    assert summary.detection("z-parity", "sawollek") == 38
    assert report.conjecture_violations == []
