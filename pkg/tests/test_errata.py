from pathlib import Path

from splitquat.errata import CHECKS, collect, render

GOLDEN = Path(__file__).resolve().parents[1] / "docs" / "errata.md"


def test_every_entry_is_confirmed():
    entries = collect()
    assert len(entries) == len(CHECKS)
    unconfirmed = [e.key for e in entries if not e.confirmed]
    assert unconfirmed == []


def test_golden_file_matches_regeneration():
    assert GOLDEN.read_text(encoding="utf-8") == render(collect())


def test_exact_entries_are_stable():
    a = render(collect(include_numeric=False))
    b = render(collect(include_numeric=False))
    assert a == b
    assert len(collect(include_numeric=False)) == len(CHECKS) - 1
