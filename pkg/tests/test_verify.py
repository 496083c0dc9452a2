"""Verification suites, reports and presets."""

import pytest

from src.verify import SUITES, VerificationReport, list_presets, load_preset, run_suite
from src.verify.suites import weak_compositions

TINY = {"n_max": 2, "size_max": 2, "k_max": 2, "m_max": 1, "part_max": 2}


def test_weak_compositions():
    found = list(weak_compositions(2, 2))
    assert len(found) == 6
    assert all(len(a) == 2 and a.size <= 2 for a in found)
    assert all(max(a) <= 1 for a in weak_compositions(3, 3, part_max=1))


@pytest.mark.parametrize("name", ["lswap-consistency", "monkey-identity", "oracle-consistency", "bijection-count"])
def test_small_suites_pass(name):
    report = run_suite(name, TINY)
    assert report.instances > 0
    assert report.passed, report.format()


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(SUITES))
def test_quick_preset_sizes_pass(name):
    params = next(run["params"] for run in load_preset("quick") if run["suite"] == name)
    report = run_suite(name, params)
    assert report.passed, report.format()


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_sampling_is_seeded():
    first = run_suite("lswap-consistency", {**TINY, "sample": 3}, seed=7)
    second = run_suite("lswap-consistency", {**TINY, "sample": 3}, seed=7)
    assert first.to_json() == second.to_json()
    assert first.params["seed"] == 7


def test_report_records_failures():
    report = VerificationReport("demo")
    report.record((0, 1), 1, 1)
    report.record((1, 0), 2, 3)
    assert report.instances == 2
    assert not report.passed
    assert report.to_json()["failures"] == [{"input": (1, 0), "expected": 2, "actual": 3}]
    assert report.format().startswith("[FAIL] demo: 2 instances, 1 failures")


def test_report_merge():
    left, right = VerificationReport("demo"), VerificationReport("demo")
    left.record("a", 1, 1)
    right.record("b", 1, 2)
    left.merge(right)
    assert left.instances == 2
    assert len(left.failures) == 1


def test_presets_cover_every_suite():
    assert {"quick", "acceptance"} <= set(list_presets())
    for preset in ("quick", "acceptance"):
        assert {run["suite"] for run in load_preset(preset)} == set(SUITES)


def test_load_preset_from_directory(tmp_path):
    (tmp_path / "mine.yaml").write_text("runs:\n  - suite: rsk-rect\n    params: {n_max: 2}\n")
    (tmp_path / "broken.yaml").write_text("runs:\n  - params: {n_max: 2}\n")
    assert list_presets(tmp_path) == ["broken", "mine"]
    assert load_preset("mine", tmp_path) == [{"suite": "rsk-rect", "params": {"n_max": 2}}]
    with pytest.raises(ValueError):
        load_preset("broken", tmp_path)
    with pytest.raises(FileNotFoundError):
        load_preset("absent", tmp_path)
