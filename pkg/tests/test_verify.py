import pytest

from chebsum.verify import SUITES, Bounds, VerifyReport, run


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_at_small_bounds(name):
    (report,) = run(name, Bounds(n_max=6, s_max=6))
    assert report.cases_run > 0
    assert report.ok, report.to_dict()["failures"][:3]


def test_report_records_failures():
    r = VerifyReport("demo")
    r.check("same", 1, 1)
    r.check("different", 1, 2)
    r.check("close", 1.0, 1.1, "approx(0.01)", passed=False)
    d = r.to_dict()
    assert d["cases_run"] == 3 and not d["passed"]
    assert d["failures"][0] == {"case": "different", "expected": "1", "actual": "2", "exactness": "exact"}
    assert d["exactness"] == {"exact": 2, "approx(0.01)": 1}


def test_magic_suite_names_its_reading():
    (report,) = run("magic", Bounds(n_max=4))
    assert any("(1/2)^sigma" in note for note in report.notes)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run("nope")


def test_seed_changes_random_points():
    a = run("thm4", Bounds(seed=1))[0]
    b = run("thm4", Bounds(seed=2))[0]
    assert a.ok and b.ok
    assert [c.case for c in a.cases] != [c.case for c in b.cases]
