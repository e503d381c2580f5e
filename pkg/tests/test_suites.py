"""Every named suite, at a few instances per target."""
import pytest

from binarytor.suites import SUITES, resolve_targets, run_suite

SMALL = {"oracle": 5, "elem2x2": 1, "mutation-q": 1, "mutation-comparison": 2, "part3": 1,
         "part3-identities": 1}


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_small(name):
    reports = run_suite(name, seed=1, count=SMALL.get(name, 3))
    assert len(reports) == len(SUITES[name].targets)
    for r in reports:
        assert r.checks, f"{name} [{r.target}] checked nothing"
        assert r.passed, [(c.name, c.detail) for c in r.failures()]


def test_runs_are_replayable():
    a = run_suite("k1topbotiso", seed=3, count=4, target="F5")
    b = run_suite("k1topbotiso", seed=3, count=4, target="F5")
    assert [(c.name, c.detail) for c in a[0].checks] == [(c.name, c.detail) for c in b[0].checks]


def test_target_selection():
    s = SUITES["part1"]
    assert [F.name for F in resolve_targets(s, "F5")] == ["BaseChange(ZZ->F5)"]
    assert [F.name for F in resolve_targets(s, "Identity(F3)")] == ["Identity(F3)"]
    with pytest.raises(ValueError):
        resolve_targets(SUITES["det"], "Identity(QQ)")
    with pytest.raises(KeyError):
        run_suite("nope")
