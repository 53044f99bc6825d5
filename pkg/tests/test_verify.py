import pytest

from schurfano import cli
from schurfano.cohring import relations_override
from schurfano.verify import (
    CheckResult, check_euler, check_oracle_equivalence, check_ring_constants, verify_suite,
)


def test_mutated_ring_is_caught():
    with relations_override({"c1^3": -23}):
        res = check_oracle_equivalence(4)
    assert not res.passed and "failures" in res.detail
    assert check_oracle_equivalence(4).passed


def test_mutated_integral_is_caught():
    with relations_override({"ch2^2": 11}):
        assert not check_ring_constants().passed


def test_crashing_check_is_reported(monkeypatch):
    from schurfano import verify

    def boom(*_a):
        raise RuntimeError("kaput")

    checks = list(verify.CHECKS)
    checks[4] = boom
    monkeypatch.setattr(verify, "CHECKS", checks)
    (res,) = verify_suite(4, only={5})
    assert not res.passed and "kaput" in res.detail


def test_suite_rejects_small_sweep():
    with pytest.raises(ValueError):
        verify_suite(3)


def test_partial_suite_and_lines():
    results = verify_suite(4, only={4, 5, 12})
    assert [r.number for r in results] == [4, 5, 12]
    assert all(r.passed for r in results)
    assert results[1].line().startswith("[PASS]  5 ")
    assert CheckResult(9, "x", False, "why").line() == "[FAIL]  9 x: why"


def test_euler_check_small():
    assert check_euler(4).passed


def test_verify_verb_exit_status(capsys, monkeypatch):
    from schurfano import verify

    monkeypatch.setattr(verify, "verify_suite",
                        lambda n: [CheckResult(1, "a", True), CheckResult(2, "b", False, "no")])
    assert cli.main(["verify"]) == 1
    out, err = capsys.readouterr()
    assert "[FAIL]  2 b: no" in out and "check 2" in err
    monkeypatch.setattr(verify, "verify_suite", lambda n: [CheckResult(1, "a", True)])
    assert cli.main(["verify", "--json"]) == 0
