import pytest

from asmposet import seqcore, verify


def test_full_suite_passes():
    results = list(verify.run(6))
    assert [r.name for r in results] == verify.check_names()
    failed = [(r.name, r.detail) for r in results if not r.passed]
    assert failed == []


@pytest.mark.parametrize("fault", sorted(verify.FAULTS))
def test_each_fault_is_caught(fault):
    with verify.injected_fault(fault):
        results = list(verify.run(4))
    assert any(not r.passed for r in results)
    assert seqcore.is_alternating is not verify.FAULTS[fault]


def test_range():
    with pytest.raises(ValueError):
        list(verify.run(0))
