import pytest

from ansatz_cases import COUNT, compare


@pytest.mark.parametrize("k", range(COUNT))
def test_ansatz_agrees(k):
    ok, ok2, found, checks = compare(k)
    assert ok == ok2 == found
    assert checks


def test_corpus_mixes_outcomes():
    res = [compare(k)[0] for k in range(COUNT)]
    assert 5 <= sum(res) <= COUNT - 5
