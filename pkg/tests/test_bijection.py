"""Tests for the pop-based bijection between bumpless pipe dreams and
ordinary pipe dreams."""

import pytest

from pipedreams import (
    BumplessPipeDream,
    CompatibleSequence,
    Permutation,
    PipeDream,
    enumerate_bpds,
    enumerate_pipe_dreams,
    phi,
    phi_inverse,
    symmetric_group,
)


def test_phi_of_identity_is_empty():
    res = phi(BumplessPipeDream.identity(3))
    assert res.sequence == CompatibleSequence((), ())
    assert res.pops == ()
    assert res.pipe_dream() == PipeDream([])


def test_phi_of_rothe_21():
    res = phi(BumplessPipeDream.rothe(Permutation((2, 1))))
    assert res.sequence == CompatibleSequence((1,), (1,))
    assert res.pipe_dream() == PipeDream([(1, 1)])


def test_phi_of_rothe_321():
    res = phi(BumplessPipeDream.rothe(Permutation((3, 2, 1))))
    assert res.sequence == CompatibleSequence((2, 1, 2), (1, 1, 2))
    assert res.pipe_dream() == PipeDream([(1, 1), (1, 2), (2, 1)])


def test_phi_intermediates():
    d = BumplessPipeDream.rothe(Permutation((3, 2, 1)))
    res = phi(d, keep_intermediates=True)
    assert len(res.intermediates) == 4
    assert res.intermediates[0] == d
    assert res.intermediates[-1] == BumplessPipeDream.identity(1)
    for step, (a, _) in zip(range(3), res.pops):
        before = res.intermediates[step].perm()
        after = res.intermediates[step + 1].perm()
        assert after == before.left_s(a)


def test_phi_inverse_fixture():
    assert phi_inverse(PipeDream([(1, 1)])).rows == (".r", "r+")


@pytest.mark.parametrize("pi", list(symmetric_group(4)))
def test_phi_is_a_weight_preserving_bijection(pi):
    bpds = enumerate_bpds(pi)
    images = {}
    for b in bpds:
        res = phi(b)
        res.sequence.validate()
        d = res.pipe_dream()
        assert d.perm() == pi
        assert d.weight() == b.weight()
        assert d not in images, "phi must be injective"
        images[d] = b
    assert set(images) == set(enumerate_pipe_dreams(pi))


@pytest.mark.parametrize("pi", list(symmetric_group(4)))
def test_phi_inverse_roundtrip(pi):
    for b in enumerate_bpds(pi):
        assert phi_inverse(phi(b).pipe_dream()) == b
    for d in enumerate_pipe_dreams(pi):
        assert phi(phi_inverse(d)).pipe_dream() == d


def test_pops_read_off_the_compatible_sequence():
    for pi in symmetric_group(3):
        for b in enumerate_bpds(pi):
            res = phi(b)
            a_seq = tuple(a for a, _ in res.pops)
            r_seq = tuple(r for _, r in res.pops)
            assert res.sequence == CompatibleSequence(a_seq, r_seq)
            assert len(res.pops) == pi.length()
