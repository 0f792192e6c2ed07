"""Bailey pairs, chain and lattice moves, and identity reconstruction.

The stock pairs have closed-form entries, so those are frozen here as
independent oracles before any machinery is exercised on top of them.
"""

import pytest

from qrr.bailey import (
    BaileyPair,
    bailey_step,
    chain_reproduce,
    fold_to_one_sided,
    lattice_seed_pair,
    lattice_step,
    symmetrized_identity,
    unit_bilateral_x1,
    unit_bilateral_xq,
    unit_pair_x1,
    verify_pair,
)
from qrr.identities import EngineError, verify
from qrr.pochhammer import PochProduct, terms_to_series
from qrr.series import TruncatedSeries

T = 30


def _series(*monomials):
    """Series with given (coefficient, exponent) spikes, at trunc T."""
    buf = [0] * (T + 1)
    for c, e in monomials:
        buf[e] += c
    return TruncatedSeries(buf, T)


def test_unit_pair_x1_closed_form():
    pair = unit_pair_x1()
    assert pair.mode == "one_sided" and pair.x_exp == 0
    assert pair.alpha_series(0, T) == _series((1, 0))
    # alpha_n = (-1)^n (q^{n(n-1)/2} + q^{n(n+1)/2})
    assert pair.alpha_series(1, T) == _series((-1, 0), (-1, 1))
    assert pair.alpha_series(2, T) == _series((1, 1), (1, 3))
    assert pair.alpha_series(3, T) == _series((-1, 3), (-1, 6))
    assert pair.beta_series(0, T) == _series((1, 0))
    assert pair.beta_series(3, T).is_zero()


def test_unit_bilateral_closed_forms():
    for pair in (unit_bilateral_x1(), unit_bilateral_xq()):
        # A_r = (-1)^r q^{r(r-1)/2} on both sides of zero
        assert pair.alpha_series(0, T) == _series((1, 0))
        assert pair.alpha_series(1, T) == _series((-1, 0))
        assert pair.alpha_series(2, T) == _series((1, 1))
        assert pair.alpha_series(-1, T) == _series((-1, 1))
        assert pair.alpha_series(-2, T) == _series((1, 3))
        assert pair.beta_series(0, T) == _series((1, 0))
        assert pair.beta_series(2, T).is_zero()
    assert unit_bilateral_x1().x_exp == 0
    assert unit_bilateral_xq().x_exp == 1


def test_lattice_seed_closed_form():
    pair = lattice_seed_pair()
    assert pair.mode == "one_sided" and pair.x_exp == 1
    assert pair.alpha_series(0, T) == _series((1, 0))
    # alpha_n = (-1)^n q^{n(n-1)/2} (1-q^{2n+1})/(1-q)
    geom3 = _series((-1, 0), (-1, 1), (-1, 2))
    assert pair.alpha_series(1, T) == geom3
    geom5 = _series(*((1, e) for e in range(1, 6)))
    assert pair.alpha_series(2, T) == geom5


def test_relation_ranges_per_mode():
    assert unit_pair_x1().relation_range(3) == range(0, 4)
    assert unit_bilateral_x1().relation_range(3) == range(-3, 4)
    assert unit_bilateral_xq().relation_range(3) == range(-4, 4)
    with pytest.raises(EngineError):
        unit_pair_x1().relation_terms(-1)


def test_mode_validation():
    with pytest.raises(EngineError):
        BaileyPair("bilateral_x1", 1, lambda r: [], lambda n: [])
    with pytest.raises(EngineError):
        BaileyPair("bilateral_xq", 0, lambda r: [], lambda n: [])
    with pytest.raises(EngineError):
        BaileyPair("sideways", 0, lambda r: [], lambda n: [])


def test_stock_pairs_satisfy_relation():
    for pair in (unit_pair_x1(), unit_bilateral_x1(),
                 unit_bilateral_xq(), lattice_seed_pair()):
        reports = verify_pair(pair, n_max=8, trunc=T)
        assert len(reports) == 9
        assert all(r.equal for r in reports), pair.label


def test_folds_recover_the_one_sided_units():
    folded = fold_to_one_sided(unit_bilateral_x1())
    unit = unit_pair_x1()
    for r in range(7):
        assert folded.alpha_series(r, T) == unit.alpha_series(r, T)
    assert folded.x_exp == unit.x_exp

    folded_q = fold_to_one_sided(unit_bilateral_xq())
    seed = lattice_seed_pair()
    for r in range(7):
        assert folded_q.alpha_series(r, T) == seed.alpha_series(r, T)
    assert folded_q.x_exp == seed.x_exp

    already = unit_pair_x1()
    assert fold_to_one_sided(already) is already


def test_step_preserves_the_relation():
    # for the x=q bilateral pair the move degenerates when exactly one rho
    # equals x (the mixed case folds one side of alpha but not the weights),
    # so its rho choices stay off that edge; the chain reconstructions only
    # ever use rho exponents <= 0 there
    cases = [
        (unit_pair_x1(), ((0, 0), (-1, 0), (-2, -1))),
        (unit_bilateral_x1(), ((0, 0), (-1, 0), (-2, -1))),
        (unit_bilateral_xq(), ((1, 1), (0, 0), (-1, 0), (-2, -1))),
        (lattice_seed_pair(), ((1, 1), (0, 1), (-1, 0))),
    ]
    for base, rho_list in cases:
        for rhos in rho_list:
            stepped = bailey_step(base, *rhos)
            assert stepped.mode == base.mode and stepped.x_exp == base.x_exp
            reports = verify_pair(stepped, n_max=5, trunc=T)
            assert all(r.equal for r in reports), (base.label, rhos)


def test_step_guard():
    with pytest.raises(EngineError):
        bailey_step(unit_pair_x1(), 1, 0)     # rho exponent above x


def test_step_composes():
    twice = bailey_step(bailey_step(unit_bilateral_x1(), 0, -1), -1, 0)
    assert all(r.equal for r in verify_pair(twice, n_max=4, trunc=T))


def test_lattice_step_lowers_x():
    seed = lattice_seed_pair()
    for rhos in ((0, 0), (0, -1), (-1, -1)):
        moved = lattice_step(seed, *rhos)
        assert moved.mode == "one_sided" and moved.x_exp == 0
        reports = verify_pair(moved, n_max=5, trunc=T)
        assert all(r.equal for r in reports), rhos


def test_lattice_step_guards():
    with pytest.raises(EngineError):
        lattice_step(unit_bilateral_x1(), 0, 0)    # needs a one-sided pair
    with pytest.raises(EngineError):
        lattice_step(lattice_seed_pair(), 1, 0)    # rho exponent too high


def test_lattice_after_step():
    prepared = bailey_step(lattice_seed_pair(), 1, 0)
    moved = lattice_step(prepared, 0, -1)
    assert all(r.equal for r in verify_pair(moved, n_max=4, trunc=T))


def test_weighted_identity_all_modes():
    # same domain note as for the chain step: keep the x=q bilateral pair
    # away from mixed rho-at-x edges
    cases = [
        (unit_pair_x1(), 0, -1),
        (unit_pair_x1(), 0, 0),
        (unit_bilateral_x1(), 0, 0),
        (unit_bilateral_x1(), -2, -1),
        (unit_bilateral_xq(), 0, 0),
        (unit_bilateral_xq(), 1, 1),
        (lattice_seed_pair(), 0, 1),
        (lattice_seed_pair(), -1, 1),
    ]
    for pair, r1, r2 in cases:
        for N in (0, 1, 3):
            rep = symmetrized_identity(pair, r1, r2, N, T)
            assert rep.equal, (pair.label, r1, r2, N, rep.mismatch_index)


def test_weighted_identity_on_stepped_pair():
    stepped = bailey_step(unit_bilateral_x1(), 0, -1)
    rep = symmetrized_identity(stepped, -1, 0, 2, T)
    assert rep.equal


def test_weighted_identity_guards():
    with pytest.raises(EngineError):
        symmetrized_identity(unit_pair_x1(), 1, 0, 2, T)
    with pytest.raises(EngineError):
        symmetrized_identity(unit_pair_x1(), 0, 0, -1, T)


def test_chain_reproduce_pinned_case():
    rep = chain_reproduce("ABCDE1", 2, 2, 2, 1, 1, trunc=40)
    assert rep.equal
    assert rep.params == {"n": 2, "l": 1, "m": 1, "u": 0, "v": 0}


def test_chain_reproduce_all_targets():
    for target in ("ABCDE1", "ABCDE2", "ABCDE3"):
        for N in range(4):
            rep = chain_reproduce(target, N, trunc=T)
            assert rep.equal, (target, N)
            # the reconstruction and the registry agree with direct verification
            direct = verify(target, rep.params, T)
            assert direct.equal


def test_chain_reproduce_nontrivial_exponents():
    rep = chain_reproduce("ABCDE3", 3, 2, 3, 1, 2, trunc=T)
    assert rep.equal


def test_chain_reproduce_rejects_bad_input():
    with pytest.raises(EngineError):
        chain_reproduce("ABCDE4", 2)
    with pytest.raises(EngineError):
        chain_reproduce("ABCDE1", -1)
    with pytest.raises(EngineError):
        chain_reproduce("ABCDE1", 2, 0, 1, 1, 1)


def test_chain_is_case_insensitive():
    assert chain_reproduce("abcde2", 1, trunc=T).equal
