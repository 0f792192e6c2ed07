"""Registry records and the verification engine built on them."""

import pytest

from qrr.identities import (
    EngineError,
    REGISTRY,
    UnknownIdentity,
    eval_side,
    get_record,
    grid_points,
    identity_sites,
    list_identities,
    liu_counterexample,
    rr_limit_check,
    support_bounds,
    verify,
    verify_grid,
    verify_mutated,
)


def test_registry_shape():
    assert len(REGISTRY) == 38
    for ident, rec in REGISTRY.items():
        assert ident == rec.ident == ident.upper()
        assert rec.expect in ("equal", "counterexample")
        names = [ps.name for ps in rec.params]
        assert len(names) == len(set(names))
        grid_names = {n for n, _, _ in rec.default_grid}
        assert grid_names <= set(names)
    assert sorted(REGISTRY) == list_identities()


def test_get_record_is_exact_match():
    assert get_record("ANDREWS1").ident == "ANDREWS1"
    with pytest.raises(UnknownIdentity):
        get_record("NOPE")
    with pytest.raises(UnknownIdentity):
        get_record("andrews1")    # callers normalise case, the registry does not


def test_verify_single_points():
    for ident, pt in (
        ("ANDREWS1", {"n": 4}),
        ("ANDREWS2", {"n": 4}),
        ("LMNRS1", {"l": 1, "m": 1, "n": 1, "u": 1, "v": 1}),
        ("LMNRS3", {"l": 2, "m": 1, "n": 1, "u": 1, "v": 2}),
        ("ABCDE60", {"n": 1, "l": 1, "m": 1, "u": 1, "v": 1}),
        ("EULERMN1", {"m": 3, "n": 2}),
    ):
        rep = verify(ident, pt, 40)
        assert rep.equal, (ident, pt, rep.mismatch_index)
        assert rep.trunc == 40
        assert rep.mismatch_index is None


def test_verify_needs_all_params():
    with pytest.raises(EngineError):
        verify("ANDREWS1", {}, 20)
    with pytest.raises(EngineError):
        verify("ANDREWS1", {"n": 1, "z": 2}, 20)
    with pytest.raises(EngineError):
        verify("ANDREWS1", {"n": -1}, 20)


def test_default_trunc_comes_from_environment(monkeypatch):
    monkeypatch.delenv("QRR_TRUNC", raising=False)
    assert verify("EULERN1", {"n": 2}).trunc == 60
    monkeypatch.setenv("QRR_TRUNC", "17")
    assert verify("EULERN1", {"n": 2}).trunc == 17


def test_grid_points_order_and_overrides():
    rec = get_record("EULERMN1")
    pts = grid_points(rec, {"m": (0, 1), "n": (2, 3)})
    assert pts == [{"m": 0, "n": 2}, {"m": 0, "n": 3},
                   {"m": 1, "n": 2}, {"m": 1, "n": 3}]
    with pytest.raises(EngineError):
        grid_points(rec, {"bogus": (0, 1)})
    with pytest.raises(EngineError):
        grid_points(get_record("LMNRS3"), {"u": (0, 2)})   # below the minimum


def test_verify_grid_matches_pointwise_and_parallel():
    ranges = {"l": (0, 1), "m": (0, 1), "n": (0, 1), "u": (1, 2), "v": (1, 2)}
    serial = verify_grid("LMNRS3", ranges, 25)
    assert len(serial) == 32 and all(r.equal for r in serial)
    rec = get_record("LMNRS3")
    assert [r.params for r in serial] == grid_points(rec, ranges)
    parallel = verify_grid("LMNRS3", ranges, 25, jobs=2)
    assert [(r.params, r.verdict) for r in parallel] == \
           [(r.params, r.verdict) for r in serial]


def test_eval_side_values():
    z = eval_side("ABCDE60", "rhs", {"n": 1, "l": 1, "m": 1, "u": 1, "v": 1}, 20)
    assert z.is_zero()
    lhs = eval_side("ANDREWS1", "lhs", {"n": 3}, 20)
    rhs = eval_side("ANDREWS1", "rhs", {"n": 3}, 20)
    assert lhs == rhs
    assert lhs.coeffs[0] == 1
    with pytest.raises(EngineError):
        eval_side("ANDREWS1", "both", {"n": 3}, 20)


def test_support_bounds_examples():
    assert support_bounds("ANDREWS1", "lhs", {"n": 5}, 40) == (0, 5)
    assert support_bounds("ANDREWS1", "rhs", {"n": 5}, 40) == (-5, 5)
    assert support_bounds("LMNRS1", "lhs",
                          {"l": 2, "m": 1, "n": 3, "u": 1, "v": 2}, 40) == (0, 1)
    assert support_bounds("ABCDE1", "lhs",
                          {"n": 1, "l": 1, "m": 1, "u": 1, "v": 1}, 18) == (-1, 1)


def test_support_bounds_are_sharp():
    # terms just outside the reported range must vanish; the engine relies on it
    ident, params = "LMNRS2", {"l": 1, "m": 2, "n": 1, "u": 2, "v": 1}
    lo, hi = support_bounds(ident, "lhs", params, 30)
    inside = eval_side(ident, "lhs", params, 30)
    assert not inside.is_zero()
    assert lo == 0 and hi >= 0


def test_limit_consistency_five_to_four_params():
    # the five-parameter families collapse to the four-parameter ones when
    # the last parameter exponent clears the truncation window
    T = 30
    samples = {
        ("LMNRS1", "LMNR1"): {"l": 1, "m": 2, "n": 1, "u": 2},
        ("LMNRS2", "LMNR2"): {"l": 2, "m": 1, "n": 2, "u": 1},
        ("LMNRS3", "LMNR3"): {"l": 1, "m": 1, "n": 2, "u": 1},
        ("LMNRS4", "LMNR4"): {"l": 2, "m": 2, "n": 1, "u": 2},
    }
    for (five, four), pt in samples.items():
        for side in ("lhs", "rhs"):
            a = eval_side(five, side, dict(pt, v=T), T)
            b = eval_side(four, side, pt, T)
            assert a == b, (five, four, side)


def test_rr_limit_check():
    assert rr_limit_check("RR1", 30).equal
    assert rr_limit_check("RR2", 30).equal
    with pytest.raises(UnknownIdentity):
        rr_limit_check("RR3", 30)


def test_liu_records_hold_at_generic_points():
    # the registry grids avoid the degenerate specialisation, so both
    # transformation records verify there
    for ident in ("LIU1", "LIU2"):
        reports = verify_grid(ident, None, 25)
        assert reports and all(r.equal for r in reports)


def test_liu_counterexample_reports_mismatch_at_zero():
    for a_exp in (1, 2, 3):
        rep = liu_counterexample("LIU1", a_exp, 20)
        assert rep.verdict == "MISMATCH"
        assert rep.mismatch_index == 0
    rep = liu_counterexample("LIU2", 2, 20)
    assert rep.verdict == "MISMATCH" and rep.mismatch_index == 0
    with pytest.raises(UnknownIdentity):
        liu_counterexample("LIU3", 2, 20)
    with pytest.raises(EngineError):
        liu_counterexample("LIU1", 0, 20)


def test_liu1_lhs_window_is_one_minus_q():
    rep = liu_counterexample("LIU1", 2, 20)
    window = dict(rep.lhs_window)
    assert window[0] == 1 and window[1] == -1
    assert all(c == 0 for _, c in rep.rhs_window)


def test_mutation_hooks_have_teeth():
    params = {"n": 2}
    sites = identity_sites("ANDREWS1", params, trunc=18)
    assert sites, "no exponent sites recorded"
    flipped = 0
    for site in sites:
        rep = verify_mutated("ANDREWS1", params, site, -1, trunc=18)
        if not rep.equal:
            flipped += 1
    assert flipped >= len(sites) - 1


def test_mutated_verdict_reports_window():
    rep = verify_mutated("ANDREWS1", {"n": 2}, "lhs.qpow", -1, trunc=18)
    assert not rep.equal
    assert rep.mismatch_index is not None
    assert rep.lhs_window and rep.rhs_window
