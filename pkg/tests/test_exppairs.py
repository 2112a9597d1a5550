from fractions import Fraction

import pytest

from zetadiv import (ExponentPair, InvalidArgumentError, ResourceLimitError,
                     apply_A, apply_B, is_process_reachable, parse_fraction,
                     report, search_optimal, seed_pairs, write_frontier_csv)

HALF = Fraction(1, 2)
STD = ExponentPair(HALF, HALF)


def random_valid_pair(rng) -> ExponentPair:
    q = int(rng.integers(1, 200))
    a = int(rng.integers(0, q + 1))       # kappa = a/(2q) in [0, 1/2]
    b = int(rng.integers(0, q + 1))       # lambda = (q+b)/(2q) in [1/2, 1]
    return ExponentPair(Fraction(a, 2 * q), Fraction(q + b, 2 * q))


def test_seed_pairs_contents():
    seeds = seed_pairs()
    keys = {(p.kappa, p.lam) for p in seeds}
    assert (HALF, HALF) in keys
    assert (Fraction(11, 30), Fraction(16, 30)) in keys
    assert (Fraction(1, 6), Fraction(2, 3)) in keys
    assert (Fraction(0), Fraction(1)) in keys
    assert all(isinstance(p.kappa, Fraction) and isinstance(p.lam, Fraction)
               for p in seeds)


def test_invariant_validation():
    with pytest.raises(InvalidArgumentError):
        ExponentPair(Fraction(3, 5), Fraction(2, 3))  # kappa > 1/2
    with pytest.raises(InvalidArgumentError):
        ExponentPair(Fraction(0), Fraction(1, 3))     # lambda < 1/2


def test_apply_A_golden():
    a = apply_A(STD)
    assert (a.kappa, a.lam) == (Fraction(1, 6), Fraction(2, 3))
    assert a.word == "A"
    triv = ExponentPair(Fraction(0), Fraction(1))
    fixed = apply_A(triv)
    assert (fixed.kappa, fixed.lam) == (Fraction(0), Fraction(1))


def test_apply_B_golden():
    b = apply_B(STD)
    assert (b.kappa, b.lam) == (Fraction(0), Fraction(1))
    classical = ExponentPair(Fraction(1, 6), Fraction(2, 3))
    fixed = apply_B(classical)
    assert (fixed.kappa, fixed.lam) == (classical.kappa, classical.lam)


def test_B_is_involution(rng):
    for _ in range(100):
        p = random_valid_pair(rng)
        q = apply_B(apply_B(p))
        assert (q.kappa, q.lam) == (p.kappa, p.lam)


def test_processes_preserve_invariants(rng):
    # constructor raises on violation, so surviving construction is the check
    for _ in range(100):
        p = random_valid_pair(rng)
        apply_A(p)
        apply_B(p)


def test_word_of_cited_pair():
    p = STD
    for c in "AAAB":
        p = apply_A(p) if c == "A" else apply_B(p)
    assert (p.kappa, p.lam) == (Fraction(11, 30), Fraction(16, 30))
    assert p.word == "AAAB"


def test_report_goldens():
    r = report(STD)
    assert r.theta_div == Fraction(1, 3)
    assert r.theta_zeta == Fraction(1, 6)
    assert r.beats_one_third is False  # 3*lambda + kappa = 2 exactly
    rh = report(ExponentPair(Fraction(11, 30), Fraction(16, 30)))
    assert rh.theta_div == Fraction(27, 82)
    assert rh.beats_one_third is True
    lind = report(ExponentPair(Fraction(0), HALF, hypothetical=True))
    assert lind.theta_div == Fraction(1, 4)
    assert lind.theta_zeta == Fraction(1, 8)


def test_theta_zeta_is_half_theta_div():
    res = search_optimal(8)
    for p in res.frontier:
        r = report(p)
        assert r.theta_zeta * 2 == r.theta_div
        assert isinstance(r.theta_div, Fraction)
        assert isinstance(r.theta_zeta, Fraction)


def test_nontrivial_flag():
    assert report(ExponentPair(Fraction(0), Fraction(1))).nontrivial is False
    assert report(STD).nontrivial is True


def test_search_depth1_from_standard_seed():
    res = search_optimal(1, seeds=[STD])
    # enumeration: the seed itself (1/3), A-child (1/6,2/3) -> 5/14,
    # B-child (0,1) -> 1/2; the seed is already optimal
    assert res.best.theta_div == Fraction(1, 3)
    assert res.best.pair.word == ""
    vals = {(p.kappa, p.lam): report(p).theta_div for p in res.frontier}
    assert vals[(Fraction(1, 6), Fraction(2, 3))] == Fraction(5, 14)
    assert vals[(Fraction(0), Fraction(1))] == Fraction(1, 2)
    assert res.explored == 3


def test_search_monotone_and_beats_one_third():
    res = search_optimal(10)
    bb = res.best_by_depth
    assert len(bb) == 11
    assert all(bb[i + 1] <= bb[i] for i in range(10))
    assert res.best.theta_div < Fraction(1, 3)
    # frozen golden from the exhaustive run
    assert res.best.theta_div == Fraction(229, 696)
    assert (res.best.pair.kappa, res.best.pair.lam) == (Fraction(97, 251), Fraction(132, 251))


def test_search_objective_theta_zeta_consistent():
    res = search_optimal(6, objective="theta_zeta")
    assert res.best.theta_zeta * 2 == res.best.theta_div


def test_search_validation():
    with pytest.raises(ResourceLimitError):
        search_optimal(25)
    with pytest.raises(InvalidArgumentError):
        search_optimal(5, objective="theta_max")
    with pytest.raises(InvalidArgumentError):
        search_optimal(-1)


def test_exhaustive_depth12_invariants():
    res = search_optimal(12)
    assert res.explored >= 1000
    for p in res.frontier:
        assert 0 <= p.kappa <= HALF <= p.lam <= 1
        assert isinstance(p.kappa, Fraction) and isinstance(p.lam, Fraction)


def test_frontier_csv_golden(tmp_path):
    res = search_optimal(10)
    out = tmp_path / "frontier.csv"
    write_frontier_csv(res.frontier, out)
    got = out.read_text().splitlines()
    assert got[0] == "kappa,lambda,word,theta_div,theta_zeta"
    import pathlib
    golden = pathlib.Path(__file__).parent / "data" / "exppair_frontier_depth10.csv"
    assert got == golden.read_text().splitlines()


def test_parse_fraction():
    assert parse_fraction("11/30") == Fraction(11, 30)
    assert parse_fraction(" 1/2 ") == Fraction(1, 2)
    assert parse_fraction("3") == Fraction(3)
    with pytest.raises(InvalidArgumentError):
        parse_fraction("a/b")
    with pytest.raises(InvalidArgumentError):
        parse_fraction("1/0")


def test_reachability_gate():
    assert is_process_reachable(Fraction(11, 30), Fraction(16, 30))
    assert is_process_reachable(Fraction(1, 6), Fraction(2, 3))
    assert not is_process_reachable(Fraction(0), Fraction(1, 2))
