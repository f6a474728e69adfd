import pytest

import lacunary


def test_arith():
    assert lacunary.is_prime(227)
    assert not lacunary.is_prime(51529)
    assert lacunary.factor(12) == [(2, 2), (3, 1)]
    big = (2**61 - 1) * (2**31 - 1)
    assert lacunary.factor(big) == [(2**31 - 1, 1), (2**61 - 1, 1)]
    assert lacunary.int_nth_root(51529, 2) == (227, True)
    assert lacunary.int_nth_root(10**40 + 1, 4) == (10**10, False)
    assert lacunary.crt_solve([(1, 3), (2, 25)]) == (52, 75)


def test_inconsistent_crt_raises():
    with pytest.raises(lacunary.LacunaryError, match="Inconsistent"):
        lacunary.crt_solve([(0, 2), (1, 2)])


def test_pell_and_dependence():
    assert lacunary.pell_fundamental(2) == (3, 2)
    assert lacunary.pell_stream(2, 3) == [(3, 2), (17, 12), (99, 70)]
    with pytest.raises(lacunary.LacunaryError):
        lacunary.pell_fundamental(4)
    assert lacunary.condition_i_witness((1, 2), (4, 2)) == (2, 1)
    assert lacunary.condition_i_witness((1, 3), (2, 3)) is None
    sols = lacunary.enumerate_equation_solutions(1, 3, 1, 2, 1, 100)
    assert (2, 3, 1, -1) in sols


def test_jobs():
    report, code = lacunary.run_job(
        {"command": "eval", "base": 2, "digits": 40, "terms": [{"weight": 1, "i": 1, "j": 2}]}
    )
    assert code == 0
    assert report["result"]["value"]["base_digits"]["digits"].startswith("1001000010")

    report, code = lacunary.run_job(
        {"command": "forge", "i0": 1, "j0": 2, "N": 2, "family": [[1, 2], [2, 2], [1, 3]]}
    )
    assert code == 0
    assert report["result"]["q"] == "227"

    report, code = lacunary.run_job({"command": "check", "family": [[1, 2], [4, 2]]})
    assert code == 1

    report, code = lacunary.run_job('{"command": "nope"}')
    assert code == 2
    assert report["error"]["code"] == "InvalidArgument"


def test_replay_is_deterministic():
    spec = {"command": "hunt", "base": 2, "precision": 60, "coeff_bound": 100,
            "values": [{"constant": 1}, {"constant": 3}]}
    assert lacunary.run_job(spec) == lacunary.run_job(spec)
