import random
from fractions import Fraction

import pytest

from zinbiel.catalog import (FixtureError, all_ids, base_algebra_ids,
                             extension_ids, flag_family_ids, get_algebra,
                             get_base_algebra, get_extension_datum,
                             get_flag_datum, required_params)
from zinbiel.core import is_zinbiel
from zinbiel.exactlin import Tensor3, rat
from zinbiel.extending import verify_datum
from zinbiel.flag import verify_flag


def canonical(fixture_id):
    return {name: 1 for name in required_params(fixture_id)}


def rand_nonzero(rng):
    q = Fraction(rng.randint(1, 6), rng.randint(1, 3))
    return -q if rng.random() < 0.5 else q


class TestBaseAlgebras:
    def test_ids(self):
        assert base_algebra_ids() == ["A1", "A2", "A3", "A4", "A5", "A6"]

    def test_all_bases_are_zinbiel(self):
        rng = random.Random(20260822)
        for fid in base_algebra_ids():
            if fid == "A5":
                continue
            assert is_zinbiel(get_base_algebra(fid)).passed, fid
        for lam in [1, 2, -1, rand_nonzero(rng)]:
            assert is_zinbiel(get_base_algebra("A5", {"lambda": lam})).passed

    def test_a5_lambda_zero_rejected(self):
        with pytest.raises(FixtureError, match="lambda != 0"):
            get_base_algebra("A5", {"lambda": 0})

    def test_unknown_id(self):
        with pytest.raises(FixtureError, match="unknown algebra id"):
            get_base_algebra("A7")

    def test_missing_and_unknown_params(self):
        with pytest.raises(FixtureError, match="missing parameter"):
            get_base_algebra("A5")
        with pytest.raises(FixtureError, match="unknown parameter"):
            get_base_algebra("A1", {"lambda": 1})


class TestFlagFamilies:
    def test_ids(self):
        assert flag_family_ids() == [
            "D1", "D2", "D31", "D32", "D41", "D42", "D5", "D6",
            "T11", "T12", "T21", "T22", "T31", "T32", "T33", "T34",
            "T41", "T42", "T51", "T52", "T6",
        ]
        assert extension_ids() == [
            "DA1", "DA2", "DA31", "DA32", "DA41", "DA42", "DA5", "DA6",
            "TA11", "TA12", "TA21", "TA22", "TA31", "TA32", "TA33", "TA34",
            "TA41", "TA42", "TA51", "TA52", "TA6",
        ]
        assert all_ids() == base_algebra_ids() + flag_family_ids() + extension_ids()

    def test_required_params_spot_checks(self):
        assert required_params("D1") == ("mu1", "a21")
        assert required_params("TA42") == ("mu1", "mu2", "b11", "b12")
        assert required_params("A5") == ("lambda",)
        with pytest.raises(FixtureError):
            required_params("D7")

    def test_d1_matrix_shape(self):
        fd = get_flag_datum("D1", {"mu1": 2, "a21": 3})
        assert fd.mu == (rat(2), rat(0), rat(2))
        assert fd.D.row(1) == (rat(3), rat(0), rat(-3))
        assert fd.T.is_zero() and fd.k0 == 0

    def test_t41_uses_mu2_denominator(self):
        fd = get_flag_datum("T41", {"mu1": 5, "mu2": 2, "b21": 4})
        assert fd.T.row(1) == (rat(4), rat(0), rat(-2))

    def test_t42_third_column(self):
        fd = get_flag_datum("T42", {"mu1": 2, "mu2": 4, "b11": 8, "b12": 6})
        assert fd.T.row(0) == (rat(8), rat(6), rat(-5))

    def test_denominator_params_must_be_nonzero(self):
        with pytest.raises(FixtureError, match="mu1 must be nonzero"):
            get_flag_datum("D1", {"mu1": 0, "a21": 1})
        with pytest.raises(FixtureError, match="mu3 must be nonzero"):
            get_flag_datum("T32", {"mu2": 1, "mu3": 0, "b12": 1})
        # no denominator, so zero is fine here
        get_flag_datum("D2", {"mu1": 0})

    def test_extension_id_aliases_family_id(self):
        params = {"mu1": 3, "a21": 5}
        assert get_flag_datum("DA1", params) == get_flag_datum("D1", params)

    def test_instantiation_is_reproducible(self):
        params = {"mu2": 1, "mu3": 2, "b12": Fraction(1, 3)}
        assert get_flag_datum("T32", params) == get_flag_datum("T32", params)
        assert get_algebra("TA32", params) == get_algebra("TA32", params)


class TestExtensions:
    def test_da2_example(self):
        alg = get_algebra("DA2", {"mu1": 2})
        assert alg.dim == 4
        expected = Tensor3.from_map(4, 4, 4, {
            (0, 0, 2): 1, (1, 1, 2): 1,     # A2
            (3, 0, 3): 2, (3, 2, 3): 2,     # u o e1 = 2u, u o e3 = 2u
        })
        assert alg.mult == expected

    def test_d5_checks_out_end_to_end(self):
        params = {"lambda": 2, "a13": 3, "a23": Fraction(-1, 2)}
        fd = get_flag_datum("D5", params)
        assert verify_flag(fd).passed
        d = get_extension_datum("D5", params)
        assert d.dimV == 1
        assert verify_datum(d).passed
        assert is_zinbiel(get_algebra("DA5", params)).passed

    def test_t51_checks_out_end_to_end(self):
        params = {"lambda": -1, "b23": 4}
        assert verify_flag(get_flag_datum("T51", params)).passed
        assert is_zinbiel(get_algebra("TA51", params)).passed

    def test_unknown_extension_id(self):
        with pytest.raises(FixtureError, match="unknown flag-family id"):
            get_algebra("DA7", {})
        with pytest.raises(FixtureError, match="unknown fixture id"):
            get_algebra("B1", {})
        with pytest.raises(FixtureError, match="unknown flag-family id"):
            get_flag_datum("A1")

    def test_datum_agrees_with_built_extension(self):
        # at all-ones parameters exactly the functional-free families
        # yield valid datums, and the check report always agrees with
        # checking the forced build directly
        passing = set()
        for fid in flag_family_ids():
            fd = get_flag_datum(fid, canonical(fid))
            ok = verify_flag(fd).passed
            ext = "DA" + fid[1:] if fid[0] == "D" else "TA" + fid[1:]
            assert ok == is_zinbiel(get_algebra(ext, canonical(fid))).passed, fid
            if ok:
                passing.add(fid)
        assert passing == {"D5", "T51"}

    @pytest.mark.xfail(strict=True, reason="recorded families with a nonzero "
                       "functional do not satisfy the flag conditions, so "
                       "their extensions are not Zinbiel")
    def test_every_extension_is_zinbiel_at_random_params(self):
        rng = random.Random(99)
        for fid in flag_family_ids():
            for _ in range(5):
                params = {name: rand_nonzero(rng)
                          for name in required_params(fid)}
                assert is_zinbiel(get_algebra(
                    "DA" + fid[1:] if fid[0] == "D" else "TA" + fid[1:],
                    params)).passed, fid
