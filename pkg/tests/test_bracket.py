"""Bracket tables, verification checks, and the chain-constant picture.

The 4-crown table with weights (1, 2, 3, 4) is frozen below entry by
entry; it doubles as the reference non-standard structure.  All other
oracles were derived by hand from the defining formula
B(f, g)(x, y) = sigma(x, y) [f, g](x, y).
"""

import random

import pytest

from conftest import (
    antichain,
    corpus_params,
    crown_plus_chain3,
    diamond,
    fence3,
    random_sigma,
)
from poisset import (
    INTEGERS,
    RATIONALS,
    Bracket,
    IncidenceElement,
    Interval,
    PiecewiseWitness,
    SigmaMap,
    StrictPair,
    check_antisymmetric,
    check_biderivation,
    check_jacobi,
    extract_lambda,
    extract_sigma,
    from_covers,
    from_sigma,
    integers_mod,
    is_chain_constant,
    is_standard,
    lemma_suite,
    make_chain,
    make_crown,
    random_element,
    verify_piecewise_witness,
)
from poisset.errors import (
    InconsistentAntisymmetry,
    InvalidPair,
    NotABiderivation,
    NotAField,
    NotChainConstant,
    PosetMismatch,
    RingMismatch,
)

CROWN = make_crown()
CHAIN3 = make_chain(3)
Q = RATIONALS


def el(poset, table, ring=Q):
    return IncidenceElement(
        poset,
        ring,
        {Interval(lo, hi): ring.scalar(c) for (lo, hi), c in table.items()},
    )


def crown_sigma(l, m, n, e, ring=Q):
    return SigmaMap(
        CROWN, ring, {("1", "3"): l, ("1", "4"): m, ("2", "3"): n, ("2", "4"): e}
    )


def crown_table(l, m, n, e, ring=Q):
    """The 4-crown bracket table with weights (l, m, n, e), one side."""
    return {
        (("1", "1"), ("1", "3")): el(CROWN, {("1", "3"): l}, ring),
        (("1", "1"), ("1", "4")): el(CROWN, {("1", "4"): m}, ring),
        (("2", "2"), ("2", "3")): el(CROWN, {("2", "3"): n}, ring),
        (("2", "2"), ("2", "4")): el(CROWN, {("2", "4"): e}, ring),
        (("1", "3"), ("3", "3")): el(CROWN, {("1", "3"): l}, ring),
        (("1", "4"), ("4", "4")): el(CROWN, {("1", "4"): m}, ring),
        (("2", "3"), ("3", "3")): el(CROWN, {("2", "3"): n}, ring),
        (("2", "4"), ("4", "4")): el(CROWN, {("2", "4"): e}, ring),
    }


class TestSigmaMap:
    def test_missing_pairs_default_to_zero(self):
        sigma = SigmaMap(CROWN, Q, {("1", "3"): 1})
        assert sigma.value("1", "4").is_zero()
        assert sigma.value("1", "3") == Q.one

    def test_rejects_non_strict_pairs(self):
        with pytest.raises(InvalidPair):
            SigmaMap(CROWN, Q, {("1", "1"): 1})
        with pytest.raises(InvalidPair):
            SigmaMap(CROWN, Q, {("3", "4"): 1})
        with pytest.raises(InvalidPair):
            SigmaMap(CROWN, Q, {("3", "1"): 1})
        sigma = SigmaMap(CROWN, Q, {})
        with pytest.raises(InvalidPair):
            sigma.value("1", "1")

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatch):
            SigmaMap(CROWN, Q, {("1", "3"): INTEGERS.one})

    def test_accepts_raw_integers(self):
        sigma = SigmaMap(CROWN, integers_mod(5), {("1", "3"): 7})
        assert sigma.value("1", "3").value == 2

    def test_chain_constancy(self):
        # every crown map is chain-constant: the components are singletons
        assert crown_sigma(1, 2, 3, 4).is_chain_constant()
        assert not SigmaMap(
            CHAIN3, Q, {("1", "2"): 1, ("2", "3"): 2}
        ).is_chain_constant()
        assert SigmaMap(
            CHAIN3, Q, {("1", "2"): 2, ("2", "3"): 2, ("1", "3"): 2}
        ).is_chain_constant()
        f3 = fence3()
        assert SigmaMap(f3, Q, {("a", "b"): 1, ("c", "b"): 2}).is_chain_constant()
        assert is_chain_constant(SigmaMap(antichain(3), Q, {}))

    def test_json_roundtrip(self):
        sigma = crown_sigma(1, -2, 0, 4)
        data = sigma.to_json()
        assert len(data["entries"]) == 4  # total map, zeros included
        assert SigmaMap.from_json(CROWN, Q, data) == sigma

    def test_equality_and_hash(self):
        assert crown_sigma(1, 2, 3, 4) == crown_sigma(1, 2, 3, 4)
        assert crown_sigma(1, 2, 3, 4) != crown_sigma(1, 2, 3, 5)
        assert len({crown_sigma(0, 0, 0, 0), SigmaMap(CROWN, Q, {})}) == 1


class TestBracketTable:
    def test_crown_table_is_a_poisson_structure(self):
        bracket = Bracket.from_basis_table(CROWN, Q, crown_table(1, 2, 3, 4))
        assert check_antisymmetric(bracket).ok
        assert check_biderivation(bracket).ok
        assert check_jacobi(bracket).ok

    def test_crown_table_matches_from_sigma(self):
        assert Bracket.from_basis_table(
            CROWN, Q, crown_table(1, 2, 3, 4)
        ) == from_sigma(crown_sigma(1, 2, 3, 4))

    def test_mirror_values_are_negated(self):
        bracket = Bracket.from_basis_table(CROWN, Q, crown_table(1, 2, 3, 4))
        e11, e13 = Interval("1", "1"), Interval("1", "3")
        assert bracket.value(e11, e13) == el(CROWN, {("1", "3"): 1})
        assert bracket.value(e13, e11) == el(CROWN, {("1", "3"): -1})
        assert bracket.value(e11, e11).is_zero()

    def test_consistent_mirror_entries_accepted(self):
        table = dict(crown_table(1, 2, 3, 4))
        table[(("1", "3"), ("1", "1"))] = el(CROWN, {("1", "3"): -1})
        assert Bracket.from_basis_table(CROWN, Q, table) == Bracket.from_basis_table(
            CROWN, Q, crown_table(1, 2, 3, 4)
        )

    def test_inconsistent_mirror_rejected(self):
        table = dict(crown_table(1, 2, 3, 4))
        table[(("1", "3"), ("1", "1"))] = el(CROWN, {("1", "3"): 1})
        with pytest.raises(InconsistentAntisymmetry):
            Bracket.from_basis_table(CROWN, Q, table)

    def test_nonzero_diagonal_rejected(self):
        with pytest.raises(InconsistentAntisymmetry):
            Bracket.from_basis_table(
                CROWN,
                Q,
                {(("1", "3"), ("1", "3")): el(CROWN, {("1", "3"): 1})},
            )

    def test_non_interval_key_rejected(self):
        with pytest.raises(InvalidPair):
            Bracket.from_basis_table(
                CROWN,
                Q,
                {(("3", "1"), ("1", "1")): el(CROWN, {("1", "3"): 1})},
            )

    def test_foreign_value_rejected(self):
        with pytest.raises(PosetMismatch):
            Bracket.from_basis_table(
                CROWN,
                Q,
                {(("1", "1"), ("1", "3")): el(CHAIN3, {("1", "2"): 1})},
            )
        with pytest.raises(RingMismatch):
            Bracket.from_basis_table(
                CROWN,
                Q,
                {
                    (("1", "1"), ("1", "3")): el(
                        CROWN, {("1", "3"): 1}, ring=INTEGERS
                    )
                },
            )

    def test_evaluate_is_bilinear(self):
        bracket = from_sigma(crown_sigma(1, 2, 3, 4))
        rng = random.Random(5)
        f = random_element(CROWN, Q, rng)
        g = random_element(CROWN, Q, rng)
        h = random_element(CROWN, Q, rng)
        two = Q.scalar(2)
        assert bracket.evaluate(f + g, h) == bracket.evaluate(
            f, h
        ) + bracket.evaluate(g, h)
        assert bracket.evaluate(f.scale(two), g) == bracket.evaluate(f, g).scale(two)
        assert bracket.evaluate(f, g) == -bracket.evaluate(g, f)

    def test_raw_mode_reads_table_literally(self):
        e11, e13 = Interval("1", "1"), Interval("1", "3")
        raw = Bracket.from_basis_table(
            CROWN,
            Q,
            {(e11, e13): el(CROWN, {("1", "3"): 1})},
            antisymmetric=False,
        )
        assert raw.value(e11, e13) == el(CROWN, {("1", "3"): 1})
        assert raw.value(e13, e11).is_zero()  # no derived mirror

    def test_raw_vs_antisymmetric_equality_compares_full_tables(self):
        one_sided = crown_table(1, 2, 3, 4)
        full = dict(one_sided)
        for (i, j), v in one_sided.items():
            full[(j, i)] = -v
        raw = Bracket.from_basis_table(CROWN, Q, full, antisymmetric=False)
        antisym = Bracket.from_basis_table(CROWN, Q, one_sided)
        assert raw == antisym
        assert antisym == raw


class TestBracketSerialization:
    def test_antisymmetric_json_carries_both_orientations(self):
        bracket = from_sigma(crown_sigma(1, 2, 3, 4))
        data = bracket.to_json()
        assert len(data["pairs"]) == 16  # 8 stored pairs and their mirrors

    def test_json_roundtrip_antisymmetric(self):
        bracket = from_sigma(crown_sigma(1, 2, 3, 4))
        assert Bracket.from_json(CROWN, Q, bracket.to_json()) == bracket

    def test_json_reloaded_raw_still_passes_checks(self):
        bracket = from_sigma(crown_sigma(1, 2, 3, 4))
        raw = Bracket.from_json(CROWN, Q, bracket.to_json(), antisymmetric=False)
        assert check_antisymmetric(raw).ok
        assert check_biderivation(raw).ok
        assert raw == bracket

    def test_duplicate_pair_rejected(self):
        bracket = from_sigma(crown_sigma(1, 0, 0, 0))
        data = bracket.to_json()
        data["pairs"].append(data["pairs"][0])
        with pytest.raises(InvalidPair):
            Bracket.from_json(CROWN, Q, data)


class TestChecks:
    def test_half_table_fails_antisymmetry_once(self):
        # mirror left unset: B(e11, e13) = e13 but B(e13, e11) = 0
        raw = Bracket.from_basis_table(
            CROWN,
            Q,
            {(("1", "1"), ("1", "3")): el(CROWN, {("1", "3"): 1})},
            antisymmetric=False,
        )
        report = check_antisymmetric(raw)
        assert not report.ok
        assert len(report.failures) == 1

    def test_check_instance_counts_on_crown(self):
        bracket = from_sigma(crown_sigma(1, 2, 3, 4))
        anti = check_antisymmetric(bracket)
        assert anti.ok and anti.total_passes() == 36  # 8 diagonal + 28 pairs
        bider = check_biderivation(bracket)
        assert bider.ok
        assert bider.pass_counts["leibniz_1"] == 512  # 8^3 triples
        assert bider.pass_counts["leibniz_2"] == 512
        jac = check_jacobi(bracket)
        assert jac.ok and jac.total_passes() == 512

    def test_leibniz_violation_detected(self):
        chain2 = make_chain(2)
        bad = Bracket.from_basis_table(
            chain2,
            Q,
            {(("1", "1"), ("1", "2")): el(chain2, {("1", "1"): 1})},
        )
        report = check_biderivation(bad)
        assert not report.ok
        failed_checks = {check for check, _ in report.failures}
        assert "leibniz_1" in failed_checks and "leibniz_2" in failed_checks
        # under antisymmetry the two identities fail on matching triples
        assert "leibniz_equivalence" not in failed_checks
        assert report.pass_counts.get("leibniz_equivalence") == 1

    def test_jacobi_violation_detected(self):
        bad = Bracket.from_basis_table(
            CHAIN3,
            Q,
            {
                (("1", "1"), ("1", "2")): el(CHAIN3, {("1", "2"): 1}),
                (("1", "2"), ("2", "3")): el(CHAIN3, {("1", "3"): 1}),
            },
        )
        assert not check_jacobi(bad).ok

    def test_zero_bracket_passes_everything(self):
        zero = Bracket.from_basis_table(CHAIN3, Q, {})
        assert check_antisymmetric(zero).ok
        assert check_biderivation(zero).ok
        assert check_jacobi(zero).ok

    def test_report_json_shape(self):
        raw = Bracket.from_basis_table(
            CROWN,
            Q,
            {(("1", "1"), ("1", "3")): el(CROWN, {("1", "3"): 1})},
            antisymmetric=False,
        )
        records = check_antisymmetric(raw).to_json()
        assert all(set(r) == {"check", "instance", "status"} for r in records)
        # a check name that failed anywhere lists its failures, not a summary
        assert all(r["status"] == "fail" for r in records)
        assert records[0]["instance"] == {"left": ["1", "1"], "right": ["1", "3"]}

        passing = check_antisymmetric(from_sigma(crown_sigma(1, 2, 3, 4)))
        records = passing.to_json()
        assert records == [
            {
                "check": "antisymmetry",
                "instance": {"instances": 36},
                "status": "pass",
            }
        ]


class TestFromSigma:
    def test_rejects_non_chain_constant(self):
        with pytest.raises(NotChainConstant):
            from_sigma(SigmaMap(CHAIN3, Q, {("1", "2"): 1, ("2", "3"): 2}))

    def test_matches_defining_formula(self):
        # B(f, g)(x, y) = sigma(x, y) [f, g](x, y) on random arguments
        for poset, sigma_values in [
            (CROWN, {("1", "3"): 1, ("1", "4"): -2, ("2", "3"): 3, ("2", "4"): 5}),
            (fence3(), {("a", "b"): 2, ("c", "b"): -1}),
        ]:
            sigma = SigmaMap(poset, Q, sigma_values)
            bracket = from_sigma(sigma)
            rng = random.Random(17)
            for _ in range(10):
                f = random_element(poset, Q, rng)
                g = random_element(poset, Q, rng)
                out = bracket.evaluate(f, g)
                com = f.commutator(g)
                for x, y in poset.strict_pairs():
                    assert out.coeff(x, y) == sigma.value(x, y) * com.coeff(x, y)
                for x in poset.elements:
                    assert out.coeff(x, x).is_zero()

    @pytest.mark.parametrize("poset", corpus_params())
    def test_extract_sigma_roundtrip(self, poset):
        rng = random.Random(23)
        for ring in (Q, integers_mod(3)):
            for _ in range(3):
                sigma = random_sigma(poset, ring, rng)
                assert extract_sigma(from_sigma(sigma), check=False) == sigma

    def test_extract_sigma_gates_on_checks(self):
        raw = Bracket.from_basis_table(
            CROWN,
            Q,
            {(("1", "1"), ("1", "3")): el(CROWN, {("1", "3"): 1})},
            antisymmetric=False,
        )
        with pytest.raises(NotABiderivation):
            extract_sigma(raw)

    def test_works_over_non_field_rings(self):
        sigma = SigmaMap(CHAIN3, INTEGERS, {p: INTEGERS.scalar(2) for p in CHAIN3.strict_pairs()})
        bracket = from_sigma(sigma)
        assert check_biderivation(bracket).ok
        assert extract_sigma(bracket) == sigma


class TestExtractLambda:
    def test_crown_values(self):
        lam = extract_lambda(from_sigma(crown_sigma(1, 2, 3, 4)))
        e = Interval
        expected_one_sided = {
            (e("1", "1"), e("1", "3")): 1,
            (e("1", "1"), e("1", "4")): 2,
            (e("2", "2"), e("2", "3")): 3,
            (e("2", "2"), e("2", "4")): 4,
            (e("1", "3"), e("3", "3")): 1,
            (e("1", "4"), e("4", "4")): 2,
            (e("2", "3"), e("3", "3")): 3,
            (e("2", "4"), e("4", "4")): 4,
        }
        assert len(lam) == 16  # both orientations of the eight pairs
        for (i, j), value in expected_one_sided.items():
            assert lam[(i, j)] == Q.scalar(value)

    def test_symmetric(self):
        lam = extract_lambda(from_sigma(crown_sigma(1, 2, 3, 4)))
        for (i, j), value in lam.items():
            assert lam[(j, i)] == value

    def test_defined_exactly_on_noncommuting_pairs(self):
        bracket = from_sigma(crown_sigma(1, 2, 3, 4))
        lam = extract_lambda(bracket)
        ivs = CROWN.intervals()
        for i in ivs:
            for j in ivs:
                ei = IncidenceElement.basis(CROWN, Q, *i)
                ej = IncidenceElement.basis(CROWN, Q, *j)
                assert ((i, j) in lam) == (not ei.commutator(ej).is_zero())

    def test_reproduces_bracket_values(self):
        bracket = from_sigma(crown_sigma(2, 0, -1, 7))
        lam = extract_lambda(bracket)
        for (i, j), value in lam.items():
            ei = IncidenceElement.basis(CROWN, Q, *i)
            ej = IncidenceElement.basis(CROWN, Q, *j)
            assert bracket.value(i, j) == ei.commutator(ej).scale(value)

    def test_lemma_relations_on_chain(self):
        chain4 = make_chain(4)
        sigma = SigmaMap(
            chain4, Q, {p: Q.scalar(3) for p in chain4.strict_pairs()}
        )
        lam = extract_lambda(from_sigma(sigma))
        assert_lambda_relations(chain4, lam)

    def test_lemma_relations_on_crown(self):
        lam = extract_lambda(from_sigma(crown_sigma(1, 2, 3, 4)))
        assert_lambda_relations(CROWN, lam)


def assert_lambda_relations(poset, lam):
    """The four equational constraints a proportionality map satisfies."""
    e = Interval
    els = poset.elements
    lt = poset.lt
    for x in els:
        for y in els:
            if not lt(x, y):
                continue
            assert lam[(e(x, x), e(x, y))] == lam[(e(x, y), e(y, y))]
            for z in els:
                if not lt(y, z):
                    continue
                assert lam[(e(x, y), e(y, z))] == lam[(e(x, x), e(x, y))]
    for x in els:
        for y in els:
            if not poset.leq(x, y):
                continue
            for z in els:
                if not lt(y, z):
                    continue
                for u in els:
                    if lt(z, u):
                        assert lam[(e(x, y), e(y, z))] == lam[(e(x, y), e(y, u))]
    for x in els:
        for y in els:
            if not lt(x, y):
                continue
            for z in els:
                if not lt(y, z):
                    continue
                for u in els:
                    if poset.leq(z, u):
                        assert lam[(e(y, z), e(z, u))] == lam[(e(x, z), e(z, u))]


class TestIsStandard:
    def test_constant_sigma_gives_scaled_delta(self):
        sigma = SigmaMap(CHAIN3, Q, {p: Q.scalar(5) for p in CHAIN3.strict_pairs()})
        bracket = from_sigma(sigma)
        witness = is_standard(bracket)
        assert witness == IncidenceElement.delta(CHAIN3, Q).scale(Q.scalar(5))
        rng = random.Random(2)
        for _ in range(5):
            f = random_element(CHAIN3, Q, rng)
            g = random_element(CHAIN3, Q, rng)
            assert bracket.evaluate(f, g) == witness * f.commutator(g)

    def test_crown_with_distinct_weights_is_not_standard(self):
        assert is_standard(from_sigma(crown_sigma(1, 2, 3, 4))) is None

    def test_crown_with_equal_weights_is_standard(self):
        witness = is_standard(from_sigma(crown_sigma(5, 5, 5, 5)))
        assert witness == IncidenceElement.delta(CROWN, Q).scale(Q.scalar(5))

    def test_fence_needs_one_value_per_connected_component(self):
        f3 = fence3()
        split = from_sigma(SigmaMap(f3, Q, {("a", "b"): 1, ("c", "b"): 2}))
        assert is_standard(split) is None
        flat = from_sigma(SigmaMap(f3, Q, {("a", "b"): 2, ("c", "b"): 2}))
        assert is_standard(flat) == IncidenceElement.delta(f3, Q).scale(Q.scalar(2))

    def test_disjoint_components_scale_independently(self):
        P = crown_plus_chain3()
        values = {pair: Q.scalar(2) for pair in P.strict_pairs()}
        for pair in P.strict_pairs():
            if pair.lo.startswith("c"):
                values[pair] = Q.scalar(3)
        bracket = from_sigma(SigmaMap(P, Q, values))
        witness = is_standard(bracket)
        expected = el(
            P,
            {(x, x): 2 for x in ("1", "2", "3", "4")}
            | {(x, x): 3 for x in ("c1", "c2", "c3")},
        )
        assert witness == expected
        assert witness.is_central()

    def test_antichain_bracket_is_standard_with_zero_witness(self):
        P = antichain(3)
        bracket = from_sigma(SigmaMap(P, Q, {}))
        assert is_standard(bracket) == IncidenceElement.zero(P, Q)

    def test_gates_on_checks(self):
        raw = Bracket.from_basis_table(
            CROWN,
            Q,
            {(("1", "1"), ("1", "3")): el(CROWN, {("1", "3"): 1})},
            antisymmetric=False,
        )
        with pytest.raises(NotABiderivation):
            is_standard(raw)


class TestPiecewiseWitness:
    @staticmethod
    def two_chains():
        P = from_covers(
            ["a1", "a2", "b1", "b2", "b3"],
            [("a1", "a2"), ("b1", "b2"), ("b2", "b3")],
        )
        values = {
            pair: Q.scalar(2 if pair.lo.startswith("a") else 3)
            for pair in P.strict_pairs()
        }
        bracket = from_sigma(SigmaMap(P, Q, values))
        gens_a = [
            IncidenceElement.basis(P, Q, lo, hi)
            for lo, hi in P.intervals()
            if lo.startswith("a")
        ]
        gens_b = [
            IncidenceElement.basis(P, Q, lo, hi)
            for lo, hi in P.intervals()
            if lo.startswith("b")
        ]
        return P, bracket, gens_a, gens_b

    def test_valid_witness_passes(self):
        _, bracket, gens_a, gens_b = self.two_chains()
        witness = PiecewiseWitness(
            [gens_a, gens_b], [Q.scalar(2), Q.scalar(3)]
        )
        report = verify_piecewise_witness(bracket, witness)
        assert report.ok

    def test_wrong_scalar_fails_scaling(self):
        _, bracket, gens_a, gens_b = self.two_chains()
        witness = PiecewiseWitness(
            [gens_a, gens_b], [Q.scalar(2), Q.scalar(4)]
        )
        report = verify_piecewise_witness(bracket, witness)
        assert not report.ok
        assert {check for check, _ in report.failures} == {"piecewise.scaling"}

    def test_single_ideal_cannot_carry_two_scalars(self):
        _, bracket, gens_a, gens_b = self.two_chains()
        witness = PiecewiseWitness([gens_a + gens_b], [Q.scalar(2)])
        report = verify_piecewise_witness(bracket, witness)
        assert not report.ok
        assert {check for check, _ in report.failures} == {"piecewise.scaling"}

    def test_partial_cover_fails_direct_sum(self):
        _, bracket, gens_a, _ = self.two_chains()
        witness = PiecewiseWitness([gens_a], [Q.scalar(2)])
        report = verify_piecewise_witness(bracket, witness)
        assert any(check == "piecewise.direct_sum" for check, _ in report.failures)

    def test_non_ideal_detected(self):
        P, bracket, gens_a, gens_b = self.two_chains()
        # span{e_a1a1} is no Lie ideal: [e_a1a1, e_a1a2] = e_a1a2 escapes
        witness = PiecewiseWitness(
            [[gens_a[0]], gens_b], [Q.scalar(2), Q.scalar(3)]
        )
        report = verify_piecewise_witness(bracket, witness)
        assert any(check == "piecewise.lie_ideal" for check, _ in report.failures)

    def test_crown_rejects_single_scalar_witness(self):
        bracket = from_sigma(crown_sigma(1, 2, 3, 4))
        gens = [IncidenceElement.basis(CROWN, Q, *iv) for iv in CROWN.intervals()]
        witness = PiecewiseWitness([gens], [Q.one])
        report = verify_piecewise_witness(bracket, witness)
        assert not report.ok

    def test_requires_a_field(self):
        sigma = SigmaMap(CHAIN3, INTEGERS, {})
        bracket = from_sigma(sigma)
        witness = PiecewiseWitness([], [])
        with pytest.raises(NotAField):
            verify_piecewise_witness(bracket, witness)

    def test_mismatched_lengths_rejected(self):
        with pytest.raises(ValueError):
            PiecewiseWitness([[]], [])


class TestLemmaSuite:
    def test_passes_on_crown_poisson_structure(self):
        bracket = from_sigma(crown_sigma(1, 2, 3, 4))
        report = lemma_suite(bracket, samples=3)
        assert report.ok
        assert report.pass_counts["orthogonal_vanishing"] == 12  # 4 * 3 ordered pairs

    def test_detects_non_orthogonal_idempotent_values(self):
        bad = Bracket.from_basis_table(
            CROWN,
            Q,
            {(("1", "1"), ("2", "2")): el(CROWN, {("1", "3"): 1})},
        )
        report = lemma_suite(bad, samples=1)
        assert not report.ok
        assert ("orthogonal_vanishing", {"e": "1", "f": "2"}) in report.failures

    def test_strict_mode_gates_on_biderivation(self):
        bad = Bracket.from_basis_table(
            CROWN,
            Q,
            {(("1", "1"), ("2", "2")): el(CROWN, {("1", "3"): 1})},
        )
        with pytest.raises(NotABiderivation):
            lemma_suite(bad, strict=True)

    def test_deterministic_under_seed(self):
        bracket = from_sigma(crown_sigma(1, 2, 3, 4))
        a = lemma_suite(bracket, samples=2, seed=9)
        b = lemma_suite(bracket, samples=2, seed=9)
        assert a.pass_counts == b.pass_counts and a.failures == b.failures


class TestRestrictionLocality:
    def test_bracket_value_depends_only_on_the_restrictions(self):
        for poset, sigma_builder in [
            (CROWN, lambda: crown_sigma(1, -2, 3, 7)),
            (diamond(), None),
        ]:
            if sigma_builder is None:
                rng0 = random.Random(1)
                sigma = random_sigma(poset, Q, rng0)
            else:
                sigma = sigma_builder()
            bracket = from_sigma(sigma)
            rng = random.Random(31)
            for _ in range(20):
                f = random_element(poset, Q, rng)
                g = random_element(poset, Q, rng)
                for lo, hi in poset.intervals():
                    expected = bracket.evaluate(f, g).coeff(lo, hi)
                    restricted = bracket.evaluate(
                        f.restrict(lo, hi), g.restrict(lo, hi)
                    )
                    assert restricted.coeff(lo, hi) == expected
