import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commonsearch import statevector as sv
from commonsearch.errors import WiringError
from commonsearch.oracle import (BlackBox, InvocationCounter, OracleWiring, ProblemInstance,
                                 apply_black_box, apply_u_hbar, apply_u_kappa,
                                 common_solution_set, marked_branches, verify_ancilla_reset)
from reference import brute_force_common, random_state, u_hbar_matrix


def uniform(instance):
    return sv.apply_hadamard_layer(sv.make_zero_state(instance.num_qubits), range(instance.n))


def basis(width, index):
    amps = np.zeros(1 << width)
    amps[index] = 1
    return sv.from_amplitudes(amps)


# 1/2 sum_i |i>|f_A(i) f_B(i)>|0> for A={1,3}, B={2,3}, n=2: indices i*8 + anc
AFTER_MARKS = [0, 8 + 0b100, 16 + 0b010, 24 + 0b110]
AFTER_AND = [0, 8 + 0b100, 16 + 0b010, 24 + 0b111]
AFTER_UHBAR = [0, 8, 16, 25]


def state_on(indices, width=5):
    amps = np.zeros(1 << width)
    amps[indices] = 0.5
    return sv.from_amplitudes(amps)


class TestCommonSet:
    def test_two_databases(self, two_db):
        assert common_solution_set(two_db) == {3}

    def test_empty_database_absorbs(self):
        inst = ProblemInstance.from_solution_sets(3, [{1, 2, 3}, set(), {1}])
        assert common_solution_set(inst) == set()

    def test_three_databases(self, three_db):
        assert common_solution_set(three_db) == brute_force_common(3, [set(range(8)), {1, 5, 7}, {5, 7}])
        assert common_solution_set(three_db) == {5, 7}

    @settings(max_examples=60, deadline=None)
    @given(n=st.integers(1, 10), kappa=st.integers(2, 5), seed=st.integers(0, 2**32 - 1))
    def test_matches_conjunction_loop(self, n, kappa, seed):
        rng = np.random.default_rng(seed)
        sets = [set(np.flatnonzero(rng.random(1 << n) < 0.7).tolist()) for _ in range(kappa)]
        inst = ProblemInstance.from_solution_sets(n, sets)
        assert common_solution_set(inst) == brute_force_common(n, sets)


class TestTypes:
    def test_blackbox_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            BlackBox(2, {4})

    def test_blackbox_membership_total(self):
        box = BlackBox(2, [1, 3, 3], "A")
        assert [box(x) for x in range(4)] == [0, 1, 0, 1]

    def test_instance_requires_two_boxes_of_equal_width(self):
        with pytest.raises(ValueError):
            ProblemInstance(2, [BlackBox(2, {1}, "A")])
        with pytest.raises(ValueError):
            ProblemInstance(2, [BlackBox(2, {1}, "A"), BlackBox(3, {1}, "B")])

    def test_wiring_target_outside_controls(self):
        with pytest.raises(WiringError):
            OracleWiring((0, 3), 2)


class TestBlackBox:
    def test_marks_target_with_membership(self, two_db):
        out = apply_black_box(uniform(two_db), two_db.black_boxes[0],
                              OracleWiring.for_database(2, 0))
        expected = np.zeros(32)
        expected[[0, 8 + 0b100, 16, 24 + 0b100]] = 0.5
        np.testing.assert_allclose(out.amplitudes, expected, atol=1e-12)

    def test_empty_box_is_identity_but_counted(self, two_db):
        counter = InvocationCounter()
        s = uniform(two_db)
        out = apply_black_box(s, BlackBox(2, set(), "A"), OracleWiring.for_database(2, 0), counter)
        np.testing.assert_array_equal(out.amplitudes, s.amplitudes)
        assert counter.per_black_box_calls["A"] == 1

    def test_twice_is_identity(self, two_db):
        rng = np.random.default_rng(1)
        s = sv.from_amplitudes(random_state(5, rng))
        counter = InvocationCounter()
        w = OracleWiring.for_database(2, 1)
        box = two_db.black_boxes[1]
        out = apply_black_box(apply_black_box(s, box, w, counter), box, w, counter)
        np.testing.assert_allclose(out.amplitudes, s.amplitudes, atol=1e-12)
        assert counter.per_black_box_calls["B"] == 2

    @pytest.mark.parametrize("wiring", [OracleWiring((0, 1), 4), OracleWiring((0, 0), 2),
                                        OracleWiring((1, 2), 3)])
    def test_bad_wiring(self, two_db, wiring):
        with pytest.raises(WiringError):
            apply_black_box(uniform(two_db), two_db.black_boxes[0], wiring)


class TestUKappa:
    def test_all_controls_set(self):
        # |i=2>|11>|0> -> |i=2>|11>|1>
        out = apply_u_kappa(basis(5, 16 + 0b110), 2)
        np.testing.assert_array_equal(out.amplitudes, basis(5, 16 + 0b111).amplitudes)

    def test_control_unmet(self):
        s = basis(5, 16 + 0b100)
        np.testing.assert_array_equal(apply_u_kappa(s, 2).amplitudes, s.amplitudes)

    def test_marks_common_branch_only(self):
        counter = InvocationCounter()
        out = apply_u_kappa(state_on(AFTER_MARKS), 2, counter)
        np.testing.assert_allclose(out.amplitudes, state_on(AFTER_AND).amplitudes)
        assert counter.u_kappa_calls == 1


class TestUHbar:
    def test_uniform_two_databases(self, two_db):
        counter = InvocationCounter()
        out = apply_u_hbar(uniform(two_db), two_db, counter)
        np.testing.assert_allclose(out.amplitudes, state_on(AFTER_UHBAR).amplitudes, atol=1e-12)
        assert counter.as_dict() == {"A": 2, "B": 2, "U_kappa": 1}

    def test_matches_dense_composition(self, two_db):
        U = u_hbar_matrix(2, [{1, 3}, {2, 3}])
        rng = np.random.default_rng(9)
        v = random_state(5, rng)
        out = apply_u_hbar(sv.from_amplitudes(v), two_db)
        np.testing.assert_allclose(out.amplitudes, U @ v, atol=1e-12)
        np.testing.assert_allclose(U @ U, np.eye(32), atol=1e-12)

    def test_three_databases(self, three_db):
        out = apply_u_hbar(uniform(three_db), three_db)
        assert marked_branches(out, 3) == {5, 7}
        assert verify_ancilla_reset(out, 3, 3) == pytest.approx(1.0, abs=1e-12)

    def test_width_mismatch(self, two_db):
        with pytest.raises(WiringError):
            apply_u_hbar(sv.make_zero_state(6), two_db)

    @settings(max_examples=30, deadline=None)
    @given(n=st.integers(1, 5), kappa=st.integers(2, 4), seed=st.integers(0, 2**32 - 1))
    def test_involution_and_dense_agreement(self, n, kappa, seed):
        rng = np.random.default_rng(seed)
        sets = [set(np.flatnonzero(rng.random(1 << n) < 0.6).tolist()) for _ in range(kappa)]
        inst = ProblemInstance.from_solution_sets(n, sets)
        v = random_state(inst.num_qubits, rng)
        s = sv.from_amplitudes(v)
        once = apply_u_hbar(s, inst)
        np.testing.assert_allclose(apply_u_hbar(once, inst).amplitudes, v, atol=1e-12)
        if inst.num_qubits <= 8:
            np.testing.assert_allclose(once.amplitudes, u_hbar_matrix(n, sets) @ v, atol=1e-12)

    def test_database_order_irrelevant(self):
        rng = np.random.default_rng(4)
        n, kappa = 3, 4
        sets = [set(np.flatnonzero(rng.random(8) < 0.6).tolist()) for _ in range(kappa)]
        inst = ProblemInstance.from_solution_sets(n, sets)
        s = sv.from_amplitudes(random_state(inst.num_qubits, rng))
        ref = apply_u_hbar(s, inst).amplitudes
        for _ in range(5):
            order = rng.permutation(kappa).tolist()
            np.testing.assert_array_equal(apply_u_hbar(s, inst, order=order).amplitudes, ref)

    @pytest.mark.parametrize("n,kappa", [(2, 2), (3, 3), (4, 2)])
    def test_exhaustive_marking(self, n, kappa):
        rng = np.random.default_rng(n * 10 + kappa)
        sets = [set(np.flatnonzero(rng.random(1 << n) < 0.7).tolist()) for _ in range(kappa)]
        inst = ProblemInstance.from_solution_sets(n, sets)
        common = brute_force_common(n, sets)
        shift = kappa + 1
        for i, b in itertools.product(range(1 << n), (0, 1)):
            out = apply_u_hbar(basis(inst.num_qubits, (i << shift) | b), inst)
            expected = (i << shift) | (b ^ (i in common))
            assert out.amplitudes[expected] == 1


class TestAncillaReset:
    def test_after_uhbar(self):
        assert verify_ancilla_reset(state_on(AFTER_UHBAR), 2, 2) == pytest.approx(1.0)

    def test_before_reset(self):
        assert verify_ancilla_reset(state_on(AFTER_AND), 2, 2) == pytest.approx(0.25)

    def test_zero_register(self):
        assert verify_ancilla_reset(sv.make_zero_state(5), 2, 2) == 1.0
