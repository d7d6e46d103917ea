import math

import numpy as np
import pytest

from doublejc import (
    ALL_PAIRS,
    ATOM_PAIR,
    BasisIndex,
    InitialState,
    ModelParams,
    Propagator,
    PureState,
    QubitEquivalenceError,
    Subsystem,
    SubsystemPair,
    build_hamiltonian,
    derive_constants,
    evolve,
    initial_state_vector,
    pair_concurrence,
    partial_trace_pair,
    phi_amplitudes,
    psi_amplitudes,
    psi_reduced_density,
    total_excitation,
    wootters_concurrence,
)

MODES = SubsystemPair.from_name("ab")


def bell_rho(signs=(1, 1), positions=(1, 2)):
    """Projector onto (|i> + s|j>)/sqrt(2) in the two-qubit basis."""
    vec = np.zeros(4, dtype=complex)
    vec[positions[0]] = signs[0] / math.sqrt(2)
    vec[positions[1]] = signs[1] / math.sqrt(2)
    return np.outer(vec, vec.conj())


def random_sample(rng):
    alpha = rng.uniform(0, math.pi / 2)
    delta = rng.uniform(-2.0, 2.0)
    big_g = rng.uniform(0.2, 3.0)
    t = rng.uniform(0.0, 20.0)
    return alpha, ModelParams.from_detuning(delta, big_g), t


# ------------------------------------------------------------ Hamiltonian

def test_single_excitation_block_resonant():
    h = build_hamiltonian(ModelParams(1.0, 1.0, 0.5), cutoff=1).entries
    up_dn_00 = BasisIndex(1, 0, 0, 0).flatten(1)
    dn_dn_10 = BasisIndex(0, 0, 1, 0).flatten(1)
    block = h[np.ix_([up_dn_00, dn_dn_10], [up_dn_00, dn_dn_10])]
    assert np.allclose(block, [[1.0, 0.5], [0.5, 1.0]])
    assert np.linalg.eigvalsh(block) == pytest.approx([0.5, 1.5])


def test_single_excitation_eigenvalues_detuned():
    params = ModelParams(2.0, 1.0, 0.5)
    h = build_hamiltonian(params, cutoff=1).entries
    i = BasisIndex(1, 0, 0, 0).flatten(1)
    j = BasisIndex(0, 0, 1, 0).flatten(1)
    block = h[np.ix_([i, j], [i, j])]
    expected = [1.5 - math.sqrt(2) / 2, 1.5 + math.sqrt(2) / 2]
    assert np.linalg.eigvalsh(block) == pytest.approx(expected, rel=1e-14)


def test_hamiltonian_rejects_bad_cutoff():
    with pytest.raises(ValueError):
        build_hamiltonian(ModelParams(1.0, 1.0, 0.5), cutoff=0)


@pytest.mark.parametrize("cutoff", [1, 2, 3])
def test_hamiltonian_conserves_excitation(cutoff):
    rng = np.random.default_rng(53)
    n_exc = total_excitation(cutoff).entries
    for _ in range(5):
        params = ModelParams(rng.uniform(0.5, 3), rng.uniform(0.5, 3), rng.uniform(0.1, 1))
        h = build_hamiltonian(params, cutoff).entries
        assert np.abs(h @ n_exc - n_exc @ h).max() <= 1e-12
        assert np.abs(h - h.conj().T).max() <= 1e-12


def test_decoupled_limit_static_populations():
    # couplings must stay positive, so probe the g -> 0 limit instead of g = 0
    params = ModelParams(1.3, 0.9, 1e-9)
    h = build_hamiltonian(params, cutoff=1)
    off_diag = h.entries - np.diag(np.diag(h.entries))
    assert np.abs(off_diag).max() <= 1e-9
    state0 = initial_state_vector(InitialState.psi(0.6), cutoff=1)
    state1 = evolve(h, state0, 5.0)
    assert np.abs(np.abs(state1.amplitudes) ** 2 - np.abs(state0.amplitudes) ** 2).max() <= 1e-12


# ------------------------------------------------------------- evolution

def test_evolve_identity_at_t0():
    params = ModelParams(1.7, 1.1, 0.4)
    state0 = initial_state_vector(InitialState.phi(0.8), cutoff=1)
    state1 = evolve(build_hamiltonian(params, 1), state0, 0.0)
    assert np.allclose(state1.amplitudes, state0.amplitudes, atol=1e-15)


def test_evolve_full_transfer():
    params = ModelParams(1.0, 1.0, 0.5)
    state0 = initial_state_vector(InitialState.psi(math.pi / 4), cutoff=1)
    state1 = evolve(build_hamiltonian(params, 1), state0, math.pi)
    populations = np.abs(state1.amplitudes) ** 2
    i = BasisIndex(0, 0, 1, 0).flatten(1)
    j = BasisIndex(0, 0, 0, 1).flatten(1)
    assert populations[i] == pytest.approx(0.5, abs=1e-12)
    assert populations[j] == pytest.approx(0.5, abs=1e-12)
    assert populations.sum() == pytest.approx(1.0, abs=1e-12)


def test_evolve_eigenstate_is_stationary():
    params = ModelParams(1.4, 1.0, 0.3)
    h = build_hamiltonian(params, cutoff=2)
    energies, modes = np.linalg.eigh(h.entries)
    state0 = PureState(modes[:, 4].astype(complex), cutoff=2)
    state1 = evolve(h, state0, 2.7)
    phase = np.exp(-1j * energies[4] * 2.7)
    assert np.abs(state1.amplitudes - phase * state0.amplitudes).max() <= 1e-12
    assert np.abs(np.abs(state1.amplitudes) ** 2 - np.abs(state0.amplitudes) ** 2).max() <= 1e-12


def test_evolve_preserves_norm_and_excitation():
    rng = np.random.default_rng(59)
    for _ in range(25):
        alpha, params, t = random_sample(rng)
        family = InitialState.psi if rng.random() < 0.5 else InitialState.phi
        state0 = initial_state_vector(family(alpha), cutoff=1)
        n_exc = total_excitation(1).entries
        state1 = evolve(build_hamiltonian(params, 1), state0, t)
        assert abs(np.linalg.norm(state1.amplitudes) - 1.0) <= 1e-12
        before = np.vdot(state0.amplitudes, n_exc @ state0.amplitudes).real
        after = np.vdot(state1.amplitudes, n_exc @ state1.amplitudes).real
        assert after == pytest.approx(before, abs=1e-12)


def test_oracle_reproduces_psi_amplitudes():
    rng = np.random.default_rng(61)
    propagators = {}
    worst = 0.0
    for _ in range(200):
        alpha, params, t = random_sample(rng)
        key = (params.omega, params.nu, params.g)
        if key not in propagators:
            propagators[key] = Propagator(build_hamiltonian(params, 1))
        state = propagators[key].evolve(initial_state_vector(InitialState.psi(alpha), 1), t)
        closed = psi_amplitudes(alpha, derive_constants(params), t).to_state(1)
        worst = max(worst, np.abs(state.amplitudes - closed.amplitudes).max())
    assert worst <= 1e-9


def test_oracle_reproduces_phi_amplitudes():
    rng = np.random.default_rng(67)
    worst = 0.0
    for _ in range(200):
        alpha, params, t = random_sample(rng)
        state = evolve(build_hamiltonian(params, 1), initial_state_vector(InitialState.phi(alpha), 1), t)
        closed = phi_amplitudes(alpha, derive_constants(params), t).to_state(1)
        worst = max(worst, np.abs(state.amplitudes - closed.amplitudes).max())
    assert worst <= 1e-9


@pytest.mark.parametrize("family", [InitialState.psi, InitialState.phi])
def test_cutoff_exactness(family):
    # no population ever reaches Fock level 2: cutoffs 1 and 3 agree exactly
    rng = np.random.default_rng(71)
    for _ in range(10):
        alpha, params, t = random_sample(rng)
        states = {}
        for cutoff in (1, 3):
            state0 = initial_state_vector(family(alpha), cutoff)
            states[cutoff] = evolve(build_hamiltonian(params, cutoff), state0, t)
        small, large = states[1], states[3]
        for index in range(small.dim):
            element = BasisIndex.unflatten(index, 1)
            diff = abs(small.amplitudes[index] - large.amplitude(element))
            assert diff <= 1e-12
        rho1 = partial_trace_pair(small, ATOM_PAIR).entries
        rho3 = partial_trace_pair(large, ATOM_PAIR).entries
        assert np.abs(rho1 - rho3).max() <= 1e-12


# ----------------------------------------------------------- partial trace

def test_partial_trace_product_state():
    state = initial_state_vector(InitialState.psi(0.0), cutoff=1)  # |eg00>
    rho = partial_trace_pair(state, ATOM_PAIR).entries
    expected = np.zeros((4, 4))
    expected[1, 1] = 1.0  # |eg>
    assert np.allclose(rho, expected, atol=1e-15)


def test_partial_trace_atom_with_own_vacuum_mode():
    state = initial_state_vector(InitialState.psi(math.pi / 4), cutoff=1)
    rho = partial_trace_pair(state, SubsystemPair.from_name("Aa"))
    assert wootters_concurrence(rho) == pytest.approx(0.0, abs=1e-12)


def test_partial_trace_matches_closed_form_matrix():
    params = ModelParams.from_detuning(0.5, 1.0)
    alpha, t = math.pi / 6, 1.7
    state = evolve(build_hamiltonian(params, 1), initial_state_vector(InitialState.psi(alpha), 1), t)
    oracle_rho = partial_trace_pair(state, ATOM_PAIR).entries
    closed_rho = psi_reduced_density(alpha, derive_constants(params), t).entries
    assert np.abs(oracle_rho - closed_rho).max() <= 1e-10


def test_partial_trace_pair_ordering():
    # |eg00>: atom A excited. Pair (a, A) puts the mode first: |ge><ge|
    state = initial_state_vector(InitialState.psi(0.0), cutoff=1)
    rho = partial_trace_pair(state, SubsystemPair.from_name("aA")).entries
    expected = np.zeros((4, 4))
    expected[2, 2] = 1.0
    assert np.allclose(rho, expected, atol=1e-15)


def test_qubit_equivalence_violation():
    amps = np.zeros(36, dtype=complex)
    amps[BasisIndex(1, 0, 2, 0).flatten(2)] = 1.0  # two photons in mode a
    state = PureState(amps, cutoff=2)
    with pytest.raises(QubitEquivalenceError):
        partial_trace_pair(state, SubsystemPair.from_name("Aa"))
    # tracing mode a out entirely is still fine
    rho = partial_trace_pair(state, SubsystemPair.from_name("Ab")).entries
    assert rho[1, 1] == pytest.approx(1.0, abs=1e-15)


def test_pair_validation():
    with pytest.raises(ValueError):
        SubsystemPair(Subsystem.ATOM_A, Subsystem.ATOM_A)
    with pytest.raises(ValueError):
        SubsystemPair.from_name("AZ")
    assert [p.name for p in ALL_PAIRS] == ["AB", "ab", "Aa", "Bb", "Ab", "Ba"]


# ------------------------------------------------------------- concurrence

def test_wootters_bell_states():
    assert wootters_concurrence(bell_rho()) == pytest.approx(1.0, abs=1e-12)
    assert wootters_concurrence(bell_rho((1, -1))) == pytest.approx(1.0, abs=1e-12)
    assert wootters_concurrence(bell_rho((1, 1), (0, 3))) == pytest.approx(1.0, abs=1e-12)


def test_wootters_product_states():
    for k in range(4):
        rho = np.zeros((4, 4), dtype=complex)
        rho[k, k] = 1.0
        assert wootters_concurrence(rho) == pytest.approx(0.0, abs=1e-12)
    plus = np.full(2, 1 / math.sqrt(2))
    vec = np.kron(plus, plus)
    assert wootters_concurrence(np.outer(vec, vec)) == pytest.approx(0.0, abs=1e-12)


def test_wootters_werner_state():
    singlet = bell_rho((1, -1))
    for p, expected in [(0.8, 0.7), (0.5, 0.25), (1 / 3, 0.0), (0.2, 0.0)]:
        rho = p * singlet + (1 - p) * np.eye(4) / 4
        assert wootters_concurrence(rho) == pytest.approx(expected, abs=1e-12)


def test_wootters_input_validation():
    bad = np.eye(4, dtype=complex) / 4
    bad[0, 1] = 0.3  # not Hermitian
    with pytest.raises(ValueError, match="Hermitian"):
        wootters_concurrence(bad)
    with pytest.raises(ValueError, match="trace"):
        wootters_concurrence(np.eye(4, dtype=complex))


def test_wootters_bounds_on_random_reductions():
    rng = np.random.default_rng(73)
    for _ in range(1000):
        amps = rng.normal(size=16) + 1j * rng.normal(size=16)
        amps /= np.linalg.norm(amps)
        state = PureState(amps, cutoff=1)
        pair = ALL_PAIRS[rng.integers(0, len(ALL_PAIRS))]
        value = pair_concurrence(state, pair)
        assert 0.0 <= value <= 1.0


def test_pair_concurrence_initial_bell():
    state = initial_state_vector(InitialState.psi(math.pi / 4), cutoff=1)
    assert pair_concurrence(state, ATOM_PAIR) == pytest.approx(1.0, abs=1e-12)


def test_pair_concurrence_modes_after_transfer():
    params = ModelParams(1.0, 1.0, 0.5)
    state = evolve(build_hamiltonian(params, 1), initial_state_vector(InitialState.psi(math.pi / 4), 1), math.pi)
    assert pair_concurrence(state, MODES) == pytest.approx(1.0, abs=1e-12)


def test_pair_concurrence_follows_resonant_cosine():
    params = ModelParams(1.0, 1.0, 0.5)
    propagator = Propagator(build_hamiltonian(params, 1))
    state0 = initial_state_vector(InitialState.psi(math.pi / 4), 1)
    for t in np.linspace(0, 4 * math.pi, 50):
        state = propagator.evolve(state0, float(t))
        expected = math.cos(t / 2) ** 2
        assert pair_concurrence(state, ATOM_PAIR) == pytest.approx(expected, abs=1e-10)
