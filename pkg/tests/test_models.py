"""Model catalog: superpositions, entangled pairs, the double liar, fixtures."""

import json

import numpy as np
import pytest

from liarsim.linalg import LinalgError, Operator, basis_outer, evolution_matrix, tensor_product
from liarsim.models import (
    DOUBLE_LIAR_CYCLE,
    DOUBLE_LIAR_SUBSPACE,
    PUBLISHED_H_SUB,
    PUBLISHED_U_D,
    NormalizationError,
    case_b_aligned,
    case_c_singlet,
    double_liar_model,
    lift_subspace_operator,
    pair_projectors,
    published_u_sub,
    single_liar_state,
    subspace_block,
    truth_projectors,
    verify_reference_matrices,
)


class TestSingleLiarState:
    def test_true_eigenstate(self):
        psi = single_liar_state(1.0, 0.0)
        p_true = np.diag([1.0, 0.0])
        assert np.array_equal(p_true @ psi.amplitudes, psi.amplitudes)

    def test_equal_superposition_probability_half(self):
        psi = single_liar_state(1 / np.sqrt(2), 1 / np.sqrt(2))
        p_true = np.diag([1.0, 0.0])
        assert abs(np.sum(np.abs(p_true @ psi.amplitudes) ** 2) - 0.5) <= 1e-12

    def test_false_eigenstate_annihilated_by_true(self):
        psi = single_liar_state(0.0, 1.0)
        p_true = np.diag([1.0, 0.0])
        assert np.all(p_true @ psi.amplitudes == 0.0)

    def test_rejects_non_normalized(self):
        with pytest.raises(NormalizationError):
            single_liar_state(1.0, 1.0)

    def test_complex_weights(self):
        psi = single_liar_state(0.6, 0.8j)
        assert abs(psi.norm() - 1.0) <= 1e-12


class TestEntangledPairs:
    def test_singlet_amplitudes(self):
        expected = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2.0)
        assert np.max(np.abs(case_c_singlet().amplitudes - expected)) == 0.0

    def test_aligned_amplitudes(self):
        expected = np.array([1.0, 0.0, 0.0, -1.0]) / np.sqrt(2.0)
        assert np.max(np.abs(case_b_aligned().amplitudes - expected)) == 0.0

    def test_singlet_first_sentence_true_weight(self):
        # Hand expansion: only the e1⊗e2 term survives P_{1,true}.
        proj = pair_projectors()[(1, "true")]
        assert abs(np.sum(np.abs(proj.matrix @ case_c_singlet().amplitudes) ** 2) - 0.5) <= 1e-12

    def test_singlet_anticorrelation(self):
        proj1 = pair_projectors()[(1, "true")]
        collapsed = proj1.matrix @ case_c_singlet().amplitudes
        collapsed = collapsed / np.linalg.norm(collapsed)
        proj2f = pair_projectors()[(2, "false")]
        assert abs(np.sum(np.abs(proj2f.matrix @ collapsed) ** 2) - 1.0) <= 1e-12

    def test_aligned_correlation(self):
        proj1 = pair_projectors()[(1, "true")]
        collapsed = proj1.matrix @ case_b_aligned().amplitudes
        collapsed = collapsed / np.linalg.norm(collapsed)
        proj2t = pair_projectors()[(2, "true")]
        assert abs(np.sum(np.abs(proj2t.matrix @ collapsed) ** 2) - 1.0) <= 1e-12

    def test_aligned_second_sentence_false_weight(self):
        proj = pair_projectors()[(2, "false")]
        assert abs(np.sum(np.abs(proj.matrix @ case_b_aligned().amplitudes) ** 2) - 0.5) <= 1e-12


class TestDoubleLiarModel:
    def setup_method(self):
        self.model = double_liar_model()

    def test_psi0_amplitudes(self):
        amps = self.model.psi0.amplitudes
        for flat in (3, 8, 10, 13):
            assert amps[flat - 1] == 0.5
        others = [i for i in range(16) if i + 1 not in (3, 8, 10, 13)]
        assert np.all(amps[others] == 0.0)

    def test_step_restricted_to_subspace_matches_published(self):
        block = subspace_block(self.model.u_step, DOUBLE_LIAR_SUBSPACE)
        assert np.array_equal(block, PUBLISHED_U_D)

    def test_step_permutes_cycle(self):
        # Brute-force application to each cycle basis vector.
        u = self.model.u_step.matrix
        order = list(DOUBLE_LIAR_CYCLE)
        for pos, flat in enumerate(order):
            e = np.zeros(16)
            e[flat - 1] = 1.0
            image = u @ e
            expected = np.zeros(16)
            expected[order[(pos + 1) % 4] - 1] = 1.0
            assert np.array_equal(image, expected)

    def test_step_identity_off_cycle(self):
        u = self.model.u_step.matrix
        for flat in range(1, 17):
            if flat in DOUBLE_LIAR_CYCLE:
                continue
            e = np.zeros(16)
            e[flat - 1] = 1.0
            assert np.array_equal(u @ e, e)

    def test_hamiltonian_upper_rows_match_published(self):
        h = subspace_block(self.model.hamiltonian, DOUBLE_LIAR_SUBSPACE)
        assert np.max(np.abs(h[:2, :] - PUBLISHED_H_SUB[:2, :])) <= 1e-12

    def test_hamiltonian_annihilates_psi0(self):
        out = self.model.hamiltonian.matrix @ self.model.psi0.amplitudes
        assert np.linalg.norm(out) <= 1e-10

    def test_psi0_time_invariant(self):
        rng = np.random.default_rng(21)
        for t in rng.uniform(0.0, 4.0 * np.pi, size=32):
            u = evolution_matrix(self.model.hamiltonian, float(t)).matrix
            assert np.linalg.norm(u @ self.model.psi0.amplitudes - self.model.psi0.amplitudes) <= 1e-10

    def test_step_time_reproduces_step_operator(self):
        u = evolution_matrix(self.model.hamiltonian, np.pi / 2.0).matrix
        assert np.max(np.abs(u - self.model.u_step.matrix)) <= 1e-10

    def test_step_fourth_power_is_identity(self):
        u4 = np.linalg.matrix_power(self.model.u_step.matrix, 4)
        assert np.array_equal(u4, np.eye(16))

    def test_projector_family_completeness(self):
        for k in (1, 2):
            total = sum(
                self.model.projectors[(k, v)].matrix for v in ("true", "false", "latent")
            )
            assert np.array_equal(total, np.eye(16))

    def test_projector_orthogonality(self):
        for k in (1, 2):
            pt = self.model.projectors[(k, "true")].matrix
            pf = self.model.projectors[(k, "false")].matrix
            assert np.all(pt @ pf == 0.0)

    def test_projectors_commute_across_sentences(self):
        for v in ("true", "false", "latent"):
            for w in ("true", "false", "latent"):
                a = self.model.projectors[(1, v)].matrix
                b = self.model.projectors[(2, w)].matrix
                assert np.array_equal(a @ b, b @ a)

    def test_born_weights_on_psi0(self):
        amps = self.model.psi0.amplitudes
        for key in ((1, "true"), (1, "false"), (2, "true"), (2, "false")):
            proj = self.model.projectors[key].matrix
            assert abs(np.sum(np.abs(proj @ amps) ** 2) - 0.25) <= 1e-12


class TestLiftSubspaceOperator:
    def test_identity_sub(self):
        out = lift_subspace_operator(np.eye(4), DOUBLE_LIAR_SUBSPACE, 16)
        assert np.array_equal(out.matrix, np.eye(16))

    def test_step_lift_off_diagonal_count(self):
        out = lift_subspace_operator(PUBLISHED_U_D, DOUBLE_LIAR_SUBSPACE, 16).matrix
        off = [(r, c) for r in range(16) for c in range(16) if r != c and out[r, c] != 0]
        assert len(off) == 4
        model = double_liar_model()
        assert np.array_equal(out, model.u_step.matrix)

    def test_duplicate_indices_rejected(self):
        with pytest.raises(LinalgError):
            lift_subspace_operator(np.eye(2), (3, 3), 16)

    def test_subspace_entry_lands_on_flat_pair(self):
        # Subspace coordinate (1,3) sits at flat (3,10), the matrix unit
        # O_{1,3} ⊗ O_{3,2} of the four-level factors.
        sub = np.zeros((4, 4))
        sub[0, 2] = 1.0
        lifted = lift_subspace_operator(sub, DOUBLE_LIAR_SUBSPACE, 16).matrix
        outer = tensor_product(basis_outer(1, 3, 4), basis_outer(3, 2, 4)).matrix
        assert lifted[2, 9] == 1.0
        assert outer[2, 9] == 1.0
        off_diag = lifted - np.diag(np.diag(lifted))
        assert np.array_equal(off_diag, outer)


class TestFixtureReport:
    def test_default_report_is_ok(self):
        rep = verify_reference_matrices()
        assert rep.ok
        verdicts = {f.name: f.verdict for f in rep.fixtures}
        assert verdicts["U_D"] == "match"
        assert verdicts["U_sub(t) closed form"] == "match"
        assert verdicts["H_sub rows 1-2"] == "match"
        assert verdicts["H_sub lower-left block"] == "match"
        assert verdicts["H_sub lower-right block"] == "documented-erratum"
        assert verdicts["U(t) term kappa=3 lambda=10"] == "documented-erratum"

    def test_u_d_deviation_zero(self):
        rep = verify_reference_matrices()
        u_d = next(f for f in rep.fixtures if f.name == "U_D")
        assert u_d.deviation == 0.0

    def test_erratum_block_deviation(self):
        rep = verify_reference_matrices()
        block = next(f for f in rep.fixtures if f.name == "H_sub lower-right block")
        assert block.deviation == 1.0
        deviations = np.abs(block.derived - block.printed)
        assert int(np.sum(deviations == 1.0)) == 4
        assert block.note

    def test_finite_difference_oracle_against_engine(self):
        # d/dt of the published closed form at 0, times i, is the generator.
        step = 1e-6
        fd = 1j * (published_u_sub(step) - published_u_sub(-step)) / (2 * step)
        model = double_liar_model()
        derived = subspace_block(model.hamiltonian, DOUBLE_LIAR_SUBSPACE)
        assert np.max(np.abs(fd - derived)) <= 1e-4

    def test_unreachable_tolerance_flags_unexpected(self):
        rep = verify_reference_matrices(tolerance=1e-30)
        assert not rep.ok
        closed_form = next(f for f in rep.fixtures if f.name == "U_sub(t) closed form")
        assert closed_form.verdict == "unexpected"
        # Exact integer fixtures still match even at zero tolerance.
        assert next(f for f in rep.fixtures if f.name == "U_D").verdict == "match"

    def test_text_rendering(self):
        text = verify_reference_matrices().to_text()
        assert "U_D" in text and "documented-erratum" in text

    def test_json_rendering(self):
        payload = json.loads(verify_reference_matrices().to_json())
        assert len(payload["fixtures"]) == 6
        by_name = {f["name"]: f for f in payload["fixtures"]}
        assert by_name["U_D"]["deviation"] == 0.0
        assert by_name["H_sub lower-right block"]["verdict"] == "documented-erratum"


class TestTruthProjectors:
    def test_single_sentence_family(self):
        family = truth_projectors(1)
        assert np.array_equal(family[(1, "true")].matrix, np.diag([0, 0, 1, 0]))
        assert np.array_equal(family[(1, "false")].matrix, np.diag([0, 0, 0, 1]))
        assert np.array_equal(family[(1, "latent")].matrix, np.diag([1, 1, 0, 0]))

    def test_projector_roles_validated(self):
        for op in truth_projectors(2).values():
            assert op.role == "projector"
