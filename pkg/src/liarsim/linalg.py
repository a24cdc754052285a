"""Dense complex linear algebra for cyclic truth dynamics.

Everything that needs a spectrum here is a permutation matrix, so the
eigensystem is available in closed discrete-Fourier form per cycle and no
iterative eigensolver is used anywhere.  Matrix logarithms and exponentials
go through that stored decomposition, which keeps round trips exact to
floating precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Hard cap on vector dimension produced by tensor products (4 slots ** 8 sentences).
DEFAULT_MAX_DIM = 4**8


class LinalgError(ValueError):
    """Bad argument to a linear-algebra operation."""


class CapacityError(LinalgError):
    """Requested dimension exceeds the configured maximum."""


class UnsupportedOperatorError(LinalgError):
    """Operator outside the supported class (permutations plus their logs)."""


@dataclass(frozen=True)
class Tolerances:
    """Central numeric thresholds; one knob for every property suite."""

    norm: float = 1e-12
    hermiticity: float = 1e-12
    unitarity: float = 1e-10
    fixture: float = 1e-9


TOL = Tolerances()


def _as_complex(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128)
    if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
        raise LinalgError("non-finite amplitude")
    return arr


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit-norm complex amplitude vector over a labeled basis.

    Instances are immutable; the amplitude array is copied in and marked
    read-only, so sharing across threads is safe.
    """

    amplitudes: np.ndarray
    labels: tuple[str, ...]
    normalized: bool = True

    def __post_init__(self):
        amps = _as_complex(self.amplitudes).reshape(-1).copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != amps.size:
            raise LinalgError(
                f"{len(self.labels)} labels for dimension {amps.size}"
            )
        if self.normalized:
            nrm2 = float(np.sum(np.abs(amps) ** 2))
            if abs(nrm2 - 1.0) > TOL.norm:
                raise LinalgError(f"state not normalized: |psi|^2 = {nrm2!r}")

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalize(self) -> "StateVector":
        n = self.norm()
        if n <= TOL.norm:
            raise LinalgError("cannot normalize a zero vector")
        return StateVector(self.amplitudes / n, self.labels)


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Spectral data ``A = V diag(values) V†`` with orthonormal columns V."""

    values: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True, eq=False)
class Operator:
    """Dense complex square matrix with a validated role.

    role ``projector`` requires P^2 = P = P†, ``unitary`` requires U†U = I,
    ``hermitian`` requires H = H†; ``general`` is unchecked.  ``eigen``
    optionally carries the spectral decomposition used by :func:`evolve`.
    """

    matrix: np.ndarray
    role: str = "general"
    eigen: EigenSystem | None = None

    def __post_init__(self):
        mat = _as_complex(self.matrix)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise LinalgError(f"operator must be square, got shape {mat.shape}")
        mat = mat.copy()
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        if self.role == "projector":
            if _maxdev(mat @ mat, mat) > TOL.hermiticity:
                raise LinalgError("projector role violated: P^2 != P")
            if _maxdev(mat, mat.conj().T) > TOL.hermiticity:
                raise LinalgError("projector role violated: P != P†")
        elif self.role == "unitary":
            eye = np.eye(mat.shape[0])
            if _maxdev(mat.conj().T @ mat, eye) > TOL.unitarity:
                raise LinalgError("unitary role violated: U†U != I")
        elif self.role == "hermitian":
            if _maxdev(mat, mat.conj().T) > TOL.hermiticity:
                raise LinalgError("hermitian role violated: H != H†")
        elif self.role != "general":
            raise LinalgError(f"unknown operator role {self.role!r}")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class CycleDecomposition:
    """Eigensystem of a permutation matrix, cycle by cycle.

    ``cycles`` lists the disjoint cycles as 0-based position tuples in
    traversal order (fixed points appear as 1-tuples).  Each cycle of length
    L contributes the L-th roots of unity as eigenvalues with discrete
    Fourier eigenvectors supported on the cycle.
    """

    cycles: tuple[tuple[int, ...], ...]
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    #: (cycle length, harmonic k) per eigenvalue, same order as `eigenvalues`.
    harmonics: tuple[tuple[int, int], ...] = ()


def _maxdev(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def tensor_product(a, b, max_dim: int = DEFAULT_MAX_DIM):
    """Kronecker product of two operators or two state vectors.

    Dimensions multiply; state labels concatenate as ``"la⊗lb"``.  Raises
    :class:`CapacityError` when the product dimension exceeds ``max_dim``.
    """
    if isinstance(a, StateVector) and isinstance(b, StateVector):
        if a.dim * b.dim > max_dim:
            raise CapacityError(
                f"tensor dimension {a.dim * b.dim} exceeds maximum {max_dim}"
            )
        amps = np.kron(a.amplitudes, b.amplitudes)
        labels = tuple(f"{la}⊗{lb}" for la in a.labels for lb in b.labels)
        return StateVector(amps, labels, normalized=False)
    if isinstance(a, Operator) and isinstance(b, Operator):
        if a.dim * b.dim > max_dim:
            raise CapacityError(
                f"tensor dimension {a.dim * b.dim} exceeds maximum {max_dim}"
            )
        role = a.role if a.role == b.role and a.role in ("projector", "unitary") else "general"
        return Operator(np.kron(a.matrix, b.matrix), role=role)
    raise LinalgError("tensor_product needs two operators or two state vectors")


def kappa_index(i: int, j: int, d2: int, d1: int | None = None) -> int:
    """Flatten the 1-based pair ``(i, j)`` into a 1-based index ``d2*(i-1)+j``."""
    if not 1 <= j <= d2:
        raise LinalgError(f"index j={j} out of range 1..{d2}")
    if i < 1 or (d1 is not None and i > d1):
        raise LinalgError(f"index i={i} out of range")
    return d2 * (i - 1) + j


def basis_outer(i: int, u: int, dim: int) -> Operator:
    """Matrix unit with a single 1 at 1-based row ``i``, column ``u``."""
    if not (1 <= i <= dim and 1 <= u <= dim):
        raise LinalgError(f"indices ({i}, {u}) out of range 1..{dim}")
    mat = np.zeros((dim, dim), dtype=np.complex128)
    mat[i - 1, u - 1] = 1.0
    return Operator(mat)


def _permutation_map(u: Operator) -> np.ndarray:
    """Extract sigma with U e_p = e_sigma(p), or reject non-permutations."""
    mat = u.matrix
    real = mat.real
    if np.any(mat.imag != 0.0) or not np.all((real == 0.0) | (real == 1.0)):
        raise UnsupportedOperatorError("operator entries are not exactly 0/1")
    if np.any(real.sum(axis=0) != 1.0) or np.any(real.sum(axis=1) != 1.0):
        raise UnsupportedOperatorError("operator is not a permutation matrix")
    return np.argmax(real, axis=0)


def cycle_eigendecompose(u: Operator) -> CycleDecomposition:
    """Eigensystem of a permutation operator in Fourier closed form.

    Each cycle ``c_0 -> c_1 -> ... -> c_{L-1} -> c_0`` contributes
    eigenvalues ``exp(2πik/L)`` with eigenvectors
    ``v_k[c_m] = exp(-2πikm/L)/sqrt(L)``; identity positions contribute
    eigenvalue 1.  Anything that is not a permutation matrix is rejected:
    a general eigensolver is deliberately out of scope.
    """
    sigma = _permutation_map(u)
    n = u.dim
    seen = np.zeros(n, dtype=bool)
    cycles: list[tuple[int, ...]] = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        pos = int(sigma[start])
        while pos != start:
            cyc.append(pos)
            seen[pos] = True
            pos = int(sigma[pos])
        cycles.append(tuple(cyc))

    values = np.zeros(n, dtype=np.complex128)
    vectors = np.zeros((n, n), dtype=np.complex128)
    harmonics: list[tuple[int, int]] = []
    col = 0
    for cyc in cycles:
        length = len(cyc)
        for k in range(length):
            values[col] = np.exp(2j * np.pi * k / length)
            for m, pos in enumerate(cyc):
                vectors[pos, col] = np.exp(-2j * np.pi * k * m / length) / np.sqrt(length)
            harmonics.append((length, k))
            col += 1
    return CycleDecomposition(tuple(cycles), values, vectors, tuple(harmonics))


def principal_log_hamiltonian(u: Operator, scale: float) -> Operator:
    """Hermitian generator ``H = scale * i * Ln(u)`` on the principal branch.

    ``Ln(exp(iθ)) = iθ`` with θ ∈ (−π, π]; the branch cut value θ = π is
    assigned to eigenvalue −1.  The branch angles come straight from the
    cycle harmonics (θ = 2πk/L wrapped), so no complex ``angle`` call and no
    rounding enters.  The returned operator carries its eigensystem, which
    :func:`evolve` and :func:`evolution_matrix` reuse.
    """
    decomp = cycle_eigendecompose(u)
    theta = np.empty(u.dim, dtype=np.float64)
    for idx, (length, k) in enumerate(decomp.harmonics):
        # 2πk/L wrapped into (−π, π]: subtract a full turn past the half cycle.
        theta[idx] = 2.0 * np.pi * (k if 2 * k <= length else k - length) / length
    h_values = -scale * theta
    vectors = decomp.eigenvectors
    matrix = (vectors * h_values) @ vectors.conj().T
    matrix = (matrix + matrix.conj().T) / 2.0
    return Operator(matrix, role="hermitian", eigen=EigenSystem(h_values, vectors))


def evolve(h: Operator, t: float, psi: StateVector) -> StateVector:
    """Apply ``exp(-iHt)`` to ``psi`` through the stored eigendecomposition."""
    if h.eigen is None:
        raise UnsupportedOperatorError(
            "operator has no stored eigendecomposition; "
            "build it with principal_log_hamiltonian"
        )
    if h.dim != psi.dim:
        raise LinalgError(f"dimension mismatch: H is {h.dim}, psi is {psi.dim}")
    v = h.eigen.vectors
    phases = np.exp(-1j * h.eigen.values * t)
    out = v @ (phases * (v.conj().T @ psi.amplitudes))
    return StateVector(out, psi.labels)


def evolution_matrix(h: Operator, t: float) -> Operator:
    """Full unitary ``exp(-iHt)`` from the stored eigendecomposition."""
    if h.eigen is None:
        raise UnsupportedOperatorError(
            "operator has no stored eigendecomposition; "
            "build it with principal_log_hamiltonian"
        )
    v = h.eigen.vectors
    phases = np.exp(-1j * h.eigen.values * t)
    return Operator((v * phases) @ v.conj().T, role="unitary")
