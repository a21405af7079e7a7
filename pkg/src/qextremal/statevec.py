"""Dense statevector backend for arbitrary n-qubit pure states.

This is the second, independent route to every marginal quantity the rank
backend computes for graph states, and the only route for states that are
not graph states.  Basis convention: the index of |c1 ... cn> is
sum_i c_i * 2^(n-i), so qubit 1 is the most significant bit.

Also home to the Pauli-string algebra used by the parity-rule checks and
the Bloch-coefficient analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from ._subsets import mask_of, vertices_of
from ._kernels import iter_subset_masks
from .errors import ParseError, ResourceLimitError, ValidationError
from .graphs import Graph, named_graph

MAX_QUBITS = 26          # 2^26 complex amplitudes is the memory budget
MAX_SECTOR_QUBITS = 12   # weight-sector enumeration is ~4^n

PAULI_LETTERS = "0xyz"

_PAULI_MATS = {
    "0": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm amplitude vector over n qubits."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.amplitudes.shape != (1 << self.n,):
            raise ValidationError(f"expected 2^{self.n} amplitudes")
        norm2 = float(np.vdot(self.amplitudes, self.amplitudes).real)
        if abs(norm2 - 1.0) > 1e-12:
            raise ValidationError(f"state norm^2 = {norm2!r} is not 1")


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace matrix on k qubits."""

    k: int
    matrix: np.ndarray

    def __post_init__(self):
        d = 1 << self.k
        if self.matrix.shape != (d, d):
            raise ValidationError(f"expected {d} x {d} matrix")
        if np.max(np.abs(self.matrix - self.matrix.conj().T)) > 1e-12:
            raise ValidationError("matrix is not Hermitian")
        if abs(np.trace(self.matrix).real - 1.0) > 1e-12:
            raise ValidationError("trace is not 1")

    def validate_psd(self, tol: float = 1e-9) -> None:
        """Positive semidefiniteness; too costly to run on every construction."""
        if float(np.linalg.eigvalsh(self.matrix)[0]) < -tol:
            raise ValidationError("matrix has a negative eigenvalue")


@dataclass(frozen=True)
class PauliTerm:
    """coefficient * (tensor product of single-qubit Paulis)."""

    n: int
    letters: tuple[str, ...]
    coefficient: complex = 1.0

    def __post_init__(self):
        if len(self.letters) != self.n:
            raise ValidationError("need one letter per qubit")
        for c in self.letters:
            if c not in PAULI_LETTERS:
                raise ValidationError(f"bad Pauli letter {c!r}")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.letters) if c != "0")

    @property
    def weight(self) -> int:
        return len(self.support)


# ---------------------------------------------------------------------------
# state construction

def graph_state_vector(g: Graph) -> PureState:
    """Graph state: amplitude of |c> is 2^(-n/2) * (-1)^(number of edges
    inside the support of c)."""
    n = g.n
    if n > MAX_QUBITS:
        raise ResourceLimitError(f"graph state on {n} > {MAX_QUBITS} qubits")
    idx = np.arange(1 << n, dtype=np.uint32)
    parity = np.zeros(1 << n, dtype=np.uint8)
    for u, v in g.edges:
        parity ^= (((idx >> (n - u)) & 1) & ((idx >> (n - v)) & 1)).astype(np.uint8)
    amps = (1.0 - 2.0 * parity) / np.sqrt(2.0 ** n)
    return PureState(n, amps.astype(np.complex128))


def _phi4() -> PureState:
    amps = np.zeros(16, dtype=complex)
    for idx in (0b0000, 0b0111, 0b1001, 0b1110):
        amps[idx] = 0.5
    return PureState(4, amps)


def _m4() -> PureState:
    w = np.exp(2j * np.pi / 3)
    amps = np.zeros(16, dtype=complex)
    amps[0b0011] = amps[0b1100] = 1.0
    amps[0b1010] = amps[0b0101] = w
    amps[0b1001] = amps[0b0110] = w * w
    amps /= np.sqrt(6)
    return PureState(4, amps)


def named_state(name: str) -> PureState:
    """Resolve a state name: ``phi4``, ``m4``, or any graph name
    (``tk<k>``, ``circulant:<n>:<dists>``, ``random:<n>:<seed>``)."""
    if name == "phi4":
        return _phi4()
    if name == "m4":
        return _m4()
    return graph_state_vector(named_graph(name))


# ---------------------------------------------------------------------------
# reductions and purity

def _split_matrix(psi: PureState, keep_axes: Sequence[int]) -> np.ndarray:
    """Amplitudes as a 2^|K| x 2^(n-|K|) matrix, kept qubits on the rows."""
    n = psi.n
    rest = [a for a in range(n) if a not in keep_axes]
    t = psi.amplitudes.reshape((2,) * n)
    return t.transpose(list(keep_axes) + rest).reshape(1 << len(keep_axes), -1)


def _reduced_matrix(psi: PureState, subset: Iterable[int]) -> np.ndarray:
    mask = mask_of(subset, psi.n)
    size = mask.bit_count()
    if size < 1:
        raise ValidationError("subset must be nonempty")
    keep = [v - 1 for v in vertices_of(mask)]
    m = _split_matrix(psi, keep)
    return m @ m.conj().T


def reduced_density(psi: PureState, subset: Iterable[int]) -> DensityMatrix:
    """Partial trace onto the subset (ascending qubit order within it)."""
    rho = _reduced_matrix(psi, subset)
    return DensityMatrix(int(np.log2(rho.shape[0])), rho)


def purity(rho: DensityMatrix) -> float:
    """Tr rho^2."""
    return float(np.vdot(rho.matrix, rho.matrix).real)


def subset_purity(psi: PureState, subset: Iterable[int]) -> float:
    """Purity of the reduction, skipping the DensityMatrix wrapper."""
    rho = _reduced_matrix(psi, subset)
    return float(np.vdot(rho, rho).real)


def is_maximally_mixed_sv(psi: PureState, subset: Iterable[int], tol: float = 1e-9) -> bool:
    """True iff the reduction is within tol (max norm) of I/2^|K|."""
    rho = _reduced_matrix(psi, subset)
    d = rho.shape[0]
    return float(np.max(np.abs(rho - np.eye(d) / d))) <= tol


def count_mm_reductions_sv(psi: PureState, k: int, tol: float = 1e-9) -> tuple[int, list[tuple[int, ...]]]:
    """Statevector twin of the rank backend's m_k count."""
    if not 1 <= k <= psi.n // 2:
        raise ValidationError(f"need 1 <= k <= floor(n/2) = {psi.n // 2}")
    mm = [
        vertices_of(mask)
        for mask in iter_subset_masks(psi.n, k)
        if is_maximally_mixed_sv(psi, vertices_of(mask), tol)
    ]
    return len(mm), mm


def uniformity_order_sv(psi: PureState, tol: float = 1e-9) -> int:
    """Largest s such that every reduction of size <= s is maximally mixed."""
    order = 0
    for s in range(1, psi.n // 2 + 1):
        if any(
            not is_maximally_mixed_sv(psi, vertices_of(mask), tol)
            for mask in iter_subset_masks(psi.n, s)
        ):
            break
        order = s
    return order


@dataclass(frozen=True)
class SvMarginalReport:
    """Float-valued twin of the rank backend's marginal report."""

    n: int
    k: int
    m_k: int
    total: int
    mm_subsets: tuple[tuple[int, ...], ...]
    non_mm: tuple[tuple[tuple[int, ...], float], ...]  # (subset, purity)
    uniformity_order: int
    pi_me: float
    s_linear: float


def analyze_state_marginals(psi: PureState, k: int, tol: float = 1e-9) -> SvMarginalReport:
    """Classify every k-subset of an arbitrary pure state by partial trace."""
    if not 1 <= k <= psi.n // 2:
        raise ValidationError(f"need 1 <= k <= floor(n/2) = {psi.n // 2}")
    mm = []
    non_mm = []
    for mask in iter_subset_masks(psi.n, k):
        subset = vertices_of(mask)
        rho = _reduced_matrix(psi, subset)
        d = rho.shape[0]
        if float(np.max(np.abs(rho - np.eye(d) / d))) <= tol:
            mm.append(subset)
        else:
            non_mm.append((subset, float(np.vdot(rho, rho).real)))
    half = psi.n // 2
    purities = [subset_purity(psi, vertices_of(m)) for m in iter_subset_masks(psi.n, half)]
    pi_me = sum(purities) / len(purities)
    d_half = 1 << half
    return SvMarginalReport(
        n=psi.n,
        k=k,
        m_k=len(mm),
        total=len(mm) + len(non_mm),
        mm_subsets=tuple(mm),
        non_mm=tuple(non_mm),
        uniformity_order=uniformity_order_sv(psi, tol),
        pi_me=pi_me,
        s_linear=(1.0 - pi_me) * d_half / (d_half - 1),
    )


# ---------------------------------------------------------------------------
# Bloch / Pauli analysis

def bloch_coefficient(psi: PureState, letters: Sequence[str]) -> float:
    """tr(sigma_alpha rho) evaluated as <psi|sigma_alpha|psi>, never
    materializing rho."""
    n = psi.n
    if len(letters) != n:
        raise ValidationError("need one letter per qubit")
    flip = 0
    phase = np.ones(1 << n, dtype=complex)
    idx = np.arange(1 << n)
    for q, letter in enumerate(letters, start=1):
        if letter == "0":
            continue
        bit = (idx >> (n - q)) & 1
        if letter == "x":
            flip |= 1 << (n - q)
        elif letter == "y":
            flip |= 1 << (n - q)
            phase = phase * (1j * (1 - 2 * bit))
        elif letter == "z":
            phase = phase * (1 - 2 * bit)
        else:
            raise ValidationError(f"bad Pauli letter {letter!r}")
    src = idx ^ flip
    val = np.vdot(psi.amplitudes, phase[src] * psi.amplitudes[src])
    return float(val.real)


@lru_cache(maxsize=3)
def _pauli_stack(j: int) -> np.ndarray:
    """All 3^j nonidentity Pauli products on j qubits, shape (3^j, 2^j, 2^j)."""
    stack = np.zeros((3 ** j, 1 << j, 1 << j), dtype=complex)
    for i, letters in enumerate(product("xyz", repeat=j)):
        m = np.ones((1, 1), dtype=complex)
        for c in letters:
            m = np.kron(m, _PAULI_MATS[c])
        stack[i] = m
    return stack


def weight_sector_norm(psi: PureState, j: int) -> float:
    """Total squared Bloch-coefficient mass at weight j.

    Zero exactly when every coefficient of weight j vanishes, which is the
    executable form of the "weight sectors 1..k vanish" criterion for
    k-uniform states.
    """
    n = psi.n
    if not 1 <= j <= n:
        raise ValidationError("need 1 <= j <= n")
    if n > MAX_SECTOR_QUBITS:
        raise ResourceLimitError(
            f"weight sectors enumerate ~4^n terms; limited to n <= {MAX_SECTOR_QUBITS}")
    stack = _pauli_stack(j)
    total = 0.0
    for support in combinations(range(1, n + 1), j):
        rho = _reduced_matrix(psi, support)
        coeffs = np.einsum("kab,ba->k", stack, rho).real
        total += float(np.dot(coeffs, coeffs))
    return total


# single-qubit products: (letter_a, letter_b) -> (letter_ab, phase)
_MUL = {}
for _c in PAULI_LETTERS:
    _MUL[("0", _c)] = (_c, 1)
    _MUL[(_c, "0")] = (_c, 1)
    _MUL[(_c, _c)] = ("0", 1)
for _a, _b, _c in (("x", "y", "z"), ("y", "z", "x"), ("z", "x", "y")):
    _MUL[(_a, _b)] = (_c, 1j)
    _MUL[(_b, _a)] = (_c, -1j)


def pauli_product(m: PauliTerm, other: PauliTerm) -> PauliTerm:
    """Letterwise product with phase tracking."""
    if m.n != other.n:
        raise ValidationError("mismatched qubit counts")
    letters = []
    coeff = m.coefficient * other.coefficient
    for a, b in zip(m.letters, other.letters):
        c, phase = _MUL[(a, b)]
        letters.append(c)
        coeff *= phase
    return PauliTerm(m.n, tuple(letters), coeff)


def anticommutator(m: PauliTerm, other: PauliTerm) -> PauliTerm | None:
    """MN + NM, or None when it vanishes.

    Pauli strings either commute or anticommute: they anticommute iff the
    number of positions where both letters are distinct non-identities is
    odd, and then MN + NM = 0.
    """
    if m.n != other.n:
        raise ValidationError("mismatched qubit counts")
    clashes = sum(
        1 for a, b in zip(m.letters, other.letters)
        if a != "0" and b != "0" and a != b
    )
    if clashes % 2 == 1:
        return None
    prod = pauli_product(m, other)
    return PauliTerm(prod.n, prod.letters, 2 * prod.coefficient)


# ---------------------------------------------------------------------------
# amplitude file format

def parse_amplitude_file(text: str) -> PureState:
    """Parse ``n <count>`` then ``<bitstring> <re> <im>`` lines.

    Unlisted basis states are zero.  A norm off by at most 1e-6 is fixed by
    normalizing; a larger deviation is an error.
    """
    n = None
    amps = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad qubit count {parts[1]!r}", lineno) from None
            if not 1 <= n <= MAX_QUBITS:
                raise ParseError(f"qubit count must be in 1..{MAX_QUBITS}", lineno)
            amps = np.zeros(1 << n, dtype=complex)
            continue
        if len(parts) != 3:
            raise ParseError(f"expected '<bitstring> <re> <im>', got {line!r}", lineno)
        bits, re_s, im_s = parts
        if len(bits) != n or set(bits) - {"0", "1"}:
            raise ParseError(f"bad basis bitstring {bits!r}", lineno)
        if bits in seen:
            raise ParseError(f"duplicate basis state {bits}", lineno)
        seen.add(bits)
        try:
            amps[int(bits, 2)] = complex(float(re_s), float(im_s))
        except ValueError:
            raise ParseError(f"bad amplitude in {line!r}", lineno) from None
    if n is None:
        raise ParseError("missing header 'n <count>'", 1)
    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) > 1e-6:
        raise ValidationError(f"state norm {norm!r} deviates from 1 by more than 1e-6")
    return PureState(n, amps / norm)


def serialize_amplitude_file(psi: PureState) -> str:
    """Inverse of parse_amplitude_file (zero amplitudes omitted)."""
    lines = [f"n {psi.n}"]
    for idx, a in enumerate(psi.amplitudes):
        if a != 0:
            bits = format(idx, f"0{psi.n}b")
            lines.append(f"{bits} {float(a.real)!r} {float(a.imag)!r}")
    return "\n".join(lines) + "\n"
