"""
Cuadratura de Gauss-Hermite sobre la base del oscilador.

golub_welsch da nodos y pesos para exp(-y^2); basis_rule los lleva a la base
psi_n(x) = A_n exp(-lambda^2 x^2 / 2) H_n(lambda x) y construye la matriz
Gamma con la que se arman los elementos de potencial como una cuadratura.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from services.exceptions import EigensolverError, QuadratureError
from services.specfun_service import log_gamma
from services.tridiag_service import DEFAULT_IMAG_TOL, classify, eigenvalues

logger = logging.getLogger(__name__)

_PI_QUARTER = np.pi ** -0.25


@dataclass(frozen=True)
class HermiteBasis:
    """Base de Hermite con parámetro de escala lambda y tamaño N."""

    lam: float
    N: int

    def __post_init__(self):
        if not self.lam > 0:
            raise ValueError(f"lambda debe ser positivo, se recibió {self.lam}")
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N debe ser un entero positivo, se recibió {self.N}")

    def normalization(self, n: int) -> float:
        """A_n = sqrt(lambda / (2^n n! sqrt(pi)))."""
        return float(np.exp(0.5 * (np.log(self.lam) - n * np.log(2.0)
                                   - log_gamma(n + 1).real - 0.5 * np.log(np.pi))))

    def evaluate(self, n: int, x) -> np.ndarray:
        """psi_n(x) = sqrt(lambda) exp(-y^2/2) h_n(y), y = lambda x, con h_n ortonormal."""
        y = self.lam * np.asarray(x, dtype=float)
        return np.sqrt(self.lam) * np.exp(-y * y / 2) * normalized_hermite(n, y)[n]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodos x_mu y matriz Gamma[n, mu] con sum_mu Gamma[n, mu] Gamma[m, mu] = delta_nm."""

    nodes: np.ndarray
    transform: np.ndarray
    weights: np.ndarray
    reduced_nodes: np.ndarray


def normalized_hermite(n_max: int, y) -> np.ndarray:
    """
    Filas h_0..h_n_max de los polinomios de Hermite ortonormales para exp(-y^2).

    h_0 = pi^(-1/4), h_{k+1} = (y h_k - sqrt(k/2) h_{k-1}) / sqrt((k+1)/2).
    """
    y = np.asarray(y, dtype=float)
    rows = np.empty((n_max + 1,) + y.shape)
    rows[0] = _PI_QUARTER
    if n_max >= 1:
        rows[1] = y * rows[0] / np.sqrt(0.5)
    for k in range(1, n_max):
        rows[k + 1] = (y * rows[k] - np.sqrt(k / 2) * rows[k - 1]) / np.sqrt((k + 1) / 2)
    return rows


def golub_welsch(N: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nodos y pesos de Gauss-Hermite para el peso exp(-y^2).

    Los nodos son autovalores de la matriz de Jacobi (diagonal nula,
    subdiagonal sqrt(k/2)), simetrizados respecto de 0. Los pesos son
    sqrt(pi) v_0^2, calculados como 1 / sum_k h_k(y)^2.
    """
    if N < 1:
        raise ValueError(f"N debe ser al menos 1, se recibió {N}")
    if N == 1:
        return np.zeros(1), np.array([np.sqrt(np.pi)])
    off = np.sqrt(np.arange(1, N) / 2.0)
    y = linalg.eigh_tridiagonal(np.zeros(N), off, eigvals_only=True)
    y = np.sort(y)
    y = (y - y[::-1]) / 2
    weights = 1.0 / np.sum(normalized_hermite(N - 1, y) ** 2, axis=0)
    return y, weights


def basis_rule(basis: HermiteBasis) -> QuadratureRule:
    """
    x_mu = y_mu / lambda y Gamma[n, mu] = sqrt(w_mu) h_n(y_mu).

    Equivale a sqrt(w_mu) exp(y_mu^2/2) psi_n(x_mu) / sqrt(lambda), sin desbordes.
    """
    y, weights = golub_welsch(basis.N)
    transform = np.sqrt(weights) * normalized_hermite(basis.N - 1, y)
    return QuadratureRule(y / basis.lam, transform, weights, y)


def potential_matrix(S: Callable, rule: QuadratureRule) -> np.ndarray:
    """
    S_nm = sum_mu Gamma[n, mu] S(x_mu) Gamma[m, mu], simétrica por construcción.

    Raises:
        QuadratureError: si S no es finita en algún nodo
    """
    values = np.broadcast_to(np.asarray(S(rule.nodes), dtype=complex), rule.nodes.shape)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        mu = int(bad[0])
        node = float(rule.nodes[mu])
        raise QuadratureError(f"Potencial no finito en el nodo {mu} (x = {node!r})", node=node)
    G = rule.transform
    matrix = (G * values) @ G.T
    return (matrix + matrix.T) / 2


def kinetic_matrix(basis: HermiteBasis) -> np.ndarray:
    """T_nn = lambda^2 (2n+1)/4 y T_{n,n+2} = T_{n+2,n} = -lambda^2 sqrt((n+1)(n+2))/4."""
    n = np.arange(basis.N)
    T = np.diag(basis.lam ** 2 * (2 * n + 1) / 4.0)
    if basis.N > 2:
        k = np.arange(basis.N - 2)
        off = -basis.lam ** 2 * np.sqrt((k + 1) * (k + 2.0)) / 4.0
        T = T + np.diag(off, 2) + np.diag(off, -2)
    return T


def hamiltonian_matrix(V: Callable, basis: HermiteBasis) -> np.ndarray:
    return kinetic_matrix(basis) + potential_matrix(V, basis_rule(basis))


@dataclass(frozen=True)
class ScanRecord:
    lam: float
    real_count: Optional[int]
    pair_count: Optional[int]
    unpaired_count: Optional[int]
    max_imag: Optional[float]
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def _scan_point(V: Callable, lam: float, N: int, imag_tol: float, tol: Optional[float]) -> ScanRecord:
    try:
        report = eigenvalues(hamiltonian_matrix(V, HermiteBasis(lam, N)), tol=tol, imag_tol=imag_tol)
    except EigensolverError as e:
        logger.warning(f"Barrido: autovalores fallidos en lambda={lam}: {str(e)}")
        return ScanRecord(float(lam), None, None, None, None, str(e))
    real_count, pair_count, unpaired_count = classify(report, imag_tol)
    return ScanRecord(float(lam), real_count, pair_count, unpaired_count, report.max_imag)


def reality_scan(V: Callable, lambdas: Sequence[float], N: int, imag_tol: Optional[float] = None,
                 workers: Optional[int] = None, tol: Optional[float] = None) -> List[ScanRecord]:
    """
    Para cada lambda arma T + V, diagonaliza y clasifica el espectro.

    Los puntos son independientes y se reparten en un pool de hilos; el
    resultado conserva el orden de `lambdas`. Un fallo del resolvedor queda
    registrado en su fila y el barrido continúa.
    """
    imag_tol = DEFAULT_IMAG_TOL if imag_tol is None else imag_tol
    workers = 1 if workers is None else workers
    lambdas = [float(lam) for lam in lambdas]
    logger.info(f"Barrido de realidad: {len(lambdas)} valores de lambda, N={N}, hilos={workers}")

    def run(lam: float) -> ScanRecord:
        return _scan_point(V, lam, N, imag_tol, tol)

    if workers <= 1:
        return [run(lam) for lam in lambdas]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, lambdas))
