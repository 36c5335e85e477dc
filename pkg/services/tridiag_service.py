"""
Núcleo de operadores tridiagonales complejos.

Contiene la representación del operador, el motor de recurrencia de tres
términos para P_n(E), los polinomios núcleo, el truncamiento a matriz densa
y el resolvedor denso de autovalores con clasificación del espectro.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from apps.core.utils import decode_complex_list, encode_complex_list
from services.exceptions import EigensolverError, NonRegularOperatorError

logger = logging.getLogger(__name__)

_ZERO = 1e-300
# Tolerancias por omisión; la capa de aplicación pasa las de la configuración.
DEFAULT_EIG_TOL = 1e-9
DEFAULT_IMAG_TOL = 1e-8
# i^k para k = 0..3
_I_POWERS = np.array([1, 1j, -1, -1j])


def _readonly(values: Sequence[complex]) -> np.ndarray:
    array = np.array(values, dtype=complex).reshape(-1)
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class TridiagonalOperator:
    """
    Operador tridiagonal con diagonal, subdiagonal y superdiagonal independientes.

    diag[n] es el elemento (n, n), sub[n] el (n+1, n) y sup[n] el (n, n+1).
    Con `pseudo_symmetric` se exige sup[n] = conj(sub[n]) elemento a elemento.
    """

    diag: np.ndarray
    sub: np.ndarray
    sup: np.ndarray
    pseudo_symmetric: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'diag', _readonly(self.diag))
        object.__setattr__(self, 'sub', _readonly(self.sub))
        object.__setattr__(self, 'sup', _readonly(self.sup))

        if self.diag.size == 0:
            raise ValueError("El operador necesita al menos un elemento diagonal")
        if self.sub.size != self.diag.size - 1 or self.sup.size != self.diag.size - 1:
            raise ValueError(
                f"Longitudes inconsistentes: diag={self.diag.size}, "
                f"sub={self.sub.size}, sup={self.sup.size}"
            )
        if not (np.all(np.isfinite(self.diag)) and np.all(np.isfinite(self.sub))
                and np.all(np.isfinite(self.sup))):
            raise ValueError("El operador contiene valores no finitos")
        if self.pseudo_symmetric and not np.allclose(self.sup, np.conj(self.sub), rtol=1e-12, atol=0.0):
            raise ValueError("El operador se declaró pseudo-simétrico pero sup != conj(sub)")

    @property
    def size(self) -> int:
        return int(self.diag.size)

    def shifted(self, delta: complex) -> 'TridiagonalOperator':
        """Devuelve el operador con la diagonal desplazada en `delta`."""
        return TridiagonalOperator(self.diag + delta, self.sub, self.sup, self.pseudo_symmetric)

    def head(self, N: int) -> 'TridiagonalOperator':
        """Primeras N filas y columnas como operador."""
        if not 1 <= N <= self.size:
            raise ValueError(f"N={N} fuera de rango para un operador de tamaño {self.size}")
        return TridiagonalOperator(self.diag[:N], self.sub[:N - 1], self.sup[:N - 1], self.pseudo_symmetric)

    @classmethod
    def from_dense(cls, matrix, pseudo_symmetric: bool = False) -> 'TridiagonalOperator':
        """Extrae las tres diagonales de una matriz densa cuadrada."""
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Se esperaba una matriz cuadrada, se recibió forma {matrix.shape}")
        return cls(np.diag(matrix).copy(), np.diag(matrix, -1).copy(), np.diag(matrix, 1).copy(), pseudo_symmetric)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'diag': encode_complex_list(self.diag),
            'sub': encode_complex_list(self.sub),
            'sup': encode_complex_list(self.sup),
            'pseudo_symmetric': bool(self.pseudo_symmetric),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'TridiagonalOperator':
        missing = [key for key in ('diag', 'sub', 'sup') if key not in data]
        if missing:
            raise ValueError(f"Faltan claves en el operador: {', '.join(missing)}")
        return cls(
            decode_complex_list(data['diag']),
            decode_complex_list(data['sub']),
            decode_complex_list(data['sup']),
            bool(data.get('pseudo_symmetric', False)),
        )


@dataclass(frozen=True)
class PolynomialTable:
    """
    Valores P_n(E_j) de la recurrencia, filas n = 0..n_max, columnas por energía.

    `origin_values[n]` guarda P_n(0) calculado por la misma recurrencia.
    """

    energies: np.ndarray
    values: np.ndarray
    origin_values: np.ndarray

    def __post_init__(self):
        if self.values.shape[0] == 0 or not np.all(self.values[0] == 1):
            raise ValueError("La primera fila de la tabla debe ser idénticamente 1")

    @property
    def n_max(self) -> int:
        return int(self.values.shape[0] - 1)


def _forward(op: TridiagonalOperator, energies: np.ndarray, n_max: int) -> np.ndarray:
    values = np.empty((n_max + 1, energies.size), dtype=complex)
    values[0] = 1.0
    for n in range(n_max):
        if abs(op.sup[n]) < _ZERO:
            raise NonRegularOperatorError(n)
        prev = op.sub[n - 1] * values[n - 1] if n > 0 else 0.0
        values[n + 1] = ((energies - op.diag[n]) * values[n] - prev) / op.sup[n]
    return values


def recurrence_eval(op: TridiagonalOperator, energies: Sequence[complex], n_max: int) -> PolynomialTable:
    """
    Evalúa P_0..P_{n_max} en las energías dadas y en E = 0.

    E P_n = sub[n-1] P_{n-1} + diag[n] P_n + sup[n] P_{n+1}, con P_0 = 1.

    Raises:
        NonRegularOperatorError: si sup[n] = 0 para algún n < n_max
    """
    if not 0 <= n_max <= op.size - 1:
        raise ValueError(f"n_max={n_max} fuera de rango para un operador de tamaño {op.size}")
    energies = np.array(energies, dtype=complex).reshape(-1)
    values = _forward(op, energies, n_max)
    origin = _forward(op, np.zeros(1, dtype=complex), n_max)[:, 0]
    values.flags.writeable = False
    origin.flags.writeable = False
    energies.flags.writeable = False
    return PolynomialTable(energies, values, origin)


def three_term_residual(op: TridiagonalOperator, table: PolynomialTable) -> np.ndarray:
    """
    Residuo relativo de la identidad de tres términos por índice n < n_max.

    Cada fila se normaliza por la magnitud máxima de los términos que intervienen.
    """
    P = table.values
    E = table.energies
    residuals = np.zeros(table.n_max)
    for n in range(table.n_max):
        prev = op.sub[n - 1] * P[n - 1] if n > 0 else np.zeros_like(P[n])
        terms = [E * P[n], prev, op.diag[n] * P[n], op.sup[n] * P[n + 1]]
        scale = max(np.max(np.abs(t)) for t in terms) or 1.0
        residuals[n] = np.max(np.abs(terms[0] - terms[1] - terms[2] - terms[3])) / scale
    return residuals


def symmetrizer_weights(op: TridiagonalOperator, n_max: Optional[int] = None) -> np.ndarray:
    """
    Pesos h_n con h_0 = 1 y h_{n+1} = h_n sup[n] / sub[n].

    Hacen simétrica la relación de Christoffel-Darboux; valen 1 si sub = sup.
    """
    n_max = op.size - 1 if n_max is None else n_max
    weights = np.ones(n_max + 1, dtype=complex)
    for n in range(n_max):
        if abs(op.sub[n]) < _ZERO:
            raise NonRegularOperatorError(n)
        weights[n + 1] = weights[n] * op.sup[n] / op.sub[n]
    return weights


def kernel_poly(table: PolynomialTable, n: int, E_index: int, weights: Optional[Sequence[complex]] = None) -> complex:
    """
    Polinomio núcleo K_n(E, 0) = sum_j h_j P_j(E) P_j(0).

    Sin `weights` se usa h_j = 1.
    """
    if not 0 <= n <= table.n_max:
        raise IndexError(f"n={n} fuera de la tabla (n_max={table.n_max})")
    if not 0 <= E_index < table.energies.size:
        raise IndexError(f"Índice de energía {E_index} fuera de rango")
    h = np.ones(n + 1) if weights is None else np.asarray(weights, dtype=complex)[:n + 1]
    if h.size < n + 1:
        raise IndexError(f"Faltan pesos para n={n}")
    total = complex(0.0)
    for j in range(n + 1):
        total += h[j] * table.values[j, E_index] * table.origin_values[j]
    return total


def christoffel_darboux_residual(op: TridiagonalOperator, table: PolynomialTable, n: int, E_index: int) -> float:
    """
    |E K_n(E,0) - h_n sup[n] (P_{n+1}(E) P_n(0) - P_n(E) P_{n+1}(0))| relativo.
    """
    if n + 1 > table.n_max:
        raise IndexError(f"Se necesita la fila {n + 1} y la tabla llega a {table.n_max}")
    h = symmetrizer_weights(op, n + 1)
    E = table.energies[E_index]
    P = table.values[:, E_index]
    P0 = table.origin_values
    lhs = E * kernel_poly(table, n, E_index, h)
    rhs = h[n] * op.sup[n] * (P[n + 1] * P0[n] - P[n] * P0[n + 1])
    return float(abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0))


def truncate(op: TridiagonalOperator, N: int) -> np.ndarray:
    """Matriz densa N x N con las tres diagonales del operador."""
    if not 1 <= N <= op.size:
        raise ValueError(f"N={N} fuera de rango para un operador de tamaño {op.size}")
    matrix = np.diag(op.diag[:N])
    if N > 1:
        matrix = matrix + np.diag(op.sub[:N - 1], -1) + np.diag(op.sup[:N - 1], 1)
    return matrix


@dataclass
class SpectrumReport:
    """Autovalores con residuos y clasificación real / par conjugado / sin par."""

    eigenvalues: np.ndarray
    residuals: np.ndarray
    tol: float
    classification: Tuple[int, int, int] = field(default=(0, 0, 0))

    @property
    def size(self) -> int:
        return int(self.eigenvalues.size)

    @property
    def spectral_radius(self) -> float:
        return float(np.max(np.abs(self.eigenvalues))) if self.eigenvalues.size else 0.0

    @property
    def max_imag(self) -> float:
        return float(np.max(np.abs(self.eigenvalues.imag))) if self.eigenvalues.size else 0.0


def _real_similarity(matrix: np.ndarray) -> Optional[np.ndarray]:
    """
    Si diag(i^-n) M diag(i^n) es real, la devuelve como matriz real.

    Es el caso de las matrices con conj(M) = Pi M Pi, Pi = diag((-1)^n).
    """
    n = matrix.shape[0]
    k = (np.arange(n)[None, :] - np.arange(n)[:, None]) % 4
    rotated = matrix * _I_POWERS[k]
    scale = np.max(np.abs(rotated)) if rotated.size else 0.0
    if scale == 0.0 or np.max(np.abs(rotated.imag)) <= 1e-12 * scale:
        return rotated.real.copy()
    return None


def eigenvalues(matrix, tol: Optional[float] = None, imag_tol: Optional[float] = None) -> SpectrumReport:
    """
    Todos los autovalores de una matriz densa compleja.

    LAPACK geev reduce a Hessenberg y aplica QR con desplazamientos (tope de
    30 iteraciones por autovalor). Para matrices reales, o semejantes a una
    real por diag(i^n), se usa la ruta real: los autovalores salen reales o
    en pares conjugados exactos.

    Args:
        matrix: Matriz cuadrada de entradas finitas
        tol: Tolerancia del residuo ||Mv - lambda v|| / ||M||_F
        imag_tol: Tolerancia relativa para la clasificación

    Returns:
        SpectrumReport ordenado por parte real y luego imaginaria

    Raises:
        EigensolverError: si LAPACK no converge o algún residuo supera `tol`
    """
    tol = DEFAULT_EIG_TOL if tol is None else tol
    M = np.asarray(matrix, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"Se esperaba una matriz cuadrada, se recibió forma {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("La matriz contiene valores no finitos")

    n = M.shape[0]
    if n == 0:
        return SpectrumReport(np.zeros(0, dtype=complex), np.zeros(0), tol)

    try:
        if np.all(M.imag == 0):
            values, vectors = np.linalg.eig(M.real)
        else:
            rotated = _real_similarity(M)
            if rotated is not None:
                values, vectors = np.linalg.eig(rotated)
                vectors = vectors * _I_POWERS[np.arange(n) % 4][:, None]
            else:
                values, vectors = np.linalg.eig(M)
    except np.linalg.LinAlgError as e:
        logger.error(f"El resolvedor de autovalores no convergió (N={n}): {str(e)}")
        raise EigensolverError(
            f"QR sin convergencia para N={n}: {str(e)}",
            partial=linalg.hessenberg(M),
        ) from e

    values = np.asarray(values, dtype=complex)
    vectors = np.asarray(vectors, dtype=complex)
    vectors = vectors / np.linalg.norm(vectors, axis=0)

    norm = np.linalg.norm(M, 'fro')
    residuals = np.linalg.norm(M @ vectors - vectors * values, axis=0)
    residuals = residuals / norm if norm > 0 else residuals

    order = np.lexsort((values.imag, values.real))
    report = SpectrumReport(values[order], residuals[order], tol)
    report.classification = classify(report, imag_tol)

    worst = float(np.max(report.residuals))
    if worst > tol:
        logger.error(f"Residuo {worst:.3e} supera la tolerancia {tol:.1e} (N={n})")
        raise EigensolverError(f"Residuo {worst:.3e} supera la tolerancia {tol:.1e}", partial=report)

    return report


def classify(report: SpectrumReport, imag_tol: Optional[float] = None) -> Tuple[int, int, int]:
    """
    Cuenta autovalores reales, pares conjugados y autovalores sin par.

    |Im| <= imag_tol * escala es real, con escala = radio espectral. El resto
    se empareja con el conjugado más cercano dentro de la misma distancia;
    los empates se resuelven por el menor índice.
    """
    imag_tol = DEFAULT_IMAG_TOL if imag_tol is None else imag_tol
    values = report.eigenvalues
    scale = report.spectral_radius
    if scale == 0.0:
        return (int(values.size), 0, 0)

    threshold = imag_tol * scale
    is_real = np.abs(values.imag) <= threshold
    pending: List[int] = [i for i in range(values.size) if not is_real[i]]
    used = set()
    pairs = 0
    unpaired = 0
    for i in pending:
        if i in used:
            continue
        used.add(i)
        best = None
        best_dist = np.inf
        for j in pending:
            if j in used:
                continue
            dist = abs(values[j] - np.conj(values[i]))
            if dist < best_dist:
                best, best_dist = j, dist
        if best is not None and best_dist <= threshold:
            used.add(best)
            pairs += 1
        else:
            unpaired += 1
    return (int(np.count_nonzero(is_real)), pairs, unpaired)
