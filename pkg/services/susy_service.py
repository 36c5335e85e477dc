"""
Compañero supersimétrico de un operador tridiagonal complejo.

H = B A con A bidiagonal superior (diagonal c_n, superdiagonal d_{n+1}) y
B bidiagonal inferior (diagonal u_n, subdiagonal v_{n+1}). El compañero es
H+ = A B. La factorización se ancla en E = 0; para otra energía el llamador
desplaza la diagonal con `TridiagonalOperator.shifted`.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from services.exceptions import DegenerateFactorizationError, ZeroEnergyNodeError
from services.tridiag_service import (
    PolynomialTable,
    TridiagonalOperator,
    kernel_poly,
    recurrence_eval,
    symmetrizer_weights,
    truncate,
)

logger = logging.getLogger(__name__)

PAPER_CONJUGATE = 'paper_conjugate'
DOOLITTLE = 'doolittle'
GAUGES = (PAPER_CONJUGATE, DOOLITTLE)

# Piso de los cocientes de diagnóstico.
_TINY = 1e-300
# Umbral relativo de entradas y nodos nulos.
_REL_TOL = 1e-14


@dataclass(frozen=True)
class PartnerCoefficients:
    """
    Productos formales sigma_n = c_n u_n y tau_n = d_n v_n.

    sigma_n + tau_n = diag_n y tau_0 = 0.
    """

    sigma: np.ndarray
    tau: np.ndarray
    origin_values: np.ndarray


@dataclass(frozen=True)
class FactorizationPair:
    """
    Factores bidiagonales de H = B A en un gauge declarado.

    Todas las secuencias tienen longitud N; d[0] = v[0] = 0 y d[n], v[n]
    son los elementos (n-1, n) de A y (n, n-1) de B.
    """

    c: np.ndarray
    d: np.ndarray
    u: np.ndarray
    v: np.ndarray
    gauge: str

    @property
    def size(self) -> int:
        return int(self.c.size)

    def matrix_A(self) -> np.ndarray:
        return np.diag(self.c) + np.diag(self.d[1:], 1)

    def matrix_B(self) -> np.ndarray:
        return np.diag(self.u) + np.diag(self.v[1:], -1)

    def product_BA(self) -> TridiagonalOperator:
        return TridiagonalOperator.from_dense(self.matrix_B() @ self.matrix_A())

    def product_AB(self) -> TridiagonalOperator:
        """Producto A B de los factores truncados; su última fila no es del compañero."""
        return TridiagonalOperator.from_dense(self.matrix_A() @ self.matrix_B())


def _node_vanishes(op: TridiagonalOperator, P0: np.ndarray, n: int, rel_tol: float) -> bool:
    """P_n(0) nulo frente a los términos de la recurrencia que lo producen."""
    scale = abs(op.diag[n - 1] * P0[n - 1])
    if n > 1:
        scale += abs(op.sub[n - 2] * P0[n - 2])
    return P0[n] == 0 or abs(op.sup[n - 1] * P0[n]) <= rel_tol * scale


def sigma_tau(op: TridiagonalOperator, rel_tol: float = _REL_TOL) -> PartnerCoefficients:
    """
    sigma_n y tau_n de la factorización en E = 0.

    sigma_0 = diag_0, tau_{n+1} = sub_n sup_n / sigma_n y sigma_n = diag_n - tau_n.
    Es lo mismo que tau_n = -sub[n-1] P_{n-1}(0) / P_n(0) y
    sigma_n = -sup[n] P_{n+1}(0) / P_n(0), pero con la misma aritmética que
    reconstruye B A. Los valores P_n(0) sólo deciden si la factorización existe.
    En el último índice de un operador finito sigma cierra la factorización.

    Raises:
        ZeroEnergyNodeError: si P_n(0) se anula para n < N
    """
    N = op.size
    P0 = recurrence_eval(op, [0.0], N - 1).origin_values
    for n in range(1, N):
        if _node_vanishes(op, P0, n, rel_tol):
            logger.error(f"P_{n}(0) se anula: no existe factorización en E = 0")
            raise ZeroEnergyNodeError(n, complex(P0[n]))

    sigma = np.zeros(N, dtype=complex)
    tau = np.zeros(N, dtype=complex)
    sigma[0] = op.diag[0]
    for n in range(N - 1):
        if abs(sigma[n]) <= rel_tol * max(abs(op.diag[n]), abs(tau[n])):
            logger.error(f"sigma_{n} se anula: no existe factorización en E = 0")
            raise ZeroEnergyNodeError(n + 1, complex(P0[n + 1]))
        tau[n + 1] = op.sub[n] * op.sup[n] / sigma[n]
        sigma[n + 1] = op.diag[n + 1] - tau[n + 1]
    return PartnerCoefficients(sigma, tau, P0)


def _offdiag_vanishes(op: TridiagonalOperator, n: int) -> bool:
    scale = max(abs(op.diag[n]), abs(op.diag[n + 1]), abs(op.sup[n]))
    return abs(op.sub[n]) <= _REL_TOL * scale


def recover_factors(op: TridiagonalOperator, pc: PartnerCoefficients, gauge: str = PAPER_CONJUGATE) -> FactorizationPair:
    """
    Factores bidiagonales A, B con B A = H.

    Gauge `paper_conjugate`: v_{n+1} = sqrt(tau_{n+1}) (rama principal),
    c_n = sub_n / v_{n+1}, u_n = sigma_n / c_n, d_{n+1} = sup_n / u_n.
    Gauge `doolittle`: u_n = 1, c_n = sigma_n, v_{n+1} = sub_n / sigma_n, d_{n+1} = sup_n.

    Raises:
        DegenerateFactorizationError: si una entrada v (o c) se anula
    """
    if gauge not in GAUGES:
        raise ValueError(f"Gauge desconocido: {gauge}. Opciones: {', '.join(GAUGES)}")
    N = op.size
    c = np.zeros(N, dtype=complex)
    d = np.zeros(N, dtype=complex)
    u = np.zeros(N, dtype=complex)
    v = np.zeros(N, dtype=complex)

    if gauge == PAPER_CONJUGATE:
        for n in range(N - 1):
            v[n + 1] = np.sqrt(pc.tau[n + 1])
            if _offdiag_vanishes(op, n) or v[n + 1] == 0:
                raise DegenerateFactorizationError(n + 1, 'v')
            c[n] = op.sub[n] / v[n + 1]
            u[n] = pc.sigma[n] / c[n]
            d[n + 1] = op.sup[n] / u[n]
        c[N - 1] = u[N - 1] = np.sqrt(pc.sigma[N - 1])
    else:
        u[:] = 1.0
        c[:] = pc.sigma
        for n in range(N - 1):
            if _offdiag_vanishes(op, n):
                raise DegenerateFactorizationError(n + 1, 'v')
            v[n + 1] = op.sub[n] / pc.sigma[n]
            d[n + 1] = op.sup[n]

    for array in (c, d, u, v):
        array.flags.writeable = False
    return FactorizationPair(c, d, u, v, gauge)


def _pseudo_symmetric(sub: np.ndarray, sup: np.ndarray) -> bool:
    return bool(np.allclose(sup, np.conj(sub), rtol=1e-12, atol=0.0))


def partner(op: TridiagonalOperator, pc: PartnerCoefficients, fp: FactorizationPair) -> TridiagonalOperator:
    """
    Compañero H+ = A B de longitud N - 1.

    diag+_n = sigma_n + tau_{n+1}, sub+_n = v_{n+1} c_{n+1}, sup+_n = u_{n+1} d_{n+1}.
    """
    N = op.size
    if N < 2:
        raise ValueError("El compañero necesita un operador de al menos dos elementos")
    diag = pc.sigma[:N - 1] + pc.tau[1:N]
    sub = fp.v[1:N - 1] * fp.c[1:N - 1]
    sup = fp.u[1:N - 1] * fp.d[1:N - 1]
    flag = op.pseudo_symmetric and _pseudo_symmetric(sub, sup)
    return TridiagonalOperator(diag, sub, sup, flag)


def build_partner(op: TridiagonalOperator, gauge: str = PAPER_CONJUGATE) -> Tuple[TridiagonalOperator, PartnerCoefficients, FactorizationPair]:
    """sigma_tau -> recover_factors -> partner en una sola llamada."""
    pc = sigma_tau(op)
    fp = recover_factors(op, pc, gauge)
    logger.info(f"Compañero construido: N={op.size} -> {op.size - 1}, gauge={gauge}")
    return partner(op, pc, fp), pc, fp


def partner_polys(op: TridiagonalOperator, table: PolynomialTable, n: int,
                  factors: Optional[FactorizationPair] = None) -> np.ndarray:
    """
    Polinomios del compañero P+_n(E) por la relación del núcleo.

    P+_n(E) = (c_n / c_0) sup_0 P_1(0) / (h_n sup_n P_{n+1}(0)) K_n(E, 0),
    con los pesos h_n del simetrizador (h_n = 1 si sub = sup). Con los factores
    del gauge `paper_conjugate` y operador simétrico el prefactor es
    sqrt(b_0 P_1(0) / (b_n P_n(0) P_{n+1}(0))). Se normaliza con P+_0 = 1.

    Args:
        op: Operador original
        table: Tabla con filas 0..n+1 y valores en el origen
        n: Grado del polinomio compañero
        factors: Factores a usar; por defecto los del gauge paper_conjugate

    Returns:
        Arreglo con P+_n en cada energía de la tabla
    """
    if n + 1 > table.n_max:
        raise IndexError(f"Se necesitan las filas 0..{n + 1}; la tabla llega a {table.n_max}")
    if n + 1 > op.size - 1:
        raise IndexError(f"n={n} excede el operador de tamaño {op.size}")
    if factors is None:
        factors = recover_factors(op, sigma_tau(op), PAPER_CONJUGATE)

    h = symmetrizer_weights(op, n)
    P0 = table.origin_values
    denominator = factors.c[0] * h[n] * op.sup[n] * P0[n + 1]
    if _node_vanishes(op, P0, n + 1, _REL_TOL) or denominator == 0:
        raise ZeroEnergyNodeError(n + 1, complex(P0[n + 1]))
    prefactor = factors.c[n] * op.sup[0] * P0[1] / denominator
    return np.array([prefactor * kernel_poly(table, n, j, h) for j in range(table.energies.size)])


def zero_mode_consistency(op: TridiagonalOperator, pc: PartnerCoefficients) -> complex:
    """a_0 tau_1 - sub_0 sup_0; en el caso hermítico es a_0 |d_1|^2 - |b_0|^2."""
    if op.size < 2:
        raise ValueError("Se necesita un operador de al menos dos elementos")
    return complex(op.diag[0] * pc.tau[1] - op.sub[0] * op.sup[0])


def ladder_pair(d: Sequence[complex], v: Optional[Sequence[complex]] = None) -> FactorizationPair:
    """
    Caso escalera c_n = u_n = 0: H y H+ son diagonales con H_nn = d_n v_n
    y H+_nn = d_{n+1} v_{n+1}. Por defecto v = conj(d).
    """
    d = np.array(d, dtype=complex)
    if d.size == 0 or d[0] != 0:
        raise ValueError("La secuencia d debe empezar con d_0 = 0")
    v = np.conj(d) if v is None else np.array(v, dtype=complex)
    zeros = np.zeros_like(d)
    return FactorizationPair(zeros, d, zeros.copy(), v, 'ladder')


def superpotential_pair(W: Callable, x_grid: Sequence[float], h: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Potenciales compañeros V-(x) = W^2 - W' y V+(x) = W^2 + W' (hbar = sqrt(2m) = 1).

    W' se aproxima por diferencia central de paso h. W debe aceptar arreglos.
    """
    if h <= 0:
        raise ValueError(f"El paso h debe ser positivo, se recibió {h}")
    x = np.asarray(x_grid, dtype=float)
    w = np.broadcast_to(np.asarray(W(x), dtype=float), x.shape)
    dw = (np.broadcast_to(np.asarray(W(x + h), dtype=float), x.shape)
          - np.broadcast_to(np.asarray(W(x - h), dtype=float), x.shape)) / (2 * h)
    return w * w - dw, w * w + dw


def factorization_errors(op: TridiagonalOperator, pc: PartnerCoefficients, fp: FactorizationPair,
                         partner_op: TridiagonalOperator) -> dict:
    """
    Errores relativos máximos de B A frente a H y de A B frente a H+.
    """
    N = op.size
    H = truncate(op, N)
    BA = fp.matrix_B() @ fp.matrix_A()
    AB = (fp.matrix_A() @ fp.matrix_B())[:N - 1, :N - 1]
    Hp = truncate(partner_op, N - 1)
    return {
        'identity_sigma_tau': float(np.max(np.abs(pc.sigma + pc.tau - op.diag)) / max(np.max(np.abs(op.diag)), _TINY)),
        'reconstruction_BA': float(np.max(np.abs(BA - H)) / max(np.max(np.abs(H)), _TINY)),
        'partner_AB': float(np.max(np.abs(AB - Hp)) / max(np.max(np.abs(Hp)), _TINY)),
    }
