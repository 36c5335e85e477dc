"""
Hamiltonianos modelo con solución cerrada.

- Coulomb con carga imaginaria en la base de Laguerre (J-matrix)
- Oscilador de Morse PT-simétrico desplazado con su solución SUSY completa
- Rosen-Morse II PT-simétrico, estándar y generalizado

Unidades hbar = m = 1 y raíces principales en todas partes.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from apps.core.utils import decode_complex
from services.exceptions import ModelError, ParameterPoleError
from services.specfun_service import (
    TerminatingHypergeometric,
    hyp_terminating,
    jacobi,
    laguerre_assoc,
    log_gamma,
    pochhammer,
)
from services.susy_service import build_partner, FactorizationPair
from services.tridiag_service import TridiagonalOperator

logger = logging.getLogger(__name__)

_ZERO = 1e-14
_SQRT2 = np.sqrt(2.0)


def _require(data: Dict[str, Any], keys: Tuple[str, ...], model: str) -> None:
    missing = [key for key in keys if key not in data]
    if missing:
        raise ModelError(f"Faltan parámetros de {model}: {', '.join(missing)}")


# --------------------------------------------------------------------------
# Coulomb con carga imaginaria
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CoulombImaginaryCharge:
    """Potencial de Coulomb con carga iz en la base de Laguerre de escala lambda."""

    z: float
    ell: int
    lam: complex = 1.0

    def __post_init__(self):
        if not self.z > 0:
            raise ModelError(f"z debe ser positivo, se recibió {self.z}")
        if int(self.ell) != self.ell or self.ell < 0:
            raise ModelError(f"ell debe ser un entero no negativo, se recibió {self.ell}")
        object.__setattr__(self, 'ell', int(self.ell))
        object.__setattr__(self, 'lam', complex(self.lam))

    def normalization(self, n: int) -> complex:
        """B_n = sqrt(lambda n! / Gamma(n + 2 ell + 2))."""
        ratio = np.exp(log_gamma(n + 1) - log_gamma(n + 2 * self.ell + 2))
        return complex(np.sqrt(self.lam * ratio))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CoulombImaginaryCharge':
        _require(data, ('z', 'ell'), 'Coulomb')
        lam = decode_complex(data.get('lambda', 1.0))
        return cls(float(data['z']), data['ell'], lam)


@dataclass(frozen=True)
class CoulombBoundState:
    mu: int
    lambda_mu: complex
    epsilon: float
    sign: int
    printed_lambda: complex
    row_residual: float


def coulomb_jmatrix(p: CoulombImaginaryCharge, epsilon: complex, N: int) -> TridiagonalOperator:
    """
    J-matrix de H - epsilon en la base de Laguerre.

    diag_n = i lambda z - (epsilon - lambda^2/8)(2n + 2 ell + 2)
    sub_n = sup_n = (epsilon + lambda^2/8) sqrt((n+1)(2n + 2 ell + 2))
    """
    if N < 1:
        raise ValueError(f"N debe ser al menos 1, se recibió {N}")
    lam = p.lam
    n = np.arange(N)
    diag = 1j * lam * p.z - (epsilon - lam * lam / 8) * (2 * n + 2 * p.ell + 2)
    k = np.arange(N - 1)
    off = (epsilon + lam * lam / 8) * np.sqrt((k + 1) * (2 * k + 2 * p.ell + 2.0))
    return TridiagonalOperator(diag, off, off)


def coulomb_bound_states(z: float, ell: int, mu_max: int) -> List[CoulombBoundState]:
    """
    Estados ligados de energía positiva epsilon_mu = z^2 / (2 (mu + ell + 1)^2).

    El signo de lambda_mu = s 2iz / (mu + ell + 1) se elige de modo que la fila
    mu de la J-matrix se anule; se informa también el valor impreso (s = +1).

    Raises:
        ModelError: si ningún signo anula la fila
    """
    if not z > 0:
        raise ModelError(f"z debe ser positivo, se recibió {z}")
    states = []
    for mu in range(mu_max + 1):
        m = mu + ell + 1
        epsilon = z * z / (2.0 * m * m)
        printed = complex(0.0, 2.0 * z / m)
        best: Optional[CoulombBoundState] = None
        for sign in (-1, 1):
            lam = complex(0.0, sign * printed.imag)
            J = coulomb_jmatrix(CoulombImaginaryCharge(z, ell, lam), epsilon, mu + 2)
            scale = max(1.0, abs(lam * z), epsilon * (2 * mu + 2 * ell + 2))
            residual = max(abs(J.diag[mu]), abs(J.sup[mu])) / scale
            if residual <= 1e-12 and (best is None or residual < best.row_residual):
                best = CoulombBoundState(mu, lam, epsilon, sign, printed, float(residual))
        if best is None:
            logger.error(f"Ningún signo de lambda anula la fila mu={mu} (z={z}, ell={ell})")
            raise ModelError(f"Regresión de fórmula: ningún signo anula la fila mu={mu}")
        states.append(best)
    return states


def coulomb_wavefunction(p: CoulombImaginaryCharge, mu: int, r_grid) -> np.ndarray:
    """
    phi_mu(r) = B_mu (lambda r)^(ell+1) exp(-lambda r / 2) L_mu^(2 ell + 1)(lambda r).

    Se evalúa con el lambda de `p`; para el perfil ligado se usa lambda_mu.
    """
    r = np.asarray(r_grid, dtype=float)
    if np.any(r <= 0):
        raise ModelError("La malla radial debe ser estrictamente positiva")
    t = p.lam * r
    laguerre = np.array([laguerre_assoc(mu, 2 * p.ell + 1, value) for value in t.reshape(-1)]).reshape(t.shape)
    return p.normalization(mu) * t ** (p.ell + 1) * np.exp(-t / 2) * laguerre


# --------------------------------------------------------------------------
# Morse PT-simétrico
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MorseParams:
    """
    V(x) = V0 (exp(-2i alpha x) - 2 exp(-i alpha x)).

    D = sqrt(-2 V0 / alpha^2) - 1/2 y shift = -alpha^2 D^2 / 2.
    """

    V0: float
    alpha: float
    gamma: float = 0.5

    def __post_init__(self):
        if not self.alpha > 0:
            raise ModelError(f"alpha debe ser positivo, se recibió {self.alpha}")
        if abs(self.gamma + 0.5) < _ZERO:
            raise ModelError("gamma no puede valer -1/2")

    @property
    def D(self) -> complex:
        return complex(np.sqrt(complex(-2.0 * self.V0 / self.alpha ** 2)) - 0.5)

    @property
    def g(self) -> float:
        return self.gamma + 0.5

    @property
    def shift(self) -> complex:
        return -self.alpha ** 2 * self.D ** 2 / 2

    def xi(self, x) -> np.ndarray:
        return np.sqrt(complex(-8.0 * self.V0 / self.alpha ** 2)) * np.exp(-1j * self.alpha * np.asarray(x))

    def spectral_lambda(self, E: complex) -> complex:
        """lambda(E) = sqrt(-2 E / alpha^2 - D^2)."""
        return complex(np.sqrt(-2.0 * E / self.alpha ** 2 - self.D ** 2))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MorseParams':
        _require(data, ('V0', 'alpha'), 'Morse')
        return cls(float(data['V0']), float(data['alpha']), float(data.get('gamma', 0.5)))


def _s(k: int, gamma: float) -> complex:
    """sqrt(k (k + 2 gamma))."""
    return complex(np.sqrt(complex(k * (k + 2 * gamma))))


def morse_potential(p: MorseParams, x):
    return p.V0 * (np.exp(-2j * p.alpha * np.asarray(x)) - 2 * np.exp(-1j * p.alpha * np.asarray(x)))


def generalized_morse_potential(V1: float, V2: float, alpha: float, x):
    """V1 exp(-2i alpha x) - V2 exp(-i alpha x); Morse es V1 = V0, V2 = 2 V0."""
    x = np.asarray(x)
    return V1 * np.exp(-2j * alpha * x) - V2 * np.exp(-1j * alpha * x)


def scarf2_potential(V1: float, V2: float, x):
    """-V1 sech^2 x + i V2 sech x tanh x."""
    x = np.asarray(x, dtype=float)
    sech = 1.0 / np.cosh(x)
    return -V1 * sech ** 2 + 1j * V2 * sech * np.tanh(x)


def _morse_diag(alpha: float, gamma: float, D: complex, N: int) -> np.ndarray:
    n = np.arange(N)
    g = gamma + 0.5
    return (alpha ** 2 / 2) * ((n + g - D) ** 2 + n * (n + 2 * gamma) - D ** 2)


def _morse_offdiag(alpha: float, gamma: float, D: complex, N: int) -> np.ndarray:
    g = gamma + 0.5
    return np.array([-(alpha ** 2 / 2) * _s(n + 1, gamma) * (n + g - D) for n in range(N - 1)], dtype=complex)


def morse_operator(p: MorseParams, N: int) -> TridiagonalOperator:
    """
    Operador tridiagonal de la recurrencia E C_n del Morse desplazado.

    diag_n = (alpha^2/2)[(n + gamma + 1/2 - D)^2 + n(n + 2 gamma) - D^2]
    sub_n = sup_n = -(alpha^2/2) sqrt((n+1)(n + 2 gamma + 1)) (n + gamma + 1/2 - D)
    """
    if N < 1:
        raise ValueError(f"N debe ser al menos 1, se recibió {N}")
    off = _morse_offdiag(p.alpha, p.gamma, p.D, N)
    return TridiagonalOperator(_morse_diag(p.alpha, p.gamma, p.D, N), off, off)


def morse_operator_unshifted(p: MorseParams, N: int) -> TridiagonalOperator:
    """Morse sin el desplazamiento: diag + alpha^2 D^2 / 2. Es el que factorizan c_n, d_n."""
    return morse_operator(p, N).shifted(-p.shift)


def morse_cd(p: MorseParams, N: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    c_n = (i alpha / sqrt 2)(n + gamma + 1/2 - D) y d_n = -(i alpha / sqrt 2) sqrt(n (n + 2 gamma)), d_0 = 0.
    """
    n = np.arange(N)
    c = (1j * p.alpha / _SQRT2) * (n + p.g - p.D)
    d = np.array([-(1j * p.alpha / _SQRT2) * _s(k, p.gamma) for k in range(N)], dtype=complex)
    d[0] = 0.0
    return c, d


def morse_closed_factors(p: MorseParams, N: int) -> FactorizationPair:
    """Factores cerrados con u_n = -c_n y v_n = -d_n; B A es el Morse sin desplazar."""
    c, d = morse_cd(p, N)
    return FactorizationPair(c, d, -c, -d, 'closed_form')


def _morse_partner_diag(p: MorseParams, N: int, S: complex) -> np.ndarray:
    n = np.arange(N)
    return (p.alpha ** 2 / 2) * ((n + 1) * (n + 2 * p.gamma + 1) + (n + p.g - p.D) ** 2) + S


def _morse_partner_offdiag(p: MorseParams, N: int) -> np.ndarray:
    return np.array(
        [-(p.alpha ** 2 / 2) * _s(n + 1, p.gamma) * (n + p.g + 1 - p.D) for n in range(N - 1)],
        dtype=complex,
    )


@dataclass(frozen=True)
class PartnerShiftResolution:
    """Constante S de la forma cerrada del compañero decidida por el oráculo A B."""

    shift: complex
    label: str
    residuals: Dict[str, float] = field(default_factory=dict)
    offdiag_residual: float = 0.0


def resolve_partner_shift(p: MorseParams, N: int = 12) -> PartnerShiftResolution:
    """
    Compara los candidatos S = 0 y S = -alpha^2 D^2 / 2 con el compañero obtenido
    por factorización numérica del Morse sin desplazar y producto A B, vuelto a
    desplazar por -alpha^2 D^2 / 2.
    """
    unshifted = morse_operator_unshifted(p, N + 1)
    partner_op, pc, fp = build_partner(unshifted)
    AB = (fp.matrix_A() @ fp.matrix_B())[:N, :N] + p.shift * np.eye(N)
    oracle = np.diag(AB)
    scale = max(float(np.max(np.abs(oracle))), 1.0)

    candidates = {'0': 0j, '-alpha^2 D^2/2': p.shift}
    residuals = {
        label: float(np.max(np.abs(_morse_partner_diag(p, N, S) - oracle)) / scale)
        for label, S in candidates.items()
    }
    label = min(residuals, key=lambda key: (residuals[key], key != '-alpha^2 D^2/2'))
    off = _morse_partner_offdiag(p, N)
    off_scale = max(float(np.max(np.abs(off))), 1.0) if off.size else 1.0
    off_residual = float(np.max(np.abs(np.diag(AB, -1) - off)) / off_scale) if off.size else 0.0
    logger.info(f"Constante del compañero Morse: S = {label} (residuos {residuals})")
    return PartnerShiftResolution(candidates[label], label, residuals, off_residual)


def morse_partner_closed(p: MorseParams, N: int, shift: Optional[complex] = None) -> TridiagonalOperator:
    """
    Compañero cerrado: diag+_n = (alpha^2/2)[(n+1)(n+2 gamma+1) + (n+gamma+1/2-D)^2] + S,
    b+_n = -(alpha^2/2) sqrt((n+1)(n+2 gamma+1)) (n + gamma + 3/2 - D).

    Sin `shift` la constante S la fija `resolve_partner_shift`.
    """
    if shift is None:
        shift = resolve_partner_shift(p).shift
    off = _morse_partner_offdiag(p, N)
    return TridiagonalOperator(_morse_partner_diag(p, N, shift), off, off)


def _morse_pn(alpha: float, gamma: float, D: complex, E: complex, n: int) -> complex:
    lower = gamma + 0.5 - D
    for k in range(n):
        if abs(lower + k) < _ZERO:
            raise ParameterPoleError(f"gamma + 1/2 - D = {lower} alcanza un polo en n={n}")
    norm = complex(1.0)
    for k in range(1, n + 1):
        norm *= _s(k, gamma)
    if abs(norm) < _ZERO:
        raise ParameterPoleError(f"La normalización se anula para gamma={gamma}, n={n}")
    kappa = np.sqrt(complex(2.0 * E / alpha ** 2))
    series = TerminatingHypergeometric.build(n, (-D + 1j * kappa, -D - 1j * kappa), (lower, lower))
    return pochhammer(lower, n) * hyp_terminating(series) / norm


def morse_pn(p: MorseParams, E: complex, n: int, shifted_gamma: bool = False) -> complex:
    """
    P_n(E) = C_n / C_0 del Morse desplazado en forma cerrada.

    P_n = (gamma+1/2-D)_n 3F2(-n, -D+i kappa, -D-i kappa; gamma+1/2-D, gamma+1/2-D; 1)
    / prod_k sqrt(k (k + 2 gamma)), kappa^2 = 2E / alpha^2.

    Con `shifted_gamma` los parámetros pasan a gamma+3/2-D y 1-D +- i kappa:
    es la familia del compañero A B del Morse sin desplazar, con E medida como
    energía del Morse desplazado.

    Raises:
        ParameterPoleError: si gamma+1/2-D (o gamma+3/2-D) es un polo alcanzable
    """
    D = p.D - 1 if shifted_gamma else p.D
    return _morse_pn(p.alpha, p.gamma, D, E, n)


def morse_pn_printed(p: MorseParams, E: complex, n: int) -> complex:
    """
    Forma impresa: (-1)^n (gamma+1/2-D)_n / sqrt(n! (2 gamma + 1)_n)
    3F2(-n, 1-D+i lambda, 1-D-i lambda; gamma+1/2-D, gamma+1/2-D; 1).

    Se conserva sólo como diagnóstico frente a la recurrencia.
    """
    D = p.D
    lower = p.g - D
    lam = p.spectral_lambda(E)
    series = TerminatingHypergeometric.build(n, (1 - D + 1j * lam, 1 - D - 1j * lam), (lower, lower))
    norm = np.sqrt(np.exp(log_gamma(n + 1)) * pochhammer(2 * p.gamma + 1, n))
    return (-1) ** n * pochhammer(lower, n) / norm * hyp_terminating(series)


def morse_basis(p: MorseParams, n: int, x) -> complex:
    """
    phi_n(x) = sqrt(i alpha n! / Gamma(n + 2 gamma + 1)) xi^(gamma+1/2) exp(-xi/2) L_n^(2 gamma)(xi),
    xi = sqrt(-8 V0 / alpha^2) exp(-i alpha x).

    Acepta x complejo: en la recta real |xi| es constante; el decaimiento
    para V0 < 0 ocurre a lo largo de x = i y.
    """
    xi = complex(p.xi(x))
    ratio = np.exp(log_gamma(n + 1) - log_gamma(n + 2 * p.gamma + 1))
    prefactor = np.sqrt(1j * p.alpha * ratio)
    envelope = np.exp(-xi / 2)
    if envelope == 0:
        return 0j
    return complex(prefactor * xi ** (p.gamma + 0.5) * envelope * laguerre_assoc(n, 2 * p.gamma, xi))


# --------------------------------------------------------------------------
# Rosen-Morse II
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RosenMorseII:
    """
    V(x) = 2iB tanh(delta x) - A(A + delta/sqrt 2) sech^2(delta x) + iC tanh(delta x) sech^2(delta x).

    C = 0 es el Rosen-Morse II estándar.
    """

    A: float
    B: float
    delta: float
    C: float = 0.0

    def __post_init__(self):
        if not self.delta > 0:
            raise ModelError(f"delta debe ser positivo, se recibió {self.delta}")

    @property
    def s(self) -> float:
        return _SQRT2 * self.A / self.delta

    @property
    def lam(self) -> complex:
        return 1j * _SQRT2 * self.B / self.delta

    def parameters(self, n: int) -> Dict[str, complex]:
        """s, lambda, a, mu = s-n+a y nu = s-n-a para el nivel n."""
        gap = self.s - n
        if abs(gap) < _ZERO:
            raise ModelError(f"s - n = 0 para n={n}: el parámetro a no está definido")
        a = _SQRT2 * self.lam / (self.delta * gap)
        return {'s': self.s, 'lambda': self.lam, 'a': a, 'mu': gap + a, 'nu': gap - a}

    def exponent_pairs(self, n: int) -> List[Tuple[complex, complex]]:
        params = self.parameters(n)
        gap, a = self.s - n, params['a']
        return [
            ((gap + a) / 2, (gap - a) / 2),
            ((gap + a + 1) / 2, (gap - a) / 2),
            ((gap + a) / 2, (gap - a + 1) / 2),
        ]

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RosenMorseII':
        _require(data, ('A', 'B', 'delta'), 'Rosen-Morse II')
        return cls(float(data['A']), float(data['B']), float(data['delta']), float(data.get('C', 0.0)))


def rm2_energy(p: RosenMorseII, n: int) -> float:
    """
    E_n = -(A - n delta / sqrt 2)^2 + B^2 / (A - n delta / sqrt 2)^2.

    Raises:
        ModelError: si A - n delta / sqrt 2 = 0
    """
    k = p.A - n * p.delta / _SQRT2
    if abs(k) < _ZERO:
        raise ModelError(f"Nivel n={n} con A - n delta/sqrt 2 = 0")
    return float(-k * k + p.B * p.B / (k * k))


def rm2_potential(p: RosenMorseII, x):
    x = np.asarray(x, dtype=float)
    t = np.tanh(p.delta * x)
    sech2 = 1.0 / np.cosh(p.delta * x) ** 2
    return 2j * p.B * t - p.A * (p.A + p.delta / _SQRT2) * sech2 + 1j * p.C * t * sech2


def rm2_basis(p: RosenMorseII, n: int, x: float,
              exponents: Optional[Tuple[complex, complex]] = None, tol: float = 1e-12) -> complex:
    """
    psi_n(y) = (1-y)^alpha (1+y)^beta P_n^(mu, nu)(y), y = tanh(delta x), C_n = 1.

    Los exponentes deben ser uno de los tres pares admisibles; por defecto el
    primero. Las potencias se evalúan en forma logarítmica para x grandes.

    Raises:
        ModelError: si el par de exponentes no es admisible
    """
    pairs = p.exponent_pairs(n)
    if exponents is None:
        exponents = pairs[0]
    elif not any(abs(complex(exponents[0]) - a) <= tol and abs(complex(exponents[1]) - b) <= tol for a, b in pairs):
        raise ModelError(f"Par de exponentes no admisible: {exponents}")
    params = p.parameters(n)
    t = p.delta * float(x)
    log_minus = np.log(2.0) - np.logaddexp(0.0, 2.0 * t)
    log_plus = np.log(2.0) - np.logaddexp(0.0, -2.0 * t)
    envelope = np.exp(complex(exponents[0]) * log_minus + complex(exponents[1]) * log_plus)
    return complex(envelope * jacobi(n, params['mu'], params['nu'], np.tanh(t)))
