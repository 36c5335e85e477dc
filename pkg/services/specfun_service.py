"""
Funciones especiales para las formas cerradas de los modelos espectrales.

Todas las funciones son puras y admiten parámetros complejos. Las series
hipergeométricas se suman en orden ascendente de índice, actualizando el
término corriente, para que el resultado sea reproducible bit a bit.
"""
from dataclasses import dataclass, field
from typing import Sequence, Tuple, Union

import numpy as np
from scipy import special

from services.exceptions import DegenerateParameterError, TerminatingSeriesError

Number = Union[int, float, complex]

# Umbral relativo de denominador nulo en recurrencias.
_REL_TOL = 1e-14


def pochhammer(x: Number, k: int) -> complex:
    """
    Símbolo de Pochhammer (x)_k = x (x+1) ... (x+k-1).

    Args:
        x: Base compleja
        k: Número de factores (k >= 0)

    Returns:
        Producto complejo; (x)_0 = 1
    """
    if k < 0:
        raise ValueError(f"El orden del Pochhammer debe ser no negativo, se recibió {k}")
    result = complex(1.0)
    for j in range(k):
        result *= (x + j)
    return result


def log_gamma(z: Number) -> complex:
    """Logaritmo de Gamma en la rama principal."""
    return complex(special.loggamma(complex(z)))


def gamma(z: Number) -> complex:
    """Gamma compleja vía log-Gamma."""
    return complex(np.exp(log_gamma(z)))


def hermite(n: int, x):
    """
    Polinomio de Hermite físico H_n(x) por recurrencia H_{k+1} = 2x H_k - 2k H_{k-1}.

    Acepta escalares o arreglos de numpy.
    """
    x = np.asarray(x)
    prev = np.ones_like(x, dtype=float if not np.iscomplexobj(x) else complex)
    if n == 0:
        return prev if prev.ndim else prev.item()
    curr = 2.0 * x * prev
    for k in range(1, n):
        prev, curr = curr, 2.0 * x * curr - 2.0 * k * prev
    return curr if curr.ndim else curr.item()


def laguerre_assoc(n: int, alpha: Number, z: Number) -> complex:
    """
    Polinomio de Laguerre asociado L_n^alpha(z) por recurrencia hacia adelante.

    (k+1) L_{k+1} = (2k + 1 + alpha - z) L_k - (k + alpha) L_{k-1}
    """
    prev = complex(1.0)
    if n == 0:
        return prev
    curr = 1.0 + alpha - z
    for k in range(1, n):
        prev, curr = curr, ((2 * k + 1 + alpha - z) * curr - (k + alpha) * prev) / (k + 1)
    return complex(curr)


def jacobi(n: int, mu: Number, nu: Number, y: Number) -> complex:
    """
    Polinomio de Jacobi P_n^{(mu, nu)}(y) con parámetros complejos.

    Args:
        n: Grado
        mu, nu: Parámetros complejos
        y: Argumento

    Returns:
        Valor complejo del polinomio

    Raises:
        DegenerateParameterError: si el denominador de la recurrencia se anula
    """
    prev = complex(1.0)
    if n == 0:
        return prev
    curr = (mu + nu + 2) * y / 2 + (mu - nu) / 2
    for k in range(1, n):
        s = 2 * k + mu + nu
        den = 2 * (k + 1) * (k + mu + nu + 1) * s
        scale = 2 * (k + 1) * (k + abs(mu) + abs(nu) + 1) * (2 * k + abs(mu) + abs(nu))
        if abs(den) <= _REL_TOL * scale:
            raise DegenerateParameterError(
                f"Recurrencia de Jacobi degenerada en k={k} para mu={mu}, nu={nu}"
            )
        a = (s + 1) * ((s + 2) * s * y + mu * mu - nu * nu)
        b = 2 * (k + mu) * (k + nu) * (s + 2)
        prev, curr = curr, (a * curr - b * prev) / den
    return complex(curr)


@dataclass(frozen=True)
class TerminatingHypergeometric:
    """
    Serie hipergeométrica pFq terminante de grado n.

    Uno de los parámetros superiores vale -n; ningún parámetro inferior
    alcanza -k con 0 <= k < n.
    """

    degree: int
    upper_params: Tuple[complex, ...]
    lower_params: Tuple[complex, ...]
    argument: complex = 1.0
    tol: float = field(default=1e-12, compare=False)

    def __post_init__(self):
        if self.degree < 0:
            raise TerminatingSeriesError(f"Grado negativo: {self.degree}")
        if not any(abs(a + self.degree) <= self.tol for a in self.upper_params):
            raise TerminatingSeriesError(
                f"Ningún parámetro superior vale -{self.degree}: la serie no termina"
            )

    @classmethod
    def build(cls, n: int, upper: Sequence[Number], lower: Sequence[Number], argument: Number = 1.0):
        """Construye la serie anteponiendo -n a los parámetros superiores."""
        return cls(n, (complex(-n),) + tuple(complex(a) for a in upper),
                   tuple(complex(b) for b in lower), complex(argument))


def hyp_terminating(spec: TerminatingHypergeometric) -> complex:
    """
    Suma finita de n+1 términos de una serie terminante.

    Raises:
        TerminatingSeriesError: si un parámetro inferior se anula antes de terminar
    """
    total = complex(1.0)
    term = complex(1.0)
    for k in range(spec.degree):
        num = complex(1.0)
        for a in spec.upper_params:
            num *= (a + k)
        den = complex(k + 1)
        for b in spec.lower_params:
            if abs(b + k) <= _REL_TOL * max(1.0, abs(b), k):
                raise TerminatingSeriesError(
                    f"Parámetro inferior {b} se anula en el término {k} antes de terminar"
                )
            den *= (b + k)
        term = term * num * spec.argument / den
        total += term
    return total


def hyp1f1_terminating(n: int, b: Number, z: Number) -> complex:
    return hyp_terminating(TerminatingHypergeometric.build(n, (), (b,), z))


def cdhahn(n: int, x2: Number, a: Number, b: Number, c: Number) -> complex:
    """
    Polinomio dual de Hahn continuo S_n(x^2; a, b, c).

    S_n = (a+b)_n (a+c)_n 3F2(-n, a+ix, a-ix; a+b, a+c; 1), x = raíz principal de x2.
    """
    x = np.sqrt(complex(x2))
    series = TerminatingHypergeometric.build(n, (a + 1j * x, a - 1j * x), (a + b, a + c))
    return pochhammer(a + b, n) * pochhammer(a + c, n) * hyp_terminating(series)


def wilson(n: int, x2: Number, a: Number, b: Number, c: Number, d: Number) -> complex:
    """
    Polinomio de Wilson W_n(x^2; a, b, c, d) por su suma 4F3 terminante.
    """
    x = np.sqrt(complex(x2))
    series = TerminatingHypergeometric.build(
        n,
        (n + a + b + c + d - 1, a + 1j * x, a - 1j * x),
        (a + b, a + c, a + d),
    )
    return pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n) * hyp_terminating(series)
