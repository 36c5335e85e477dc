"""
Excepciones compartidas por los servicios espectrales.

Los servicios numéricos lanzan estas excepciones; la capa de orquestación
(`apps.spectra.services.SpectraService`) las convierte en diccionarios de
resultado con 'success', 'error' y 'error_type'.
"""
from typing import Any, Optional


class SpectralError(ValueError):
    """Error base de todos los servicios espectrales."""

    stage = 'spectral'

    def to_dict(self) -> dict:
        return {
            'success': False,
            'error': str(self),
            'error_type': type(self).__name__,
            'stage': self.stage,
        }


class NonRegularOperatorError(SpectralError):
    """Un elemento de la superdiagonal es cero y la recurrencia no avanza."""

    stage = 'recurrence'

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"Operador no regular: sup[{index}] = 0, la recurrencia no puede avanzar")


class ZeroEnergyNodeError(SpectralError):
    """P_n(0) se anula: la factorización en E = 0 no existe."""

    stage = 'factorization'

    def __init__(self, index: int, value: complex = 0j):
        self.index = index
        self.value = value
        super().__init__(f"Nodo de energía cero: P_{index}(0) = {value} se anula")


class DegenerateFactorizationError(SpectralError):
    stage = 'factorization'

    def __init__(self, index: int, entry: str = 'v'):
        self.index = index
        self.entry = entry
        super().__init__(f"Factorización degenerada: {entry}[{index}] = 0")


class DegenerateParameterError(SpectralError):
    """Denominador nulo en una recurrencia por combinación degenerada de parámetros."""

    stage = 'specfun'


class TerminatingSeriesError(SpectralError):
    """La serie hipergeométrica no termina o divide por cero antes de terminar."""

    stage = 'specfun'


class ParameterPoleError(SpectralError):
    stage = 'models'


class EigensolverError(SpectralError):
    """
    Falla del resolvedor de autovalores.

    `partial` guarda el resultado parcial disponible: la forma de Hessenberg
    cuando LAPACK no converge, o el reporte que viola el contrato de residuos.
    """

    stage = 'eigensolve'

    def __init__(self, message: str, partial: Optional[Any] = None):
        self.partial = partial
        super().__init__(message)


class ModelError(SpectralError):
    stage = 'models'


class QuadratureError(SpectralError):
    stage = 'quadrature'

    def __init__(self, message: str, node: Optional[float] = None):
        self.node = node
        super().__init__(message)
