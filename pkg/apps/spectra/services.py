import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from django.conf import settings
from django.core.exceptions import ValidationError

from apps.core.utils import (
    csv_text,
    decode_complex,
    decode_complex_list,
    encode_complex,
    encode_complex_list,
    json_text,
    read_json,
    write_atomic,
)
from services import hamiltonian_service as models
from services import quadrature_service as quadrature
from services import specfun_service as specfun
from services import susy_service as susy
from services import tridiag_service as tridiag
from services.exceptions import SpectralError

logger = logging.getLogger(__name__)

COMMANDS = ('coulomb', 'morse-susy', 'morse-scan', 'rm2', 'partner', 'poly-eval')
FORMATS = ('csv', 'json')

# Parámetros que necesita cada familia de `poly eval`
POLY_FAMILIES = {
    'hermite': (),
    'laguerre': ('alpha',),
    'jacobi': ('mu', 'nu'),
    'cdhahn': ('a', 'b', 'c'),
    'wilson': ('a', 'b', 'c', 'd'),
    'morse': ('V0', 'alpha'),
    'recurrence': (),
}

COULOMB_HEADER = ['mu', 'lambda_re', 'lambda_im', 'epsilon']
PROFILE_HEADER = ['r', 'psi_re', 'psi_im']
SCAN_HEADER = ['lambda', 'real_count', 'pair_count', 'unpaired_count', 'max_imag']
RM2_HEADER = ['n', 'energy', 'mu_re', 'mu_im', 'nu_re', 'nu_im']
OPERATOR_HEADER = ['n', 'diag_re', 'diag_im', 'sub_re', 'sub_im', 'sup_re', 'sup_im']
SUSY_HEADER = ['n', 'sigma_re', 'sigma_im', 'tau_re', 'tau_im', 'partner_diag_re', 'partner_diag_im']
POLY_HEADER = ['n', 'x_re', 'x_im', 'value_re', 'value_im']


def _flag(key: str) -> str:
    return '--' + key.replace('_', '-')


def _real(params: Dict[str, Any], key: str) -> float:
    value = params.get(key)
    if value is None or isinstance(value, bool):
        raise ValidationError(f"{_flag(key)} es obligatorio")
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{_flag(key)} debe ser numérico, se recibió {value!r}")
    if not math.isfinite(value):
        raise ValidationError(f"{_flag(key)} debe ser finito")
    params[key] = value
    return value


def _positive(params: Dict[str, Any], key: str) -> float:
    value = _real(params, key)
    if value <= 0:
        raise ValidationError(f"{_flag(key)} debe ser positivo, se recibió {value}")
    return value


def _integer(params: Dict[str, Any], key: str, low: int, high: Optional[int] = None) -> int:
    value = params.get(key)
    if value is None or isinstance(value, bool) or not _is_integral(value):
        raise ValidationError(f"{_flag(key)} debe ser un entero")
    value = int(value)
    if value < low or (high is not None and value > high):
        bound = f"[{low}, {high}]" if high is not None else f">= {low}"
        raise ValidationError(f"{_flag(key)} fuera de rango {bound}: {value}")
    params[key] = value
    return value


def _is_integral(value: Any) -> bool:
    try:
        return int(value) == value
    except (TypeError, ValueError, OverflowError):
        return False


def _json_file(params: Dict[str, Any], key: str) -> Any:
    path = params.get(key)
    if not path:
        raise ValidationError(f"{_flag(key)} es obligatorio")
    try:
        return read_json(path)
    except OSError as e:
        raise ValidationError(f"{_flag(key)}: no se pudo leer {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise ValidationError(f"{_flag(key)}: JSON inválido en {path}: {e.msg} (línea {e.lineno})")


def _operator_file(params: Dict[str, Any], key: str) -> tridiag.TridiagonalOperator:
    data = _json_file(params, key)
    if not isinstance(data, dict):
        raise ValidationError(f"{_flag(key)}: el operador debe ser un objeto JSON")
    try:
        return tridiag.TridiagonalOperator.from_dict(data)
    except ValueError as e:
        raise ValidationError(f"{_flag(key)}: operador inválido: {str(e)}")


@dataclass
class RunConfig:
    """
    Configuración de una ejecución de la CLI.

    `params` guarda los parámetros del modelo con los nombres de las opciones
    (guiones bajos en lugar de guiones). `validate` comprueba los rangos y
    lanza ValidationError con un mensaje de una sola línea.
    """

    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    output_path: Optional[str] = None
    format: str = 'csv'
    seed: int = 12345

    def validate(self) -> 'RunConfig':
        if self.command not in COMMANDS:
            raise ValidationError(f"Comando desconocido: {self.command}")
        if self.format not in FORMATS:
            raise ValidationError(f"--format debe ser uno de {', '.join(FORMATS)}")
        if isinstance(self.seed, bool) or not _is_integral(self.seed) or self.seed < 0:
            raise ValidationError("--seed debe ser un entero no negativo")
        self.seed = int(self.seed)
        getattr(self, '_validate_' + self.command.replace('-', '_'))(self.params)
        return self

    def _validate_coulomb(self, p: Dict[str, Any]) -> None:
        _positive(p, 'z')
        _integer(p, 'ell', 0)
        _integer(p, 'mu_max', 0, 10000)
        if p.get('profile_mu') is not None:
            _integer(p, 'profile_mu', 0, 10000)
            _positive(p, 'r_max')
            _integer(p, 'r_steps', 2)
            if not p.get('profile_out'):
                raise ValidationError("--profile-out es obligatorio con --profile-mu")

    def _validate_morse(self, p: Dict[str, Any]) -> None:
        _real(p, 'v0')
        _positive(p, 'alpha')
        gamma = _real(p, 'gamma')
        if abs(gamma + 0.5) < 1e-14:
            raise ValidationError("--gamma no puede valer -1/2")

    def _validate_morse_susy(self, p: Dict[str, Any]) -> None:
        self._validate_morse(p)
        _integer(p, 'n', 3, 400)
        _integer(p, 'energies', 1, 1000)

    def _validate_morse_scan(self, p: Dict[str, Any]) -> None:
        self._validate_morse(p)
        low = _positive(p, 'lambda_min')
        high = _positive(p, 'lambda_max')
        if high < low:
            raise ValidationError(f"--lambda-max ({high}) debe ser >= --lambda-min ({low})")
        _integer(p, 'steps', 1, 100000)
        _integer(p, 'n', 1, 2000)
        _integer(p, 'workers', 1, 256)

    def _validate_rm2(self, p: Dict[str, Any]) -> None:
        A = _real(p, 'a')
        _real(p, 'b')
        delta = _positive(p, 'delta')
        _real(p, 'c')
        n_max = _integer(p, 'n_max', 0, 10000)
        for n in range(n_max + 1):
            if abs(A - n * delta / math.sqrt(2.0)) < 1e-12:
                raise ValidationError(f"Nivel n={n} con A - n delta/sqrt 2 = 0: reduzca --n-max")
        low, high = _real(p, 'x_min'), _real(p, 'x_max')
        if high <= low:
            raise ValidationError("--x-max debe ser mayor que --x-min")
        _integer(p, 'x_steps', 2, 1000000)

    def _validate_partner(self, p: Dict[str, Any]) -> None:
        if p.get('gauge') not in susy.GAUGES:
            raise ValidationError(f"--gauge debe ser uno de {', '.join(susy.GAUGES)}")
        p['operator'] = _operator_file(p, 'input')
        if p['operator'].size < 2:
            raise ValidationError("--input: el operador necesita al menos dos elementos")

    def _validate_poly_eval(self, p: Dict[str, Any]) -> None:
        family = p.get('family')
        if family not in POLY_FAMILIES:
            raise ValidationError(f"--family debe ser uno de {', '.join(POLY_FAMILIES)}")
        n_max = _integer(p, 'n_max', 0, 500)

        family_params = {}
        if p.get('params'):
            family_params = _json_file(p, 'params')
            if not isinstance(family_params, dict):
                raise ValidationError("--params debe contener un objeto JSON")
        missing = [key for key in POLY_FAMILIES[family] if key not in family_params]
        if missing:
            raise ValidationError(f"--params: faltan claves para {family}: {', '.join(missing)}")
        try:
            if family == 'morse':
                p['model'] = models.MorseParams.from_dict(family_params)
                p['shifted_gamma'] = bool(family_params.get('shifted_gamma', False))
            else:
                p['family_params'] = {key: decode_complex(family_params[key]) for key in POLY_FAMILIES[family]}
        except ValueError as e:
            raise ValidationError(f"--params: {str(e)}")

        if family == 'recurrence':
            p['operator'] = _operator_file(p, 'input')
            if n_max > p['operator'].size - 1:
                raise ValidationError(f"--n-max debe ser <= {p['operator'].size - 1} para este operador")

        if p.get('points'):
            try:
                p['grid'] = np.array(decode_complex_list(_json_file(p, 'points')), dtype=complex)
            except ValueError as e:
                raise ValidationError(f"--points: {str(e)}")
            if p['grid'].size == 0:
                raise ValidationError("--points no puede estar vacío")
        else:
            low, high = _real(p, 'x_min'), _real(p, 'x_max')
            if high < low:
                raise ValidationError("--x-max debe ser >= --x-min")
            if p.get('random_points'):
                count = _integer(p, 'random_points', 1, 1000000)
                rng = np.random.default_rng(self.seed)
                p['grid'] = rng.uniform(low, high, count).astype(complex)
            else:
                steps = _integer(p, 'steps', 1, 1000000)
                p['grid'] = np.linspace(low, high, steps).astype(complex)


Outputs = List[Tuple[Optional[str], str]]


class SpectraService:
    """
    Orquesta los servicios numéricos para cada comando de la CLI.

    Todos los métodos devuelven un dict con 'success'; los fallos numéricos
    incluyen 'stage' con la etapa que falló.
    """

    def __init__(self):
        self.imag_tol = getattr(settings, 'SPECTRA_IMAG_TOL', 1e-8)
        self.eig_tol = getattr(settings, 'SPECTRA_EIG_TOL', 1e-9)

    def run(self, config: RunConfig) -> Dict[str, Any]:
        """
        Ejecuta un RunConfig ya validado y escribe sus salidas de forma atómica.

        Returns:
            {'success': True, 'data': {'files', 'output', 'summary'}} o un dict de error
        """
        handlers: Dict[str, Callable[[RunConfig], Tuple[Outputs, Dict[str, Any]]]] = {
            'coulomb': self._coulomb,
            'morse-susy': self._morse_susy,
            'morse-scan': self._morse_scan,
            'rm2': self._rm2,
            'partner': self._partner,
            'poly-eval': self._poly_eval,
        }
        logger.info(f"Ejecutando {config.command} (formato {config.format}, semilla {config.seed})")
        try:
            outputs, summary = handlers[config.command](config)
        except SpectralError as e:
            logger.error(f"Fallo numérico en {config.command}: {str(e)}")
            result = e.to_dict()
            result['command'] = config.command
            return result
        except (ValueError, ArithmeticError, np.linalg.LinAlgError) as e:
            logger.error(f"Error inesperado en {config.command}: {str(e)}")
            return {
                'success': False,
                'error': str(e),
                'error_type': type(e).__name__,
                'stage': config.command,
                'command': config.command,
            }

        files = []
        stdout_text = ''
        try:
            for path, text in outputs:
                if path is None:
                    stdout_text += text
                else:
                    files.append(write_atomic(path, text))
        except OSError as e:
            logger.error(f"No se pudo escribir la salida de {config.command}: {str(e)}")
            return {
                'success': False,
                'error': f"No se pudo escribir {e.filename}: {e.strerror}",
                'error_type': type(e).__name__,
                'stage': 'output',
                'command': config.command,
            }

        return {
            'success': True,
            'data': {'files': files, 'output': stdout_text, 'summary': summary},
        }

    # ------------------------------------------------------------------
    # coulomb
    # ------------------------------------------------------------------

    def _coulomb(self, config: RunConfig) -> Tuple[Outputs, Dict[str, Any]]:
        p = config.params
        z, ell, mu_max = p['z'], p['ell'], p['mu_max']
        profile_mu = p.get('profile_mu')
        top = max(mu_max, profile_mu if profile_mu is not None else 0)
        states = models.coulomb_bound_states(z, ell, top)
        listed = states[:mu_max + 1]

        if config.format == 'csv':
            text = csv_text(COULOMB_HEADER, [
                (s.mu, s.lambda_mu.real, s.lambda_mu.imag, s.epsilon) for s in listed
            ])
        else:
            text = json_text({
                'model': 'coulomb',
                'z': z,
                'ell': ell,
                'epsilon_bound': z * z / (2.0 * (ell + 1) ** 2),
                'states': [
                    {
                        'mu': s.mu,
                        'lambda': encode_complex(s.lambda_mu),
                        'printed_lambda': encode_complex(s.printed_lambda),
                        'sign': s.sign,
                        'epsilon': s.epsilon,
                        'row_residual': s.row_residual,
                    }
                    for s in listed
                ],
            })
        outputs: Outputs = [(config.output_path, text)]

        if profile_mu is not None:
            state = states[profile_mu]
            charge = models.CoulombImaginaryCharge(z, ell, state.lambda_mu)
            r = np.linspace(p['r_max'] / p['r_steps'], p['r_max'], p['r_steps'])
            psi = models.coulomb_wavefunction(charge, profile_mu, r)
            outputs.append((p['profile_out'], csv_text(PROFILE_HEADER, [
                (float(ri), float(v.real), float(v.imag)) for ri, v in zip(r, psi)
            ])))

        signs = sorted({s.sign for s in listed})
        return outputs, {'states': len(listed), 'oracle_signs': signs}

    # ------------------------------------------------------------------
    # morse susy
    # ------------------------------------------------------------------

    def _morse_susy(self, config: RunConfig) -> Tuple[Outputs, Dict[str, Any]]:
        p = config.params
        mp = models.MorseParams(p['v0'], p['alpha'], p['gamma'])
        N = p['n']
        shifted = models.morse_operator(mp, N)
        unshifted = models.morse_operator_unshifted(mp, N)

        partner_op, pc, fp = susy.build_partner(unshifted, susy.PAPER_CONJUGATE)
        fp_doolittle = susy.recover_factors(unshifted, pc, susy.DOOLITTLE)
        partner_doolittle = susy.partner(unshifted, pc, fp_doolittle)
        errors = susy.factorization_errors(unshifted, pc, fp, partner_op)

        products = partner_op.sub * partner_op.sup
        products_doolittle = partner_doolittle.sub * partner_doolittle.sup
        gauge = {
            'diag': _relative(partner_op.diag, partner_doolittle.diag),
            'offdiag_products': _relative(products, products_doolittle),
        }

        n = np.arange(N)
        sigma_closed = (mp.alpha ** 2 / 2) * (n + mp.g - mp.D) ** 2
        tau_closed = (mp.alpha ** 2 / 2) * n * (n + 2 * mp.gamma)
        resolution = models.resolve_partner_shift(mp, N - 1)
        closed_partner = models.morse_partner_closed(mp, N - 1, resolution.shift)
        oracle_partner = partner_op.shifted(mp.shift)
        closed = {
            'sigma': _relative(pc.sigma, sigma_closed),
            'tau': _relative(pc.tau, tau_closed),
            'partner_diag': _relative(oracle_partner.diag, closed_partner.diag),
            'partner_offdiag': _relative(oracle_partner.sub, closed_partner.sub),
        }

        rng = np.random.default_rng(config.seed)
        count = p['energies']
        energies = rng.uniform(-1.0, 1.0, count) + 1j * rng.uniform(-1.0, 1.0, count)
        n_rec = min(N - 1, 20)
        table = tridiag.recurrence_eval(shifted, energies, n_rec)
        closed_values = np.array([[models.morse_pn(mp, E, k) for E in energies] for k in range(n_rec + 1)])
        printed_values = np.array([[models.morse_pn_printed(mp, E, k) for E in energies] for k in range(n_rec + 1)])

        n_partner = min(N - 2, 12)
        table_unshifted = tridiag.recurrence_eval(unshifted, energies, n_partner + 1)
        kernel_values = np.array([susy.partner_polys(unshifted, table_unshifted, k, fp) for k in range(n_partner + 1)])
        partner_closed_values = np.array([
            [models.morse_pn(mp, E + mp.shift, k, shifted_gamma=True) for E in energies]
            for k in range(n_partner + 1)
        ])
        polynomials = {
            'degree_recurrence': n_rec,
            'degree_partner': n_partner,
            'recurrence_vs_closed': _relative(table.values, closed_values),
            'kernel_vs_partner_closed': _relative(kernel_values, partner_closed_values),
            'printed_form_discrepancy': _relative(table.values, printed_values),
        }
        if polynomials['printed_form_discrepancy'] > 1e-9:
            logger.warning(
                f"La forma impresa de P_n difiere de la recurrencia "
                f"(error relativo {polynomials['printed_form_discrepancy']:.3e})"
            )

        summary = {
            'partner_shift': resolution.label,
            'recurrence_vs_closed': polynomials['recurrence_vs_closed'],
            'printed_form_discrepancy': polynomials['printed_form_discrepancy'],
        }

        if config.format == 'csv':
            rows = []
            for k in range(N):
                diag = partner_op.diag[k] + mp.shift if k < N - 1 else None
                rows.append((
                    k, float(pc.sigma[k].real), float(pc.sigma[k].imag),
                    float(pc.tau[k].real), float(pc.tau[k].imag),
                    float(diag.real) if diag is not None else None,
                    float(diag.imag) if diag is not None else None,
                ))
            return [(config.output_path, csv_text(SUSY_HEADER, rows))], summary

        report = {
            'model': 'morse',
            'params': {'V0': mp.V0, 'alpha': mp.alpha, 'gamma': mp.gamma, 'N': N},
            'D': encode_complex(mp.D),
            'shift': encode_complex(mp.shift),
            'factorization': errors,
            'gauge_invariance': gauge,
            'closed_forms': closed,
            'partner_shift': {
                'label': resolution.label,
                'value': encode_complex(resolution.shift),
                'residuals': resolution.residuals,
                'offdiag_residual': resolution.offdiag_residual,
            },
            'kernel': 'K_n',
            'polynomials': polynomials,
            'zero_mode_consistency': encode_complex(susy.zero_mode_consistency(unshifted, pc)),
        }
        return [(config.output_path, json_text(report))], summary

    # ------------------------------------------------------------------
    # morse scan
    # ------------------------------------------------------------------

    def _morse_scan(self, config: RunConfig) -> Tuple[Outputs, Dict[str, Any]]:
        p = config.params
        mp = models.MorseParams(p['v0'], p['alpha'], p['gamma'])
        lambdas = np.linspace(p['lambda_min'], p['lambda_max'], p['steps'])
        records = quadrature.reality_scan(
            lambda x: models.morse_potential(mp, x), lambdas, p['n'],
            imag_tol=self.imag_tol, workers=p['workers'], tol=self.eig_tol,
        )
        failed = [r.lam for r in records if not r.ok]
        summary = {'rows': len(records), 'failed': len(failed)}

        if config.format == 'csv':
            text = csv_text(SCAN_HEADER, [
                (r.lam, r.real_count, r.pair_count, r.unpaired_count, r.max_imag) for r in records
            ])
        else:
            text = json_text({
                'model': 'morse',
                'params': {'V0': mp.V0, 'alpha': mp.alpha, 'gamma': mp.gamma, 'N': p['n']},
                'imag_tol': self.imag_tol,
                'records': [
                    {
                        'lambda': r.lam,
                        'real_count': r.real_count,
                        'pair_count': r.pair_count,
                        'unpaired_count': r.unpaired_count,
                        'max_imag': r.max_imag,
                        'error': r.error,
                    }
                    for r in records
                ],
            })
        return [(config.output_path, text)], summary

    # ------------------------------------------------------------------
    # rm2
    # ------------------------------------------------------------------

    def _rm2(self, config: RunConfig) -> Tuple[Outputs, Dict[str, Any]]:
        p = config.params
        rp = models.RosenMorseII(p['a'], p['b'], p['delta'], p['c'])
        levels = []
        for n in range(p['n_max'] + 1):
            params = rp.parameters(n)
            levels.append((n, models.rm2_energy(rp, n), params['mu'], params['nu']))

        x = np.linspace(p['x_min'], p['x_max'], p['x_steps'])
        V = models.rm2_potential(rp, x)
        pt_residual = float(np.max(np.abs(np.conj(models.rm2_potential(rp, -x)) - V)))
        summary = {'levels': len(levels), 'pt_residual': pt_residual}

        if config.format == 'csv':
            text = csv_text(RM2_HEADER, [
                (n, energy, float(mu.real), float(mu.imag), float(nu.real), float(nu.imag))
                for n, energy, mu, nu in levels
            ])
        else:
            text = json_text({
                'model': 'rosen-morse-ii',
                'params': {'A': rp.A, 'B': rp.B, 'delta': rp.delta, 'C': rp.C},
                'levels': [
                    {'n': n, 'energy': energy, 'mu': encode_complex(mu), 'nu': encode_complex(nu)}
                    for n, energy, mu, nu in levels
                ],
                'potential': [{'x': float(xi), 'V': encode_complex(vi)} for xi, vi in zip(x, V)],
                'pt_residual': pt_residual,
            })
        return [(config.output_path, text)], summary

    # ------------------------------------------------------------------
    # partner
    # ------------------------------------------------------------------

    def _partner(self, config: RunConfig) -> Tuple[Outputs, Dict[str, Any]]:
        p = config.params
        op = p['operator']
        partner_op, pc, fp = susy.build_partner(op, p['gauge'])
        errors = susy.factorization_errors(op, pc, fp, partner_op)
        summary = {'size': partner_op.size, 'gauge': p['gauge'], **errors}

        if config.format == 'json':
            return [(config.output_path, json_text(partner_op.to_dict()))], summary
        rows = []
        for k in range(partner_op.size):
            last = k == partner_op.size - 1
            rows.append((
                k, float(partner_op.diag[k].real), float(partner_op.diag[k].imag),
                None if last else float(partner_op.sub[k].real), None if last else float(partner_op.sub[k].imag),
                None if last else float(partner_op.sup[k].real), None if last else float(partner_op.sup[k].imag),
            ))
        return [(config.output_path, csv_text(OPERATOR_HEADER, rows))], summary

    # ------------------------------------------------------------------
    # poly eval
    # ------------------------------------------------------------------

    def _poly_eval(self, config: RunConfig) -> Tuple[Outputs, Dict[str, Any]]:
        p = config.params
        family = p['family']
        grid = p['grid']
        n_max = p['n_max']
        values = self._poly_values(family, p, grid, n_max)
        summary = {'family': family, 'rows': int(values.size)}

        if config.format == 'csv':
            rows = [
                (n, float(x.real), float(x.imag), float(values[n, j].real), float(values[n, j].imag))
                for n in range(n_max + 1) for j, x in enumerate(grid)
            ]
            return [(config.output_path, csv_text(POLY_HEADER, rows))], summary
        text = json_text({
            'family': family,
            'n_max': n_max,
            'points': encode_complex_list(grid),
            'values': [encode_complex_list(values[n]) for n in range(n_max + 1)],
        })
        return [(config.output_path, text)], summary

    def _poly_values(self, family: str, p: Dict[str, Any], grid: np.ndarray, n_max: int) -> np.ndarray:
        if family == 'recurrence':
            return np.array(tridiag.recurrence_eval(p['operator'], grid, n_max).values)
        if family == 'morse':
            mp, shifted = p['model'], p['shifted_gamma']
            evaluate = lambda n, x: models.morse_pn(mp, x, n, shifted_gamma=shifted)
        else:
            fp = p['family_params']
            evaluate = {
                'hermite': lambda n, x: specfun.hermite(n, x),
                'laguerre': lambda n, x: specfun.laguerre_assoc(n, fp.get('alpha'), x),
                'jacobi': lambda n, x: specfun.jacobi(n, fp.get('mu'), fp.get('nu'), x),
                'cdhahn': lambda n, x: specfun.cdhahn(n, x, fp.get('a'), fp.get('b'), fp.get('c')),
                'wilson': lambda n, x: specfun.wilson(n, x, fp.get('a'), fp.get('b'), fp.get('c'), fp.get('d')),
            }[family]
        return np.array([[complex(evaluate(n, x)) for x in grid] for n in range(n_max + 1)])


def _relative(actual, expected) -> float:
    """Error máximo relativo a la mayor magnitud esperada."""
    actual = np.asarray(actual)
    expected = np.asarray(expected)
    if actual.size == 0:
        return 0.0
    scale = max(float(np.max(np.abs(expected))), 1e-300)
    return float(np.max(np.abs(actual - expected)) / scale)
