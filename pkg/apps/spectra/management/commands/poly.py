from apps.spectra.services import POLY_FAMILIES

from ._base import SpectraCommand


class Command(SpectraCommand):
    help = 'Evalúa familias de polinomios ortogonales en una malla de puntos'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        evaluate = actions.add_parser('eval', help='Tabla n, x, P_n(x)')
        evaluate.add_argument(
            '--family',
            choices=list(POLY_FAMILIES),
            required=True,
            help='Familia de polinomios'
        )
        evaluate.add_argument('--n-max', type=int, default=5, help='Grado máximo')
        evaluate.add_argument(
            '--params',
            type=str,
            default=None,
            help='JSON con los parámetros de la familia (p. ej. {"mu": 0.5, "nu": {"re": 0, "im": 1}})'
        )
        evaluate.add_argument(
            '--input',
            type=str,
            default=None,
            help='JSON del operador tridiagonal para la familia recurrence'
        )
        evaluate.add_argument('--points', type=str, default=None, help='JSON con la lista de puntos {re, im}')
        evaluate.add_argument('--random-points', type=int, default=None, help='Cantidad de puntos aleatorios según --seed')
        evaluate.add_argument('--x-min', type=float, default=-1.0, help='Inicio de la malla')
        evaluate.add_argument('--x-max', type=float, default=1.0, help='Fin de la malla')
        evaluate.add_argument('--steps', type=int, default=11, help='Puntos de la malla uniforme')
        self.add_output_arguments(evaluate)

    def handle(self, *args, **options):
        params = {
            key: options[key]
            for key in ('family', 'n_max', 'params', 'input', 'points', 'random_points', 'x_min', 'x_max', 'steps')
        }
        self.run_config('poly-eval', params, options)
