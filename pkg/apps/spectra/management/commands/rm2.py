from ._base import SpectraCommand


class Command(SpectraCommand):
    help = 'Niveles y potencial del Rosen-Morse II PT-simétrico'

    def add_arguments(self, parser):
        parser.add_argument('--a', type=float, required=True, help='Parámetro A del pozo')
        parser.add_argument('--b', type=float, required=True, help='Parámetro B de la parte imaginaria')
        parser.add_argument('--delta', type=float, default=1.0, help='Escala delta > 0')
        parser.add_argument('--c', type=float, default=0.0, help='Término generalizado C (0 es el estándar)')
        parser.add_argument('--n-max', type=int, default=0, help='Último nivel n a listar')
        parser.add_argument('--x-min', type=float, default=-10.0, help='Inicio de la malla del potencial')
        parser.add_argument('--x-max', type=float, default=10.0, help='Fin de la malla del potencial')
        parser.add_argument('--x-steps', type=int, default=201, help='Puntos de la malla del potencial')
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        params = {
            'a': options['a'],
            'b': options['b'],
            'delta': options['delta'],
            'c': options['c'],
            'n_max': options['n_max'],
            'x_min': options['x_min'],
            'x_max': options['x_max'],
            'x_steps': options['x_steps'],
        }
        self.run_config('rm2', params, options)
