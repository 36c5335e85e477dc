from django.conf import settings

from ._base import SpectraCommand


class Command(SpectraCommand):
    help = 'Oscilador de Morse PT-simétrico: informe SUSY (susy) o barrido de realidad del espectro (scan)'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)

        susy = actions.add_parser('susy', help='Factorización, compañero y polinomios frente a las formas cerradas')
        self.add_model_arguments(susy)
        susy.add_argument('--n', type=int, default=30, help='Tamaño del operador tridiagonal (3 a 400)')
        susy.add_argument('--energies', type=int, default=10, help='Energías aleatorias para comparar polinomios')
        self.add_output_arguments(susy)

        scan = actions.add_parser('scan', help='Realidad del espectro en la base de Hermite según lambda')
        self.add_model_arguments(scan)
        scan.add_argument('--lambda-min', type=float, default=0.5, help='Primer parámetro de escala')
        scan.add_argument('--lambda-max', type=float, default=15.0, help='Último parámetro de escala')
        scan.add_argument('--steps', type=int, default=30, help='Cantidad de valores de lambda')
        scan.add_argument(
            '--n',
            type=int,
            default=getattr(settings, 'SPECTRA_BASIS_SIZE', 70),
            help='Tamaño de la base de Hermite'
        )
        scan.add_argument(
            '--workers',
            type=int,
            default=getattr(settings, 'SPECTRA_SCAN_WORKERS', 1),
            help='Hilos del barrido'
        )
        self.add_output_arguments(scan)

    def add_model_arguments(self, parser):
        parser.add_argument(
            '--v0',
            type=float,
            default=getattr(settings, 'SPECTRA_MORSE_V0', 1.0),
            help='Intensidad V0 del potencial'
        )
        parser.add_argument(
            '--alpha',
            type=float,
            default=getattr(settings, 'SPECTRA_MORSE_ALPHA', 1.0),
            help='Inverso del alcance alpha > 0'
        )
        parser.add_argument('--gamma', type=float, default=0.5, help='Parámetro gamma de la base de Laguerre')

    def handle(self, *args, **options):
        params = {'v0': options['v0'], 'alpha': options['alpha'], 'gamma': options['gamma']}
        if options['action'] == 'susy':
            params.update(n=options['n'], energies=options['energies'])
            self.run_config('morse-susy', params, options)
        else:
            params.update(
                lambda_min=options['lambda_min'],
                lambda_max=options['lambda_max'],
                steps=options['steps'],
                n=options['n'],
                workers=options['workers'],
            )
            self.run_config('morse-scan', params, options)
