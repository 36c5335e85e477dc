from ._base import SpectraCommand


class Command(SpectraCommand):
    help = 'Estados ligados del Coulomb con carga imaginaria en la base de Laguerre'

    def add_arguments(self, parser):
        parser.add_argument(
            '--z',
            type=float,
            required=True,
            help='Carga z > 0 (el potencial es i z / r)'
        )
        parser.add_argument(
            '--ell',
            type=int,
            default=0,
            help='Momento angular ell >= 0'
        )
        parser.add_argument(
            '--mu-max',
            type=int,
            default=5,
            help='Último índice mu de la lista de estados'
        )
        parser.add_argument(
            '--profile-mu',
            type=int,
            default=None,
            help='Índice mu del perfil radial a exportar'
        )
        parser.add_argument(
            '--r-max',
            type=float,
            default=40.0,
            help='Radio máximo de la malla del perfil'
        )
        parser.add_argument(
            '--r-steps',
            type=int,
            default=400,
            help='Número de puntos de la malla radial'
        )
        parser.add_argument(
            '--profile-out',
            type=str,
            default=None,
            help='CSV del perfil r,psi_re,psi_im'
        )
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        params = {
            'z': options['z'],
            'ell': options['ell'],
            'mu_max': options['mu_max'],
            'profile_mu': options['profile_mu'],
            'r_max': options['r_max'],
            'r_steps': options['r_steps'],
            'profile_out': options['profile_out'],
        }
        self.run_config('coulomb', params, options)
