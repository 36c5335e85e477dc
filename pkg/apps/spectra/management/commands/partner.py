from services.susy_service import GAUGES

from ._base import SpectraCommand


class Command(SpectraCommand):
    help = 'Factoriza un operador tridiagonal y escribe su compañero supersimétrico'

    def add_arguments(self, parser):
        parser.add_argument(
            '--input',
            type=str,
            required=True,
            help='JSON del operador: {"diag": [...], "sub": [...], "sup": [...]} con complejos {re, im}'
        )
        parser.add_argument(
            '--gauge',
            choices=GAUGES,
            default=GAUGES[0],
            help='Elección de factores A, B'
        )
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        self.run_config('partner', {'input': options['input'], 'gauge': options['gauge']}, options)
