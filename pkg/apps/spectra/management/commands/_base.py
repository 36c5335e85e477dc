import logging

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from apps.spectra.services import FORMATS, RunConfig, SpectraService

logger = logging.getLogger(__name__)


class SpectraCommand(BaseCommand):
    """
    Base común de los comandos numéricos.

    Valida con RunConfig (código de salida 2), ejecuta con SpectraService
    (código 1 si falla una etapa numérica) y escribe el resultado en stdout
    o en el archivo de --out.
    """

    def add_output_arguments(self, parser):
        parser.add_argument(
            '--format',
            choices=FORMATS,
            default='csv',
            help='Formato de salida (csv o json)'
        )
        parser.add_argument(
            '--out',
            type=str,
            default=None,
            help='Archivo de salida; se escribe de forma atómica. Sin él, se usa stdout'
        )
        parser.add_argument(
            '--seed',
            type=int,
            default=getattr(settings, 'SPECTRA_SEED', 12345),
            help='Semilla de las energías y puntos aleatorios'
        )

    def run_config(self, command, params, options):
        config = RunConfig(
            command=command,
            params=params,
            output_path=options.get('out'),
            format=options.get('format') or 'csv',
            seed=options.get('seed', getattr(settings, 'SPECTRA_SEED', 12345)),
        )
        try:
            config.validate()
        except ValidationError as e:
            raise CommandError('; '.join(e.messages), returncode=2)

        result = SpectraService().run(config)
        if not result['success']:
            raise CommandError(f"{result['stage']}: {result['error']}", returncode=1)

        data = result['data']
        if data['output']:
            self.stdout.write(data['output'], ending='')
        notices = self.stdout if config.output_path else self.stderr
        for path in data['files']:
            notices.write(self.style.SUCCESS(f'Archivo escrito: {path}'))
        logger.info(f"{command} terminado: {data['summary']}")
        return result
