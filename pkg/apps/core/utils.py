import csv
import io
import json
import os
import tempfile
from numbers import Real
from typing import Any, Dict, Iterable, List, Sequence


def encode_complex(value: complex) -> Dict[str, float]:
    """Convierte un complejo al objeto JSON {re, im}"""
    value = complex(value)
    return {'re': float(value.real), 'im': float(value.imag)}


def decode_complex(data: Any) -> complex:
    """Lee un complejo desde {re, im} o desde un número real"""
    if isinstance(data, bool):
        raise ValueError(f"Valor complejo inválido: {data!r}")
    if isinstance(data, Real):
        return complex(float(data), 0.0)
    if isinstance(data, dict) and 're' in data:
        re, im = data['re'], data.get('im', 0.0)
        if isinstance(re, Real) and isinstance(im, Real) and not isinstance(re, bool) and not isinstance(im, bool):
            return complex(float(re), float(im))
    raise ValueError(f"Valor complejo inválido: {data!r}, se espera {{\"re\": x, \"im\": y}}")


def encode_complex_list(values: Iterable[complex]) -> List[Dict[str, float]]:
    return [encode_complex(v) for v in values]


def decode_complex_list(data: Any) -> List[complex]:
    if not isinstance(data, list):
        raise ValueError(f"Se esperaba una lista de complejos, se recibió {type(data).__name__}")
    return [decode_complex(item) for item in data]


def format_number(value: float) -> str:
    """Representación decimal más corta que reproduce el double"""
    return repr(float(value))


def json_text(data: Any) -> str:
    """JSON determinista: claves ordenadas, sangría fija y salto final"""
    return json.dumps(data, sort_keys=True, indent=2, allow_nan=False) + '\n'


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV RFC-4180 con cabecera; los floats se escriben con format_number"""
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(header)
    for row in rows:
        writer.writerow([
            format_number(cell) if isinstance(cell, float) else ('' if cell is None else cell)
            for cell in row
        ])
    return buffer.getvalue()


def write_atomic(path: str, text: str) -> str:
    """
    Escribe `text` en `path` de forma atómica: archivo temporal en el mismo
    directorio y luego os.replace.
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(prefix='.tmp-', dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except Exception:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    return path


def read_json(path: str) -> Any:
    with open(path, encoding='utf-8') as handle:
        return json.load(handle)
