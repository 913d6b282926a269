"""
Complex number text and JSON formats used by the CLI and scripts.
"""

import math
import re
from typing import Any, Dict, Optional

from ..exceptions import InputParseError

_REAL = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?|[+-]?(?:nan|inf|infinity)"

# a, bi, a+bi, a-bi with decimal or scientific components
_COMPLEX_PATTERNS = [
    re.compile(rf"^(?P<re>{_REAL})(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?|[+-](?:nan|inf|infinity))?(?P<unit>[ij])$", re.IGNORECASE),
    re.compile(rf"^(?P<re>{_REAL})$", re.IGNORECASE),
]
_UNIT_ONLY = re.compile(r"^(?P<sign>[+-]?)[ij]$", re.IGNORECASE)
_REAL_PLUS_UNIT = re.compile(rf"^(?P<re>{_REAL})(?P<sign>[+-])[ij]$", re.IGNORECASE)


def parse_complex(text: str) -> complex:
    """
    Parse `a+bi`, `a-bi`, `a`, `bi`, `i` (j accepted for i).

    Raises InputParseError on anything else. NaN and infinity parse so
    that the numerical layer can reject them with NonFiniteError.
    """
    if text is None:
        raise InputParseError("Missing complex value")
    s = text.strip().replace(" ", "")
    if not s:
        raise InputParseError("Empty complex value", context={"input": text})

    m = _UNIT_ONLY.match(s)
    if m:
        return complex(0.0, -1.0 if m.group("sign") == "-" else 1.0)

    m = _REAL_PLUS_UNIT.match(s)
    if m:
        return complex(float(m.group("re")), -1.0 if m.group("sign") == "-" else 1.0)

    m = _COMPLEX_PATTERNS[0].match(s)
    if m:
        if m.group("im") is None:
            # a lone imaginary number such as 2i
            return complex(0.0, float(m.group("re")))
        return complex(float(m.group("re")), float(m.group("im")))

    m = _COMPLEX_PATTERNS[1].match(s)
    if m:
        return complex(float(m.group("re")), 0.0)

    raise InputParseError(f"Cannot parse complex number '{text}' (expected a+bi)", context={"input": text})


def format_real(x: float, digits: int = 17) -> str:
    return f"{x:.{digits}g}"


def format_complex(z: complex, digits: int = 17) -> str:
    """Fixed significant-digit text form `a+bi` / `a-bi`."""
    z = complex(z)
    re_part = format_real(z.real, digits)
    sign = "-" if (z.imag < 0 or (z.imag == 0 and math.copysign(1.0, z.imag) < 0)) else "+"
    im_part = format_real(abs(z.imag), digits)
    return f"{re_part}{sign}{im_part}i"


def complex_record(z: Optional[complex]) -> Optional[Dict[str, float]]:
    """JSON record {re, im}; floats serialise with full round-trip precision."""
    if z is None:
        return None
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def complex_from_record(record: Any, name: str = "value") -> complex:
    """Inverse of complex_record; bare numbers and `a+bi` strings also accepted."""
    if isinstance(record, dict):
        try:
            return complex(float(record["re"]), float(record.get("im", 0.0)))
        except (KeyError, TypeError, ValueError) as e:
            raise InputParseError(f"Field '{name}' is not a {{re, im}} record", context={"field": name}) from e
    if isinstance(record, (int, float)) and not isinstance(record, bool):
        return complex(float(record), 0.0)
    if isinstance(record, str):
        return parse_complex(record)
    raise InputParseError(f"Field '{name}' has unsupported type {type(record).__name__}", context={"field": name})
