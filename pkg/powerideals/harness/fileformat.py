"""Text format for arrangements.

    dim <l>
    form <c1> ... <cl>      # one per hyperplane, labels 0..n-1 in file order

Coefficients are optionally signed integers or p/q rationals; ``#`` starts
a comment.
"""
from __future__ import annotations

import re
from fractions import Fraction
from importlib import resources

from powerideals.arrangement import Arrangement
from powerideals.errors import ArrangementFormatError, InputError

RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$", re.ASCII)
POSITIVE = re.compile(r"^0*[1-9]\d*$", re.ASCII)


def parse_rational(token: str, line_number: int) -> Fraction:
    if not RATIONAL.match(token):
        raise ArrangementFormatError(line_number, f"malformed rational {token!r}")
    value = token.split("/")
    if len(value) == 2 and int(value[1]) == 0:
        raise ArrangementFormatError(line_number, f"zero denominator in {token!r}")
    return Fraction(token)


def parse_arrangement(text: str) -> Arrangement:
    ambient_dim = None
    forms = []
    line_number = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *fields = line.split()
        if keyword == "dim":
            if ambient_dim is not None:
                raise ArrangementFormatError(line_number, "dimension declared twice")
            if len(fields) != 1 or not POSITIVE.match(fields[0]):
                raise ArrangementFormatError(line_number, "expected 'dim <positive integer>'")
            ambient_dim = int(fields[0])
        elif keyword == "form":
            if ambient_dim is None:
                raise ArrangementFormatError(line_number, "'form' before 'dim'")
            if len(fields) != ambient_dim:
                raise ArrangementFormatError(
                    line_number, f"dimension mismatch: {len(fields)} coefficients for dim {ambient_dim}"
                )
            form = tuple(parse_rational(token, line_number) for token in fields)
            if not any(form):
                raise ArrangementFormatError(line_number, "zero form")
            forms.append(form)
        else:
            raise ArrangementFormatError(line_number, f"unknown declaration {keyword!r}")
    if ambient_dim is None:
        raise ArrangementFormatError(max(line_number, 1), "missing 'dim' declaration")
    return Arrangement(ambient_dim, tuple(forms))


def format_arrangement(a: Arrangement) -> str:
    lines = [f"dim {a.ambient_dim}"]
    lines += ["form " + " ".join(str(c) for c in form) for form in a.forms]
    return "\n".join(lines) + "\n"


def builtin_text(name: str) -> str:
    try:
        return resources.files("powerideals.harness").joinpath("data", f"{name}.arr").read_text()
    except FileNotFoundError:
        raise InputError(f"no built-in arrangement named {name!r}") from None


def load_builtin(name: str) -> Arrangement:
    return parse_arrangement(builtin_text(name))


def load_file(path) -> Arrangement:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except UnicodeDecodeError as exc:
        raise InputError(f"{path}: not a UTF-8 text file ({exc.reason} at byte {exc.start})") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return parse_arrangement(text)
