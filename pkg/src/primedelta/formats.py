"""Shared text format for integer sets and tuples.

Decimal integers separated by any whitespace; `#` starts a comment running
to end of line. Duplicates are rejected with an error naming the first
duplicate. Trivially produced by hand or scripts, and everything this
package writes in it can be re-ingested unchanged.
"""

import sys

from .errors import InputFormatError
from .primes import U64_MAX


def parse_integer_text(text):
    """Parse the text format into an ordered list of distinct integers."""
    values = []
    seen = set()
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0]
        for token in line.split():
            try:
                value = int(token, 10)
            except ValueError:
                raise InputFormatError(f"not a decimal integer: {token!r}") from None
            if value < 0:
                raise InputFormatError(f"negative values are not allowed: {token}")
            if value > U64_MAX:
                raise InputFormatError(f"value does not fit in 64 bits: {token}")
            if value in seen:
                raise InputFormatError(f"duplicate value {value}")
            seen.add(value)
            values.append(value)
    return values


def read_integers(path):
    """Read the text format from a file path, or stdin when path is '-'."""
    if path == "-":
        return parse_integer_text(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return parse_integer_text(handle.read())


def write_integer_set(path, values, comment=None):
    """Write values in the text format, one per line."""
    with open(path, "w", encoding="utf-8") as handle:
        if comment:
            handle.write(f"# {comment}\n")
        for value in values:
            handle.write(f"{value}\n")
