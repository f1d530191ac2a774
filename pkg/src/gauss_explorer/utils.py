import re
from typing import List, Sequence, Union


def natural_sort_key(text: str) -> List[Union[str, int]]:
    """
    Splits the string into a list of text and numbers for natural sorting.
    e.g., "h10" -> ["h", 10]
    """
    def convert(part):
        return int(part) if part.isdigit() else part.lower()

    return [convert(c) for c in re.split('([0-9]+)', text)]

def format_sign(sign: int) -> str:
    """Format a chord sign as '+' or '-'."""
    return "+" if sign > 0 else "-"

def parse_sign(token: str) -> int:
    """Parse '+' / '-' (or '+1' / '-1') into +1 / -1."""
    if token in ("+", "+1", "1"):
        return 1
    if token in ("-", "-1"):
        return -1
    raise ValueError(f"bad sign '{token}'")

def format_letter(generator: str, exponent: int) -> str:
    """Format a single power of a generator, e.g. g1^-4."""
    return generator if exponent == 1 else f"{generator}^{exponent}"

def format_matrix(rows: Sequence[Sequence[int]]) -> str:
    """Format an integer matrix row-major with aligned columns."""
    if not rows or not rows[0]:
        return "[]"
    width = max(len(str(x)) for row in rows for x in row)
    return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in rows)

def format_colors(pair) -> str:
    """Format an edge colouring pair."""
    return f"({pair[0]}, {pair[1]})"
