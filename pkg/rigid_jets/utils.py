from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, List, Sequence, Tuple, Union

from rigid_jets.constants import MultiIndex


def format_rational(value: Union[Fraction, int]) -> str:
    """
    Canonical exact string of a rational: "p/q" with q > 0 in lowest terms,
    or just "p" when q == 1.
    """
    return str(Fraction(value))


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parses the exact rational codec used in every serialized document.

    Args:
        text: "p/q", "p", an int, or an existing Fraction

    Returns:
        The value as a Fraction in lowest terms.

    Raises:
        ValueError: If the text is not an exact rational (floats are rejected)
    """
    if isinstance(text, bool):
        raise ValueError(f"Expected an exact rational, got {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str) or "." in text or "e" in text.lower():
        raise ValueError(f"Expected an exact rational string 'p/q', got {text!r}")
    return Fraction(text.strip())


def graded_lex_key(exponents: MultiIndex) -> Tuple[int, Tuple[int, ...]]:
    # Lower total degree first; inside a degree, larger leading exponents first
    return sum(exponents), tuple(-e for e in exponents)


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, degree: int) -> Tuple[MultiIndex, ...]:
    """
    All exponent vectors of the given total degree in graded-lexicographic order.
    """
    found = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        found.append(tuple(exps))
    return tuple(sorted(found, key=graded_lex_key))


def monomials_up_to(nvars: int, degree: int, start: int = 0) -> List[MultiIndex]:
    result: List[MultiIndex] = []
    for d in range(start, degree + 1):
        result.extend(monomials_of_degree(nvars, d))
    return result


def unit_index(nvars: int, i: int) -> MultiIndex:
    return tuple(1 if j == i else 0 for j in range(nvars))


def offset_names(prefix: str, count: int) -> List[str]:
    return [f"{prefix}{i + 1}" for i in range(count)]


def all_equal(values: Iterable) -> bool:
    iterator = iter(values)
    try:
        first = next(iterator)
    except StopIteration:
        return True
    return all(v == first for v in iterator)


def format_matrix(matrix: Sequence[Sequence[Union[Fraction, int]]]) -> str:
    return "[" + ", ".join("[" + ", ".join(format_rational(v) for v in row) + "]" for row in matrix) + "]"
