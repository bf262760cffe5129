"""Monic complex polynomials: construction, Horner evaluation, builtin test set.

A polynomial of degree n is stored monic, as the coefficient tail
(a_1, ..., a_n) of

    P(z) = z^n + a_1 z^(n-1) + ... + a_(n-1) z + a_n.

The leading 1 is implicit.  All arithmetic is plain binary64 complex.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

__all__ = [
    "Polynomial",
    "from_coefficients",
    "from_roots",
    "translate",
    "builtin_suite",
    "builtin_by_name",
    "parse_complex",
    "format_complex",
    "parse_polynomial_text",
    "parse_points_text",
]


@dataclass(frozen=True)
class Polynomial:
    """Monic polynomial, held as the coefficient tail (a_1, ..., a_n)."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        if len(coeffs) == 0:
            raise ValueError("polynomial must have degree >= 1")
        for c in coeffs:
            if not cmath.isfinite(c):
                raise ValueError(f"non-finite coefficient {c!r}")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def eval(self, z: complex) -> complex:
        """P(z) by Horner's scheme: n multiplications, n additions."""
        acc = complex(1.0)
        for a in self.coefficients:
            acc = acc * z + a
        return acc

    __call__ = eval

    def eval_with_derivatives(self, z: complex) -> tuple[complex, complex]:
        """(P(z), P'(z)) in one fused Horner pass."""
        p = complex(1.0)
        d = complex(0.0)
        for a in self.coefficients:
            d = d * z + p
            p = p * z + a
        return p, d


def from_coefficients(coeffs, leading: complex = 1.0) -> Polynomial:
    """Normalize an arbitrary coefficient tail to monic form.

    `coeffs` lists the n coefficients below the leading one, highest power
    first; each is divided by `leading`.  Dividing by the leading
    coefficient preserves the zeros.
    """
    lead = complex(leading)
    if lead == 0:
        raise ValueError("leading coefficient must be nonzero")
    if not cmath.isfinite(lead):
        raise ValueError("leading coefficient must be finite")
    tail = [complex(c) for c in coeffs]
    if not tail:
        raise ValueError("coefficient list must be nonempty")
    for c in tail:
        if not cmath.isfinite(c):
            raise ValueError(f"non-finite coefficient {c!r}")
    return Polynomial(tuple(c / lead for c in tail))


def from_roots(roots) -> Polynomial:
    """Monic polynomial prod_j (z - r_j), expanded by iterated convolution."""
    rs = [complex(r) for r in roots]
    if not rs:
        raise ValueError("root list must be nonempty")
    for r in rs:
        if not cmath.isfinite(r):
            raise ValueError(f"non-finite root {r!r}")
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            if rs[i] == rs[j]:
                raise ValueError(f"duplicate root {rs[i]!r}: zeros must be simple")
    # full coefficient list, leading 1 first; multiply in (z - r) one factor at a time
    full = [complex(1.0)]
    for r in rs:
        full = [full[0]] + [full[k] - r * full[k - 1] for k in range(1, len(full))] + [-r * full[-1]]
    return Polynomial(tuple(full[1:]))


def translate(p: Polynomial, c: complex) -> Polynomial:
    """The polynomial q with q(z) = p(z + c), via synthetic substitution.

    Repeated synthetic division by (z - c) accumulates the Taylor
    coefficients of p at c; q stays monic because the shift does not touch
    the leading term.
    """
    c = complex(c)
    n = p.degree
    b = [complex(1.0)] + list(p.coefficients)
    for i in range(n):
        for j in range(1, n + 1 - i):
            b[j] += c * b[j - 1]
    return Polynomial(tuple(b[1:]))


def builtin_suite() -> list[tuple[Polynomial, tuple[complex, ...] | None]]:
    """The four benchmark polynomials; the first three carry their roots.

    P1..P3 are the degree 4, 5, 6 products (x-1)...(x-n); P4 is the
    degree-8 polynomial z^8+5z^7+3z^6+7z^5+6z^4+8z^3+z^2+3z+7 with no
    closed-form roots.
    """
    suite: list[tuple[Polynomial, tuple[complex, ...] | None]] = []
    for n in (4, 5, 6):
        roots = tuple(complex(k) for k in range(1, n + 1))
        suite.append((from_roots(roots), roots))
    suite.append((from_coefficients([5, 3, 7, 6, 8, 1, 3, 7]), None))
    return suite


def builtin_by_name(name: str) -> tuple[Polynomial, tuple[complex, ...] | None]:
    idx = {"p1": 0, "p2": 1, "p3": 2, "p4": 3}.get(name.lower())
    if idx is None:
        raise ValueError(f"unknown builtin polynomial {name!r} (expected P1..P4)")
    return builtin_suite()[idx]


def parse_complex(token: str) -> complex:
    """Parse `re` or `re+imi` (also accepts Python's `j` suffix)."""
    try:
        value = complex(token.replace("i", "j"))
    except ValueError:
        raise ValueError(f"bad complex number {token!r}") from None
    if not cmath.isfinite(value):
        raise ValueError(f"non-finite complex number {token!r}")
    return value


def format_complex(z: complex, digits: int = 17) -> str:
    """Render a complex value in the `re+imi` text form."""
    re = f"{z.real:.{digits}g}"
    if z.imag == 0:
        return re
    sign = "+" if z.imag >= 0 else "-"
    return f"{re}{sign}{abs(z.imag):.{digits}g}i"


def _content_tokens(text: str) -> list[list[str]]:
    """Non-empty lines with `#` comments stripped, each split on whitespace."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line.split())
    return lines


def parse_polynomial_text(text: str) -> tuple[Polynomial, tuple[complex, ...] | None]:
    """Parse the polynomial file format.

    One content line, either

        monic n a_1 a_2 ... a_n
        roots r_1 ... r_n

    with complex entries written `re` or `re+imi`; `#` starts a comment.
    The roots form also returns the roots for use as a reference set.
    """
    lines = _content_tokens(text)
    if len(lines) != 1:
        raise ValueError(f"expected exactly one content line, found {len(lines)}")
    tokens = lines[0]
    kind = tokens[0].lower()
    if kind == "monic":
        if len(tokens) < 2:
            raise ValueError("monic line needs a degree")
        try:
            n = int(tokens[1])
        except ValueError:
            raise ValueError(f"bad degree {tokens[1]!r}") from None
        coeffs = [parse_complex(t) for t in tokens[2:]]
        if n < 1 or len(coeffs) != n:
            raise ValueError(f"monic line declares degree {n} but lists {len(coeffs)} coefficients")
        return Polynomial(tuple(coeffs)), None
    if kind == "roots":
        roots = tuple(parse_complex(t) for t in tokens[1:])
        return from_roots(roots), roots
    raise ValueError(f"unknown polynomial format {tokens[0]!r} (expected 'monic' or 'roots')")


def parse_points_text(text: str) -> tuple[complex, ...]:
    """Parse an initial-points file: one complex point per line."""
    points = []
    for line in _content_tokens(text):
        if len(line) != 1:
            raise ValueError("expected one complex point per line")
        points.append(parse_complex(line[0]))
    if not points:
        raise ValueError("points file is empty")
    return tuple(points)
