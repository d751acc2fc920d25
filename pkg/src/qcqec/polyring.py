"""Polynomials over GF(Q) and the ambient ring GF(Q)[x]/(x^n - 1).

Two shapes of data live here.  "Plain" polynomials are tuples of digits in
ascending degree order with no length contract (used for divisor arithmetic:
gcd, exact quotients, factorizations).  "Ring" vectors are length-n digit
tuples representing classes mod x^n - 1 (used for codeword manipulation).
Functions take the field, and where needed n, as explicit context arguments.

Compact notation
----------------
Polynomials are written as digit strings in ascending degree order, e.g.
``101^3`` is 1 + x^2 + x^3 + x^4.  The grammar is::

    seq  := item+
    item := atom ('^' exponent)?
    atom := digit | '(' seq ')'

where ``exponent`` is a single decimal digit or a braced integer ``{12}``,
and an exponent repeats its atom.  Fields with more than ten elements use
comma-separated digit tokens instead; a token is a decimal digit value or
``z^K`` for the element alpha^K (``z`` alone is alpha).
"""

from __future__ import annotations

import math
from functools import lru_cache

from qcqec.errors import PreconditionError, SpecError
from qcqec.gf import (
    Field,
    ext_field_make,
    multiplicative_order,
    primitive_nth_root,
)

# --- plain polynomial helpers --------------------------------------------


def trim(coeffs) -> tuple[int, ...]:
    """Drop trailing zero coefficients; the zero polynomial becomes ()."""
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def deg(coeffs) -> int:
    """Degree, with deg 0 = -1 by the usual dense-list convention."""
    return len(trim(coeffs)) - 1


def poly_add(field, a, b) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return trim(out)


def poly_scale(field, c: int, a) -> tuple[int, ...]:
    if c == 0:
        return ()
    return tuple(field.mul(c, x) for x in a)

def poly_neg(field, a) -> tuple[int, ...]:
    return tuple(field.neg(x) for x in a)


def poly_eval(field, a, x: int) -> int:
    acc = 0
    for c in reversed(trim(a)):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_mul(field, a, b) -> tuple[int, ...]:
    a, b = trim(a), trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    add, mul = field.add, field.mul
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = add(out[i + j], mul(x, y))
    return tuple(out)


def poly_divmod(field, a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Quotient and remainder; b must be nonzero."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(trim(a))
    db = len(b) - 1
    inv_lead = field.inv(b[-1])
    quo = [0] * max(0, len(rem) - db)
    while len(rem) - 1 >= db:
        if rem[-1] == 0:
            rem.pop()
            continue
        c = field.mul(rem[-1], inv_lead)
        shift = len(rem) - 1 - db
        quo[shift] = c
        for t in range(db + 1):
            rem[shift + t] = field.sub(rem[shift + t], field.mul(c, b[t]))
        rem.pop()
    return trim(quo), trim(rem)


def poly_mod(field, a, b) -> tuple[int, ...]:
    return poly_divmod(field, a, b)[1]


def divides(field, a, b) -> bool:
    """True iff a | b (unit-insensitive; a must be nonzero)."""
    return not poly_mod(field, b, a)


def quotient_exact(field, a, b) -> tuple[int, ...]:
    """a / b, raising if the division is not exact."""
    q, r = poly_divmod(field, a, b)
    if r:
        raise PreconditionError("not-a-divisor", "inexact polynomial division")
    return q


def monic(field, a) -> tuple[int, ...]:
    a = trim(a)
    if not a:
        return a
    return poly_scale(field, field.inv(a[-1]), a)


def poly_gcd(field, a, b) -> tuple[int, ...]:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, poly_mod(field, a, b)
    return monic(field, a)


def x_pow_n_minus_1(field, n: int) -> tuple[int, ...]:
    out = [0] * (n + 1)
    out[0] = field.neg(1)
    out[n] = 1
    return tuple(out)


# --- compact notation -----------------------------------------------------


def parse_compact(field, text: str, n: int | None = None) -> tuple[int, ...]:
    """Expand compact notation to a digit tuple (see module docstring).

    With n given, the result is zero-padded to length n; an expansion longer
    than n is an error.
    """
    text = text.strip()
    if field.Q > 9 or "," in text:
        digits = _parse_digit_list(field, text)
    else:
        digits, pos = _parse_seq(field, text, 0)
        if pos != len(text):
            raise SpecError(f"unexpected {text[pos]!r} at position {pos} in {text!r}")
    if n is not None:
        if len(digits) > n:
            raise SpecError(
                f"{text!r} expands to {len(digits)} digits, more than n={n}"
            )
        digits = digits + [0] * (n - len(digits))
    return tuple(digits)


def _parse_seq(field, s: str, i: int, closing: str | None = None):
    out: list[int] = []
    while i < len(s):
        ch = s[i]
        if ch == closing:
            return out, i
        if ch == "(":
            atom, i = _parse_seq(field, s, i + 1, ")")
            if i >= len(s) or s[i] != ")":
                raise SpecError(f"unbalanced '(' in {s!r}")
            if not atom:
                raise SpecError(f"empty group in {s!r}")
            i += 1
        elif ch.isdigit():
            atom = [field.check_digit(int(ch))]
            i += 1
        else:
            raise SpecError(f"unexpected {ch!r} at position {i} in {s!r}")
        if i < len(s) and s[i] == "^":
            i += 1
            if i < len(s) and s[i] == "{":
                j = s.find("}", i)
                if j < 0:
                    raise SpecError(f"unbalanced '{{' in {s!r}")
                exp_text = s[i + 1 : j]
                i = j + 1
            elif i < len(s) and s[i].isdigit():
                exp_text = s[i]
                i += 1
            else:
                raise SpecError(f"missing exponent at position {i} in {s!r}")
            if not exp_text.isdigit() or int(exp_text) < 1:
                raise SpecError(f"bad exponent {exp_text!r} in {s!r}")
            atom = atom * int(exp_text)
        out.extend(atom)
    if closing is not None:
        raise SpecError(f"unbalanced '(' in {s!r}")
    return out, i


def _parse_digit_list(field, text: str) -> list[int]:
    if not text:
        return []
    out = []
    for token in text.split(","):
        token = token.strip()
        if token == "z":
            out.append(2)
        elif token.startswith("z^"):
            k = token[2:]
            if not k.isdigit():
                raise SpecError(f"bad token {token!r}")
            out.append(field.check_digit(int(k) + 1))
        elif token.isdigit():
            out.append(field.check_digit(int(token)))
        else:
            raise SpecError(f"bad token {token!r}")
    return out


def render_compact(field, coeffs) -> str:
    """Canonical inverse of parse_compact: run-length encoded digit string
    (no parentheses), or a comma-separated list for fields past GF(9)."""
    if field.Q > 9:
        return ",".join(str(d) for d in coeffs)
    parts = []
    i = 0
    while i < len(coeffs):
        j = i
        while j < len(coeffs) and coeffs[j] == coeffs[i]:
            j += 1
        run = j - i
        if run == 1:
            parts.append(str(coeffs[i]))
        elif run <= 9:
            parts.append(f"{coeffs[i]}^{run}")
        else:
            parts.append(f"{coeffs[i]}^{{{run}}}")
        i = j
    return "".join(parts)


# --- ring vectors (length n, mod x^n - 1) ---------------------------------


def ring_from_plain(field, n: int, coeffs) -> tuple[int, ...]:
    out = [0] * n
    for i, c in enumerate(coeffs):
        if c:
            out[i % n] = field.add(out[i % n], c)
    return tuple(out)


def ring_mul(field, n: int, a, b) -> tuple[int, ...]:
    return ring_from_plain(field, n, poly_mul(field, a, b))


def ring_add(field, a, b) -> tuple[int, ...]:
    return tuple(field.add(x, y) for x, y in zip(a, b))


def cyclic_shift(vec, i: int) -> tuple[int, ...]:
    """Multiply by x^i: rotate coefficients right by i."""
    n = len(vec)
    i %= n
    return tuple(vec[n - i :]) + tuple(vec[: n - i])


def bar(vec) -> tuple[int, ...]:
    """The reversal a(x) -> a(x^-1) mod x^n - 1: fixes the constant term and
    reverses the rest."""
    vec = tuple(vec)
    return (vec[0],) + tuple(reversed(vec[1:]))


def frob_poly(field, vec) -> tuple[int, ...]:
    """Coefficient-wise q-power Frobenius."""
    return tuple(field.conj(c) for c in vec)


# --- duals and factorization ----------------------------------------------


def reciprocal(coeffs) -> tuple[int, ...]:
    """x^deg(h) * h(1/x): the coefficient reversal of a trimmed polynomial."""
    return tuple(reversed(trim(coeffs)))


def dual_gen(field, n: int, g) -> tuple[int, ...]:
    """Generator of the Hermitian dual of the cyclic code <g> of length n.

    Returns the coefficient-conjugated reciprocal of h = (x^n - 1)/g, exactly
    as assembled (constant term 1 for monic g); generators are only defined
    up to units and this is the normalization the parity-check circulants use.
    """
    g = trim(g)
    if not g:
        raise PreconditionError("g-not-divisor", "g must be nonzero")
    h = quotient_exact_checked(field, n, g)
    return frob_poly(field, reciprocal(h))


def quotient_exact_checked(field, n: int, g) -> tuple[int, ...]:
    xn1 = x_pow_n_minus_1(field, n)
    q, r = poly_divmod(field, xn1, g)
    if r:
        raise PreconditionError(
            "g-not-divisor", f"g does not divide x^{n} - 1 over GF({field.Q})"
        )
    return q


def cyclotomic_cosets(Q: int, n: int) -> list[tuple[int, ...]]:
    """Q-cyclotomic cosets mod n, each sorted, ordered by smallest member."""
    if math.gcd(Q, n) != 1:
        raise PreconditionError("p-divides-n", f"gcd({Q}, {n}) != 1")
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        orbit = []
        t = s
        while not seen[t]:
            seen[t] = True
            orbit.append(t)
            t = t * Q % n
        out.append(tuple(sorted(orbit)))
    return out


def factor_xn_minus_1(field: Field, n: int) -> tuple[tuple[int, ...], ...]:
    """Complete factorization of x^n - 1 over GF(Q) into monic irreducibles.

    Each cyclotomic coset contributes the minimal polynomial of beta^s for a
    primitive n-th root of unity beta living in GF(Q^m), m the order of Q
    mod n.  The product of the factors is re-verified against x^n - 1.
    Requires gcd(n, p) = 1.
    """
    if n < 1:
        raise SpecError(f"n must be positive, got {n}")
    if math.gcd(n, field.p) != 1:
        raise PreconditionError(
            "p-divides-n",
            f"x^{n} - 1 is not squarefree over GF({field.Q}): p={field.p} divides n",
        )
    return _factor_cached(field, n)


@lru_cache(maxsize=None)
def _factor_cached(field: Field, n: int) -> tuple[tuple[int, ...], ...]:
    m = multiplicative_order(field.Q % n, n) if n > 1 else 1
    ffield = ext_field_make(field, m)
    beta = primitive_nth_root(ffield, n)
    to_base = (lambda c: c) if m == 1 else ffield.project

    beta_pow = [ffield.one]
    for _ in range(n - 1):
        beta_pow.append(ffield.mul(beta_pow[-1], beta))

    factors = []
    for orbit in cyclotomic_cosets(field.Q, n):
        poly = [ffield.one]
        for s in orbit:
            r = beta_pow[s]
            new = [ffield.zero] * (len(poly) + 1)
            for t, c in enumerate(poly):
                new[t + 1] = ffield.add(new[t + 1], c)
                new[t] = ffield.sub(new[t], ffield.mul(r, c))
            poly = new
        factors.append(tuple(to_base(c) for c in poly))

    product = (1,)
    for fac in factors:
        product = poly_mul(field, product, fac)
    if product != x_pow_n_minus_1(field, n):
        raise AssertionError(
            f"factor product mismatch for x^{n} - 1 over GF({field.Q})"
        )
    return tuple(sorted(factors, key=lambda f: (len(f), f)))
