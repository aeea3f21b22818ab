"""Exact multivariate Laurent polynomials with half-integer exponents.

Exponents are stored *doubled* as plain integers, so half-integer powers
(which arise from the per-crossing codes) need no rational arithmetic.
Coefficients are arbitrary-precision integers.  Values are immutable;
every operation returns a fresh polynomial in canonical form.
"""

from __future__ import annotations

from typing import Iterable, Mapping


# Grading variables are pinned to the end of every variable table, in this
# order, so that serialized output is stable no matter how a polynomial was
# assembled.
H = "h"
DELTA = "delta"
_PINNED = (H, DELTA)


class LaurentError(Exception):
    """Raised on misuse of the polynomial ring (unknown variable, bad division...)."""

    def __init__(self, code: str, message: str, payload=None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.payload = payload


def _order_vars(names: Iterable[str]) -> tuple[str, ...]:
    """Colour variables in first-appearance order, then the pinned grading vars."""
    out: list[str] = []
    for v in names:
        if v not in _PINNED and v not in out:
            out.append(v)
    out.extend(p for p in _PINNED if p in names)
    return tuple(out)


class LaurentPoly:
    """An element of Z[v1^{±1/2}, ..., vk^{±1/2}] in canonical form."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], int]):
        vs = tuple(variables)
        ordered = _order_vars(vs)
        if ordered != vs:
            perm = [vs.index(v) for v in ordered]
            terms = {tuple(e[i] for i in perm): c for e, c in terms.items()}
            vs = ordered
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", {e: c for e, c in terms.items() if c != 0})

    def __setattr__(self, *a):  # pragma: no cover - guard rail
        raise AttributeError("LaurentPoly is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls((), {})

    @classmethod
    def integer(cls, n: int) -> "LaurentPoly":
        return cls((), {(): n}) if n else cls.zero()

    @classmethod
    def monomial(cls, coef: int, exp2: Mapping[str, int]) -> "LaurentPoly":
        """A single term; ``exp2`` maps variable -> doubled exponent."""
        vs = _order_vars(exp2.keys())
        key = tuple(exp2[v] for v in vs)
        return cls(vs, {key: coef})

    @classmethod
    def var(cls, name: str, exp2: int = 2) -> "LaurentPoly":
        return cls.monomial(1, {name: exp2})

    # ------------------------------------------------------------------
    # alignment of variable tables

    def _aligned_to(self, vs: tuple[str, ...]) -> dict[tuple[int, ...], int]:
        if vs == self.vars:
            return dict(self.terms)
        pos = {v: i for i, v in enumerate(vs)}
        idx = [pos[v] for v in self.vars]
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            key = [0] * len(vs)
            for i, x in zip(idx, e):
                key[i] = x
            out[tuple(key)] = out.get(tuple(key), 0) + c
        return out

    def _union_vars(self, other: "LaurentPoly") -> tuple[str, ...]:
        return _order_vars(list(self.vars) + list(other.vars))

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        vs = self._union_vars(other)
        terms = self._aligned_to(vs)
        for e, c in other._aligned_to(vs).items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(vs, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        vs = self._union_vars(other)
        a = self._aligned_to(vs)
        b = other._aligned_to(vs)
        terms: dict[tuple[int, ...], int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                terms[key] = terms.get(key, 0) + ca * cb
        return LaurentPoly(vs, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        vs = self._union_vars(other)
        a = {e: c for e, c in self._aligned_to(vs).items() if c}
        b = {e: c for e, c in other._aligned_to(vs).items() if c}
        return a == b

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        """Hashable normal form: unused variables dropped, names sorted."""
        used = [i for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)]
        names = tuple(sorted(self.vars[i] for i in used))
        order = [self.vars.index(n) for n in names]
        terms = sorted((tuple(e[i] for i in order), c) for e, c in self.terms.items())
        return (names, tuple(terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # ------------------------------------------------------------------
    # specializations

    def substitute(self, var: str, replacement_exp2: Mapping[str, int],
                   sign: int = 1) -> "LaurentPoly":
        """Substitute ``var -> sign * (monomial given by replacement_exp2)``.

        The replacement must have integer exponents (doubled values even); a
        negative sign additionally requires every exponent of ``var`` in the
        polynomial to be integral, since (-m)^(1/2) has no meaning here.
        """
        if var not in self.vars:
            raise LaurentError("E_UNKNOWN_VAR", f"no variable {var!r} in {self.vars}")
        if sign not in (1, -1):
            raise LaurentError("E_BAD_SUBST", "sign must be +1 or -1")
        if any(m % 2 for m in replacement_exp2.values()):
            raise LaurentError("E_BAD_SUBST", "replacement monomial must have integer exponents")
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        acc = LaurentPoly.zero()
        for e, c in self.terms.items():
            k2 = e[i]  # doubled exponent of `var` in this term
            if sign == -1:
                if k2 % 2:
                    raise LaurentError(
                        "E_BAD_SUBST",
                        f"cannot raise a negative monomial to exponent {k2}/2")
                if (k2 // 2) % 2:
                    c = -c
            exp2 = {v: x for v, x in zip(rest, e[:i] + e[i + 1:]) if x}
            for v, m2 in replacement_exp2.items():
                exp2[v] = exp2.get(v, 0) + k2 * (m2 // 2)
            acc = acc + LaurentPoly.monomial(c, exp2)
        return acc

    def eval_h(self, value: int = -1) -> "LaurentPoly":
        """Eliminate the grading variable h at h = -1 (the only supported value)."""
        if value != -1:
            raise LaurentError("E_BAD_SUBST", "only h = -1 is supported")
        if H not in self.vars:
            return self
        i = self.vars.index(H)
        if any(e[i] % 2 for e in self.terms):
            raise LaurentError("E_HALF_H", "non-integral exponent of h")
        rest = self.vars[:i] + self.vars[i + 1:]
        terms: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            if (e[i] // 2) % 2:
                c = -c
            key = e[:i] + e[i + 1:]
            terms[key] = terms.get(key, 0) + c
        return LaurentPoly(rest, terms)

    # ------------------------------------------------------------------
    # structure queries

    def equal_up_to_unit(self, other: "LaurentPoly"):
        """Is ``other == ±monomial * self``?  Returns (bool, witness).

        The witness is ``(coef, exp2_dict)`` with coef in {+1, -1} such that
        other == coef * monomial * self, or None on failure.
        """
        if self.is_zero() and other.is_zero():
            return True, (1, {})
        if self.is_zero() or other.is_zero():
            return False, None
        if len(self.terms) != len(other.terms):
            return False, None
        vs = self._union_vars(other)
        a = sorted(self._aligned_to(vs).items())
        b = sorted(other._aligned_to(vs).items())
        ea, ca = a[0]
        eb, cb = b[0]
        if abs(ca) != abs(cb):
            return False, None
        shift = tuple(y - x for x, y in zip(ea, eb))
        sign = 1 if ca == cb else -1
        for (xa, cxa), (xb, cxb) in zip(a, b):
            if tuple(p + s for p, s in zip(xa, shift)) != xb or cxa * sign != cxb:
                return False, None
        witness = (sign, {v: s for v, s in zip(vs, shift) if s})
        return True, witness

    def divide_binomial(self, colour: str) -> "LaurentPoly":
        """Exact quotient by (colour - colour^{-1}); raises if not divisible.

        The division is done separately for each fixed exponent pattern of
        the remaining variables, as a univariate Laurent long division.
        """
        if colour not in self.vars:
            raise LaurentError("E_UNKNOWN_VAR", f"no variable {colour!r}")
        if self.is_zero():
            return LaurentPoly.zero()
        i = self.vars.index(colour)
        groups: dict[tuple[int, ...], dict[int, int]] = {}
        for e, c in self.terms.items():
            rest = e[:i] + e[i + 1:]
            groups.setdefault(rest, {})[e[i]] = c
        quot: dict[tuple[int, ...], int] = {}
        rem_terms: dict[tuple[int, ...], int] = {}
        for rest, poly in groups.items():
            # q * (colour - colour^{-1}) = p  <=>  q * (x^2 - 1) = x * p,
            # after clearing denominators: divide descending by (x^2 - 1)
            shift = min(poly) + 2           # doubled exponent of x*p's bottom
            rem = {e + 2 - shift: v for e, v in poly.items()}
            q: dict[int, int] = {}
            while rem and max(rem) >= 4:
                e = max(rem)
                v = rem.pop(e)
                q[e - 4] = q.get(e - 4, 0) + v
                nv = rem.get(e - 4, 0) + v
                if nv:
                    rem[e - 4] = nv
                else:
                    rem.pop(e - 4, None)
            for e, v in rem.items():
                if v:
                    key = rest[:i] + (e + shift - 2,) + rest[i:]
                    rem_terms[key] = v
            for e, v in q.items():
                key = rest[:i] + (e + shift,) + rest[i:]
                quot[key] = quot.get(key, 0) + v
        if rem_terms:
            raise LaurentError(
                "E_NOT_DIVISIBLE",
                f"remainder after division by ({colour} - {colour}^-1)",
                payload=LaurentPoly(self.vars, rem_terms))
        return LaurentPoly(self.vars, quot)

    def exponents_of(self, var: str) -> set[int]:
        """Doubled exponents of ``var`` over all terms."""
        if var not in self.vars:
            return {0} if self.terms else set()
        i = self.vars.index(var)
        return {e[i] for e in self.terms}

    def rename(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        """Rename variables; merging two names identifies the variables."""
        new_names = [mapping.get(v, v) for v in self.vars]
        vs = _order_vars(new_names)
        pos = {v: i for i, v in enumerate(vs)}
        terms: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            key = [0] * len(vs)
            for v, x in zip(new_names, e):
                key[pos[v]] += x
            k = tuple(key)
            terms[k] = terms.get(k, 0) + c
        return LaurentPoly(vs, terms)

    # ------------------------------------------------------------------
    # rendering

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            factors = []
            for v, x in zip(self.vars, e):
                if x == 0:
                    continue
                if x % 2 == 0:
                    factors.append(v if x == 2 else f"{v}^{x // 2}")
                else:
                    factors.append(f"{v}^{x}/2")
            if not factors:
                body = str(abs(c))
            else:
                body = " ".join(factors)
                if abs(c) != 1:
                    body = f"{abs(c)} {body}"
            chunks.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"coef": str(c), "exp2": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        vs = tuple(data["vars"])
        return cls(vs, {tuple(t["exp2"]): int(t["coef"]) for t in data["terms"]})

    def __repr__(self):
        return f"LaurentPoly({self.pretty()})"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.integer(1)


def binomial(colour: str) -> LaurentPoly:
    """The factor (colour - colour^{-1})."""
    return LaurentPoly.var(colour, 2) - LaurentPoly.var(colour, -2)
