"""Sparse exact truncated power series in q with auxiliary count variables.

A :class:`Series` stores arbitrary-precision integer coefficients for
monomials ``q^j * v1^e1 * v2^e2 * ...``, where the auxiliary variables
(``a``, ``c``, ``d`` by default) count statistics of the combinatorial
objects a series enumerates.  Every series carries a truncation bound
``trunc``: coefficients are exact for all q-exponents up to and including
``trunc`` and undefined above it.  Binary operations take the minimum of
the two bounds, and reading a coefficient beyond the bound raises
:class:`TruncationExceededError` rather than returning a silent zero.

Series are immutable after construction and every operation is a pure
function of its inputs, so independent computations can share values
freely.  Coefficients are plain Python integers; nothing here rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    ConfigurationError,
    FormalDivergenceError,
    InvalidDilationError,
    NonInvertibleError,
    TruncationExceededError,
)

DEFAULT_VARS = ("a", "c", "d")

#: Internal term key: (q exponent, tuple of variable exponents).
Key = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class Monomial:
    """A monomial ``q^q_exp * prod(v_i^colour_exps[i])`` with nonnegative
    exponents.  The variable tuple it refers to is supplied by context."""

    q_exp: int
    colour_exps: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.q_exp < 0:
            raise ValueError(f"negative q exponent {self.q_exp}")
        if any(e < 0 for e in self.colour_exps):
            raise ValueError(f"negative variable exponent in {self.colour_exps}")

    def key(self) -> Key:
        return (self.q_exp, self.colour_exps)


def monomial(q_exp: int, vars: tuple[str, ...] = DEFAULT_VARS, **exps: int) -> Monomial:
    """Build a :class:`Monomial` over ``vars`` from keyword exponents,
    e.g. ``monomial(1, a=1)`` for ``a*q``."""
    unknown = set(exps) - set(vars)
    if unknown:
        raise ConfigurationError(f"unknown variables {sorted(unknown)}; have {vars}")
    return Monomial(q_exp, tuple(exps.get(v, 0) for v in vars))


def _check_vars(vars: Iterable[str]) -> tuple[str, ...]:
    vt = tuple(vars)
    if len(set(vt)) != len(vt):
        raise ConfigurationError(f"duplicate variable names in {vt}")
    return vt


class Series:
    """Truncated power series with exact integer coefficients.

    ``terms`` maps ``(q_exp, colour_exps)`` to a nonzero coefficient; keys
    with ``q_exp > trunc`` are dropped on construction.  Missing keys with
    ``q_exp <= trunc`` mean coefficient 0.
    """

    __slots__ = ("trunc", "vars", "_terms")

    def __init__(
        self,
        trunc: int,
        terms: Mapping[Key, int] | None = None,
        vars: tuple[str, ...] = DEFAULT_VARS,
    ) -> None:
        if not isinstance(trunc, int) or trunc < 0:
            raise ConfigurationError(f"truncation must be a nonnegative integer, got {trunc!r}")
        vars = _check_vars(vars)
        nvars = len(vars)
        clean: dict[Key, int] = {}
        for (q_exp, exps), coef in (terms or {}).items():
            exps = tuple(exps)
            if q_exp < 0 or any(e < 0 for e in exps):
                raise ConfigurationError(f"negative exponent in term {(q_exp, exps)}")
            if len(exps) != nvars:
                raise ConfigurationError(
                    f"term {(q_exp, exps)} has {len(exps)} variable exponents, expected {nvars}"
                )
            if not isinstance(coef, int):
                raise ConfigurationError(f"non-integer coefficient {coef!r}")
            if coef and q_exp <= trunc:
                clean[(q_exp, exps)] = coef
        self.trunc = trunc
        self.vars = vars
        self._terms = clean

    @classmethod
    def _raw(cls, trunc: int, terms: dict[Key, int], vars: tuple[str, ...]) -> "Series":
        # Internal fast path: caller guarantees pruned, in-bound terms.
        s = object.__new__(cls)
        s.trunc = trunc
        s.vars = vars
        s._terms = terms
        return s

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, trunc: int, vars: tuple[str, ...] = DEFAULT_VARS) -> "Series":
        return cls(trunc, {}, vars)

    @classmethod
    def one(cls, trunc: int, vars: tuple[str, ...] = DEFAULT_VARS) -> "Series":
        return cls.term(1, 0, {}, trunc, vars)

    @classmethod
    def term(
        cls,
        coef: int,
        q_exp: int,
        exps: Mapping[str, int] | tuple[int, ...],
        trunc: int,
        vars: tuple[str, ...] = DEFAULT_VARS,
    ) -> "Series":
        """Single-term series ``coef * q^q_exp * prod(v^e)``."""
        if isinstance(exps, Mapping):
            mono = monomial(q_exp, tuple(vars), **exps)
        else:
            exps = tuple(exps) or (0,) * len(tuple(vars))
            mono = Monomial(q_exp, exps)
        return cls(trunc, {mono.key(): coef}, vars)

    @classmethod
    def from_monomial(
        cls, mono: Monomial, trunc: int, vars: tuple[str, ...] = DEFAULT_VARS, coef: int = 1
    ) -> "Series":
        if len(mono.colour_exps) != len(tuple(vars)):
            raise ConfigurationError(
                f"monomial has {len(mono.colour_exps)} exponents, variable set {vars}"
            )
        return cls(trunc, {mono.key(): coef}, vars)

    # ------------------------------------------------------------------
    # inspection

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, q_exp: int, colour_exps: tuple[int, ...] | Mapping[str, int] = ()) -> int:
        """Exact coefficient of ``q^q_exp * prod(v^e)``; 0 if absent.
        Raises if ``q_exp`` lies beyond the truncation bound."""
        if q_exp > self.trunc:
            raise TruncationExceededError(
                f"coefficient of q^{q_exp} requested, series exact only to q^{self.trunc}"
            )
        if isinstance(colour_exps, Mapping):
            colour_exps = tuple(colour_exps.get(v, 0) for v in self.vars)
        else:
            colour_exps = tuple(colour_exps)
            if not colour_exps:
                colour_exps = (0,) * len(self.vars)
        if len(colour_exps) != len(self.vars):
            raise ConfigurationError(
                f"expected {len(self.vars)} variable exponents, got {colour_exps}"
            )
        return self._terms.get((q_exp, colour_exps), 0)

    def coeff_of(self, mono: Monomial) -> int:
        return self.coeff(mono.q_exp, mono.colour_exps)

    def sorted_terms(self) -> list[tuple[Key, int]]:
        """Terms sorted by (q exponent, variable exponents) ascending."""
        return sorted(self._terms.items())

    def q_slice(self, q_exp: int) -> dict[tuple[int, ...], int]:
        """All terms with the given q exponent, as exps -> coefficient."""
        if q_exp > self.trunc:
            raise TruncationExceededError(
                f"slice at q^{q_exp} requested, series exact only to q^{self.trunc}"
            )
        return {e: c for (q, e), c in self._terms.items() if q == q_exp}

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.trunc == other.trunc
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Series(trunc={self.trunc}, vars={self.vars}, nterms={len(self._terms)})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (q_exp, exps), coef in self.sorted_terms():
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if q_exp == 1:
                factors.append("q")
            elif q_exp > 1:
                factors.append(f"q^{q_exp}")
            mag = abs(coef)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(parts)

    # ------------------------------------------------------------------
    # ring operations

    def _binary_prep(self, other: "Series") -> int:
        if self.vars != other.vars:
            raise ConfigurationError(f"variable sets differ: {self.vars} vs {other.vars}")
        return min(self.trunc, other.trunc)

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        trunc = self._binary_prep(other)
        acc: dict[Key, int] = {}
        for src in (self._terms, other._terms):
            for key, coef in src.items():
                if key[0] > trunc:
                    continue
                new = acc.get(key, 0) + coef
                if new:
                    acc[key] = new
                elif key in acc:
                    del acc[key]
        return Series._raw(trunc, acc, self.vars)

    def __neg__(self) -> "Series":
        return Series._raw(self.trunc, {k: -c for k, c in self._terms.items()}, self.vars)

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Series | int") -> "Series":
        if isinstance(other, int):
            if other == 0:
                return Series._raw(self.trunc, {}, self.vars)
            return Series._raw(
                self.trunc, {k: c * other for k, c in self._terms.items()}, self.vars
            )
        if not isinstance(other, Series):
            return NotImplemented
        trunc = self._binary_prep(other)
        small, big = self._terms, other._terms
        if len(small) > len(big):
            small, big = big, small
        acc: dict[Key, int] = {}
        for (q1, e1), c1 in small.items():
            if q1 > trunc:
                continue
            room = trunc - q1
            for (q2, e2), c2 in big.items():
                if q2 > room:
                    continue
                key = (q1 + q2, tuple(x + y for x, y in zip(e1, e2)))
                new = acc.get(key, 0) + c1 * c2
                if new:
                    acc[key] = new
                elif key in acc:
                    del acc[key]
        return Series._raw(trunc, acc, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Series":
        if not isinstance(n, int) or n < 0:
            raise ConfigurationError(f"series power must be a nonnegative integer, got {n!r}")
        result = Series.one(self.trunc, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # truncation and specialisation

    def truncated(self, trunc: int) -> "Series":
        """Restrict to a smaller truncation bound.  Raising the bound is
        unsound and rejected."""
        if trunc > self.trunc:
            raise ConfigurationError(
                f"cannot raise truncation from {self.trunc} to {trunc}"
            )
        if trunc == self.trunc:
            return self
        return Series._raw(
            trunc, {k: c for k, c in self._terms.items() if k[0] <= trunc}, self.vars
        )

    def specialize(self, values: Mapping[str, int]) -> "Series":
        """Substitute integer values for some variables (e.g. ``{"c": 1}``),
        returning a series over the remaining variables."""
        unknown = set(values) - set(self.vars)
        if unknown:
            raise ConfigurationError(f"unknown variables {sorted(unknown)}; have {self.vars}")
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        new_vars = tuple(self.vars[i] for i in keep)
        vals = [values.get(v) for v in self.vars]
        acc: dict[Key, int] = {}
        for (q_exp, exps), coef in self._terms.items():
            for i, v in enumerate(vals):
                if v is not None:
                    coef *= v ** exps[i]
            if not coef:
                continue
            key = (q_exp, tuple(exps[i] for i in keep))
            new = acc.get(key, 0) + coef
            if new:
                acc[key] = new
            elif key in acc:
                del acc[key]
        return Series._raw(self.trunc, acc, new_vars)

    def weight_counts(self) -> list[int]:
        """Coefficient totals with every variable set to 1, indexed by
        q exponent from 0 to the truncation bound."""
        totals = [0] * (self.trunc + 1)
        for (q_exp, _), coef in self._terms.items():
            totals[q_exp] += coef
        return totals


# ----------------------------------------------------------------------
# inversion


def invert_unit(s: Series) -> Series:
    """Multiplicative inverse of a series whose q-constant slice is the
    bare unit +-1, so that ``s * invert_unit(s) == 1`` up to truncation.

    The q^0 slice must be exactly the monomial-free term +-1: a slice such
    as ``1 - c`` has no inverse with polynomial coefficients.
    """
    zero_exps = (0,) * len(s.vars)
    head = s.q_slice(0) if s.trunc >= 0 else {}
    if set(head) - {zero_exps} or head.get(zero_exps, 0) not in (1, -1):
        raise NonInvertibleError(
            f"q-constant slice must be +1 or -1 to invert, got {head}"
        )
    eps = head[zero_exps]
    slices: dict[int, dict[tuple[int, ...], int]] = {}
    for (q_exp, exps), coef in s._terms.items():
        slices.setdefault(q_exp, {})[exps] = coef
    inv_slices: list[dict[tuple[int, ...], int]] = [{zero_exps: eps}]
    for n in range(1, s.trunc + 1):
        acc: dict[tuple[int, ...], int] = {}
        for i in range(1, n + 1):
            si = slices.get(i)
            if not si:
                continue
            tj = inv_slices[n - i]
            if not tj:
                continue
            for e1, c1 in si.items():
                for e2, c2 in tj.items():
                    key = tuple(x + y for x, y in zip(e1, e2))
                    acc[key] = acc.get(key, 0) + c1 * c2
        inv_slices.append({e: -eps * c for e, c in acc.items() if c})
    terms: dict[Key, int] = {}
    for n, sl in enumerate(inv_slices):
        for exps, coef in sl.items():
            terms[(n, exps)] = coef
    return Series._raw(s.trunc, terms, s.vars)


# ----------------------------------------------------------------------
# Pochhammer products


def pochhammer(
    base: Monomial,
    ratio_exp: int,
    count: int | None,
    trunc: int,
    vars: tuple[str, ...] = DEFAULT_VARS,
    sign: int = 1,
) -> Series:
    """Truncated expansion of the product ``prod_{k=0}^{count-1}
    (1 - sign * base * q^(ratio_exp * k))``; ``count=None`` means the
    infinite product.

    An infinite product requires ``base.q_exp >= 1`` so that only finitely
    many factors differ from 1 below the truncation bound.
    """
    vars = _check_vars(vars)
    if ratio_exp < 1:
        raise ConfigurationError(f"ratio exponent must be >= 1, got {ratio_exp}")
    if sign not in (1, -1):
        raise ConfigurationError(f"sign must be +1 or -1, got {sign}")
    if count is not None and count < 0:
        raise ConfigurationError(f"factor count must be >= 0, got {count}")
    if len(base.colour_exps) != len(vars):
        raise ConfigurationError(
            f"base monomial has {len(base.colour_exps)} exponents, variable set {vars}"
        )
    if count is None and base.q_exp == 0:
        raise FormalDivergenceError(
            "infinite product needs a base with positive q-degree to converge formally"
        )
    result = Series.one(trunc, vars)
    zero_exps = (0,) * len(vars)
    k = 0
    while count is None or k < count:
        q_exp = base.q_exp + ratio_exp * k
        if q_exp > trunc:
            break  # all remaining factors are 1 below the bound
        factor_terms: dict[Key, int] = {(0, zero_exps): 1}
        key = (q_exp, base.colour_exps)
        factor_terms[key] = factor_terms.get(key, 0) - sign
        factor = Series(trunc, factor_terms, vars)
        result = result * factor
        k += 1
    return result


# ----------------------------------------------------------------------
# dilation substitutions


def substitute(
    s: Series,
    q_scale: int,
    offsets: Mapping[str, int],
    new_trunc: int,
) -> Series:
    """Apply ``q -> q^q_scale`` together with per-variable monomial shifts
    ``v -> v * q^offsets[v]``: the monomial ``q^j * prod(v^e_v)`` maps to
    ``q^(q_scale*j + sum(e_v * offsets[v])) * prod(v^e_v)``.

    The caller supplies the truncation bound of the result; it is
    responsible for choosing one that the input bound actually supports.
    """
    if q_scale < 1:
        raise ConfigurationError(f"q scale must be >= 1, got {q_scale}")
    unknown = set(offsets) - set(s.vars)
    if unknown:
        raise ConfigurationError(f"unknown variables {sorted(unknown)}; have {s.vars}")
    off = tuple(offsets.get(v, 0) for v in s.vars)
    acc: dict[Key, int] = {}
    for (q_exp, exps), coef in s._terms.items():
        new_q = q_scale * q_exp + sum(e * o for e, o in zip(exps, off))
        if new_q < 0:
            raise InvalidDilationError(
                f"monomial q^{q_exp}*{exps} maps to negative q-power {new_q}"
            )
        if new_q <= new_trunc:
            acc[(new_q, exps)] = acc.get((new_q, exps), 0) + coef
    return Series(new_trunc, acc, s.vars)


# ----------------------------------------------------------------------
# JSON serialisation


def series_to_json(s: Series) -> dict:
    """JSON-ready dict: truncation and variables once at top level, then
    one record per term with the q exponent, each variable exponent, and
    the coefficient as a decimal string; sorted ascending."""
    records = []
    for (q_exp, exps), coef in s.sorted_terms():
        rec: dict[str, object] = {"q": q_exp}
        for name, e in zip(s.vars, exps):
            rec[name] = e
        rec["coef"] = str(coef)
        records.append(rec)
    return {"truncation": s.trunc, "variables": list(s.vars), "terms": records}


def series_from_json(data: Mapping) -> Series:
    try:
        trunc = data["truncation"]
        vars = tuple(data["variables"])
        terms: dict[Key, int] = {}
        for rec in data["terms"]:
            key = (rec["q"], tuple(rec[v] for v in vars))
            terms[key] = int(rec["coef"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"malformed series record: {exc}") from exc
    return Series(trunc, terms, vars)
