"""Exact multivariate power series, truncated by total degree.

Coefficients are Python ints; monomials are exponent tuples.  All arithmetic
is exact on every kept monomial: a product of series truncated at total
degree T has correct coefficients up to T because dropped terms can only feed
higher degrees.  Division is by series with constant term +-1 only (the only
integer units), expanded geometrically.
"""

from __future__ import annotations

import json
from typing import Callable, Mapping


class TruncatedSeries:
    __slots__ = ("nvars", "trunc", "coeffs")

    def __init__(self, nvars: int, trunc: int, coeffs: Mapping | None = None):
        if nvars < 1 or trunc < 0:
            raise ValueError("need nvars >= 1 and trunc >= 0")
        self.nvars = nvars
        self.trunc = trunc
        clean = {}
        if coeffs:
            for exps, c in coeffs.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad monomial {exps}")
                c = int(c)
                if c and sum(exps) <= trunc:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        self.coeffs = clean

    # ---------- constructors ----------

    @classmethod
    def zero(cls, nvars: int, trunc: int) -> "TruncatedSeries":
        return cls(nvars, trunc)

    @classmethod
    def one(cls, nvars: int, trunc: int) -> "TruncatedSeries":
        return cls(nvars, trunc, {(0,) * nvars: 1})

    @classmethod
    def monomial(
        cls, nvars: int, trunc: int, exps, coeff: int = 1
    ) -> "TruncatedSeries":
        return cls(nvars, trunc, {tuple(exps): coeff})

    # ---------- ring operations ----------

    def _compat(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if (self.nvars, self.trunc) != (other.nvars, other.trunc):
            raise ValueError("series have different variable counts or truncations")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return TruncatedSeries(self.nvars, self.trunc, out)

    def __sub__(self, other):
        self._compat(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return TruncatedSeries(self.nvars, self.trunc, out)

    def __neg__(self):
        return TruncatedSeries(
            self.nvars, self.trunc, {e: -c for e, c in self.coeffs.items()}
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(
                self.nvars, self.trunc, {e: c * other for e, c in self.coeffs.items()}
            )
        self._compat(other)
        T = self.trunc
        a = [(e, sum(e), c) for e, c in self.coeffs.items()]
        b = [(e, sum(e), c) for e, c in other.coeffs.items()]
        b.sort(key=lambda t: t[1])
        out: dict = {}
        for e1, d1, c1 in a:
            room = T - d1
            for e2, d2, c2 in b:
                if d2 > room:
                    break
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return TruncatedSeries(self.nvars, self.trunc, out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be +1 or -1."""
        c0 = self.coeffs.get((0,) * self.nvars, 0)
        if c0 not in (1, -1):
            raise ValueError("inverse needs a unit (+-1) constant term")
        h = self * c0  # constant term 1 now
        v = TruncatedSeries.one(self.nvars, self.trunc) - h
        out = TruncatedSeries.one(self.nvars, self.trunc)
        power = TruncatedSeries.one(self.nvars, self.trunc)
        for _ in range(self.trunc):
            power = power * v
            if not power.coeffs:
                break
            out = out + power
        return out * c0

    def __truediv__(self, other):
        self._compat(other)
        return self * other.inverse()

    # ---------- structure ----------

    def coefficient(self, exps) -> int:
        return self.coeffs.get(tuple(exps), 0)

    def filter(self, keep: Callable) -> "TruncatedSeries":
        """Series with only the monomials whose exponent tuple passes
        ``keep``."""
        return TruncatedSeries(
            self.nvars, self.trunc, {e: c for e, c in self.coeffs.items() if keep(e)}
        )

    def map_exponents(
        self, fn: Callable, nvars: int | None = None, trunc: int | None = None
    ) -> "TruncatedSeries":
        """Reindex monomials (for substitutions like z -> x*z); ``fn`` maps an
        exponent tuple to a new one."""
        nvars = self.nvars if nvars is None else nvars
        trunc = self.trunc if trunc is None else trunc
        out: dict = {}
        for e, c in self.coeffs.items():
            e2 = tuple(fn(e))
            out[e2] = out.get(e2, 0) + c
        return TruncatedSeries(nvars, trunc, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.nvars == other.nvars
            and self.trunc == other.trunc
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.nvars, self.trunc, frozenset(self.coeffs.items())))

    def sorted_items(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_json_dict(self) -> dict:
        """Monomials as JSON-friendly keys: ``{"[1,2]": 3, ...}``."""
        return {json.dumps(list(e)): c for e, c in self.sorted_items()}

    def to_text(self, names: str = "xyzw") -> str:
        """Human-readable polynomial, lowest total degree first."""
        if not self.coeffs:
            return "0"
        bits = []
        for e, c in self.sorted_items():
            factors = []
            for v, k in enumerate(e):
                if k == 1:
                    factors.append(names[v])
                elif k > 1:
                    factors.append(f"{names[v]}^{k}")
            body = "*".join(factors)
            if not body:
                bits.append(f"{c}")
            elif c == 1:
                bits.append(body)
            elif c == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{c}*{body}")
        text = " + ".join(bits)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        head = self.to_text()
        if len(head) > 60:
            head = head[:57] + "..."
        return f"TruncatedSeries({self.nvars} vars, <= {self.trunc}: {head})"
