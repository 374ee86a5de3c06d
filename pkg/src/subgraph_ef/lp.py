"""Exact two-phase primal simplex over rationals.

The solver works on a sparse tableau (one dict per row) with Bland's rule.
Before building the tableau it

* eliminates variables pinned by one-variable equations,
* turns the tightest one-variable lower-bound row of a variable into a
  shift ``v = L + w`` with ``w >= 0`` (looser duplicates are dropped),
* splits every remaining free variable as ``w+ - w-``.

Phase one runs once per :class:`Solver`; each call to
:meth:`Solver.maximize` restarts phase two from the stored feasible basis.
Every optimal answer carries a dual vector for the *original* rows and
both the primal point and the dual certificate are re-checked exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

from .errors import DimensionError
from .polyhedra import ExtendedFormulation, LinearSystem
from .rational import as_rational

RHS = -1


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpOutcome:
    status: Status
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None
    ineq_duals: tuple[Fraction, ...] | None = None
    eq_duals: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL

    def __str__(self):
        if self.optimal:
            return f"optimal {self.value}"
        return self.status.value


class CertificateError(AssertionError):
    """The solver produced an answer that fails its own exact re-check."""


class Solver:
    """Maximize many objectives over one fixed :class:`LinearSystem`."""

    def __init__(self, system: LinearSystem | ExtendedFormulation):
        if isinstance(system, ExtendedFormulation):
            system = system.system
        self.system = system
        self.pivots = 0
        self._presolve()
        if self.feasible:
            self._build()
            self._phase_one()

    # -- presolve ---------------------------------------------------------

    def _presolve(self):
        s = self.system
        index = {v: j for j, v in enumerate(s.variables)}
        self.n = n = len(s.variables)
        self.feasible = True
        fixed: dict[int, _Q] = {}
        fix_row: dict[int, tuple[int, _Q]] = {}
        eq_rows = [{index[v]: _Q(c) for v, c in r.coeffs.items()} for r in s.equations]
        eq_rhs = [_Q(r.rhs) for r in s.equations]
        for k, coeffs in enumerate(eq_rows):
            if len(coeffs) == 1:
                (j, a), = coeffs.items()
                val = eq_rhs[k] / a
                if j in fixed:
                    if fixed[j] != val:
                        self.feasible = False
                else:
                    fixed[j] = val
                    fix_row[j] = (k, a)
        fixing_rows = {k for k, _ in fix_row.values()}

        def substitute(coeffs, rhs):
            rest = {j: c for j, c in coeffs.items() if j not in fixed}
            for j, c in coeffs.items():
                if j in fixed:
                    rhs -= c * fixed[j]
            return rest, rhs

        general_eqs = []
        for k, coeffs in enumerate(eq_rows):
            if k in fixing_rows:
                continue
            rest, rhs = substitute(coeffs, eq_rhs[k])
            if rest:
                general_eqs.append((k, rest, rhs))
            elif rhs != 0:
                self.feasible = False

        lower: dict[int, tuple[_Q, int, _Q]] = {}
        candidates = []
        for i, r in enumerate(s.inequalities):
            coeffs = {index[v]: _Q(c) for v, c in r.coeffs.items()}
            rest, rhs = substitute(coeffs, _Q(r.rhs))
            if not rest:
                if rhs < 0:
                    self.feasible = False
                continue
            if len(rest) == 1:
                (j, a), = rest.items()
                if a < 0:
                    bound = rhs / a
                    if j not in lower or bound > lower[j][0]:
                        lower[j] = (bound, i, a)
                    continue
            candidates.append((i, rest, rhs))

        self.fixed = fixed
        self.fix_row = fix_row
        self.lower = lower
        self.general_eqs = general_eqs
        self.general_ineqs = candidates

    # -- tableau ----------------------------------------------------------

    def _build(self):
        cols: dict[int, tuple[int, int | None]] = {}
        ncol = 0
        shift: dict[int, _Q] = {}
        for j in range(self.n):
            if j in self.fixed:
                continue
            if j in self.lower:
                cols[j] = (ncol, None)
                shift[j] = self.lower[j][0]
                ncol += 1
            else:
                cols[j] = (ncol, ncol + 1)
                ncol += 2
        self.cols = cols
        self.shift = shift
        self.n_struct = ncol

        def standard(coeffs, rhs):
            row = {}
            for j, c in coeffs.items():
                plus, minus = cols[j]
                row[plus] = c
                if minus is not None:
                    row[minus] = -c
                if j in shift:
                    rhs -= c * shift[j]
            return row, rhs

        rows = []
        kinds = []  # ("ineq", original index) / ("eq", original index)
        signs = []
        first_slack = ncol
        n_ineq = len(self.general_ineqs)
        first_art = first_slack + n_ineq
        art = first_art
        basis = []
        init_col = []
        for r, (i, coeffs, rhs) in enumerate(self.general_ineqs):
            row, rhs = standard(coeffs, rhs)
            slack = first_slack + r
            if rhs >= 0:
                row[slack] = _Q(1)
                row[RHS] = rhs
                basis.append(slack)
                init_col.append(slack)
                signs.append(1)
            else:
                row = {c: -v for c, v in row.items()}
                row[slack] = _Q(-1)
                row[art] = _Q(1)
                row[RHS] = -rhs
                basis.append(art)
                init_col.append(art)
                art += 1
                signs.append(-1)
            rows.append(row)
            kinds.append(("ineq", i))
        for k, coeffs, rhs in self.general_eqs:
            row, rhs = standard(coeffs, rhs)
            sign = 1
            if rhs < 0:
                row = {c: -v for c, v in row.items()}
                rhs = -rhs
                sign = -1
            row[art] = _Q(1)
            row[RHS] = rhs
            basis.append(art)
            init_col.append(art)
            art += 1
            signs.append(sign)
            rows.append(row)
            kinds.append(("eq", k))
        for row in rows:
            for c in [c for c, v in row.items() if v == 0]:
                del row[c]
        self.rows = rows
        self.basis = basis
        self.kinds = kinds
        self.signs = signs
        self.init_col = init_col
        self.first_art = first_art
        self.n_cols = art

    def _pivot(self, rows, obj, basis, r, c):
        prow = rows[r]
        piv = prow[c]
        if piv != 1:
            inv = 1 / piv
            for k in prow:
                prow[k] = prow[k] * inv
        items = list(prow.items())
        for target in (*rows, obj):
            if target is prow:
                continue
            f = target.get(c)
            if not f:
                continue
            for k, v in items:
                nv = target.get(k, 0) - f * v
                if nv:
                    target[k] = nv
                else:
                    target.pop(k, None)
        basis[r] = c
        self.pivots += 1

    def _simplex(self, rows, obj, basis, limit_col) -> bool:
        """Bland's rule until optimal (True) or unbounded (False)."""
        while True:
            entering = None
            for c, d in obj.items():
                if c != RHS and c < limit_col and d < 0 and (entering is None or c < entering):
                    entering = c
            if entering is None:
                return True
            best = None
            for i, row in enumerate(rows):
                a = row.get(entering)
                if a is not None and a > 0:
                    ratio = row.get(RHS, 0) / a
                    if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                return False
            self._pivot(rows, obj, basis, best[1], entering)

    def _phase_one(self):
        rows, basis = self.rows, self.basis
        obj: dict[int, _Q] = {}
        for i, b in enumerate(basis):
            if b >= self.first_art:
                for k, v in rows[i].items():
                    if k < self.first_art:
                        obj[k] = obj.get(k, 0) - v
        obj = {k: v for k, v in obj.items() if v}
        # RHS entry of obj is -(sum of artificial values); maximize it to 0
        self._simplex(rows, obj, basis, self.first_art)
        if obj.get(RHS, 0) != 0:
            self.feasible = False
            return
        for i, b in enumerate(basis):
            if b >= self.first_art:
                for c in sorted(k for k in rows[i] if k != RHS and k < self.first_art):
                    self._pivot(rows, obj, basis, i, c)
                    break

    # -- phase two --------------------------------------------------------

    def _objective_row(self, costs: dict[int, _Q], rows, basis) -> dict:
        obj = {c: -v for c, v in costs.items() if v}
        for i, b in enumerate(basis):
            cb = costs.get(b)
            if cb:
                for k, v in rows[i].items():
                    nv = obj.get(k, 0) + cb * v
                    if nv:
                        obj[k] = nv
                    else:
                        obj.pop(k, None)
        return obj

    def maximize(self, objective: Mapping[str, object] | Sequence[object]) -> LpOutcome:
        c = self._objective_vector(objective)
        if not self.feasible:
            return LpOutcome(Status.INFEASIBLE)
        rows = [dict(r) for r in self.rows]
        basis = list(self.basis)
        costs: dict[int, _Q] = {}
        for j, (plus, minus) in self.cols.items():
            if c[j]:
                costs[plus] = c[j]
                if minus is not None:
                    costs[minus] = -c[j]
        obj = self._objective_row(costs, rows, basis)
        if not self._simplex(rows, obj, basis, self.first_art):
            return LpOutcome(Status.UNBOUNDED)
        return self._extract(c, rows, obj, basis)

    def _objective_vector(self, objective) -> list:
        if isinstance(objective, Mapping):
            vec = [_Q(0)] * self.n
            index = {v: j for j, v in enumerate(self.system.variables)}
            for v, val in objective.items():
                if v not in index:
                    raise DimensionError(f"objective names unknown variable {v!r}")
                vec[index[v]] = _Q(as_rational(val))
            return vec
        if len(objective) != self.n:
            raise DimensionError(f"objective has length {len(objective)}, system has {self.n} variables")
        return [_Q(as_rational(x)) for x in objective]

    def _extract(self, c, rows, obj, basis) -> LpOutcome:
        s = self.system
        w = {}
        for i, b in enumerate(basis):
            w[b] = rows[i].get(RHS, 0)
        x = [_Q(0)] * self.n
        for j in range(self.n):
            if j in self.fixed:
                x[j] = self.fixed[j]
                continue
            plus, minus = self.cols[j]
            val = w.get(plus, 0)
            if minus is not None:
                val -= w.get(minus, 0)
            x[j] = val + self.shift.get(j, 0)

        mu = [_Q(0)] * s.inequality_count
        pi = [_Q(0)] * s.equation_count
        for r, (kind, idx) in enumerate(self.kinds):
            y = obj.get(self.init_col[r], 0) * self.signs[r]
            if kind == "ineq":
                mu[idx] = y
            else:
                pi[idx] = y
        index = {v: j for j, v in enumerate(s.variables)}
        residual = list(c)
        for i, r in enumerate(s.inequalities):
            if mu[i]:
                for v, a in r.coeffs.items():
                    residual[index[v]] -= mu[i] * _Q(a)
        for k, r in enumerate(s.equations):
            if pi[k]:
                for v, a in r.coeffs.items():
                    residual[index[v]] -= pi[k] * _Q(a)
        for j, (_, i, a) in self.lower.items():
            mu[i] = residual[j] / a
        for j, (k, a) in self.fix_row.items():
            pi[k] = residual[j] / a

        point = tuple(_to_fraction(v) for v in x)
        value = sum((_to_fraction(cj) * xj for cj, xj in zip(c, point)), Fraction(0))
        ineq_duals = tuple(_to_fraction(v) for v in mu)
        eq_duals = tuple(_to_fraction(v) for v in pi)
        _check_certificate(s, [_to_fraction(v) for v in c], point, value, ineq_duals, eq_duals)
        return LpOutcome(Status.OPTIMAL, value, point, ineq_duals, eq_duals)

    @property
    def feasible_point(self) -> tuple[Fraction, ...] | None:
        if not self.feasible:
            return None
        return self.maximize([0] * self.n).point


def _check_certificate(s: LinearSystem, c, point, value, mu, pi):
    assignment = dict(zip(s.variables, point))
    if not s.satisfies(assignment):
        raise CertificateError("optimal point violates the system")
    if any(m < 0 for m in mu):
        raise CertificateError("negative multiplier on an inequality row")
    lhs = {v: Fraction(0) for v in s.variables}
    for m, r in zip(mu, s.inequalities):
        if m:
            for v, a in r.coeffs.items():
                lhs[v] += m * a
    for p, r in zip(pi, s.equations):
        if p:
            for v, a in r.coeffs.items():
                lhs[v] += p * a
    if any(lhs[v] != cj for v, cj in zip(s.variables, c)):
        raise CertificateError("multipliers do not reproduce the objective")
    bound = sum((m * r.rhs for m, r in zip(mu, s.inequalities)), Fraction(0))
    bound += sum((p * r.rhs for p, r in zip(pi, s.equations)), Fraction(0))
    if bound != value:
        raise CertificateError(f"dual bound {bound} differs from primal value {value}")


def solve_max(s: LinearSystem | ExtendedFormulation, objective) -> LpOutcome:
    return Solver(s).maximize(objective)


def is_feasible(s: LinearSystem | ExtendedFormulation) -> bool:
    return Solver(s).feasible
