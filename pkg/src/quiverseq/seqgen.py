"""Exact numeric engine for dual-number bilinear recurrences.

A recurrence of order N computes

    A_{n+N} · A_n = M1 + M2,

where M1, M2 are monomials in A_{n+1} .. A_{n+N-1} with integer
coefficients, one of which may carry the deformation factor (1 + w·ε)
with w drawn cycle-by-cycle from a repeating integer schedule.  Runs are
carried out in exact rational dual scalars; integrality is observed per
term, so a fractional term is recorded and the run keeps going (only an
exact zero divisor body truncates it).

The module also linearizes a recurrence (solving for the slope sequence
given the bodies), decomposes the slope space into unit-initial basis
rows, compiles a recurrence out of a period-1 weighted quiver, scans
parameter grids for the first non-integral term, and ships a catalog of
built-in families.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .dualnum import DualScalar
from .errors import QuiverSeqError
from .periodicity import NotPeriodOneError, weight_trace
from .quiver import WeightedQuiver, neg_part, pos_part


class UnknownFamilyError(QuiverSeqError, KeyError):
    """No built-in recurrence family with that name."""


class BadParamsError(QuiverSeqError, ValueError):
    """Family parameters outside their documented range."""


@dataclass(frozen=True)
class Monomial:
    """coeff · ∏ A_{n+1+i}^exponents[i]; an empty product is the constant coeff."""

    coeff: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if self.coeff == 0:
            raise BadParamsError("monomial coefficient must be nonzero")
        if any(e < 0 for e in self.exponents):
            raise BadParamsError("monomial exponents must be nonnegative")

    def render(self, symbol: str = "a") -> str:
        factors = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                factors.append(f"{symbol}[n+{i}]")
            elif e:
                factors.append(f"{symbol}[n+{i}]^{e}")
        if not factors:
            return str(self.coeff)
        body = "*".join(factors)
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return f"-{body}"
        return f"{self.coeff}*{body}"


@dataclass(frozen=True)
class RecurrenceSpec:
    """Order-N two-monomial recurrence with an optional deformation schedule."""

    name: str
    order: int
    monomial1: Monomial
    monomial2: Monomial
    deform: str = "none"  # "none" | "m1" | "m2"
    schedule: tuple[int, ...] = (0,)
    schedule_label: str = ""
    init_a: tuple[int, ...] = ()
    index_origin: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "schedule", tuple(self.schedule))
        init = tuple(self.init_a) if self.init_a else (1,) * self.order
        object.__setattr__(self, "init_a", init)
        if self.order < 2:
            raise BadParamsError("order must be at least 2")
        for m in (self.monomial1, self.monomial2):
            if len(m.exponents) != self.order - 1:
                raise BadParamsError(
                    f"exponent vector length {len(m.exponents)} != order-1 = {self.order - 1}"
                )
        if self.deform not in ("none", "m1", "m2"):
            raise BadParamsError(f"deform must be none/m1/m2, got {self.deform!r}")
        if len(init) != self.order:
            raise BadParamsError("initial bodies must have length = order")
        if not self.schedule:
            raise BadParamsError("schedule must be non-empty")
        if self.index_origin not in (0, 1):
            raise BadParamsError("index origin must be 0 or 1")

    def weight_at(self, step: int) -> int:
        """Deformation weight used when computing the (step+1)-th new term."""
        return self.schedule[step % len(self.schedule)]

    def with_deform(self, placement: str, schedule: Sequence[int], label: str = "") -> "RecurrenceSpec":
        return RecurrenceSpec(
            self.name,
            self.order,
            self.monomial1,
            self.monomial2,
            placement,
            tuple(schedule),
            label or f"w cycles {','.join(map(str, schedule))}",
            self.init_a,
            self.index_origin,
        )

    def without_deform(self) -> "RecurrenceSpec":
        return RecurrenceSpec(
            self.name,
            self.order,
            self.monomial1,
            self.monomial2,
            "none",
            (0,),
            "",
            self.init_a,
            self.index_origin,
        )

    def formula(self) -> str:
        m1 = self.monomial1.render("A")
        m2 = self.monomial2.render("A")
        if self.deform == "m1":
            m1 = f"({m1})*(1+w*eps)"
        elif self.deform == "m2":
            m2 = f"({m2})*(1+w*eps)"
        joined = f"{m1} - {m2[1:]}" if m2.startswith("-") else f"{m1} + {m2}"
        line = f"A[n+{self.order}]*A[n] = {joined}"
        if self.deform != "none":
            if len(self.schedule) == 1:
                line += f"   with w = {self.schedule[0]}"
            else:
                line += f"   with w cycling {','.join(map(str, self.schedule))}"
            if self.schedule_label:
                line += f" ({self.schedule_label})"
        return line


@dataclass
class SequenceRun:
    """Computed terms of a dual recurrence plus per-term integrality data."""

    spec: RecurrenceSpec
    terms: list[DualScalar]
    integral: list[bool] = field(default_factory=list)
    first_fraction: tuple[int, Fraction] | None = None
    degenerate_steps: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.integral:
            self.integral = [t.is_integral for t in self.terms]
            for i, (term, ok) in enumerate(zip(self.terms, self.integral)):
                if not ok and self.first_fraction is None:
                    offender = term.slope if term.slope.denominator != 1 else term.body
                    self.first_fraction = (i, offender)

    def paper_index(self, i: int) -> int:
        """Index in the family's own numbering (origin 0 or 1)."""
        return self.spec.index_origin + i

    def bodies(self) -> list[Fraction]:
        return [t.body for t in self.terms]

    def slopes(self) -> list[Fraction]:
        return [t.slope for t in self.terms]


def _monomial_value(m: Monomial, window: Sequence[DualScalar]) -> DualScalar:
    value = DualScalar(Fraction(m.coeff), Fraction(0))
    for e, term in zip(m.exponents, window):
        if e:
            value = value * term**e
    return value


def run(
    spec: RecurrenceSpec,
    init_a: Sequence[int] | None = None,
    init_b: Sequence[int] | None = None,
    count: int = 20,
) -> SequenceRun:
    """Run the recurrence to ``count`` total terms (initial block included).

    Each new term is RHS / A_n computed in exact rational dual arithmetic.
    A divisor with zero body is recorded in ``degenerate_steps`` and
    truncates the run; fractional terms are recorded but do not stop it.
    """
    N = spec.order
    if count < N:
        raise BadParamsError(f"count {count} smaller than order {N}")
    a = tuple(init_a) if init_a is not None else spec.init_a
    b = tuple(init_b) if init_b is not None else (0,) * N
    if len(a) != N or len(b) != N:
        raise BadParamsError("initial vectors must have length = order")
    terms = [DualScalar(Fraction(x), Fraction(y)) for x, y in zip(a, b)]
    degenerate: list[int] = []
    for step in range(count - N):
        divisor = terms[step]
        if divisor.body == 0:
            degenerate.append(step)
            break
        window = terms[step + 1 : step + N]
        m1 = _monomial_value(spec.monomial1, window)
        m2 = _monomial_value(spec.monomial2, window)
        w = spec.weight_at(step)
        if spec.deform == "m1":
            m1 = m1 * DualScalar(Fraction(1), Fraction(w))
        elif spec.deform == "m2":
            m2 = m2 * DualScalar(Fraction(1), Fraction(w))
        terms.append((m1 + m2) / divisor)
    return SequenceRun(spec, terms, degenerate_steps=degenerate)


def _linearized_monomial(
    m: Monomial, bodies: Sequence[Fraction], slopes: Sequence[Fraction]
) -> Fraction:
    """Slope of coeff·∏ A^e given bodies and slopes of the window (product rule)."""
    total = Fraction(0)
    for i, e in enumerate(m.exponents):
        if e == 0:
            continue
        term = e * slopes[i] * bodies[i] ** (e - 1)
        for j, ej in enumerate(m.exponents):
            if j != i and ej:
                term *= bodies[j] ** ej
        total += term
    return m.coeff * total


def _monomial_body(m: Monomial, bodies: Sequence[Fraction]) -> Fraction:
    value = Fraction(m.coeff)
    for e, a in zip(m.exponents, bodies):
        if e:
            value *= a**e
    return value


def run_linearized(
    spec: RecurrenceSpec, base_run: SequenceRun, init_b: Sequence[int]
) -> list[Fraction]:
    """Solve the linearized recurrence for the slopes, given the bodies.

    This is an independent route to the slope sequence: differentiate the
    defining relation in ε and solve for b_{n+N}.  For a deformed spec
    the schedule contributes the affine term w·(deformed monomial body).
    Agrees exactly with the slopes of ``run`` on identical inputs.
    """
    N = spec.order
    bodies = base_run.bodies()
    if len(init_b) != N:
        raise BadParamsError("initial slopes must have length = order")
    slopes: list[Fraction] = [Fraction(x) for x in init_b]
    for step in range(len(bodies) - N):
        a_n = bodies[step]
        if a_n == 0:
            break
        awin = bodies[step + 1 : step + N]
        bwin = slopes[step + 1 : step + N]
        total = _linearized_monomial(spec.monomial1, awin, bwin)
        total += _linearized_monomial(spec.monomial2, awin, bwin)
        w = spec.weight_at(step)
        if spec.deform == "m1":
            total += w * _monomial_body(spec.monomial1, awin)
        elif spec.deform == "m2":
            total += w * _monomial_body(spec.monomial2, awin)
        slopes.append((total - slopes[step] * bodies[step + N]) / a_n)
    return slopes


def decompose_basis(
    spec: RecurrenceSpec, base_run: SequenceRun, count: int | None = None
) -> list[list[Fraction]]:
    """Slope basis rows from unit initial vectors (undeformed specs only).

    The slope solution space of an undeformed recurrence is linear, so
    every slope sequence is the unique combination of these N rows; the
    all-ones combination reproduces the bodies themselves.
    """
    if spec.deform != "none":
        raise BadParamsError("basis decomposition applies to undeformed recurrences")
    N = spec.order
    rows = []
    for i in range(N):
        unit = [0] * N
        unit[i] = 1
        row = run_linearized(spec, base_run, unit)
        rows.append(row if count is None else row[:count])
    return rows


def quiver_to_spec(wq: WeightedQuiver, max_cycles: int = 64) -> RecurrenceSpec:
    """Compile a period-1 weighted quiver into its sequence recurrence.

    Row 1 of the exchange matrix supplies the monomials: out-arrow
    multiplicities are the exponents of the undeformed monomial, in-arrow
    multiplicities those of the deformed one.  The deformation schedule is
    the trace of w_1 over one full weight period.
    """
    q = wq.quiver
    if not q.is_period_one():
        raise NotPeriodOneError("recurrence compilation requires a period-1 quiver")
    row = q.b[0]
    out_exps = tuple(pos_part(c) for c in row[1:])
    in_exps = tuple(-neg_part(c) for c in row[1:])
    schedule = weight_trace(wq, max_cycles)
    deform = "m2" if any(schedule) else "none"
    label = f"w_1 trace over weight period {len(schedule)}" if deform != "none" else ""
    return RecurrenceSpec(
        name=f"quiver-n{q.n}",
        order=q.n,
        monomial1=Monomial(1, out_exps),
        monomial2=Monomial(1, in_exps),
        deform=deform,
        schedule=schedule if deform != "none" else (0,),
        schedule_label=label,
        init_a=(1,) * q.n,
        index_origin=1,
    )


@dataclass(frozen=True)
class ScanCell:
    """One grid cell of an integrality scan."""

    params: dict
    run: SequenceRun

    @property
    def clean(self) -> bool:
        return self.run.first_fraction is None and not self.run.degenerate_steps


def integrality_scan(
    family: str,
    grid: Mapping[str, Iterable[int]],
    horizon: int,
    deform: tuple[str, Sequence[int]] | None = None,
) -> list[ScanCell]:
    """Run a family over a parameter grid with zero initial slopes.

    Cells are visited row-major in the order the grid mapping lists its
    keys, so output order is deterministic.  Each cell reports the first
    non-integral term (index and exact value) or that it stayed clean to
    the horizon; degenerate cells are reported as such, never raised.
    """
    keys = list(grid.keys())
    cells = []
    for combo in itertools.product(*(list(grid[k]) for k in keys)):
        params = dict(zip(keys, combo))
        spec = builtin(family, **params)
        if deform is not None:
            placement, schedule = deform
            spec = spec.with_deform(placement, tuple(schedule))
        cells.append(ScanCell(params, run(spec, count=horizon)))
    return cells


# -- built-in families -------------------------------------------------------


def _somos4() -> RecurrenceSpec:
    return RecurrenceSpec(
        "somos4", 4, Monomial(1, (1, 0, 1)), Monomial(1, (0, 2, 0)), index_origin=1
    )


def _somos5() -> RecurrenceSpec:
    return RecurrenceSpec(
        "somos5", 5, Monomial(1, (1, 0, 0, 1)), Monomial(1, (0, 1, 1, 0)), index_origin=1
    )


def _gale_robinson(N: int, r: int, s: int) -> RecurrenceSpec:
    if not (isinstance(N, int) and isinstance(r, int) and isinstance(s, int)):
        raise BadParamsError("N, r, s must be integers")
    if not (1 <= r < s <= N / 2):
        raise BadParamsError(f"need 1 <= r < s <= N/2, got N={N} r={r} s={s}")
    e1 = [0] * (N - 1)
    e1[r - 1] += 1
    e1[N - r - 1] += 1
    e2 = [0] * (N - 1)
    e2[s - 1] += 1
    e2[N - s - 1] += 1
    return RecurrenceSpec(
        f"gale_robinson({N},{r},{s})", N, Monomial(1, e1), Monomial(1, e2), index_origin=1
    )


def _fordy_marsh_s4(p: int, q: int) -> RecurrenceSpec:
    if not (isinstance(p, int) and isinstance(q, int)) or p < 1 or q < 0:
        raise BadParamsError(f"need p >= 1 and q >= 0, got p={p} q={q}")
    return RecurrenceSpec(
        f"fordy_marsh_s4(p={p},q={q})",
        4,
        Monomial(1, (p, 0, p)),
        Monomial(1, (0, q, 0)),
        index_origin=0,
    )


def _cassini_plus() -> RecurrenceSpec:
    return RecurrenceSpec(
        "cassini_plus", 2, Monomial(1, (2,)), Monomial(1, (0,)), index_origin=0
    )


def _cassini_minus() -> RecurrenceSpec:
    # Starts at n=1 with bodies (1, 3): the even-index bisection's n=0 term
    # is 0 and cannot serve as a divisor.
    return RecurrenceSpec(
        "cassini_minus",
        2,
        Monomial(1, (2,)),
        Monomial(-1, (0,)),
        init_a=(1, 3),
        index_origin=1,
    )


def _limping_fibonacci() -> RecurrenceSpec:
    return RecurrenceSpec(
        "limping_fibonacci",
        2,
        Monomial(1, (2,)),
        Monomial(1, (0,)),
        deform="m1",
        schedule=(1, 1, -1, -1),
        schedule_label="sign pattern ++-- from the first computed term",
        index_origin=0,
    )


def _order3() -> RecurrenceSpec:
    return RecurrenceSpec(
        "order3", 3, Monomial(1, (1, 1)), Monomial(1, (0, 0)), index_origin=0
    )


def _order3_alt() -> RecurrenceSpec:
    return RecurrenceSpec(
        "order3_alt",
        3,
        Monomial(1, (1, 1)),
        Monomial(1, (0, 0)),
        deform="m1",
        schedule=(1, 1, 1, -1, -1, -1),
        schedule_label="sign pattern +++--- from the first computed term",
        index_origin=0,
    )


_FAMILIES = {
    "somos4": _somos4,
    "somos5": _somos5,
    "gale_robinson": _gale_robinson,
    "fordy_marsh_s4": _fordy_marsh_s4,
    "cassini_plus": _cassini_plus,
    "cassini_minus": _cassini_minus,
    "limping_fibonacci": _limping_fibonacci,
    "order3": _order3,
    "order3_alt": _order3_alt,
}


def family_names() -> list[str]:
    return sorted(_FAMILIES)


def builtin(name: str, **params) -> RecurrenceSpec:
    """Look up a built-in family; hyphens in names normalize to underscores."""
    key = name.replace("-", "_").lower()
    factory = _FAMILIES.get(key)
    if factory is None:
        raise UnknownFamilyError(f"unknown family {name!r}; known: {', '.join(family_names())}")
    try:
        return factory(**params)
    except TypeError as exc:
        raise BadParamsError(f"bad parameters for {key}: {exc}") from exc
