"""Coloured integers under difference conditions, and their enumeration.

A part is a positive integer carrying a colour; parts are totally ordered
by value, ties broken by the position of their preimage in the colour
ladder (level, then colour rank).  A difference matrix prescribes, for
each ordered colour pair, the minimal value gap between consecutive parts
of a nonincreasing sequence: entry ``[x][y]`` constrains a part of colour
``x`` followed by a smaller-or-equal part of colour ``y``.

Two enumeration backends live here:

* a plain recursive generator over part lists (the brute-force oracle and
  the source of printed listings), and
* :class:`LargestPartTable`, a dynamic program over (remaining weight,
  last placed part) that assembles generating series degree by degree.
  No divisions are involved, so it is independent of the recurrence
  engines it is compared against.

Congruence-defined partition classes (allowed residues, per-kind
distinctness) get the same two backends, plus an ordinary-partition
counter used as an external cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import ConfigurationError
from .series import Series

Key = tuple[int, tuple[int, ...]]


# ----------------------------------------------------------------------
# colour systems, matrices, weights


@dataclass(frozen=True)
class ColourSystem:
    """Ordered colour labels; at equal value, a later colour is larger."""

    colours: tuple[str, ...] = ("a", "b", "c", "d")

    def __post_init__(self) -> None:
        if not self.colours or len(set(self.colours)) != len(self.colours):
            raise ConfigurationError(f"colour labels must be distinct and nonempty: {self.colours}")

    def rank(self, colour: str) -> int:
        try:
            return self.colours.index(colour)
        except ValueError:
            raise ConfigurationError(f"unknown colour {colour!r}; have {self.colours}") from None


@dataclass(frozen=True)
class DifferenceMatrix:
    """Minimal-gap matrix; row = colour of the earlier (larger) part,
    column = colour of the later (smaller) part."""

    colours: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.colours)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ConfigurationError(f"difference matrix must be {n}x{n}")

    @classmethod
    def from_rows(cls, colours: Sequence[str], rows: Sequence[Sequence[int]]) -> "DifferenceMatrix":
        return cls(tuple(colours), tuple(tuple(int(e) for e in row) for row in rows))

    def gap(self, earlier: str, later: str) -> int:
        return self.rows[self.colours.index(earlier)][self.colours.index(later)]


@dataclass(frozen=True)
class WeightMap:
    """Per-colour affine part values: level ``k`` of colour ``x`` has
    value ``q_scale*k + offset_x``, for ``k >= min_level_x``."""

    colours: tuple[str, ...]
    q_scale: int = 1
    offsets: tuple[int, ...] = ()
    min_level: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        n = len(self.colours)
        if not self.offsets:
            object.__setattr__(self, "offsets", (0,) * n)
        if not self.min_level:
            object.__setattr__(self, "min_level", (1,) * n)
        if len(self.offsets) != n or len(self.min_level) != n:
            raise ConfigurationError("weight map fields must align with the colour list")
        if self.q_scale < 1:
            raise ConfigurationError(f"q scale must be >= 1, got {self.q_scale}")
        for i, colour in enumerate(self.colours):
            if self.q_scale * self.min_level[i] + self.offsets[i] < 1:
                raise ConfigurationError(
                    f"colour {colour!r} admits a part of nonpositive value"
                )

    @classmethod
    def identity(cls, colours: Sequence[str]) -> "WeightMap":
        return cls(tuple(colours))

    @classmethod
    def make(
        cls,
        colours: Sequence[str],
        q_scale: int = 1,
        offsets: Mapping[str, int] | None = None,
        min_level: Mapping[str, int] | None = None,
    ) -> "WeightMap":
        colours = tuple(colours)
        offsets = offsets or {}
        min_level = min_level or {}
        return cls(
            colours,
            q_scale,
            tuple(offsets.get(x, 0) for x in colours),
            tuple(min_level.get(x, 1) for x in colours),
        )

    def value(self, level: int, colour_idx: int) -> int:
        return self.q_scale * level + self.offsets[colour_idx]


@dataclass(frozen=True)
class Part:
    """A coloured part: its value (= weight contribution), colour, and
    the ladder level it came from."""

    value: int
    colour: str
    level: int

    def __str__(self) -> str:
        return f"{self.value}_{self.colour}"


@dataclass(frozen=True)
class PartitionSystem:
    """A colour order, a difference matrix on part values, and the weight
    map generating the part alphabet."""

    colours: ColourSystem
    matrix: DifferenceMatrix
    weights: WeightMap

    def __post_init__(self) -> None:
        if self.matrix.colours != self.colours.colours or self.weights.colours != self.colours.colours:
            raise ConfigurationError("colour lists of matrix, weights and system must agree")

    @classmethod
    def plain(cls, colours: Sequence[str], rows: Sequence[Sequence[int]]) -> "PartitionSystem":
        cs = ColourSystem(tuple(colours))
        return cls(cs, DifferenceMatrix.from_rows(colours, rows), WeightMap.identity(colours))

    def alphabet(self, max_value: int) -> list[Part]:
        """All parts of value <= max_value, ascending in the part order
        (value, level, colour rank)."""
        parts = []
        for idx, colour in enumerate(self.colours.colours):
            level = self.weights.min_level[idx]
            while True:
                value = self.weights.value(level, idx)
                if value > max_value:
                    break
                parts.append((value, level, idx, colour))
                level += 1
        parts.sort()
        return [Part(value, colour, level) for value, level, idx, colour in parts]


#: The four-colour alphabet and minimal-gap matrix of the base system
#: (row = colour of the earlier/larger part).
PRIMC_COLOURS = ("a", "b", "c", "d")
PRIMC_ROWS = (
    (2, 1, 2, 2),
    (1, 0, 1, 1),
    (0, 1, 0, 2),
    (0, 1, 0, 2),
)
#: Colour statistics tracked by default: b stays uncounted.
PRIMC_TRACKED = {"a": "a", "c": "c", "d": "d"}


def primc_system() -> PartitionSystem:
    """The base four-colour system with unit weights."""
    return PartitionSystem.plain(PRIMC_COLOURS, PRIMC_ROWS)


def partition_weight(parts: Sequence[Part]) -> int:
    return sum(p.value for p in parts)


def multidegree(
    parts: Sequence[Part], tracked: Mapping[str, str], vars: tuple[str, ...]
) -> tuple[int, ...]:
    """Exponent vector of a partition: one entry per variable, counting
    parts whose colour is tracked by that variable."""
    counts = dict.fromkeys(vars, 0)
    for p in parts:
        var = tracked.get(p.colour)
        if var is not None:
            counts[var] += 1
    return tuple(counts[v] for v in vars)


def partition_string(parts: Sequence[Part], suffix: Mapping[str, str] | None = None) -> str:
    """Canonical comma-joined rendering, e.g. ``5',1`` with prime
    suffixes or ``2_a,1_b`` with colour suffixes (the default)."""
    if suffix is None:
        return ",".join(f"{p.value}_{p.colour}" for p in parts)
    return ",".join(f"{p.value}{suffix.get(p.colour, '')}" for p in parts)


# ----------------------------------------------------------------------
# admissibility and brute-force enumeration


def is_admissible(
    parts: Sequence[Part] | Sequence[tuple[int, str]], matrix: DifferenceMatrix
) -> bool:
    """Gap test on every consecutive pair of a nonincreasing part
    sequence; the empty sequence is admissible."""
    seq = [(p.value, p.colour) if isinstance(p, Part) else (p[0], p[1]) for p in parts]
    for (v1, c1), (v2, c2) in zip(seq, seq[1:]):
        if v1 - v2 < matrix.gap(c1, c2):
            return False
    return True


class _AlphabetIndex:
    """Shared index structures over a system's alphabet."""

    def __init__(self, system: PartitionSystem, max_value: int):
        self.system = system
        self.parts = system.alphabet(max_value)
        self.index_of = {(p.value, p.colour): i for i, p in enumerate(self.parts)}
        colours = system.colours.colours
        self.colour_ids = {x: i for i, x in enumerate(colours)}
        self.by_colour: list[list[int]] = [[] for _ in colours]
        for i, p in enumerate(self.parts):
            self.by_colour[self.colour_ids[p.colour]].append(i)
        self.gap_rows = [
            [system.matrix.rows[xi][yi] for yi in range(len(colours))]
            for xi in range(len(colours))
        ]

    def allowed_before(self, i: int) -> list[int]:
        """Indices of parts that may immediately follow part ``i`` in a
        nonincreasing admissible sequence, ascending."""
        part = self.parts[i]
        xi = self.colour_ids[part.colour]
        out: list[int] = []
        for yi, ids in enumerate(self.by_colour):
            vmax = part.value - self.gap_rows[xi][yi]
            for j in ids:
                pv = self.parts[j].value
                if pv > vmax or pv > part.value or (pv == part.value and j > i):
                    break
                out.append(j)
        out.sort()
        return out


def iter_admissible(system: PartitionSystem, n_max: int) -> Iterator[tuple[Part, ...]]:
    """All admissible partitions of weight <= n_max, each exactly once.

    Deterministic order: lexicographic on part lists, largest first part
    first, a partition before its extensions.
    """
    if n_max < 0:
        raise ConfigurationError(f"n_max must be >= 0, got {n_max}")
    idx = _AlphabetIndex(system, n_max)
    allowed_cache: dict[int, list[int]] = {}

    def allowed(i: int) -> list[int]:
        got = allowed_cache.get(i)
        if got is None:
            got = allowed_cache[i] = idx.allowed_before(i)
        return got

    def gen(candidates: list[int], budget: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for j in reversed(candidates):
            value = idx.parts[j].value
            if value > budget:
                continue
            for tail in gen(allowed(j), budget - value):
                yield (j, *tail)

    for combo in gen(list(range(len(idx.parts))), n_max):
        yield tuple(idx.parts[j] for j in combo)


def iter_gap_rule(
    system: PartitionSystem,
    gap_ok: Callable[[Part, Part], bool],
    n_max: int,
) -> Iterator[tuple[Part, ...]]:
    """Like :func:`iter_admissible` but with an arbitrary predicate on
    consecutive parts instead of the matrix; used to cross-check prose
    restatements of gap conditions."""
    idx = _AlphabetIndex(system, n_max)
    parts = idx.parts
    allowed_cache: dict[int, list[int]] = {}

    def allowed(i: int) -> list[int]:
        got = allowed_cache.get(i)
        if got is None:
            got = allowed_cache[i] = [j for j in range(i + 1) if gap_ok(parts[i], parts[j])]
        return got

    def gen(candidates: list[int], budget: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for j in reversed(candidates):
            if parts[j].value > budget:
                continue
            for tail in gen(allowed(j), budget - parts[j].value):
                yield (j, *tail)

    for combo in gen(list(range(len(parts))), n_max):
        yield tuple(parts[j] for j in combo)


def partitions_by_weight(
    system: PartitionSystem, n_max: int
) -> dict[int, list[tuple[Part, ...]]]:
    """Admissible partitions grouped by weight, enumeration order kept."""
    groups: dict[int, list[tuple[Part, ...]]] = {n: [] for n in range(n_max + 1)}
    for parts in iter_admissible(system, n_max):
        groups[partition_weight(parts)].append(parts)
    return groups


# ----------------------------------------------------------------------
# generating-series oracle (dynamic program, no divisions)


class LargestPartTable:
    """Series of admissible partitions organised by largest part.

    ``exact(value, colour)`` is the series of partitions whose largest
    part is exactly that part; ``bounded`` sums over all parts up to it
    in the part order (plus the empty partition).  Built degree by
    degree: the q^n slice of a part's series only needs q^(n-value)
    slices of its successors, so no inversion is ever required.
    """

    def __init__(
        self,
        system: PartitionSystem,
        tracked: Mapping[str, str],
        trunc: int,
        vars: tuple[str, ...] | None = None,
    ):
        if vars is None:
            vars = tuple(sorted(set(tracked.values())))
        bad = set(tracked.values()) - set(vars)
        if bad:
            raise ConfigurationError(f"tracked variables {sorted(bad)} missing from {vars}")
        self.system = system
        self.trunc = trunc
        self.vars = vars
        self._idx = _AlphabetIndex(system, trunc)
        parts = self._idx.parts
        nvars = len(vars)
        zeros = (0,) * nvars
        bump_pos = [
            vars.index(tracked[p.colour]) if p.colour in tracked else None for p in parts
        ]

        # table[i][n]: q^n slice (exps -> coefficient) of the series for
        # partitions with largest part parts[i]; None when empty.
        table: list[list[dict[tuple[int, ...], int] | None]] = [
            [None] * (trunc + 1) for _ in parts
        ]
        by_colour = self._idx.by_colour
        gap_rows = self._idx.gap_rows
        colour_ids = self._idx.colour_ids
        values = [p.value for p in parts]
        for n in range(1, trunc + 1):
            for i, part in enumerate(parts):
                v = values[i]
                if v > n:
                    break  # alphabet ascending in value
                m = n - v
                acc: dict[tuple[int, ...], int] = {}
                if m == 0:
                    acc[zeros] = 1
                else:
                    xi = colour_ids[part.colour]
                    for yi, ids in enumerate(by_colour):
                        vmax = v - gap_rows[xi][yi]
                        for j in ids:
                            pv = values[j]
                            if pv > vmax or pv > v or (pv == v and j > i):
                                break
                            sl = table[j][m]
                            if sl:
                                for exps, coef in sl.items():
                                    acc[exps] = acc.get(exps, 0) + coef
                if acc:
                    pos = bump_pos[i]
                    if pos is None:
                        table[i][n] = acc
                    else:
                        table[i][n] = {
                            e[:pos] + (e[pos] + 1,) + e[pos + 1 :]: c for e, c in acc.items()
                        }
        self._table = table
        self._zeros = zeros

    def _part_index(self, value: int, colour: str) -> int:
        try:
            return self._idx.index_of[(value, colour)]
        except KeyError:
            raise ConfigurationError(
                f"no part of value {value} and colour {colour!r} below q^{self.trunc}"
            ) from None

    def _series_from(self, slice_lists: Iterable[list]) -> Series:
        terms: dict[Key, int] = {}
        for slices in slice_lists:
            for n, sl in enumerate(slices):
                if sl:
                    for exps, coef in sl.items():
                        key = (n, exps)
                        new = terms.get(key, 0) + coef
                        if new:
                            terms[key] = new
                        elif key in terms:
                            del terms[key]
        return Series(self.trunc, terms, self.vars)

    def exact(self, value: int, colour: str) -> Series:
        """Series over partitions with largest part exactly value_colour.
        A value-0 bound denotes the empty partition, assigned by
        convention to the second colour (matching the recurrence
        engines' initial conditions)."""
        if value == 0:
            unit = self.system.colours.rank(colour) == 1
            return Series.one(self.trunc, self.vars) if unit else Series.zero(self.trunc, self.vars)
        return self._series_from([self._table[self._part_index(value, colour)]])

    def bounded(self, value: int, colour: str) -> Series:
        """Series over partitions with largest part <= value_colour in
        the part order, the empty partition included (for value 0: only
        colours at or above the second count the empty partition)."""
        if value == 0:
            unit = self.system.colours.rank(colour) >= 1
            return Series.one(self.trunc, self.vars) if unit else Series.zero(self.trunc, self.vars)
        i = self._part_index(value, colour)
        s = self._series_from(self._table[j] for j in range(i + 1))
        return s + Series.one(self.trunc, self.vars)

    def total(self) -> Series:
        """Series over all admissible partitions, empty included."""
        s = self._series_from(self._table)
        return s + Series.one(self.trunc, self.vars)


def generating_series(
    system: PartitionSystem,
    tracked: Mapping[str, str],
    trunc: int,
    vars: tuple[str, ...] | None = None,
) -> Series:
    """Sum of ``q^weight * prod(var^count)`` over all admissible
    partitions of weight <= trunc."""
    return LargestPartTable(system, tracked, trunc, vars).total()


def generating_series_bounded(
    system: PartitionSystem,
    bound_value: int,
    bound_colour: str,
    trunc: int,
    tracked: Mapping[str, str],
    vars: tuple[str, ...] | None = None,
    exact: bool = False,
) -> Series:
    """Restriction of :func:`generating_series` to partitions whose
    largest part is at most (or, with ``exact=True``, equal to) the given
    coloured integer."""
    table = LargestPartTable(system, tracked, trunc, vars)
    if exact:
        return table.exact(bound_value, bound_colour)
    return table.bounded(bound_value, bound_colour)


# ----------------------------------------------------------------------
# congruence-defined partition classes


@dataclass(frozen=True)
class ResidueCell:
    """One family of parts: values in the given residues (mod the class
    modulus), displayed with ``kind`` as suffix, optionally required
    distinct, optionally counted by a variable."""

    residues: frozenset[int]
    distinct: bool = False
    var: str | None = None
    kind: str = ""
    min_value: int = 1


@dataclass(frozen=True)
class CongruenceClass:
    modulus: int
    cells: tuple[ResidueCell, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ConfigurationError(f"modulus must be >= 1, got {self.modulus}")
        for cell in self.cells:
            if any(r < 0 or r >= self.modulus for r in cell.residues):
                raise ConfigurationError(
                    f"residues {sorted(cell.residues)} outside [0, {self.modulus})"
                )

    def cells_for(self, value: int) -> list[int]:
        r = value % self.modulus
        return [
            i
            for i, cell in enumerate(self.cells)
            if r in cell.residues and value >= cell.min_value
        ]


#: A congruence partition: ((value, cell index), ...) nonincreasing.
CongruencePartition = tuple[tuple[int, int], ...]


def iter_congruence(spec: CongruenceClass, n_max: int) -> Iterator[CongruencePartition]:
    """All partitions of weight <= n_max with parts drawn from the cells,
    respecting per-cell distinctness; deterministic order as in
    :func:`iter_admissible`."""
    if n_max < 0:
        raise ConfigurationError(f"n_max must be >= 0, got {n_max}")
    items: list[tuple[int, int]] = []
    for value in range(n_max, 0, -1):
        for ci in spec.cells_for(value):
            items.append((value, ci))

    def gen(start: int, budget: int) -> Iterator[CongruencePartition]:
        yield ()
        for t in range(start, len(items)):
            value, ci = items[t]
            if value > budget:
                continue
            next_start = t + 1 if spec.cells[ci].distinct else t
            for tail in gen(next_start, budget - value):
                yield ((value, ci), *tail)

    yield from gen(0, n_max)


def congruence_partition_string(partition: CongruencePartition, spec: CongruenceClass) -> str:
    return ",".join(f"{value}{spec.cells[ci].kind}" for value, ci in partition)


def congruence_multidegree(
    partition: CongruencePartition, spec: CongruenceClass, vars: tuple[str, ...]
) -> tuple[int, ...]:
    counts = dict.fromkeys(vars, 0)
    for _, ci in partition:
        var = spec.cells[ci].var
        if var is not None:
            counts[var] += 1
    return tuple(counts[v] for v in vars)


def congruence_series(
    spec: CongruenceClass, trunc: int, vars: tuple[str, ...] | None = None
) -> Series:
    """Generating series of the congruence class by direct knapsack over
    part values: one 0/1 pass per distinct item, one unbounded pass per
    repeatable item.  Independent of the product expansion it is checked
    against."""
    if vars is None:
        vars = tuple(sorted({c.var for c in spec.cells if c.var is not None}))
    for cell in spec.cells:
        if cell.var is not None and cell.var not in vars:
            raise ConfigurationError(f"cell variable {cell.var!r} missing from {vars}")
    zeros = (0,) * len(vars)
    slices: list[dict[tuple[int, ...], int]] = [{} for _ in range(trunc + 1)]
    slices[0][zeros] = 1

    def bump(exps: tuple[int, ...], pos: int | None) -> tuple[int, ...]:
        if pos is None:
            return exps
        return exps[:pos] + (exps[pos] + 1,) + exps[pos + 1 :]

    for value in range(1, trunc + 1):
        for ci in spec.cells_for(value):
            cell = spec.cells[ci]
            pos = vars.index(cell.var) if cell.var is not None else None
            rng = (
                range(trunc, value - 1, -1) if cell.distinct else range(value, trunc + 1)
            )
            for n in rng:
                src = slices[n - value]
                if not src:
                    continue
                dst = slices[n]
                for exps, coef in src.items():
                    key = bump(exps, pos)
                    dst[key] = dst.get(key, 0) + coef
    terms: dict[Key, int] = {}
    for n, sl in enumerate(slices):
        for exps, coef in sl.items():
            if coef:
                terms[(n, exps)] = coef
    return Series(trunc, terms, vars)


# ----------------------------------------------------------------------
# ordinary partitions (external cross-check)


def partition_counts(n_max: int) -> list[int]:
    """p(0..n_max) by the textbook coin-style dynamic program; no series
    machinery involved."""
    ways = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for j in range(part, n_max + 1):
            ways[j] += ways[j - part]
    return ways


def partition_count(n: int) -> int:
    return partition_counts(n)[n]


# ----------------------------------------------------------------------
# system description files


def parse_system_file(text: str) -> PartitionSystem:
    """Parse a colour-system description:

    line 1: colour labels separated by spaces;
    next |colours| lines: difference-matrix rows of integers;
    optionally a line ``weights`` followed by one line per colour:
    ``<colour> <q_scale> <offset> <min_level>``.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ConfigurationError("empty system description")
    colours = tuple(lines[0].split())
    n = len(colours)
    if len(lines) < 1 + n:
        raise ConfigurationError(f"expected {n} matrix rows after the colour line")
    rows = []
    for ln in lines[1 : 1 + n]:
        try:
            row = tuple(int(tok) for tok in ln.split())
        except ValueError as exc:
            raise ConfigurationError(f"bad matrix row {ln!r}: {exc}") from exc
        if len(row) != n:
            raise ConfigurationError(f"matrix row {ln!r} has {len(row)} entries, expected {n}")
        rows.append(row)
    rest = lines[1 + n :]
    weights = WeightMap.identity(colours)
    if rest:
        if rest[0] != "weights":
            raise ConfigurationError(f"unexpected line {rest[0]!r}; expected 'weights'")
        if len(rest) != 1 + n:
            raise ConfigurationError(f"weights stanza needs one line per colour ({n})")
        offsets: dict[str, int] = {}
        min_level: dict[str, int] = {}
        scales = set()
        for ln in rest[1:]:
            toks = ln.split()
            if len(toks) != 4:
                raise ConfigurationError(f"bad weights line {ln!r}; expected 'colour r offset min'")
            colour = toks[0]
            if colour not in colours:
                raise ConfigurationError(f"unknown colour {colour!r} in weights stanza")
            try:
                r, off, mn = (int(t) for t in toks[1:])
            except ValueError as exc:
                raise ConfigurationError(f"bad weights line {ln!r}: {exc}") from exc
            scales.add(r)
            offsets[colour] = off
            min_level[colour] = mn
        if len(scales) != 1:
            raise ConfigurationError(f"q scale must be identical across colours, got {sorted(scales)}")
        if set(offsets) != set(colours):
            raise ConfigurationError("weights stanza must cover every colour exactly once")
        weights = WeightMap.make(colours, scales.pop(), offsets, min_level)
    cs = ColourSystem(colours)
    return PartitionSystem(cs, DifferenceMatrix.from_rows(colours, rows), weights)
