"""Monomial ideals in a polynomial ring over a field.

This is the computational stand-in for ideals of a regular local ring: every
identity the classification relies on at desk scale is monomial. Ideals keep
their minimal generators as exponent tuples; :class:`Monomial` is the public
face of a single exponent vector.

Besides the fast operations, the module carries two brute-force oracles,
:func:`brute_colon` and :func:`brute_colength`, which enumerate monomials
directly and are used to cross-check the fast paths.
"""

from __future__ import annotations

import bisect
import itertools
import logging
import random
from collections import defaultdict
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from pathlib import Path

from .combinatorics import ExactInt, binom
from .errors import DimensionMismatch, IdealFileError, NotPrimaryError, PreconditionError

logger = logging.getLogger(__name__)

# Exponents are machine-width on purpose: anything larger is a bug upstream.
MAX_EXPONENT = 2**31 - 1

_SHORT_NAMES = ("x", "y", "z", "w")

Exponents = tuple[int, ...]


def variable_names(dim: int) -> tuple[str, ...]:
    if dim <= len(_SHORT_NAMES):
        return _SHORT_NAMES[:dim]
    return tuple(f"x{index}" for index in range(1, dim + 1))


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial, stored as its exponent vector."""

    exponents: Exponents

    def __post_init__(self):
        exponents = tuple(self.exponents)
        if not exponents:
            raise PreconditionError("A monomial needs at least one variable.")
        for value in exponents:
            if not isinstance(value, int) or value < 0:
                raise PreconditionError(f"Exponents must be non-negative integers, got {value!r}.")
            if value > MAX_EXPONENT:
                raise OverflowError(f"Exponent {value} exceeds {MAX_EXPONENT}.")
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def variable(cls, dim: int, index: int, power: int = 1) -> Monomial:
        exponents = [0] * dim
        exponents[index] = power
        return cls(tuple(exponents))

    @property
    def dim(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> int:
        """Number of variables that actually occur."""
        return sum(1 for value in self.exponents if value)

    def divides(self, other: Monomial) -> bool:
        _check_dims(self.dim, other.dim)
        return _divides(self.exponents, other.exponents)

    def lcm(self, other: Monomial) -> Monomial:
        _check_dims(self.dim, other.dim)
        return Monomial(_lcm(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        _check_dims(self.dim, other.dim)
        return Monomial(_mul(self.exponents, other.exponents))

    def __str__(self):
        parts = []
        for name, value in zip(variable_names(self.dim), self.exponents, strict=True):
            if value == 1:
                parts.append(name)
            elif value > 1:
                parts.append(f"{name}^{value}")
        return "".join(parts) or "1"


def _check_dims(left: int, right: int) -> None:
    if left != right:
        raise DimensionMismatch(f"Dimension mismatch: {left} vs {right}.")


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


def _mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b, strict=True))


def _quotient(a: Exponents, m: Exponents) -> Exponents:
    """``lcm(a, m) / m``: the generator of ``(a) : m``."""
    return tuple(max(x - y, 0) for x, y in zip(a, m, strict=True))


def _minimal(candidates: Iterable[Exponents]) -> frozenset[Exponents]:
    """Divisibility-minimal elements of a finite set of exponent vectors.

    Candidates are processed by ascending degree, so a candidate can only be
    divided by something already accepted and of strictly lower degree. A
    divisor one degree down is found by hashing ``u / x_i``; only larger drops
    need a scan.
    """
    unique = sorted(set(candidates), key=sum)
    accepted: list[Exponents] = []
    accepted_degrees: list[int] = []
    accepted_set: set[Exponents] = set()
    for u in unique:
        degree = sum(u)
        if any(
            u[:i] + (u[i] - 1,) + u[i + 1 :] in accepted_set for i in range(len(u)) if u[i]
        ):
            continue
        # Accepted generators of degree <= degree - 2.
        stop = bisect.bisect_right(accepted_degrees, degree - 2)
        if any(_divides(g, u) for g in accepted[:stop]):
            continue
        accepted.append(u)
        accepted_degrees.append(degree)
        accepted_set.add(u)
    return frozenset(accepted)


def _ordering_key(exponents: Exponents) -> tuple:
    # Lower degree first, then x before y before z within a degree.
    return (sum(exponents), tuple(-value for value in exponents))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Build instances through :func:`minimalize` or the helpers below; the
    constructor trusts that ``exponents`` is already an antichain. The empty set
    is the zero ideal and ``{(0, ..., 0)}`` the unit ideal.
    """

    dim: int
    exponents: frozenset[Exponents]

    @classmethod
    def zero(cls, dim: int) -> MonomialIdeal:
        return cls(dim, frozenset())

    @classmethod
    def unit(cls, dim: int) -> MonomialIdeal:
        return cls(dim, frozenset({(0,) * dim}))

    @property
    def gens(self) -> frozenset[Monomial]:
        return frozenset(Monomial(exponents) for exponents in self.exponents)

    def sorted_gens(self) -> list[Monomial]:
        return [Monomial(e) for e in sorted(self.exponents, key=_ordering_key)]

    @property
    def is_zero(self) -> bool:
        return not self.exponents

    @property
    def is_unit(self) -> bool:
        return (0,) * self.dim in self.exponents

    def __len__(self):
        return len(self.exponents)

    def __contains__(self, item: Monomial) -> bool:
        return member(self, item)

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.sorted_gens()) + ")"


def _check_ideals(*ideals: MonomialIdeal) -> int:
    dim = ideals[0].dim
    for ideal in ideals[1:]:
        _check_dims(dim, ideal.dim)
    return dim


def _build(dim: int, candidates: Iterable[Exponents]) -> MonomialIdeal:
    generators = _minimal(candidates)
    if generators and max(map(max, generators)) > MAX_EXPONENT:
        raise OverflowError(f"Exponent exceeds {MAX_EXPONENT}.")
    return MonomialIdeal(dim, generators)


def minimalize(gens: Iterable[Monomial], *, dim: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generators.

    ``dim`` is only needed for an empty generating set (the zero ideal).
    """
    gens = list(gens)
    if not gens:
        if dim is None:
            raise PreconditionError("The dimension of an empty generating set is unknown.")
        return MonomialIdeal.zero(dim)
    dim = gens[0].dim if dim is None else dim
    for monomial in gens:
        _check_dims(dim, monomial.dim)
    return _build(dim, (monomial.exponents for monomial in gens))


def principal(monomial: Monomial) -> MonomialIdeal:
    return MonomialIdeal(monomial.dim, frozenset({monomial.exponents}))


def exponent_vectors(dim: int, degree: int) -> Iterator[Exponents]:
    """All exponent vectors of total ``degree`` in ``dim`` variables (stars and bars)."""
    for bars in itertools.combinations(range(degree + dim - 1), dim - 1):
        previous = -1
        exponents = []
        for bar in bars:
            exponents.append(bar - previous - 1)
            previous = bar
        exponents.append(degree + dim - 2 - previous)
        yield tuple(exponents)


def maximal_power(d: int, ell: int) -> MonomialIdeal:
    """``m^ell``: every monomial of total degree ``ell`` in ``d`` variables."""
    if d < 1 or ell < 0:
        raise PreconditionError(f"maximal_power needs d >= 1 and ell >= 0, got {d}, {ell}.")
    return MonomialIdeal(d, frozenset(exponent_vectors(d, ell)))


def pure_powers(d: int, ell: int) -> MonomialIdeal:
    """The parameter ideal ``(x_1^ell, ..., x_d^ell)``."""
    return minimalize((Monomial.variable(d, index, ell) for index in range(d)), dim=d)


def product(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    dim = _check_ideals(left, right)
    return _build(dim, (_mul(a, b) for a in left.exponents for b in right.exponents))


def power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise PreconditionError(f"Ideal powers need n >= 0, got {n}.")
    result = MonomialIdeal.unit(ideal.dim)
    for _ in range(n):
        result = product(result, ideal)
    return result


def ideal_sum(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    dim = _check_ideals(left, right)
    return _build(dim, itertools.chain(left.exponents, right.exponents))


def ideal_intersection(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    """Generated by the pairwise lcms of the generators."""
    dim = _check_ideals(left, right)
    return _build(dim, (_lcm(a, b) for a in left.exponents for b in right.exponents))


def colon(ideal: MonomialIdeal, divisor: MonomialIdeal) -> MonomialIdeal:
    """``ideal : divisor = {u : u * divisor is contained in ideal}``.

    Intersection over the generators ``m`` of the divisor of ``ideal : m``,
    where each generator ``g`` contributes ``lcm(g, m) / m``.
    """
    dim = _check_ideals(ideal, divisor)
    if divisor.is_zero:
        raise PreconditionError("Colon by the zero ideal is the whole ring; refusing.")
    result = MonomialIdeal.unit(dim)
    for m in sorted(divisor.exponents, key=_ordering_key):
        by_single = _build(dim, (_quotient(g, m) for g in ideal.exponents))
        result = ideal_intersection(result, by_single)
        if result.is_zero:
            break
    return result


def member(ideal: MonomialIdeal, monomial: Monomial) -> bool:
    _check_dims(ideal.dim, monomial.dim)
    return any(_divides(g, monomial.exponents) for g in ideal.exponents)


def contains(ideal: MonomialIdeal, other: MonomialIdeal) -> bool:
    """Whether ``other`` is a subset of ``ideal``."""
    _check_ideals(ideal, other)
    return all(
        any(_divides(g, u) for g in ideal.exponents) for u in other.exponents
    )


def equals(left: MonomialIdeal, right: MonomialIdeal) -> bool:
    return contains(left, right) and contains(right, left)


def pure_power_bounds(ideal: MonomialIdeal) -> list[int]:
    """Smallest ``a_i`` with ``x_i^a_i`` in the ideal, for every variable."""
    bounds = []
    for index in range(ideal.dim):
        exponents = [
            g[index]
            for g in ideal.exponents
            if all(value == 0 for position, value in enumerate(g) if position != index)
        ]
        if not exponents:
            raise NotPrimaryError(index)
        bounds.append(min(exponents))
    return bounds


def _count_standard(generators: frozenset[Exponents], memo: dict) -> int:
    """Standard monomials, counted slice by slice along the last variable.

    The slice at height ``e`` is ``(I : x_d^e)`` with ``x_d`` set to zero; it
    only changes at the heights where some generator ends, so each distinct
    slice is counted once and weighted by the height of its band.
    """
    if generators in memo:
        return memo[generators]
    dim = len(next(iter(generators)))
    if dim == 1:
        result = min(g[0] for g in generators)
    else:
        top = min(g[-1] for g in generators if not any(g[:-1]))
        by_level: dict[int, list[Exponents]] = defaultdict(list)
        for g in generators:
            if g[-1] < top:
                by_level[g[-1]].append(g[:-1])
        levels = sorted(by_level)
        result = 0
        current: frozenset[Exponents] = frozenset()
        for position, level in enumerate(levels):
            current = _minimal(itertools.chain(current, by_level[level]))
            upper = levels[position + 1] if position + 1 < len(levels) else top
            result += (upper - level) * _count_standard(current, memo)
    memo[generators] = result
    return result


def colength(ideal: MonomialIdeal) -> ExactInt:
    """Length of ``A / I``: the number of monomials outside the ideal.

    The ideal must be primary to the maximal ideal; the standard monomials then
    sit inside the box bounded by the pure-power generators.
    """
    if ideal.is_zero:
        raise NotPrimaryError(0)
    pure_power_bounds(ideal)
    return _count_standard(ideal.exponents, {})


def brute_colength(ideal: MonomialIdeal) -> ExactInt:
    """Oracle for :func:`colength`: enumerate the whole box."""
    if ideal.is_zero:
        raise NotPrimaryError(0)
    bounds = pure_power_bounds(ideal)
    return sum(
        1
        for u in itertools.product(*(range(bound) for bound in bounds))
        if not any(_divides(g, u) for g in ideal.exponents)
    )


def _forward_difference(samples: list[ExactInt], order: int) -> ExactInt:
    return sum((-1) ** (order - k) * binom(order, k) * samples[k] for k in range(order + 1))


def multiplicity(ideal: MonomialIdeal, *, max_start: int = 8) -> ExactInt:
    """Hilbert-Samuel multiplicity ``e(I)`` as a d-th forward difference.

    ``n -> colength(I^n)`` is a degree-d polynomial with leading coefficient
    ``e(I) / d!`` for large n, but not always from ``n = 1``: for
    ``(x^4, x^3 y, x y^3, y^4)`` it starts at ``n = 2``. The sampling window
    ``n = s .. s+d+1`` slides from ``s = 1`` until its (d+1)-th difference
    vanishes, and the d-th difference there is returned.
    """
    d = ideal.dim
    if ideal.is_zero:
        raise NotPrimaryError(0)
    pure_power_bounds(ideal)
    samples: list[ExactInt] = []
    current = ideal
    for start in range(max_start):
        while len(samples) < start + d + 2:
            if samples:
                current = product(current, ideal)
            samples.append(colength(current))
        window = samples[start : start + d + 2]
        if _forward_difference(window, d + 1) == 0:
            if start:
                logger.debug("Colength of powers of %s is polynomial from n=%d", ideal, start + 1)
            return _forward_difference(window, d)
    raise PreconditionError(
        f"colength(I^n) is not yet polynomial for n <= {max_start + d + 1}; raise max_start."
    )


def sufficient_colon_bound(ideal: MonomialIdeal) -> int:
    """A degree bound under which :func:`brute_colon` sees every generator.

    Each generator of ``I : J`` divides the componentwise maximum of the
    generators of ``I``.
    """
    if ideal.is_zero:
        return 0
    return sum(max(g[index] for g in ideal.exponents) for index in range(ideal.dim))


def brute_colon(ideal: MonomialIdeal, divisor: MonomialIdeal, degree_bound: int) -> MonomialIdeal:
    """Oracle for :func:`colon`: test every monomial up to ``degree_bound``."""
    dim = _check_ideals(ideal, divisor)
    found = []
    for degree in range(degree_bound + 1):
        for u in exponent_vectors(dim, degree):
            if all(
                any(_divides(g, _mul(u, m)) for g in ideal.exponents) for m in divisor.exponents
            ):
                found.append(u)
    return _build(dim, found)


def random_ideal(
    rng: random.Random, dim: int, max_degree: int, max_gens: int = 4
) -> MonomialIdeal:
    """A nonzero monomial ideal with a few random generators."""
    count = rng.randint(1, max_gens)
    gens = []
    for _ in range(count):
        degree = rng.randint(0 if count == 1 else 1, max_degree)
        cuts = sorted(rng.randint(0, degree) for _ in range(dim - 1))
        bounds = [0, *cuts, degree]
        gens.append(tuple(bounds[k + 1] - bounds[k] for k in range(dim)))
    return _build(dim, gens)


@dataclass(frozen=True)
class OracleReport:
    trials: int
    seed: int
    dim_max: int
    max_degree: int
    mismatches: int
    first_mismatch: tuple[MonomialIdeal, MonomialIdeal] | None = None

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def oracle_check(trials: int, seed: int, dim_max: int, max_degree: int) -> OracleReport:
    """Compare :func:`colon` with :func:`brute_colon` on seeded random pairs."""
    if trials < 1 or dim_max < 1 or max_degree < 1:
        raise PreconditionError("trials, dim_max and max_degree must all be at least 1.")
    rng = random.Random(seed)
    mismatches = 0
    first = None
    for _ in range(trials):
        dim = rng.randint(1, dim_max)
        ideal = random_ideal(rng, dim, max_degree)
        divisor = random_ideal(rng, dim, max_degree)
        fast = colon(ideal, divisor)
        slow = brute_colon(ideal, divisor, sufficient_colon_bound(ideal))
        if not equals(fast, slow):
            mismatches += 1
            if first is None:
                first = (ideal, divisor)
                logger.warning("Colon oracle mismatch for %s : %s", ideal, divisor)
    return OracleReport(
        trials=trials,
        seed=seed,
        dim_max=dim_max,
        max_degree=max_degree,
        mismatches=mismatches,
        first_mismatch=first,
    )


# --------------------------------------------------------------------------
# Ideal files
# --------------------------------------------------------------------------


def parse_ideal_text(
    text: str, *, source: str = "<string>", dim: int | None = None
) -> MonomialIdeal:
    """Parse the ideal file format.

    One generator per line as space-separated exponents; ``#`` starts a comment
    line and blank lines are skipped. The dimension comes from the first
    generator (or ``dim``) and is enforced on every later line.
    """
    gens: list[Exponents] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if any(token.startswith("-") for token in tokens):
            raise IdealFileError(source, number, "exponents must be non-negative")
        # ASCII digits only; no "1_0", no other scripts.
        if not all(token.isascii() and token.isdigit() for token in tokens):
            raise IdealFileError(source, number, f"not an integer exponent list: {line!r}")
        exponents = tuple(int(token) for token in tokens)
        if any(value > MAX_EXPONENT for value in exponents):
            raise IdealFileError(source, number, f"exponent exceeds {MAX_EXPONENT}")
        if dim is None:
            dim = len(exponents)
        elif len(exponents) != dim:
            raise IdealFileError(
                source, number, f"expected {dim} exponents, found {len(exponents)}"
            )
        gens.append(exponents)
    if dim is None:
        raise IdealFileError(source, 0, "no generators and no dimension given")
    if dim < 1:
        raise IdealFileError(source, 0, "dimension must be at least 1")
    return _build(dim, gens)


def parse_ideal_file(path: str | Path, *, dim: int | None = None) -> MonomialIdeal:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except (OSError, UnicodeDecodeError) as exc:
        raise IdealFileError(str(path), 0, f"cannot read file: {exc}") from exc
    ideal = parse_ideal_text(text, source=str(path), dim=dim)
    logger.debug("Read %d generators in dimension %d from %s", len(ideal), ideal.dim, path)
    return ideal


def format_ideal(ideal: MonomialIdeal) -> str:
    """Render an ideal in the file format parsed by :func:`parse_ideal_text`."""
    lines = [f"# {ideal}"]
    lines.extend(" ".join(str(value) for value in g.exponents) for g in ideal.sorted_gens())
    return "\n".join(lines) + "\n"
