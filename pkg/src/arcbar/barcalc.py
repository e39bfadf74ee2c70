"""Desk-scale coefficients and bar constructions: finite pointed monoids with
a cyclic-group action, the relative cyclic bar construction and its operator
relations, the truncated free-monoid monad with its two-sided bar
construction, labeled orbits of degenerate arc systems, and the degreewise
comparison with the cyclic space model.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .circle import ArcSystem, compose_uec, sample_ucc, wreath_act
from .cyclic import (CyclicPoint, align_ucc, lambda_to_ucc, twist_point,
                     ucc_to_lambda)
from .groups import (CyclicElem, WreathElem, act_labels, upsilon,
                     znwrcm_elements)
from .rational import InvariantViolation, MismatchError, Turn

# ---------------------------------------------------------------------------
# finite pointed C_m-monoids
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FinCmMonoid:
    """A finite pointed monoid with basepoint-absorbing multiplication and a
    monoid automorphism generating a C_m-action."""

    name: str
    elements: tuple[str, ...]
    base: str
    unit: str
    m: int
    mul_table: tuple[tuple[str, ...], ...]
    sigma_table: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index",
                           {e: i for i, e in enumerate(self.elements)})
        self.validate()

    def index(self, x: str) -> int:
        return self._index[x]  # type: ignore[attr-defined]

    def multiply(self, a: str, b: str) -> str:
        return self.mul_table[self.index(a)][self.index(b)]

    def sigma(self, a: str) -> str:
        return self.sigma_table[self.index(a)]

    def sigma_pow(self, a: str, k: int) -> str:
        # validation guarantees sigma^m = id, so exponents reduce mod m
        for _ in range(k % self.m):
            a = self.sigma(a)
        return a

    def product(self, xs: Sequence[str]) -> str:
        out = self.unit
        for x in xs:
            out = self.multiply(out, x)
        return out

    def nonbase(self) -> tuple[str, ...]:
        return tuple(e for e in self.elements if e != self.base)

    def validate(self) -> None:
        es = self.elements
        if len(set(es)) != len(es):
            raise InvariantViolation("duplicate element names")
        for required in (self.base, self.unit):
            if required not in es:
                raise InvariantViolation(f"{required!r} not among the elements")
        if len(self.mul_table) != len(es) or any(len(r) != len(es)
                                                 for r in self.mul_table):
            raise InvariantViolation("multiplication table must be square")
        for a in es:
            if self.multiply(a, self.base) != self.base or \
                    self.multiply(self.base, a) != self.base:
                raise InvariantViolation("basepoint must be absorbing")
            if self.multiply(a, self.unit) != a or self.multiply(self.unit, a) != a:
                raise InvariantViolation("unit law fails")
        for a in es:
            for b in es:
                for c in es:
                    if self.multiply(self.multiply(a, b), c) != \
                            self.multiply(a, self.multiply(b, c)):
                        raise InvariantViolation(f"associativity fails at {a},{b},{c}")
        if len(self.sigma_table) != len(es):
            raise InvariantViolation("sigma table must cover all elements")
        if sorted(self.sigma_table) != sorted(es):
            raise InvariantViolation("sigma must be a bijection")
        if self.sigma(self.unit) != self.unit or self.sigma(self.base) != self.base:
            raise InvariantViolation("sigma must fix unit and basepoint")
        for a in es:
            for b in es:
                if self.sigma(self.multiply(a, b)) != \
                        self.multiply(self.sigma(a), self.sigma(b)):
                    raise InvariantViolation("sigma is not a monoid map")
        for a in es:
            cur = a
            for _ in range(self.m):
                cur = self.sigma(cur)
            if cur != a:
                raise InvariantViolation("sigma order does not divide m")


def pointed_cyclic_monoid(name: str, k: int, m: int, sigma_mult: int = 1) -> FinCmMonoid:
    """The pointed monoid {*} u C_k with sigma the power map x -> x^sigma_mult."""
    elements = ("*",) + tuple(f"g{i}" for i in range(k))
    names = list(elements)

    def mul(a: str, b: str) -> str:
        if a == "*" or b == "*":
            return "*"
        return f"g{(int(a[1:]) + int(b[1:])) % k}"

    def sig(a: str) -> str:
        if a == "*":
            return "*"
        return f"g{(int(a[1:]) * sigma_mult) % k}"

    mul_table = tuple(tuple(mul(a, b) for b in names) for a in names)
    sigma_table = tuple(sig(a) for a in names)
    return FinCmMonoid(name, elements, "*", "g0", m, mul_table, sigma_table)


def trivial_monoid(m: int) -> FinCmMonoid:
    return pointed_cyclic_monoid("trivial", 1, m)


def standard_monoids(m: int) -> list[FinCmMonoid]:
    """The test coefficients available at a given cyclic order."""
    out = [trivial_monoid(m), pointed_cyclic_monoid("c2", 2, m)]
    if m % 2 == 0:
        out.append(pointed_cyclic_monoid("c3-inv", 3, m, sigma_mult=-1))
    if m % 3 == 0:
        out.append(pointed_cyclic_monoid("c7-sq", 7, m, sigma_mult=2))
    return out


# ---------------------------------------------------------------------------
# the relative cyclic bar construction
# ---------------------------------------------------------------------------

Tuple_ = tuple[str, ...]


def collapse(R: FinCmMonoid, t: Tuple_) -> Tuple_:
    """Smash-power normalization: a basepoint entry collapses the tuple."""
    if R.base in t:
        return (R.base,) * len(t)
    return t


def cyclic_twist(R: FinCmMonoid, t: Tuple_) -> Tuple_:
    return collapse(R, (R.sigma(t[-1]),) + t[:-1])


def cyclic_face(R: FinCmMonoid, i: int, t: Tuple_) -> Tuple_:
    q = len(t) - 1
    if not (0 <= i <= q) or q < 1:
        raise MismatchError(f"face d_{i} undefined on a degree-{q} tuple")
    if i < q:
        return collapse(R, t[:i] + (R.multiply(t[i], t[i + 1]),) + t[i + 2:])
    return cyclic_face(R, 0, cyclic_twist(R, t))


def cyclic_degeneracy(R: FinCmMonoid, i: int, t: Tuple_) -> Tuple_:
    q = len(t) - 1
    if not (0 <= i <= q):
        raise MismatchError(f"degeneracy s_{i} undefined on a degree-{q} tuple")
    return collapse(R, t[:i + 1] + (R.unit,) + t[i + 1:])


def _tuples_at(R: FinCmMonoid, q: int, cap: int, rng: random.Random,
               trials: int) -> Iterator[Tuple_]:
    count = len(R.elements) ** (q + 1)
    if count <= cap:
        yield from itertools.product(R.elements, repeat=q + 1)
    else:
        for _ in range(trials):
            yield tuple(rng.choice(R.elements) for _ in range(q + 1))


@dataclass
class RelationReport:
    name: str
    cases: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_cyclic_object(R: FinCmMonoid, q_max: int, cap: int = 100_000,
                         seed: int = 0, trials: int = 300) -> RelationReport:
    """Exhaustively (small coefficients) or by sampling, check every operator
    relation of the m-cyclic structure plus the simplicial identities."""
    rng = random.Random(seed)
    m = R.m
    failures: list[str] = []
    cases = 0

    def note(msg: str) -> None:
        if len(failures) < 25:
            failures.append(msg)

    for q in range(1, q_max + 1):
        for t in _tuples_at(R, q, cap, rng, trials):
            cases += 1
            tw = cyclic_twist(R, t)
            # tau_q^{m(q+1)} = id
            cur = t
            for _ in range(m * (q + 1)):
                cur = cyclic_twist(R, cur)
            if cur != collapse(R, t):
                note(f"tau period fails at q={q}, t={t}")
            # d_0 tau_q = d_q
            if cyclic_face(R, 0, tw) != cyclic_face(R, q, t):
                note(f"d_0 tau = d_q fails at q={q}, t={t}")
            # d_i tau_q = tau_{q-1} d_{i-1}
            for i in range(1, q + 1):
                if cyclic_face(R, i, tw) != cyclic_twist(R, cyclic_face(R, i - 1, t)):
                    note(f"d_{i} tau fails at q={q}, t={t}")
            # s_0 tau_q = tau_{q+1}^2 s_q
            if cyclic_degeneracy(R, 0, tw) != cyclic_twist(
                    R, cyclic_twist(R, cyclic_degeneracy(R, q, t))):
                note(f"s_0 tau fails at q={q}, t={t}")
            # s_i tau_q = tau_{q+1} s_{i-1}
            for i in range(1, q + 1):
                if cyclic_degeneracy(R, i, tw) != cyclic_twist(
                        R, cyclic_degeneracy(R, i - 1, t)):
                    note(f"s_{i} tau fails at q={q}, t={t}")
            # simplicial identities
            if q >= 2:
                for i in range(0, q + 1):
                    for j in range(i + 1, q + 1):
                        if cyclic_face(R, i, cyclic_face(R, j, t)) != \
                                cyclic_face(R, j - 1, cyclic_face(R, i, t)):
                            note(f"d_{i} d_{j} fails at q={q}, t={t}")
            for i in range(0, q + 1):
                for j in range(i, q + 1):
                    if cyclic_degeneracy(R, i, cyclic_degeneracy(R, j, t)) != \
                            cyclic_degeneracy(R, j + 1, cyclic_degeneracy(R, i, t)):
                        note(f"s_{i} s_{j} fails at q={q}, t={t}")
            for j in range(0, q + 1):
                sj = cyclic_degeneracy(R, j, t)
                for i in range(0, q + 2):
                    lhs = cyclic_face(R, i, sj)
                    if i < j:
                        rhs = cyclic_degeneracy(R, j - 1, cyclic_face(R, i, t))
                    elif i in (j, j + 1):
                        rhs = collapse(R, t)
                    else:
                        rhs = cyclic_degeneracy(R, j, cyclic_face(R, i - 1, t))
                    if lhs != rhs:
                        note(f"d_{i} s_{j} fails at q={q}, t={t}")
    return RelationReport(f"cyclic-relations[{R.name}, m={m}]", cases, failures)


def twist_order(R: FinCmMonoid, q: int, probe: Tuple_ | None = None,
                cap: int = 10_000) -> int:
    """Order of the twist on degree-q tuples (maximum over probes)."""
    probes: Iterable[Tuple_]
    if probe is not None:
        probes = [probe]
    else:
        probes = itertools.islice(itertools.product(R.nonbase(), repeat=q + 1), 64)
    best = 1
    for t in probes:
        cur = cyclic_twist(R, t)
        k = 1
        while cur != t:
            cur = cyclic_twist(R, cur)
            k += 1
            if k > cap:
                raise InvariantViolation("twist order exceeds cap")
        best = best * k // _gcd(best, k)
    return best


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# the truncated free monoid monad
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointedCmSet:
    """A finite pointed set with a C_m-action (the letters of a free algebra)."""

    name: str
    elements: tuple[str, ...]
    base: str
    m: int
    sigma_table: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index",
                           {e: i for i, e in enumerate(self.elements)})
        if self.base not in self.elements:
            raise InvariantViolation("basepoint must be an element")
        if sorted(self.sigma_table) != sorted(self.elements):
            raise InvariantViolation("sigma must be a bijection")
        if self.sigma(self.base) != self.base:
            raise InvariantViolation("sigma must fix the basepoint")
        x = dict(zip(self.elements, self.sigma_table))
        for e in self.elements:
            cur = e
            for _ in range(self.m):
                cur = x[cur]
            if cur != e:
                raise InvariantViolation("sigma order does not divide m")

    def index(self, x: str) -> int:
        return self._index[x]  # type: ignore[attr-defined]

    def sigma(self, x: str) -> str:
        return self.sigma_table[self.index(x)]

    def sigma_pow(self, x: str, k: int) -> str:
        for _ in range(k % self.m):
            x = self.sigma(x)
        return x

    def nonbase(self) -> tuple[str, ...]:
        return tuple(e for e in self.elements if e != self.base)


def pointed_set(name: str, letters: Sequence[str], m: int,
                sigma: dict[str, str] | None = None) -> PointedCmSet:
    elements = ("*",) + tuple(letters)
    table = tuple((sigma or {}).get(e, e) for e in elements)
    return PointedCmSet(name, elements, "*", m, table)


@dataclass(frozen=True)
class FreeWord:
    """An element of the truncated free monoid on a pointed set: a word of
    non-base letters, the basepoint, or the truncation-overflow sentinel."""

    letters: tuple[str, ...]
    flag: str = "ok"  # "ok" | "base" | "overflow"

    def __post_init__(self) -> None:
        if self.flag not in ("ok", "base", "overflow"):
            raise InvariantViolation(f"unknown flag {self.flag!r}")
        if self.flag != "ok" and self.letters:
            raise InvariantViolation("sentinel words carry no letters")

    @property
    def length(self) -> int:
        return len(self.letters)


BASE_WORD = FreeWord((), "base")
OVERFLOW_WORD = FreeWord((), "overflow")
EMPTY_WORD = FreeWord(())


@dataclass(frozen=True)
class FreeMonoid:
    """The free associative algebra on a pointed C_m-set, truncated at a
    length bound with an explicit overflow sentinel."""

    letters: PointedCmSet
    bound: int

    def lift(self, x: str) -> FreeWord:
        if x == self.letters.base:
            return BASE_WORD
        return FreeWord((x,))

    def word(self, xs: Sequence[str]) -> FreeWord:
        if any(x == self.letters.base for x in xs):
            return BASE_WORD
        if len(xs) > self.bound:
            return OVERFLOW_WORD
        return FreeWord(tuple(xs))

    def multiply(self, a: FreeWord, b: FreeWord) -> FreeWord:
        if "base" in (a.flag, b.flag):
            return BASE_WORD
        if "overflow" in (a.flag, b.flag) or a.length + b.length > self.bound:
            return OVERFLOW_WORD
        return FreeWord(a.letters + b.letters)

    def flatten(self, words: Sequence[FreeWord]) -> FreeWord:
        out = EMPTY_WORD
        for w in words:
            out = self.multiply(out, w)
        return out

    def sigma(self, w: FreeWord) -> FreeWord:
        if w.flag != "ok":
            return w
        return FreeWord(tuple(self.letters.sigma(x) for x in w.letters))

    def sigma_pow(self, w: FreeWord, k: int) -> FreeWord:
        for _ in range(k % self.letters.m):
            w = self.sigma(w)
        return w

    def all_words(self, max_len: int | None = None) -> Iterator[FreeWord]:
        top = self.bound if max_len is None else min(max_len, self.bound)
        for n in range(top + 1):
            for xs in itertools.product(self.letters.nonbase(), repeat=n):
                yield FreeWord(xs)
        yield BASE_WORD


# ---------------------------------------------------------------------------
# the two-sided bar construction of the free monad over a monoid
# ---------------------------------------------------------------------------

BASE_ELEM = "!base"
OVERFLOW_ELEM = "!overflow"


@dataclass(frozen=True)
class BarComplex:
    """Nested-word model of the two-sided bar construction B(T, T, R): a
    level-q element is a (q+1)-fold nested word with coefficient leaves."""

    R: FinCmMonoid
    bound: int

    # nested elements are str leaves or tuples of nested elements

    def _contains_base(self, x) -> bool:
        if isinstance(x, str):
            return x == self.R.base
        return any(self._contains_base(c) for c in x)

    def normalize(self, x):
        if x is OVERFLOW_ELEM or x is BASE_ELEM:
            return x
        return BASE_ELEM if self._contains_base(x) else x

    def _map_level(self, x, level: int, fn):
        if x in (BASE_ELEM, OVERFLOW_ELEM):
            return x
        if level == 0:
            return fn(x)
        out = []
        for c in x:
            y = self._map_level(c, level - 1, fn)
            if y is OVERFLOW_ELEM:
                return OVERFLOW_ELEM
            out.append(y)
        return tuple(out)

    def _flatten_word(self, x):
        out: list = []
        for c in x:
            out.extend(c)
            if len(out) > self.bound:
                return OVERFLOW_ELEM
        return tuple(out)

    def _eval_word(self, x):
        return self.R.product(x)

    def face(self, q: int, i: int, x):
        if not (0 <= i <= q) or q < 1:
            raise MismatchError(f"face d_{i} undefined at bar level {q}")
        if i == 0:
            out = self._map_level(x, q, self._eval_word)
        else:
            out = self._map_level(x, q - i, self._flatten_word)
        return self.normalize(out)

    def degeneracy(self, q: int, i: int, x):
        if not (0 <= i <= q):
            raise MismatchError(f"degeneracy s_{i} undefined at bar level {q}")
        out = self._map_level(x, q + 1 - i, lambda sub: (sub,))
        return self.normalize(out)

    def augment(self, x):
        """Total evaluation into the coefficients."""
        if x is BASE_ELEM:
            return self.R.base
        if x is OVERFLOW_ELEM:
            return OVERFLOW_ELEM
        if isinstance(x, str):
            return x
        vals = [self.augment(c) for c in x]
        if OVERFLOW_ELEM in vals:
            return OVERFLOW_ELEM
        return self.R.product(vals)

    def sample(self, rng: random.Random, q: int, width: int = 2):
        def build(level: int):
            if level == 0:
                return rng.choice(self.R.nonbase())
            return tuple(build(level - 1) for _ in range(rng.randint(0, width)))
        return self.normalize(build(q + 1))


# ---------------------------------------------------------------------------
# labeled orbits and the compressed functor
# ---------------------------------------------------------------------------

def _label_act(member: CyclicElem, coeff: str, coeffs) -> str:
    return coeffs.sigma_pow(coeff, member.exponent)


@dataclass(frozen=True)
class LabeledOrbit:
    """Canonical representative of an (arc system, coefficient tuple) pair
    under the wreath group, the desk model of a point of the half-smash
    quotient.  `kind` distinguishes the unit summand and the collapsed base."""

    m: int
    n: int
    space: ArcSystem | None
    labels: tuple[str, ...] | None
    kind: str = "point"  # "point" | "unit" | "base"

    def sort_key(self):
        space = self.space.sort_key() if self.space is not None else ()
        return (self.kind, self.m, self.n, space, self.labels or ())


def pair_orbit_elements(m: int, n: int):
    return tuple(znwrcm_elements(n, m))


def _pair_act(g: WreathElem, space: ArcSystem, labels: tuple[str, ...],
              coeffs) -> tuple[ArcSystem, tuple[str, ...]]:
    """Diagonal action generating the half-smash identifications: arcs and
    their labels move by the same slot bookkeeping."""
    return (wreath_act(g, space),
            act_labels(g, labels, lambda c, y: _label_act(c, y, coeffs)))


def labeled_orbit(coeffs, space: ArcSystem, labels: Sequence[str],
                  group: Sequence[WreathElem] | None = None) -> LabeledOrbit:
    """Canonicalize an (arc system, labels) pair; basepoint labels collapse."""
    labels = tuple(labels)
    m, n = space.m, space.n
    if len(labels) != n:
        raise MismatchError("one label per arc")
    base = coeffs.base
    if any(x == base for x in labels):
        return LabeledOrbit(m, n, None, None, "base")
    if n == 0:
        return LabeledOrbit(m, 0, None, None, "unit")
    if group is None:
        group = pair_orbit_elements(m, n)
    best = None
    for g in group:
        cand = _pair_act(g, space, labels, coeffs)
        key = (cand[0].sort_key(), cand[1])
        if best is None or key < best[0]:
            best = (key, cand)
    assert best is not None
    space_c, labels_c = best[1]
    return LabeledOrbit(m, n, space_c, labels_c, "point")


def compressed_cc(coeffs, n_max: int, per_degree: int = 20, seed: int = 0,
                  den: int = 4) -> dict[int, list[LabeledOrbit]]:
    """Sampled orbit representatives of the compressed functor by arity: the
    single unit orbit at arity 0, canonical (space, labels) classes above."""
    rng = random.Random(seed)
    out: dict[int, list[LabeledOrbit]] = {
        0: [LabeledOrbit(coeffs.m, 0, None, None, "unit")]}
    for n in range(1, n_max + 1):
        group = pair_orbit_elements(coeffs.m, n)
        reps = set()
        for _ in range(per_degree):
            x = sample_ucc(rng, coeffs.m, n, den)
            labels = tuple(rng.choice(coeffs.elements) for _ in range(n))
            reps.add(labeled_orbit(coeffs, x, labels, group))
        out[n] = sorted(reps, key=LabeledOrbit.sort_key)
    return out


def split_orbit_element(space: ArcSystem, words: Sequence[FreeWord]
                        ) -> tuple[ArcSystem, tuple[str, ...]] | None:
    """The right free-algebra action on the compressed functor: each arc
    splits into coincident copies labelled by the letters of its word.
    Returns None when a basepoint word collapses the element."""
    if any(w.flag == "base" for w in words):
        return None
    inners = []
    letters: list[str] = []
    for w in words:
        if w.flag == "overflow":
            raise InvariantViolation("overflowing word in a splitting")
        inners.append(tuple((Fraction(0), Fraction(0)) for _ in w.letters))
        letters.extend(w.letters)
    return compose_uec(space, inners), tuple(letters)


# ---------------------------------------------------------------------------
# the comparison map on orbit classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LambdaClass:
    """Canonical representative of a (cyclic point, labels) pair under the
    cyclic group of order m*n, the target of the comparison map."""

    m: int
    n: int
    point: CyclicPoint | None
    labels: tuple[str, ...] | None
    kind: str = "point"  # "point" | "unit" | "base"

    def sort_key(self):
        pt = self.point.sort_key() if self.point is not None else ()
        return (self.kind, self.m, self.n, pt, self.labels or ())


def _lambda_canon(coeffs, p: CyclicPoint, labels: tuple[str, ...]) -> LambdaClass:
    m, n = p.m, p.q + 1
    ups = upsilon(m, n)
    best = None
    cur_p, cur_l = p, labels
    for _ in range(m * n):
        key = (cur_p.sort_key(), cur_l)
        if best is None or key < best[0]:
            best = (key, (cur_p, cur_l))
        cur_p = twist_point(cur_p)
        cur_l = act_labels(ups, cur_l,
                           lambda c, y: _label_act(c, y, coeffs))
    assert best is not None
    return LambdaClass(m, n, best[1][0], best[1][1], "point")


def map_c_to_l(coeffs, orbit: LabeledOrbit) -> LambdaClass:
    """Comparison map: align the space coordinate, read off base angle and
    simplex coordinates, canonicalize under the order-mn cyclic action."""
    if orbit.kind == "base":
        return LambdaClass(orbit.m, orbit.n, None, None, "base")
    if orbit.kind == "unit":
        return LambdaClass(orbit.m, 0, None, None, "unit")
    assert orbit.space is not None and orbit.labels is not None
    aligned, g0 = align_ucc(orbit.space)
    labels = act_labels(g0, orbit.labels,
                        lambda c, y: _label_act(c, y, coeffs))
    p = ucc_to_lambda(aligned)
    return _lambda_canon(coeffs, p, labels)


def lambda_class_to_orbit(coeffs, cls: LambdaClass) -> LabeledOrbit:
    """The inverse on classes, through the forward point-level map."""
    if cls.kind == "base":
        return LabeledOrbit(cls.m, cls.n, None, None, "base")
    if cls.kind == "unit":
        return LabeledOrbit(cls.m, 0, None, None, "unit")
    assert cls.point is not None and cls.labels is not None
    return labeled_orbit(coeffs, lambda_to_ucc(cls.point), cls.labels)


# ---------------------------------------------------------------------------
# lattice enumeration for exact class counts (integer fast path)
# ---------------------------------------------------------------------------

def _ucc_lattice(n: int, m: int, den: int) -> Iterator[tuple[tuple[int, ...],
                                                             tuple[int, ...]]]:
    """Zero-radius systems with centers on the 1/(m*den) grid and gaps on the
    1/den grid of the quotient circumference: (zetas, phis) in 1/(m*den) units."""
    scale = m * den
    for z0 in range(scale):
        for comp in _compositions(den, n):
            phis = tuple(c for c in comp)
            for shifts in itertools.product(range(m), repeat=n - 1):
                zs = [z0]
                for j in range(n - 1):
                    zs.append((zs[-1] + phis[j] + shifts[j] * den) % scale)
                yield tuple(zs), phis


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _lambda_lattice(n: int, m: int, den: int) -> Iterator[tuple[int,
                                                                tuple[int, ...]]]:
    """Cyclic-space points with base angle on the 1/den grid of [0, m) and
    simplex coordinates on the 1/den grid."""
    for rbar in range(m * den):
        for ts in _compositions(den, n):
            yield rbar, ts


def _enc_wreath_act(n: int, m: int, den: int, k: int, cs: Sequence[int],
                    zs: Sequence[int], ps: Sequence[int], labels, sig_pow):
    """Diagonal slot action on encoded points: arcs and labels move together."""
    scale = m * den
    zs2 = [0] * n
    ps2 = [0] * n
    labels2 = [None] * n
    for i in range(n):
        src = (i - k) % n
        zs2[i] = (zs[src] + cs[src] * den) % scale
        ps2[i] = ps[src]
        labels2[i] = sig_pow(labels[src], cs[src])
    return tuple(zs2), tuple(ps2), tuple(labels2)


def _space_class_map(n: int, m: int, den: int, letters: Sequence[str],
                     sig_pow) -> dict:
    """point+labels -> canonical representative under Z_n wr C_m."""
    from .groups import orbit_sweep

    points = []
    for zs, ps in _ucc_lattice(n, m, den):
        for labels in itertools.product(letters, repeat=n):
            points.append((zs, ps, labels))
    group = [(k, cs) for k in range(n)
             for cs in itertools.product(range(m), repeat=n)]

    def transforms(pt):
        zs, ps, labels = pt
        return [_enc_wreath_act(n, m, den, k, cs, zs, ps, labels, sig_pow)
                for k, cs in group]

    return orbit_sweep(points, transforms)


def _lambda_class_map(n: int, m: int, den: int, letters: Sequence[str],
                      sig_pow) -> dict:
    """point+labels -> canonical representative under C_{mn} via the twist."""
    from .groups import orbit_sweep

    points = []
    for rbar, ts in _lambda_lattice(n, m, den):
        for labels in itertools.product(letters, repeat=n):
            points.append((rbar, ts, labels))

    def gen(pt):
        # the twist on the point paired with the distinguished wreath element
        # on the labels: the diagonal identification of the half-smash
        rbar, ts, labels = pt
        rbar2 = (rbar - ts[-1]) % (m * den)
        ts2 = (ts[-1],) + ts[:-1]
        labels2 = (sig_pow(labels[-1], -1),) + labels[:-1]
        return rbar2, ts2, labels2

    def transforms(pt):
        out = []
        cur = pt
        for _ in range(m * n):
            cur = gen(cur)
            out.append(cur)
        return out

    return orbit_sweep(points, transforms)


def _encode_space(x: ArcSystem, labels, coeffs, den: int):
    scale = x.m * den
    zs = []
    for z, _ in x.pairs:
        v = z.value * scale
        if v.denominator != 1:
            raise InvariantViolation("system is not on the lattice")
        zs.append(int(v) % scale)
    ps = []
    assert x.phi is not None
    for p in x.phi:
        v = p * scale
        if v.denominator != 1:
            raise InvariantViolation("system is not on the lattice")
        ps.append(int(v))
    return tuple(zs), tuple(ps), tuple(labels)


def _decode_space(m: int, den: int, enc) -> tuple[ArcSystem, tuple[str, ...]]:
    zs, ps, labels = enc
    scale = m * den
    pairs = tuple((Fraction(z, scale), Fraction(0)) for z in zs)
    phi = tuple(Fraction(p, scale) for p in ps)
    from .circle import system
    return system(m, pairs, phi, "uCc"), labels


def _decode_lambda(m: int, den: int, enc) -> tuple[CyclicPoint, tuple[str, ...]]:
    rbar, ts, labels = enc
    return CyclicPoint(m, Turn(Fraction(rbar, den), Fraction(m)),
                       tuple(Fraction(t, den) for t in ts)), labels


@dataclass
class ThmReport:
    m: int
    den: int
    per_degree: list[dict]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_thm_cycbar_free(X: PointedCmSet, n_max: int, m: int, den: int = 4,
                          verify_reps: int = 50) -> ThmReport:
    """Degreewise comparison for free coefficients: exact orbit-class counts on
    a common rational lattice, with the explicit map verified to be a bijection
    class by class (and re-verified through the exact-rational route on a
    sample of representatives)."""
    if X.m != m:
        raise MismatchError("letter set lives over a different cyclic order")
    letters = X.nonbase()
    failures: list[str] = []
    per_degree: list[dict] = []

    def sig_pow(x: str, k: int) -> str:
        return X.sigma_pow(x, k)

    for n in range(1, n_max + 1):
        space_map = _space_class_map(n, m, den, letters, sig_pow)
        lam_map = _lambda_class_map(n, m, den, letters, sig_pow)
        space_classes = set(space_map.values())
        lam_classes = set(lam_map.values())
        entry = {"n": n, "left_classes": len(space_classes),
                 "right_classes": len(lam_classes)}
        per_degree.append(entry)
        if len(space_classes) != len(lam_classes):
            failures.append(
                f"n={n}: class counts differ "
                f"({len(space_classes)} vs {len(lam_classes)})")
            continue

        # encoded forward map: align, reindex, canonicalize in the target
        def forward(enc):
            zs, ps, labels = enc
            scale = m * den
            cs = [0] * n
            target = zs[0]
            for j in range(1, n):
                target = (target + ps[j - 1]) % scale
                diff = (target - zs[j]) % scale
                assert diff % den == 0
                cs[j] = (diff // den) % m
            labels2 = tuple(sig_pow(labels[i], cs[i]) for i in range(n))
            rbar = zs[0]  # 1/(m*den) units of a turn = 1/den units of rbar
            return lam_map[(rbar % (m * den), tuple(ps), labels2)]

        images: dict = {}
        ok_bijection = True
        for cls in space_classes:
            img = forward(cls)
            if img in images:
                failures.append(f"n={n}: comparison map not injective")
                ok_bijection = False
                break
            images[img] = cls
        if ok_bijection and set(images) != lam_classes:
            failures.append(f"n={n}: comparison map not surjective")
            ok_bijection = False

        if ok_bijection:
            # inverse (through the forward parametrization) on every class
            for img, cls in images.items():
                p, labels = _decode_lambda(m, den, img)
                back = _encode_space(lambda_to_ucc(p), labels, X, den)
                if space_map[back] != cls:
                    failures.append(f"n={n}: explicit inverse fails on a class")
                    break

        # dual-route verification through the exact-rational types
        for cls in itertools.islice(sorted(space_classes), verify_reps):
            space, labels = _decode_space(m, den, cls)
            orb = labeled_orbit(X, space, labels)
            lam = map_c_to_l(X, orb)
            assert lam.point is not None and lam.labels is not None
            rb = lam.point.rbar.value * den
            ts = [t * den for t in lam.point.simplex]
            if rb.denominator != 1 or any(t.denominator != 1 for t in ts):
                failures.append(f"n={n}: exact route leaves the lattice")
                break
            enc = (int(rb), tuple(int(t) for t in ts), lam.labels)
            if lam_map.get(enc) != forward(cls):
                failures.append(f"n={n}: encoded and exact routes disagree")
                break
    return ThmReport(m, den, per_degree, failures)
