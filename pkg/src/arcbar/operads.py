"""Operads over exact rationals: the associative operad, little 1-disks,
framed little disks for a sign-acting group, the compactified operad, and the
semidirect-product presentation, together with a seeded law-checking harness.

One-dimensional disks throughout: a disk is the affine map t -> v + r*rho(h)*t
on [-1, 1], stored by its parameters.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .groups import CyclicElem, Perm, block_perm, block_sum
from .rational import InvariantViolation, MismatchError, _draw_rat

Pair = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class SignedGroup:
    """A finite cyclic group H = C_order with an action on R by signs.

    generator_sign = -1 requires even order (the sign map must be a
    homomorphism H -> {+1, -1}).
    """

    order: int
    generator_sign: int

    def __post_init__(self) -> None:
        if self.generator_sign not in (1, -1):
            raise InvariantViolation("generator sign must be +1 or -1")
        if self.generator_sign == -1 and self.order % 2 != 0:
            raise InvariantViolation("sign action needs even order")

    def sign(self, h: CyclicElem) -> int:
        if h.order != self.order:
            raise MismatchError("element from a different group")
        return self.generator_sign ** (h.exponent % 2) if self.generator_sign == -1 else 1

    def identity(self) -> CyclicElem:
        return CyclicElem.identity(self.order)

    def elements(self) -> list[CyclicElem]:
        return [CyclicElem(self.order, k) for k in range(self.order)]


C1_TRIVIAL = SignedGroup(1, 1)
C2_SIGN = SignedGroup(2, -1)


# ---------------------------------------------------------------------------
# element types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AssocElem:
    """n-ary part of the associative operad: a permutation."""

    perm: Perm

    @property
    def arity(self) -> int:
        return self.perm.degree


@dataclass(frozen=True)
class DiskTuple:
    """Little 1-disk configuration: pairwise disjoint intervals in [-1, 1]."""

    pairs: tuple[Pair, ...]

    @property
    def arity(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class FramedTuple:
    """Framed little disks: intervals decorated by sign-acting group elements."""

    pairs: tuple[tuple[Fraction, Fraction, CyclicElem], ...]
    group: SignedGroup

    @property
    def arity(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class SemidirectElem:
    """Element of the semidirect product (little disks x H^n, twisted compose)."""

    disk: DiskTuple
    members: tuple[CyclicElem, ...]
    group: SignedGroup

    @property
    def arity(self) -> int:
        return self.disk.arity


@dataclass(frozen=True)
class CompactElem:
    """Compactified operad element: a sorted, possibly degenerate interval
    tuple together with a permutation recording the original labelling."""

    u_pairs: tuple[Pair, ...]
    perm: Perm

    def __post_init__(self) -> None:
        if len(self.u_pairs) != self.perm.degree:
            raise MismatchError("u-part length and permutation degree differ")

    @property
    def arity(self) -> int:
        return len(self.u_pairs)


OperadElem = "AssocElem | DiskTuple | FramedTuple | SemidirectElem | CompactElem"


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _check_into_unit(v: Fraction, r: Fraction) -> None:
    if abs(v) + r > 1:
        raise InvariantViolation(f"image of [-1,1] under t -> {v}+{r}t leaves [-1,1]")


def _check_disjoint(pairs: Sequence[Pair]) -> None:
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            vi, ri = pairs[i]
            vj, rj = pairs[j]
            if abs(vi - vj) < ri + rj:
                raise InvariantViolation(
                    f"open images of disks {i} and {j} overlap")


def validate_disk_tuple(d: DiskTuple, open_disk: bool = True) -> None:
    """Interval invariants; open_disk selects the open-disjointness reading.

    For positive radii in one dimension the open and boundary-contact
    conventions impose the same parameter constraints; the flag is kept so
    both definitions stay on the surface.
    """
    for v, r in d.pairs:
        if not (0 < r <= 1):
            raise InvariantViolation(f"radius {r} outside (0, 1]")
        _check_into_unit(v, r)
        if open_disk and not (abs(v) < 1):
            raise InvariantViolation(f"center {v} not in the open disk")
    _check_disjoint(d.pairs)


def validate_framed(f: FramedTuple) -> None:
    validate_disk_tuple(DiskTuple(tuple((v, r) for v, r, _ in f.pairs)))
    for _, _, h in f.pairs:
        if h.order != f.group.order:
            raise MismatchError("group member from a different group")


def validate_compact(c: CompactElem) -> None:
    pairs = c.u_pairs
    for v, r in pairs:
        if not (0 <= r <= 1):
            raise InvariantViolation(f"radius {r} outside [0, 1]")
        _check_into_unit(v, r)
    for j in range(len(pairs) - 1):
        vj, rj = pairs[j]
        vk, rk = pairs[j + 1]
        if vj > vk:
            raise InvariantViolation("centers not sorted")
        if vj + rj > vk - rk and not (rj == 0 and rk == 0):
            raise InvariantViolation(
                f"overlapping images at slots {j},{j + 1} with positive radius")


# ---------------------------------------------------------------------------
# instances
# ---------------------------------------------------------------------------

def _sample_cells(rng: random.Random, arity: int, den: int,
                  allow_zero: bool) -> list[Pair]:
    """Disjoint intervals, one per cell of an arity-fold split of [-1, 1]."""
    if arity == 0:
        return []
    h = Fraction(1, arity)  # half-width of each cell on the [-1,1] scale
    out: list[Pair] = []
    for i in range(arity):
        center = Fraction(-1) + (2 * i + 1) * h
        v = center + _draw_rat(rng, den, Fraction(-1), Fraction(1)) * (h / 2)
        if allow_zero and rng.randrange(3) == 0:
            r = Fraction(0)
        else:
            r = _draw_rat(rng, den, Fraction(0), Fraction(1)) * (h / 4)
            if not allow_zero and r == 0:
                r = h / 8
        out.append((v, r))
    if allow_zero and arity >= 2 and rng.randrange(4) == 0:
        # coincident degenerate cluster, exercising the boundary strata
        i = rng.randrange(arity - 1)
        out[i] = (out[i][0], Fraction(0))
        out[i + 1] = (out[i][0], Fraction(0))
    return out


def _rand_perm(rng: random.Random, n: int) -> Perm:
    images = list(range(n))
    rng.shuffle(images)
    return Perm(tuple(images))


class AssocOperad:
    name = "assoc"

    def unit(self) -> AssocElem:
        return AssocElem(Perm.identity(1))

    def sample(self, rng: random.Random, arity: int) -> AssocElem:
        return AssocElem(_rand_perm(rng, arity))

    def validate(self, x: AssocElem) -> None:
        pass

    def act(self, x: AssocElem, sigma: Perm) -> AssocElem:
        return AssocElem(x.perm.compose(sigma))

    def compose(self, outer: AssocElem, inners: Sequence[AssocElem]) -> AssocElem:
        if len(inners) != outer.arity:
            raise MismatchError("arity mismatch")
        sizes = [b.arity for b in inners]
        perm = block_perm(outer.perm, sizes).compose(
            block_sum([b.perm for b in inners]))
        return AssocElem(perm)


class LittleDiskOperad:
    name = "dR"

    def unit(self) -> DiskTuple:
        return DiskTuple(((Fraction(0), Fraction(1)),))

    def sample(self, rng: random.Random, arity: int) -> DiskTuple:
        pairs = _sample_cells(rng, arity, den=8, allow_zero=False)
        full = _rand_perm(rng, arity).act(tuple(pairs))
        return DiskTuple(full)

    def validate(self, x: DiskTuple) -> None:
        validate_disk_tuple(x)

    def act(self, x: DiskTuple, sigma: Perm) -> DiskTuple:
        return DiskTuple(sigma.act(x.pairs))

    def compose(self, outer: DiskTuple, inners: Sequence[DiskTuple]) -> DiskTuple:
        if len(inners) != outer.arity:
            raise MismatchError("arity mismatch")
        pairs: list[Pair] = []
        for (v, r), inner in zip(outer.pairs, inners):
            for (w, s) in inner.pairs:
                pairs.append((v + r * w, r * s))
        out = DiskTuple(tuple(pairs))
        self.validate(out)
        return out


class FramedOperad:
    """The framed little 1-disk operad for a sign-acting cyclic group."""

    def __init__(self, group: SignedGroup):
        self.group = group
        self.name = f"framed-c{group.order}"

    def unit(self) -> FramedTuple:
        return FramedTuple(((Fraction(0), Fraction(1), self.group.identity()),),
                           self.group)

    def sample(self, rng: random.Random, arity: int) -> FramedTuple:
        pairs = _sample_cells(rng, arity, den=8, allow_zero=False)
        hs = [CyclicElem(self.group.order, rng.randrange(self.group.order))
              for _ in range(arity)]
        full = _rand_perm(rng, arity).act(
            tuple((v, r, h) for (v, r), h in zip(pairs, hs)))
        return FramedTuple(full, self.group)

    def validate(self, x: FramedTuple) -> None:
        validate_framed(x)

    def act(self, x: FramedTuple, sigma: Perm) -> FramedTuple:
        return FramedTuple(sigma.act(x.pairs), x.group)

    def compose(self, outer: FramedTuple, inners: Sequence[FramedTuple]) -> FramedTuple:
        if len(inners) != outer.arity:
            raise MismatchError("arity mismatch")
        pairs: list[tuple[Fraction, Fraction, CyclicElem]] = []
        for (v, r, h), inner in zip(outer.pairs, inners):
            sign = self.group.sign(h)
            for (w, s, g) in inner.pairs:
                pairs.append((v + r * sign * w, r * s, h.compose(g)))
        out = FramedTuple(tuple(pairs), self.group)
        self.validate(out)
        return out


class SemidirectOperad:
    """Little disks x H^n with composition twisted by the H-conjugation action."""

    def __init__(self, group: SignedGroup, twist: bool = True):
        self.group = group
        self.twist = twist
        self.name = f"semidirect-c{group.order}" + ("" if twist else "-untwisted")

    def unit(self) -> SemidirectElem:
        return SemidirectElem(LITTLE_DISKS.unit(), (self.group.identity(),),
                              self.group)

    def sample(self, rng: random.Random, arity: int) -> SemidirectElem:
        disk = LITTLE_DISKS.sample(rng, arity)
        hs = tuple(CyclicElem(self.group.order, rng.randrange(self.group.order))
                   for _ in range(arity))
        return SemidirectElem(disk, hs, self.group)

    def validate(self, x: SemidirectElem) -> None:
        validate_disk_tuple(x.disk)

    def act(self, x: SemidirectElem, sigma: Perm) -> SemidirectElem:
        return SemidirectElem(LITTLE_DISKS.act(x.disk, sigma),
                              sigma.act(x.members), x.group)

    def _conjugate(self, h: CyclicElem, d: DiskTuple) -> DiskTuple:
        sign = self.group.sign(h)
        return DiskTuple(tuple((sign * v, r) for v, r in d.pairs))

    def compose(self, outer: SemidirectElem,
                inners: Sequence[SemidirectElem]) -> SemidirectElem:
        if len(inners) != outer.arity:
            raise MismatchError("arity mismatch")
        if self.twist:
            disks = [self._conjugate(h, inner.disk)
                     for h, inner in zip(outer.members, inners)]
        else:
            disks = [inner.disk for inner in inners]
        disk = LITTLE_DISKS.compose(outer.disk, disks)
        members: list[CyclicElem] = []
        for h, inner in zip(outer.members, inners):
            members.extend(h.compose(k) for k in inner.members)
        return SemidirectElem(disk, tuple(members), outer.group)


def sample_ucompact(rng: random.Random, arity: int, den: int = 8) -> tuple[Pair, ...]:
    """A sorted, possibly degenerate tuple: a point of the non-symmetric
    compactified operad."""
    return tuple(_sample_cells(rng, arity, den, allow_zero=True))


class CompactOperad:
    name = "dc"

    def unit(self) -> CompactElem:
        return CompactElem(((Fraction(0), Fraction(1)),), Perm.identity(1))

    def sample(self, rng: random.Random, arity: int) -> CompactElem:
        return CompactElem(sample_ucompact(rng, arity), _rand_perm(rng, arity))

    def validate(self, x: CompactElem) -> None:
        validate_compact(x)

    def act(self, x: CompactElem, sigma: Perm) -> CompactElem:
        return CompactElem(x.u_pairs, x.perm.compose(sigma))

    def compose(self, outer: CompactElem, inners: Sequence[CompactElem]) -> CompactElem:
        if len(inners) != outer.arity:
            raise MismatchError("arity mismatch")
        sizes = [b.arity for b in inners]
        inv = outer.perm.inverse()
        u: list[Pair] = []
        for p in range(outer.arity):
            v, r = outer.u_pairs[p]
            for (w, s) in inners[inv(p)].u_pairs:
                u.append((v + r * w, r * s))
        perm = block_perm(outer.perm, sizes).compose(
            block_sum([b.perm for b in inners]))
        out = CompactElem(tuple(u), perm)
        self.validate(out)
        return out


ASSOC = AssocOperad()
LITTLE_DISKS = LittleDiskOperad()
FRAMED_C2 = FramedOperad(C2_SIGN)
SEMIDIRECT_C2 = SemidirectOperad(C2_SIGN)
COMPACT = CompactOperad()

INSTANCES = {
    "assoc": ASSOC,
    "dR": LITTLE_DISKS,
    "framed-c2": FRAMED_C2,
    "semidirect-c2": SEMIDIRECT_C2,
    "dc": COMPACT,
}


def instance_for(elem) -> object:
    if isinstance(elem, AssocElem):
        return ASSOC
    if isinstance(elem, DiskTuple):
        return LITTLE_DISKS
    if isinstance(elem, FramedTuple):
        return FramedOperad(elem.group)
    if isinstance(elem, SemidirectElem):
        return SemidirectOperad(elem.group)
    if isinstance(elem, CompactElem):
        return COMPACT
    raise MismatchError(f"not an operad element: {elem!r}")


def operad_compose(outer, inners: Sequence) -> object:
    """Compose within whichever concrete operad the elements belong to."""
    inst = instance_for(outer)
    for b in inners:
        if type(b) is not type(outer):
            raise MismatchError("inner element from a different operad variant")
    return inst.compose(outer, list(inners))


# ---------------------------------------------------------------------------
# the structure maps between the instances
# ---------------------------------------------------------------------------

def assoc_to_compact(x: AssocElem) -> CompactElem:
    """sigma goes to the all-degenerate configuration ((0,0), ..., (0,0), sigma)."""
    zero = (Fraction(0), Fraction(0))
    return CompactElem(tuple(zero for _ in range(x.arity)), x.perm)


def little_to_compact(x: DiskTuple) -> CompactElem:
    """Split an unordered configuration into its sorted part and a permutation."""
    order = sorted(range(x.arity), key=lambda i: x.pairs[i])
    u = tuple(x.pairs[i] for i in order)
    # x = u . sigma with (u . sigma)[i] = u[sigma(i)]
    sigma = Perm(tuple(order)).inverse()
    return CompactElem(u, sigma)


def semidirect_iso(x: SemidirectElem) -> FramedTuple:
    """(lambda_i, h_i) -> (lambda_i o h_i, h_i): the n-ary comparison map."""
    pairs = tuple((v, r, h) for (v, r), h in zip(x.disk.pairs, x.members))
    return FramedTuple(pairs, x.group)


def semidirect_iso_inverse(x: FramedTuple) -> SemidirectElem:
    disk = DiskTuple(tuple((v, r) for v, r, _ in x.pairs))
    return SemidirectElem(disk, tuple(h for _, _, h in x.pairs), x.group)


# named structure maps: tag -> (function, source instance, target instance);
# each is required to commute with composition and the symmetric actions,
# which check_operad_map verifies
OPERAD_MAPS = {
    "AssocToCompact": (assoc_to_compact, ASSOC, COMPACT),
    "LittleToCompact": (little_to_compact, LITTLE_DISKS, COMPACT),
    "FramedFromSemidirect": (semidirect_iso, SEMIDIRECT_C2, FRAMED_C2),
}


# ---------------------------------------------------------------------------
# law harness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LawViolation:
    law: str
    detail: str


@dataclass
class LawReport:
    instance: str
    trials: int
    violations: list[LawViolation]

    @property
    def ok(self) -> bool:
        return not self.violations


def _split_blocks(flat: list, sizes: Sequence[int]) -> list[list]:
    out = []
    at = 0
    for s in sizes:
        out.append(flat[at:at + s])
        at += s
    return out


def check_operad_laws(instance, seed: int, trials: int,
                      max_arity: int = 3, allow_nullary: bool = True) -> LawReport:
    """Sampled associativity, unit, and equivariance checks; exact equality."""
    rng = random.Random(seed)
    violations: list[LawViolation] = []

    def note(law: str, detail: str) -> None:
        if len(violations) < 20:
            violations.append(LawViolation(law, detail))

    unit = instance.unit()
    lo = 0 if allow_nullary else 1
    for t in range(trials):
        n = rng.randint(1, max_arity)
        a = instance.sample(rng, n)
        bs = [instance.sample(rng, rng.randint(lo, max_arity)) for _ in range(n)]
        sizes = [b.arity for b in bs]
        j = sum(sizes)
        cs = [instance.sample(rng, rng.randint(lo, 2)) for _ in range(j)]

        try:
            if instance.compose(unit, [a]) != a:
                note("unit-left", f"trial {t}")
            if instance.compose(a, [unit] * n) != a:
                note("unit-right", f"trial {t}")

            ab = instance.compose(a, bs)
            lhs = instance.compose(ab, cs)
            inner = [instance.compose(b, blk)
                     for b, blk in zip(bs, _split_blocks(cs, sizes))]
            rhs = instance.compose(a, inner)
            if lhs != rhs:
                note("associativity", f"trial {t}")

            sigma = _rand_perm(rng, n)
            sigma_inv = sigma.inverse()
            lhs = instance.compose(instance.act(a, sigma), bs)
            permuted = [bs[sigma_inv(p)] for p in range(n)]
            rho = block_perm(sigma, sizes)
            rhs = instance.act(instance.compose(a, permuted), rho)
            if lhs != rhs:
                note("equivariance-outer", f"trial {t}")

            taus = [_rand_perm(rng, b.arity) for b in bs]
            lhs = instance.compose(a, [instance.act(b, tau)
                                       for b, tau in zip(bs, taus)])
            rhs = instance.act(instance.compose(a, bs), block_sum(taus))
            if lhs != rhs:
                note("equivariance-inner", f"trial {t}")
        except (InvariantViolation, MismatchError) as exc:
            note("closure", f"trial {t}: {exc}")
    return LawReport(instance.name, trials, violations)


def check_operad_map(fn: Callable, src, dst, seed: int, trials: int,
                     max_arity: int = 3, allow_nullary: bool = True) -> LawReport:
    """Whether fn commutes with composition and the symmetric action."""
    rng = random.Random(seed)
    violations: list[LawViolation] = []
    lo = 0 if allow_nullary else 1
    for t in range(trials):
        n = rng.randint(1, max_arity)
        a = src.sample(rng, n)
        bs = [src.sample(rng, rng.randint(lo, max_arity)) for _ in range(n)]
        try:
            lhs = fn(src.compose(a, bs))
            rhs = dst.compose(fn(a), [fn(b) for b in bs])
            if lhs != rhs:
                violations.append(LawViolation("map-compose", f"trial {t}"))
            sigma = _rand_perm(rng, n)
            if fn(src.act(a, sigma)) != dst.act(fn(a), sigma):
                violations.append(LawViolation("map-equivariance", f"trial {t}"))
        except (InvariantViolation, MismatchError) as exc:
            violations.append(LawViolation("map-closure", f"trial {t}: {exc}"))
        if len(violations) >= 20:
            break
    return LawReport(f"map:{getattr(src, 'name', '?')}->{getattr(dst, 'name', '?')}",
                     trials, violations)
