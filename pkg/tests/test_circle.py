"""Arc systems: validity, gap coordinates, the compactified composition with
its worked example, group actions, the retraction, and the ordered-with-
permutation presentation."""
import random
from fractions import Fraction as F

import pytest

from arcbar.circle import (ArcSystem, SystemWithPerm, arc_coords, circle_act,
                           compose_uec, cyclic_rotate, drop_coords, from_pair,
                           retract_step, sample_e, sample_ucc, sample_ue,
                           sample_uec, system, to_pair, wreath_act)
from arcbar.groups import (CyclicElem, Perm, WreathElem, block_cycle_perm,
                           upsilon, znwrcm_elements)
from arcbar.operads import sample_ucompact
from arcbar.rational import InvariantViolation, MismatchError, Turn


def test_validation():
    system(2, [(0, F(1, 8)), (F(1, 4), F(1, 8))], [F(1, 4), F(1, 4)], "uEc")
    with pytest.raises(InvariantViolation):  # gap sum
        system(2, [(0, 0), (F(1, 4), 0)], [F(1, 4), F(1, 2)], "uEc")
    with pytest.raises(InvariantViolation):  # consistency mod 1/m
        system(2, [(0, 0), (F(1, 3), 0)], [F(1, 4), F(1, 4)], "uEc")
    with pytest.raises(InvariantViolation):  # overlapping positive radii
        system(1, [(0, F(1, 4)), (F(1, 8), F(1, 4))], [F(1, 8), F(7, 8)], "uEc")
    with pytest.raises(InvariantViolation):  # radius bound
        system(2, [(0, F(1, 3))], [F(1, 2)], "uEc")
    with pytest.raises(InvariantViolation):  # uCc needs zero radii
        system(1, [(0, F(1, 8))], [F(1)], "uCc")
    with pytest.raises(InvariantViolation):  # strict variants need positive radii
        system(1, [(0, 0), (F(1, 2), 0)], None, "uE")
    # coincident degenerate points along a zero gap are admitted
    system(1, [(0, 0), (0, 0), (F(1, 2), 0)], [0, F(1, 2), F(1, 2)], "uEc")
    # a degenerate point at the boundary of an arc is admitted
    system(1, [(0, F(1, 8)), (F(1, 8), 0)], [F(1, 8), F(7, 8)], "uEc")
    with pytest.raises(InvariantViolation):  # strictly inside is not
        system(1, [(0, F(1, 8)), (F(1, 16), 0)], [F(1, 16), F(15, 16)], "uEc")


def test_arc_coords_examples():
    x = system(1, [(0, F(1, 8)), (F(1, 2), F(1, 8))], None, "uE")
    assert arc_coords(x).phi == (F(1, 2), F(1, 2))
    y = system(3, [(F(1, 5), F(1, 12))], None, "uE")
    assert arc_coords(y).phi == (F(1, 3),)
    with pytest.raises(MismatchError):
        arc_coords(system(1, [(0, F(1, 8))], [F(1)], "uEc"))


def test_arc_coords_roundtrip():
    rng = random.Random(0)
    for _ in range(300):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        x = sample_ue(rng, m, n)
        filled = arc_coords(x)
        assert drop_coords(filled) == x
        assert arc_coords(filled) == filled
    with pytest.raises(InvariantViolation):
        arc_coords(ArcSystem(1, ((Turn(F(0)), F(1, 16)),
                                 (Turn(F(0)), F(1, 16))), None, "uE"))


def test_compose_worked_example():
    outer = system(1, [(0, F(1, 8)), (F(1, 2), F(1, 8))],
                   [F(1, 2), F(1, 2)], "uEc")
    got = compose_uec(outer, [((F(0), F(1, 2)),), ((F(1, 2), F(1, 4)),)])
    assert [z.value for z, _ in got.pairs] == [F(0), F(9, 16)]
    assert [r for _, r in got.pairs] == [F(1, 16), F(1, 32)]
    assert got.phi == (F(9, 16), F(7, 16))
    assert sum(got.phi) == 1


def test_compose_unit_and_degenerate():
    rng = random.Random(1)
    for _ in range(200):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        x = sample_uec(rng, m, n)
        assert compose_uec(x, [((F(0), F(1)),)] * n) == x
        # scale-zero inners land in the all-degenerate stratum
        vs = [((F(1, 2), F(0)),) for _ in range(n)]
        y = compose_uec(x, vs)
        assert y.variant == "uCc"
        assert [z.value for z, _ in y.pairs] == \
            [(z.value + r / 2) % 1 for z, r in x.pairs]


def test_compose_empty_blocks_and_arity_zero():
    x = system(2, [(0, 0), (F(1, 8), 0), (F(1, 4), 0)],
               [F(1, 8), F(1, 8), F(1, 4)], "uCc")
    y = compose_uec(x, [(), ((F(0), F(0)),), ()])
    assert y.n == 1 and y.phi == (F(1, 2),)
    z = compose_uec(x, [(), (), ()])
    assert z.n == 0
    out = compose_uec(system(1, [(0, F(1, 4))], [F(1)], "uEc"),
                      [((F(-1, 2), F(1, 4)), (F(1, 2), F(1, 4)))])
    assert sum(out.phi) == 1
    with pytest.raises(MismatchError):
        compose_uec(x, [()])


def test_compose_module_associativity_and_cyclic_compat():
    rng = random.Random(2)
    for _ in range(300):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        f = sample_uec(rng, m, n)
        gs = [sample_ucompact(rng, rng.randint(0, 2)) for _ in range(n)]
        fg = compose_uec(f, gs)
        hs = [sample_ucompact(rng, rng.randint(0, 2)) for _ in range(fg.n)]
        lhs = compose_uec(fg, hs)
        at, ghs = 0, []
        for g in gs:
            blk = hs[at:at + len(g)]
            at += len(g)
            flat = []
            for (v, r), h in zip(g, blk):
                flat.extend((v + r * w, r * s) for w, s in h)
            ghs.append(tuple(flat))
        assert lhs == compose_uec(f, ghs)
        # block cycling
        k = rng.randrange(n)
        alpha = Perm.cycle(n) ** k
        lhs = compose_uec(cyclic_rotate(f, alpha), gs)
        inv = alpha.inverse()
        rhs = compose_uec(f, [gs[inv(p)] for p in range(n)])
        rho = block_cycle_perm([len(g) for g in gs], alpha)
        if rho.degree:
            rhs = cyclic_rotate(rhs, rho)
        assert lhs == rhs


def compose_psi_cover_oracle(outer, inners):
    """Independent route to the output gaps: lift the outer centers to the
    line by accumulating gaps, place every child at its affine position on
    the cover, and read off consecutive differences (the wrap closes after
    one quotient circumference).  No case analysis."""
    lifts = [outer.pairs[0][0].value]
    for p in outer.phi[:-1]:
        lifts.append(lifts[-1] + p)
    positions = []
    for b, blk in enumerate(inners):
        rb = outer.pairs[b][1]
        positions.extend(lifts[b] + rb * v for v, _ in blk)
    if not positions:
        return ()
    wrap = positions[0] + F(1, outer.m)
    nxt = positions[1:] + [wrap]
    return tuple(b - a for a, b in zip(positions, nxt))


def test_compose_psi_against_cover_oracle():
    rng = random.Random(20)
    for _ in range(400):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        f = sample_uec(rng, m, n)
        gs = [sample_ucompact(rng, rng.randint(0, 3)) for _ in range(n)]
        got = compose_uec(f, gs)
        assert got.phi == compose_psi_cover_oracle(f, gs)


def test_wreath_act_examples():
    x = system(2, [(F(1, 3), 0)], [F(1, 2)], "uCc")
    g = WreathElem(Perm.identity(1), (CyclicElem(2, 1),))
    assert wreath_act(g, x).pairs[0][0].value == F(1, 3) + F(1, 2)
    rng = random.Random(3)
    for _ in range(100):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        y = sample_uec(rng, m, n)
        ident = WreathElem.identity(n, CyclicElem.identity(m))
        assert wreath_act(ident, y) == y
        u = upsilon(m, n)
        z = y
        for _ in range(m * n):
            z = wreath_act(u, z)
        assert z == y
        # left-action composition over the abelian base
        g = rng.choice(list(znwrcm_elements(n, m)))
        h = rng.choice(list(znwrcm_elements(n, m)))
        assert wreath_act(g, wreath_act(h, y)) == wreath_act(g.compose(h), y)
    with pytest.raises(InvariantViolation):
        wreath_act(WreathElem(Perm((1, 0, 2)),
                              (CyclicElem(1, 0),) * 3),
                   sample_uec(random.Random(0), 1, 3))


def test_upsilon_carries_last_to_front_with_twist():
    x = system(2, [(0, 0), (F(1, 8), 0), (F(1, 4), 0)],
               [F(1, 8), F(1, 8), F(1, 4)], "uCc")
    y = wreath_act(upsilon(2, 3), x)
    assert [z.value for z, _ in y.pairs] == \
        [(F(1, 4) - F(1, 2)) % 1, F(0), F(1, 8)]
    assert y.phi == (F(1, 4), F(1, 8), F(1, 8))


def test_circle_act():
    rng = random.Random(4)
    for _ in range(200):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        x = sample_uec(rng, m, n)
        assert circle_act(Turn(F(0)), x) == x
        assert circle_act(F(1), x) == x
        g = rng.choice(list(znwrcm_elements(n, m)))
        theta = Turn(F(rng.randint(0, 15), 16))
        assert circle_act(theta, wreath_act(g, x)) == \
            wreath_act(g, circle_act(theta, x))


def test_retract_examples():
    x = system(1, [(0, 0), (0, 0)], [1, 0], "uCc")
    y = retract_step(x)
    assert y.phi == (F(1, 2), F(1, 2))
    assert [z.value for z, _ in y.pairs] == [F(1, 2), F(0)]
    # equal gaps: rotation only
    e = system(2, [(0, 0), (F(1, 4), 0)], [F(1, 4), F(1, 4)], "uCc")
    r = retract_step(e)
    assert r.phi == e.phi
    assert [z.value for z, _ in r.pairs] == [F(1, 8), F(3, 8)]
    with pytest.raises(InvariantViolation):
        retract_step(system(1, [(0, F(1, 8))], [F(1)], "uEc"))


def test_retract_reaches_positive_gaps():
    rng = random.Random(5)
    for _ in range(300):
        m, n = rng.randint(1, 3), rng.randint(1, 6)
        x = sample_ucc(rng, m, n, allow_zero_gaps=True)
        y = x
        for _ in range(n):
            y = retract_step(y)
        assert all(p > 0 for p in y.phi)
        # the retraction is equivariant
        g = rng.choice(list(znwrcm_elements(n, m)))
        assert retract_step(wreath_act(g, x)) == wreath_act(g, retract_step(x))
        theta = Turn(F(rng.randint(0, 7), 8))
        assert retract_step(circle_act(theta, x)) == \
            circle_act(theta, retract_step(x))


def test_pair_presentation_roundtrip():
    rng = random.Random(6)
    for _ in range(300):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        x = sample_e(rng, m, n)
        p = to_pair(x)
        assert from_pair(p) == x
        assert p.normalized() == p
        # the pair is invariant under re-extraction
        assert to_pair(from_pair(p)) == p
    with pytest.raises(InvariantViolation):
        to_pair(ArcSystem(1, ((Turn(F(0)), F(1, 16)),
                              (Turn(F(1, 16) * 32), F(1, 16))), None, "E"))


def test_pair_presentation_quotient():
    # rotated bases with adjusted permutations normalize identically
    rng = random.Random(7)
    for _ in range(100):
        m, n = rng.randint(1, 3), rng.randint(2, 4)
        x = sample_e(rng, m, n)
        p = to_pair(x)
        for k in range(n):
            alpha = Perm.cycle(n) ** k
            q = SystemWithPerm(cyclic_rotate(p.base, alpha),
                               alpha.inverse().compose(p.perm))
            assert q.normalized() == p


def test_retract_with_perm_passthrough():
    x = system(1, [(0, 0), (0, 0)], [1, 0], "uCc")
    sp = SystemWithPerm(x, Perm((1, 0)))
    out = retract_step(sp)
    assert isinstance(out, SystemWithPerm)
    assert out.perm == Perm((1, 0))
    assert out.base.phi == (F(1, 2), F(1, 2))
