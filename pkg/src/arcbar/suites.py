"""Named verification suites: deterministic, seeded sweeps over the algebraic
laws, with machine-readable reports and a nonzero exit status on any failure."""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import barcalc, circle, cyclic
from .groups import Perm, block_cycle_perm, znwrcm_elements
from .operads import (ASSOC, COMPACT, FRAMED_C2, LITTLE_DISKS, SEMIDIRECT_C2,
                      assoc_to_compact, check_operad_laws, check_operad_map,
                      little_to_compact, sample_ucompact, semidirect_iso,
                      semidirect_iso_inverse)
from .rational import InvariantViolation, Turn


@dataclass(frozen=True)
class RunConfig:
    suite: str
    seed: int = 0
    trials: int = 200
    n_max: int = 3
    q_max: int = 3
    m_max: int = 3
    den: int = 4
    out: str | None = None

    def __post_init__(self) -> None:
        for name in ("trials", "n_max", "q_max", "m_max", "den"):
            if getattr(self, name) < 1:
                raise InvariantViolation(f"{name} must be >= 1")


@dataclass
class Report:
    suite: str
    config: dict
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, law: str, witness: str, expected: str = "", got: str = "") -> None:
        if len(self.failures) < 50:
            self.failures.append({"law": law, "witness": witness,
                                  "expected": expected, "got": got})

    def to_json(self) -> dict:
        return {"suite": self.suite, "config": self.config, "cases": self.cases,
                "failures": sorted(self.failures,
                                   key=lambda f: (f["law"], f["witness"])),
                "ok": self.ok, "elapsed_s": round(self.elapsed_s, 3)}


def _report(cfg: RunConfig) -> Report:
    config = {k: getattr(cfg, k) for k in
              ("suite", "seed", "trials", "n_max", "q_max", "m_max", "den")}
    return Report(cfg.suite, config)


# ---------------------------------------------------------------------------

def run_operad_laws(cfg: RunConfig) -> Report:
    rep = _report(cfg)
    instances = [ASSOC, LITTLE_DISKS, FRAMED_C2, COMPACT, SEMIDIRECT_C2]
    for inst in instances:
        allow0 = inst in (ASSOC, COMPACT)
        law = check_operad_laws(inst, cfg.seed, cfg.trials, allow_nullary=allow0)
        rep.cases += cfg.trials
        for v in law.violations:
            rep.fail(f"{inst.name}:{v.law}", v.detail)
    for fn, src, dst, name in [
            (assoc_to_compact, ASSOC, COMPACT, "assoc->dc"),
            (little_to_compact, LITTLE_DISKS, COMPACT, "dR->dc"),
            (semidirect_iso, SEMIDIRECT_C2, FRAMED_C2, "semidirect->framed")]:
        allow0 = src is ASSOC
        law = check_operad_map(fn, src, dst, cfg.seed + 1, cfg.trials,
                               allow_nullary=allow0)
        rep.cases += cfg.trials
        for v in law.violations:
            rep.fail(f"{name}:{v.law}", v.detail)
    # the iso is a bijection
    rng = random.Random(cfg.seed + 2)
    for t in range(cfg.trials):
        x = SEMIDIRECT_C2.sample(rng, rng.randint(1, 3))
        if semidirect_iso_inverse(semidirect_iso(x)) != x:
            rep.fail("semidirect-iso:roundtrip", f"trial {t}")
        rep.cases += 1
    return rep


def run_embed_compose(cfg: RunConfig) -> Report:
    rep = _report(cfg)
    rng = random.Random(cfg.seed)

    # frozen worked example
    outer = circle.system(1, [(Fraction(0), Fraction(1, 8)),
                              (Fraction(1, 2), Fraction(1, 8))],
                          [Fraction(1, 2), Fraction(1, 2)], "uEc")
    got = circle.compose_uec(outer, [((Fraction(0), Fraction(1, 2)),),
                                     ((Fraction(1, 2), Fraction(1, 4)),)])
    want = circle.system(1, [(Fraction(0), Fraction(1, 16)),
                             (Fraction(9, 16), Fraction(1, 32))],
                         [Fraction(9, 16), Fraction(7, 16)], "uEc")
    rep.cases += 1
    if got != want:
        rep.fail("worked-example", "m=1 n=2", str(want), str(got))

    for t in range(cfg.trials):
        m = rng.randint(1, cfg.m_max)
        n = rng.randint(1, cfg.n_max)
        f = circle.sample_uec(rng, m, n)
        sizes = [rng.randint(0, 2) for _ in range(n)]
        gs = [sample_ucompact(rng, s) for s in sizes]
        fg = circle.compose_uec(f, gs)
        rep.cases += 1
        if fg.phi is not None and sum(fg.phi) != (Fraction(1, m) if fg.n else 0):
            rep.fail("gap-sum", f"trial {t}")
        # unit law
        units = [((Fraction(0), Fraction(1)),) for _ in range(n)]
        if circle.compose_uec(f, units) != f:
            rep.fail("unit", f"trial {t}")
        # associativity against the interval operad
        hs = [sample_ucompact(rng, rng.randint(0, 2)) for _ in range(fg.n)]
        lhs = circle.compose_uec(fg, hs)
        at = 0
        ghs = []
        for g in gs:
            blk = hs[at:at + len(g)]
            at += len(g)
            flat = []
            for (v, r), h in zip(g, blk):
                flat.extend((v + r * w, r * s) for w, s in h)
            ghs.append(tuple(flat))
        rhs = circle.compose_uec(f, ghs)
        if lhs != rhs:
            rep.fail("module-associativity", f"trial {t}")
        # cyclic block compatibility
        k = rng.randrange(n)
        alpha = Perm.cycle(n) ** k
        lhs = circle.compose_uec(circle.cyclic_rotate(f, alpha), gs)
        inv = alpha.inverse()
        rotated = [gs[inv(p)] for p in range(n)]
        sizes_r = [len(g) for g in gs]
        rho = block_cycle_perm(sizes_r, alpha)
        rhs = circle.compose_uec(f, rotated)
        if rho.degree:
            rhs = circle.cyclic_rotate(rhs, rho)
        if lhs != rhs:
            rep.fail("cyclic-compatibility", f"trial {t}")
        # actions commute
        g = rng.choice(list(znwrcm_elements(n, m)))
        theta = Turn(Fraction(rng.randint(0, 7), 8))
        if circle.circle_act(theta, circle.wreath_act(g, f)) != \
                circle.wreath_act(g, circle.circle_act(theta, f)):
            rep.fail("action-commutation", f"trial {t}")
    # retraction
    for t in range(cfg.trials // 2):
        m = rng.randint(1, cfg.m_max)
        n = rng.randint(1, cfg.n_max + 1)
        x = circle.sample_ucc(rng, m, n, allow_zero_gaps=True)
        y = x
        for _ in range(n):
            y = circle.retract_step(y)
        rep.cases += 1
        assert y.phi is not None
        if any(p <= 0 for p in y.phi):
            rep.fail("retract-positivity", f"trial {t}")
    x = circle.system(1, [(0, 0), (0, 0)], [1, 0], "uCc")
    y = circle.retract_step(x)
    rep.cases += 1
    if y.phi != (Fraction(1, 2), Fraction(1, 2)):
        rep.fail("retract-example", "phi=(1,0)", "(1/2, 1/2)", str(y.phi))
    return rep


def run_cyclic_relations(cfg: RunConfig) -> Report:
    rep = _report(cfg)
    for m in range(1, cfg.m_max + 1):
        for R in barcalc.standard_monoids(m):
            out = barcalc.verify_cyclic_object(R, cfg.q_max, seed=cfg.seed,
                                               trials=cfg.trials)
            rep.cases += out.cases
            for f in out.failures:
                rep.fail(f"cyclic[{R.name},m={m}]", f)
    rng = random.Random(cfg.seed)
    for t in range(cfg.trials):
        m = rng.randint(1, min(cfg.m_max, 3))
        q = rng.randint(0, min(cfg.q_max, 4))
        w = cyclic.sample_word(rng, m, q, rng.randint(0, 8))
        p = cyclic.sample_point(rng, m, q)
        nf = cyclic.normalize_word(w)
        rep.cases += 1
        if cyclic.act_on_point(w, p) != cyclic.act_on_point(nf, p):
            rep.fail("word-action-consistency", f"trial {t}: {w}")
    return rep


def run_lambda_iso(cfg: RunConfig) -> Report:
    rep = _report(cfg)
    rng = random.Random(cfg.seed)
    for t in range(cfg.trials):
        m = rng.randint(1, cfg.m_max)
        q = rng.randint(0, cfg.q_max)
        p = cyclic.sample_point(rng, m, q)
        x = cyclic.lambda_to_ucc(p)
        rep.cases += 1
        if cyclic.ucc_to_lambda(x) != p:
            rep.fail("roundtrip", f"trial {t}")
        if not cyclic.tau_upsilon_intertwined(p):
            rep.fail("tau-upsilon", f"trial {t}")
        theta = Turn(Fraction(rng.randint(0, 15), 16))
        if cyclic.lambda_to_ucc(cyclic.circle_act_point(theta, p)) != \
                circle.circle_act(theta, x):
            rep.fail("circle-equivariance", f"trial {t}")
    for m in range(1, cfg.m_max + 1):
        Xm = barcalc.pointed_set("x", ["x"], m)
        out = barcalc.check_thm_cycbar_free(Xm, cfg.q_max + 1, m, cfg.den,
                                            verify_reps=5)
        rep.cases += sum(e["left_classes"] for e in out.per_degree)
        for f in out.failures:
            rep.fail(f"orbit-classes[m={m}]", f)
    return rep


def run_thm_cycbar(cfg: RunConfig) -> Report:
    rep = _report(cfg)
    letters = ["x", "y", "z"]
    for m in range(1, cfg.m_max + 1):
        # letter swap of order 2 when it divides m, else the trivial action
        sigma = {"x": "y", "y": "x"} if m % 2 == 0 else {}
        X = barcalc.pointed_set("letters", letters, m, sigma)
        out = barcalc.check_thm_cycbar_free(X, cfg.n_max, m, cfg.den,
                                            verify_reps=20)
        rep.cases += sum(e["left_classes"] for e in out.per_degree)
        for f in out.failures:
            rep.fail(f"thm-cycbar[m={m}]", f)
    return rep


SUITES = {
    "operad-laws": run_operad_laws,
    "embed-compose": run_embed_compose,
    "cyclic-relations": run_cyclic_relations,
    "lambda-iso": run_lambda_iso,
    "thm-cycbar": run_thm_cycbar,
}


def run_suite(cfg: RunConfig) -> Report:
    if cfg.suite not in SUITES:
        raise InvariantViolation(
            f"unknown suite {cfg.suite!r}; valid: {', '.join(sorted(SUITES))}")
    start = time.monotonic()
    rep = SUITES[cfg.suite](cfg)
    rep.elapsed_s = time.monotonic() - start
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(rep.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return rep
