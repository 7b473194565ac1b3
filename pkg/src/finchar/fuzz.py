"""Seeded random models and the invariant battery run by ``finchar fuzz``.

Each iteration draws its own ``random.Random`` from ``(seed, iteration)``,
so results do not depend on iteration order. Checks go through module
attributes (``closures.eng`` rather than a bound import) so a test can
inject a fault into one operation and watch the battery catch it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import _bits, closures, dsl, gdc, maximality, model_core, partial_functions, zorn
from ._config import check_cap
from .model_core import Complement, Explicit, RawList, Subset, Universe


class InvariantViolation(AssertionError):
    def __init__(self, invariant: str, detail: str) -> None:
        super().__init__(f"{invariant}: {detail}")
        self.invariant = invariant
        self.detail = detail


@dataclass
class FuzzModel:
    spec: dsl.ModelSpec
    A: Universe
    T: Explicit
    order: zorn.OrderedModel
    P: Universe
    PT: Explicit
    R: gdc.Relation
    raw: RawList


def _random_table(rng: random.Random, n: int, with_empty: float = 0.7) -> list[int]:
    masks = [m for m in range(1, 1 << n) if rng.random() < 0.5]
    if rng.random() < with_empty:
        masks.append(0)
    return masks


def _random_order(rng: random.Random, n: int) -> frozenset[tuple[int, int]]:
    # random DAG along a random permutation, then transitive closure
    perm = list(range(n))
    rng.shuffle(perm)
    lt = {(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4}
    changed = True
    while changed:
        changed = False
        for a, b in list(lt):
            for c, d in list(lt):
                if b == c and (a, d) not in lt:
                    lt.add((a, d))
                    changed = True
    return frozenset(lt)


def random_model(rng: random.Random, size: int) -> FuzzModel:
    """A random universe of size ``<= size`` with one of everything over it."""
    n = rng.randint(0, size)
    A = Universe.atomic("A", n)
    T = Explicit.from_masks(A, _random_table(rng, n))
    lt = _random_order(rng, n)
    carrier = Subset(A, rng.getrandbits(n) if n else 0)
    order = zorn.OrderedModel(A, lt)
    left_size = rng.randint(1, max(1, size))
    right_size = rng.randint(1, max(1, size // left_size))
    L = Universe.atomic("L", left_size)
    Rt = Universe.atomic("Rt", right_size)
    P = Universe.product(L, Rt, "P")
    PT = Explicit.from_masks(P, _random_table(rng, P.size))
    R = gdc.Relation(L, Rt, frozenset((a, b) for a in range(left_size) for b in range(right_size) if rng.random() < 0.6))
    raw = RawList(A, tuple(rng.randrange(n) for _ in range(rng.randint(0, 2 * n)))) if n else RawList(A)

    spec = dsl.ModelSpec()
    spec.add("A", A)
    spec.add("T", T)
    spec.add("O", order)
    spec.add("E", carrier)
    spec.add("L", L)
    spec.add("Rt", Rt)
    spec.add("P", P)
    spec.add("PT", PT)
    spec.add("R", R)
    spec.add("N", gdc.positive_alignment(R, P))
    spec.add("U", model_core.DownwardClosureOf(A, frozenset({raw})))
    return FuzzModel(spec, A, T, order.with_carrier(carrier), P, PT, R, raw)


# --------------------------------------------------------------- invariants


def _fail(name: str, detail: str) -> None:
    raise InvariantViolation(name, detail)


def check_canonical(m: FuzzModel) -> None:
    c = model_core.canonicalize(m.raw)
    if model_core.canonicalize(c) != c or model_core.hat(c) != model_core.hat(m.raw):
        _fail("canonical", f"canonicalize misbehaves on {m.raw.render()}")
    rev = RawList(m.A, tuple(reversed(m.raw.items)) + m.raw.items[:1])
    if model_core.lp_member(m.T, m.raw) != model_core.lp_member(m.T, rev):
        _fail("canonical", f"membership of {m.raw.render()} changes under permutation/duplication")


def check_minimality(m: FuzzModel) -> None:
    P = closures.eng(m.T)
    if closures.eng(closures.restrict(P)) != P:
        _fail("minimality", f"eng(T) != eng(restrict(eng(T))) for T = {m.T.universe.name}")
    Q = closures.eng_exists(m.T)
    if closures.eng_exists(closures.restrict(Q)) != Q:
        _fail("minimality", "eng_exists(T) != eng_exists(restrict(eng_exists(T)))")


def check_inhabited(m: FuzzModel) -> None:
    eps = RawList(m.A)
    if closures.eng(m.T).is_inhabited() != model_core.lp_member(m.T, eps):
        _fail("inhabited", "eng(T) inhabited disagrees with ε ∈ T")


def check_monotone(m: FuzzModel) -> None:
    n = m.A.size
    down = closures.eng(m.T)
    up = closures.eng_exists(m.T)
    for alpha in range(1 << n):
        for i in range(n):
            beta = alpha | 1 << i
            if down.holds_mask(beta) and not down.holds_mask(alpha):
                _fail("monotone", f"eng(T) not downward closed at {alpha:#x} ⊂ {beta:#x}")
            if up.holds_mask(alpha) and not up.holds_mask(beta):
                _fail("monotone", f"eng_exists(T) not upward closed at {alpha:#x} ⊂ {beta:#x}")


def check_duality(m: FuzzModel) -> None:
    if not closures.complement_duality_check(m.T):
        _fail("duality", "complement(eng(T)) != eng_exists(complement(T))")


def check_fc(m: FuzzModel) -> None:
    if not closures.is_finite_character(closures.eng(m.T))[0]:
        _fail("fc", "eng(T) is not of finite character")
    if not closures.is_open(closures.eng_exists(m.T))[0]:
        _fail("fc", "eng_exists(T) is not open")


def check_ttl(m: FuzzModel) -> None:
    w = maximality.ttl_witness(m.T)
    eps = model_core.lp_member(m.T, RawList(m.A))
    if eps != (w is not None):
        _fail("ttl", "ttl_witness presence disagrees with ε ∈ T")
    if w is not None and w not in maximality.max_elements(closures.eng(m.T)):
        _fail("ttl", f"witness {w.render()} is not maximal")


def check_principles(m: FuzzModel) -> None:
    ttl = maximality.evaluate_principle(m.T, "ttl")
    co = maximality.evaluate_principle(m.T, "ttlco")
    gui = maximality.evaluate_principle(Complement(m.T), "gui")
    if not (ttl == co == gui):
        _fail("principles", f"TTL={ttl} TTLco={co} GUI(not T)={gui}")


def check_zorn(m: FuzzModel) -> None:
    M = m.order
    table = 0
    for F in range(1 << M.universe.size):
        items = list(_bits.iter_bits(F))
        chain = F & ~M.carrier.mask == 0 and all(
            a == b or M.less(a, b) or M.less(b, a) for a in items for b in items
        )
        table |= chain << F
    if closures.eng(zorn.subchains_as_listpred(M)).table != table:
        _fail("zorn", "eng(subchains) differs from the subchain table")
    if zorn.is_inductive(M):
        w = zorn.zorn_witness(M)
        if w not in M.maximal_elements():
            _fail("zorn", f"zorn_witness {w} is not maximal in the carrier")
    G = zorn.ChainGrammar(M.universe, zorn.chain_lists(M))
    if not zorn.chain_grammar_check(G):
        _fail("zorn", "constructed chain grammar rejected")
    back = zorn.order_of_grammar(G)
    E = M.carrier.mask
    lt_e = frozenset((a, b) for a, b in M.lt if E >> a & 1 and E >> b & 1)
    if back.lt != lt_e or back.carrier != M.carrier:
        _fail("zorn", "order_of_grammar does not recover (lt|E, E)")


def _is_max_dpf(T: model_core.ListPredicate, f: partial_functions.PFun) -> bool:
    P = closures.eng(T)
    if not P.holds_mask(f.graph_mask):
        return False
    return not any(P.holds_mask(g.graph_mask) for g in partial_functions.pf_updates(f))


def check_empcf(m: FuzzModel) -> None:
    f = partial_functions.empcf_witness(m.PT)
    eps = m.PT.member_mask(0)
    if eps != (f is not None):
        _fail("empcf", "empcf_witness presence disagrees with ε ∈ T")
    if f is not None and not _is_max_dpf(m.PT, f):
        _fail("empcf", f"witness {f.render()} is not a maximal partial choice function")
    if m.T.member_mask(0):
        g = partial_functions.empcf_witness(partial_functions.project_unit(m.T))
        if g is None or g.dom not in maximality.max_elements(closures.eng(m.T)):
            _fail("empcf", "dom of the unit-projected witness is not maximal for eng(T)")


def check_gdc(m: FuzzModel) -> None:
    _, approximable = gdc.approximation(m.PT)
    f = gdc.choice_witness(m.PT)
    if approximable != (f is not None):
        _fail("gdc", "approximability disagrees with choice_witness presence")
    if f is not None and (not f.is_total() or not closures.eng(m.PT).holds_mask(f.graph_mask)):
        _fail("gdc", f"choice function {f.render()} is not total with graph in eng(T)")
    Ra = gdc.positive_alignment(m.R, m.P)
    if gdc.relation_of(Ra) != m.R:
        _fail("gdc", "relation_of(positive_alignment(R)) != R")
    if not gdc.is_downward_prime(Ra):
        _fail("gdc", "positive alignment is not downward prime")


def check_lift(m: FuzzModel) -> None:
    if not m.PT.member_mask(0):
        return
    lifted = gdc.lift_bottom(m.PT)
    if not gdc.approximation(lifted)[1]:
        _fail("lift", "lifted predicate is not approximable")
    f = gdc.lift_choice(m.PT)
    if f is None or not _is_max_dpf(m.PT, f):
        _fail("lift", "erased lifted choice function is not maximal")


def check_dsl(m: FuzzModel) -> None:
    text = dsl.serialize(m.spec)
    if dsl.parse(text) != m.spec:
        _fail("dsl", "parse(serialize(spec)) != spec")


INVARIANTS: list[tuple[str, Callable[[FuzzModel], None]]] = [
    ("canonical", check_canonical),
    ("minimality", check_minimality),
    ("inhabited", check_inhabited),
    ("monotone", check_monotone),
    ("duality", check_duality),
    ("fc", check_fc),
    ("ttl", check_ttl),
    ("principles", check_principles),
    ("zorn", check_zorn),
    ("empcf", check_empcf),
    ("gdc", check_gdc),
    ("lift", check_lift),
    ("dsl", check_dsl),
]


@dataclass
class FuzzResult:
    checks: int
    iteration: int | None = None
    invariant: str | None = None
    detail: str | None = None
    reproduction: str | None = None

    @property
    def ok(self) -> bool:
        return self.invariant is None


def iteration_rng(seed: int, iteration: int) -> random.Random:
    return random.Random(f"finchar:{seed}:{iteration}")


def run_fuzz(seed: int, size: int, iters: int) -> FuzzResult:
    """Run every invariant on ``iters`` random models; stop at the first violation."""
    check_cap(size)
    checks = 0
    for i in range(iters):
        m = random_model(iteration_rng(seed, i), size)
        for name, check in INVARIANTS:
            checks += 1
            try:
                check(m)
            except InvariantViolation as exc:
                detail = exc.detail
            except Exception as exc:  # a crash is a violation too
                detail = f"{type(exc).__name__}: {exc}"
            else:
                continue
            header = f"# fuzz seed={seed} size={size} iteration={i} invariant={name}\n# {detail}\n"
            return FuzzResult(checks, i, name, detail, header + dsl.serialize(m.spec))
    return FuzzResult(checks)
