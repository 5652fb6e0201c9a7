"""The verification suites, one per acceptance claim.

Each suite returns a report ``{"check", "params", "pass", "counterexample",
"claims"}`` where ``claims`` lists the individual named facts it checked.
Suites that range over diagrams use ``TEST_DIAGRAMS`` unless one is given.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from . import roots as rt
from .classical import triangle_check
from .diagrams import (
    EAST, SOUTH, SOUTHEAST, CylindricDiagram, contains, content, generation, ideals_by_size,
    random_tableau_stream, standard_tableaux, window,
)
from .hooks import (
    alpha, d_set_window, heap_order_labels, heap_order_roots, hk, hk_recursive, hkr, leq_heap_roots,
    leq_modified, leq_ordinary, pi_set, pi_step_closure, predominant_weight,
)
from .ideals_bruhat import (
    find_tableau_for_word, ideal_roots_match, phi_iso_check,
    pluscule_characterization_check, psi_iso_check, tableaux_words_bijection_check,
)
from .lattice import leq_cyl
from .weyl import WeylElement, inversion_set, is_fully_commutative, is_pluscule

TEST_DIAGRAMS: tuple[tuple[tuple[int, int], tuple[int, ...]], ...] = (
    ((2, -2), (4, 2)),
    ((2, -3), (5, 4)),
    ((4, -5), (5, 3, 3, 1)),
    ((1, -2), (1,)),
    ((1, -1), (0,)),
)

# the nine-residue diagram whose bottom set and generator sets are drawn with
# contents modulo 9; its rows end at contents 8, 5, 4, 1
NINE_RESIDUE_DIAGRAM = ((4, -5), (9, 7, 7, 5))

EXAMPLE_WORD = (4, 2, 1, 3, 0, 2)


def standard_diagrams() -> list[CylindricDiagram]:
    return [CylindricDiagram.make(om, lam) for om, lam in TEST_DIAGRAMS]


def small_diagrams(kappa: int) -> list[CylindricDiagram]:
    """Every diagram with ``kappa`` residues and last part 0 (other shifts only relabel residues)."""
    out = []
    for m in range(1, kappa):
        ell = kappa - m
        for lam in itertools.product(range(ell + 1), repeat=m - 1):
            if all(x >= y for x, y in zip(lam, lam[1:])):
                out.append(CylindricDiagram.make((m, -ell), lam + (0,)))
    return out


class Claims:
    """Collects named boolean facts; the first failure keeps its counterexample."""

    def __init__(self):
        self.items: list[dict] = []
        self.counterexample = None

    def add(self, name: str, ok: bool, params: dict | None = None, counterexample=None) -> bool:
        ok = bool(ok)
        self.items.append({"claim": name, "params": params or {}, "pass": ok})
        if not ok and self.counterexample is None:
            self.counterexample = {"claim": name, **(params or {}), **({"detail": counterexample} if counterexample else {})}
        return ok

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.items)


@dataclass
class SuiteParams:
    diagrams: list[CylindricDiagram] | None = None
    depth: int | None = None
    max_ideal: int | None = None
    seed: int = 0

    def chosen(self) -> list[CylindricDiagram]:
        return self.diagrams if self.diagrams else standard_diagrams()

    def to_json(self) -> dict:
        return {
            "diagrams": [d.to_json() for d in self.chosen()],
            "depth": self.depth,
            "max_ideal": self.max_ideal,
            "seed": self.seed,
        }


def _cell(x) -> list[int]:
    return [x.a, x.b]


# ---------------------------------------------------------------- suites


def suite_ex_hook(p: SuiteParams, c: Claims):
    d = CylindricDiagram.make((4, -5), (5, 3, 3, 1))
    x = d.cell(2, -4)
    expected = rt.RootVector(9, (1, 1, 0, 0, 0, 0, 1, 1, 1)) + rt.delta(9)
    c.add("content of the worked cell is 3", content(d, x) == 3)
    c.add("hook of the worked cell", hk(d, x) == expected, {"hk": str(hk(d, x))})
    c.add("hook equals alpha_{-12,2}", hk(d, x) == rt.alpha_interval(-12, 2, 9))
    c.add("recurrence agrees on the worked cell", hk_recursive(d, x) == expected)


def suite_pi_set(p: SuiteParams, c: Claims):
    k = 9
    s = lambda *idx: rt.RootVector(k, tuple(int(i in idx) for i in range(k)))
    d = CylindricDiagram.make(*NINE_RESIDUE_DIAGRAM)
    pi = pi_set(d)
    c.add("Pi0 of the nine-residue diagram", set(pi.pi0) == {s(3), s(5), s(7)}, {"pi0": [str(a) for a in pi.pi0]})
    c.add("Pi_arm of the nine-residue diagram", set(pi.pi_arm) == {s(6, 7, 8), s(2, 3, 4), s(0, 1)},
          {"pi_arm": [str(a) for a in pi.pi_arm]})
    c.add("Pi_leg of the nine-residue diagram", set(pi.pi_leg) == {s(4, 5, 6), s(1, 2), s(0, 8)},
          {"pi_leg": [str(a) for a in pi.pi_leg]})
    for n in (3, 4, 5):
        d = CylindricDiagram.make((1, -(n - 1)), (n,))
        pi = pi_set(d)
        one = lambda *idx: rt.RootVector(n, tuple(int(i in idx) for i in range(n)))
        c.add(f"single row n={n}: Pi_arm = {{delta}}", set(pi.pi_arm) == {rt.delta(n)})
        c.add(f"single row n={n}: Pi_leg = {{alpha_0 + alpha_{n - 1}}}", set(pi.pi_leg) == {one(0, n - 1)})
        c.add(f"single row n={n}: Pi0 = interior simple roots", set(pi.pi0) == {one(i) for i in range(1, n - 1)})


def suite_ex_ord_regression(p: SuiteParams, c: Claims):
    d = CylindricDiagram.make((2, -2), (4, 2))
    x, y = d.cell(1, 2), d.cell(2, 1)
    hx, hy = hk(d, x), hk(d, y)
    k = 4
    c.add("cells are incomparable", not leq_cyl(x, y) and not leq_cyl(y, x))
    c.add("hk(x) = delta + alpha_3", hx == rt.delta(k) + rt.simple_root(3, k), {"hk": str(hx)})
    c.add("hk(y) = alpha_0 + alpha_2 + alpha_3", hy == rt.RootVector(k, (1, 0, 1, 1)), {"hk": str(hy)})
    c.add("hk(y) <=or hk(x) with difference alpha_1 + alpha_3",
          leq_ordinary(hy, hx) and hx - hy == rt.RootVector(k, (0, 1, 0, 1)))
    c.add("modified-order incomparable", not leq_modified(d, hx, hy) and not leq_modified(d, hy, hx))
    c.add("pairing <hk(x), hk(y)^vee> = 0", rt.pairing_root_coroot(hx, hy) == 0)
    c.add("heap-order incomparable", not leq_heap_roots(d, hx, hy, 1) and not leq_heap_roots(d, hy, hx, 1))


def suite_hk_bijection(p: SuiteParams, c: Claims):
    depths = range(p.depth + 1) if p.depth is not None else range(4)
    for d in p.chosen():
        for depth in depths:
            cells = window(d, depth)
            image = [hk(d, x) for x in cells]
            target = d_set_window(d, depth)
            c.add("hk injective on window", len(set(image)) == len(image), {"diagram": d.to_json(), "depth": depth})
            c.add("hk image equals D(lambda_Y) window", set(image) == target,
                  {"diagram": d.to_json(), "depth": depth})
            c.add("N(hk(x)) is the generation of x",
                  all(rt.null_multiplicity(h) == generation(d, x) for x, h in zip(cells, image)),
                  {"diagram": d.to_json(), "depth": depth})


def _recurrence_case(d: CylindricDiagram, f: Callable, x) -> bool:
    s, e, se = x + SOUTH, x + EAST, x + SOUTHEAST
    if x not in d.bottom.cells:
        return contains(d, se) and f(x) == f(s) + f(e) - f(se)
    if contains(d, se):
        return False
    out = alpha(d, x)
    # the south and east neighbours coincide when m = ell = 1 and are then counted twice
    for z in (s, e):
        if contains(d, z):
            out = out + f(z)
    return f(x) == out


def suite_hkr_recurrence(p: SuiteParams, c: Claims):
    n_max = p.max_ideal if p.max_ideal is not None else 7
    depth = p.depth if p.depth is not None else 2
    for d in p.chosen():
        params = {"diagram": d.to_json(), "max_ideal": n_max}
        bad = None
        count = 0
        for level in ideals_by_size(d, n_max):
            for z in level:
                hks = {x: hk(d, x) for x in z.cells}
                for t in standard_tableaux(z):
                    count += 1
                    for x in t:
                        if hkr(d, t, x) != hks[x]:
                            bad = {"tableau": [_cell(q) for q in t], "cell": _cell(x)}
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        c.add("hkr = hk on every tableau of every small ideal", bad is None, dict(params, tableaux=count), bad)
        cells = window(d, depth)
        hkr_map = {x: hkr(d, cells, x) for x in cells}
        for name, f in (("hk", lambda x: hk(d, x)), ("hkr", hkr_map.__getitem__)):
            fails = [_cell(x) for x in cells if not _recurrence_case(d, f, x)]
            c.add(f"five-case recurrence holds for {name}", not fails, {"diagram": d.to_json(), "depth": depth},
                  fails[:1] or None)


def suite_pluscule_words(p: SuiteParams, c: Claims):
    n_max = p.max_ideal if p.max_ideal is not None else 8
    seeds = range(p.seed, p.seed + 5)
    for d in p.chosen():
        lam = predominant_weight(d)
        for seed in seeds:
            stream = random_tableau_stream(d, seed)
            w = WeylElement.identity(d.kappa)
            prefix = []
            ok = True
            for n in range(1, n_max + 1):
                x = next(stream)
                prefix.append(x)
                w = w.rmul_simple(content(d, x))
                ok = (w.length == n and is_pluscule(w, lam) and is_fully_commutative(w)
                      and inversion_set(w) == frozenset(hk(d, q) for q in prefix))
                if not ok:
                    break
            c.add("w[n] reduced, pluscule, fully commutative, R(w[n]) = hk(prefix)", ok,
                  {"diagram": d.to_json(), "seed": seed, "n": n},
                  None if ok else {"prefix": [_cell(q) for q in prefix]})


def _order_on_window(d: CylindricDiagram, depth: int):
    cells = window(d, depth)
    hks = {x: hk(d, x) for x in cells}
    back = {v: x for x, v in hks.items()}
    image = list(hks.values())
    pi = pi_set(d)
    diagram = {(x, y) for x in cells for y in cells if leq_cyl(x, y)}
    modified = {(x, y) for x in cells for y in cells if leq_modified(d, hks[x], hks[y], pi)}
    heap = {(back[a], back[b]) for a, b in heap_order_roots(image)}
    steps = {(back[a], back[b]) for a, b in pi_step_closure(d, image, pi)}
    labels = {(cells[a - 1], cells[b - 1]) for a, b in heap_order_labels(d, cells)}
    return cells, {"diagram": diagram, "modified": modified, "heap": heap, "steps": steps, "tableau": labels}


def suite_order_isomorphism(p: SuiteParams, c: Claims):
    depth = p.depth if p.depth is not None else 2
    for d in p.chosen():
        params = {"diagram": d.to_json(), "depth": depth}
        cells, rel = _order_on_window(d, depth)
        base = rel["diagram"]
        for name in ("modified", "heap", "steps", "tableau"):
            diff = sorted(base ^ rel[name])
            c.add(f"diagram order = {name} order", not diff, params,
                  [[_cell(u), _cell(v)] for u, v in diff[:1]] or None)
        c.add("modified order = heap order", rel["modified"] == rel["heap"], params)
        wider, rel2 = _order_on_window(d, depth + 1)
        keep = set(cells)
        for name in ("heap", "steps", "tableau"):
            restricted = {(u, v) for u, v in rel2[name] if u in keep and v in keep}
            c.add(f"{name} closure stable under a deeper window", restricted == rel[name], params)


def suite_trichotomy(p: SuiteParams, c: Claims):
    depth = p.depth if p.depth is not None else 2
    for d in p.chosen():
        cells = window(d, depth)
        hks = {x: hk(d, x) for x in cells}
        delta = rt.delta(d.kappa)
        bad = None
        pairs = 0
        for x, y in itertools.permutations(cells, 2):
            if leq_cyl(x, y) or leq_cyl(y, x):
                continue
            pairs += 1
            hx, hy = hks[x], hks[y]
            gap = rt.null_multiplicity(hy) - rt.null_multiplicity(hx)
            if gap == 1:
                ok = leq_ordinary(hy - delta, hx) and leq_ordinary(hx, hy)
            elif gap == -1:
                ok = leq_ordinary(hx - delta, hy) and leq_ordinary(hy, hx)
            elif gap == 0:
                ok = not leq_ordinary(hx, hy) and not leq_ordinary(hy, hx)
            else:
                ok = False
            if not ok:
                bad = {"x": _cell(x), "y": _cell(y), "gap": gap}
                break
        c.add("incomparable pairs satisfy the N-gap trichotomy", bad is None,
              {"diagram": d.to_json(), "depth": depth, "pairs": pairs}, bad)


def suite_ideal_bruhat(p: SuiteParams, c: Claims):
    n_max = p.max_ideal if p.max_ideal is not None else 6
    for d in p.chosen():
        for r in (phi_iso_check(d, n_max), psi_iso_check(d, n_max)):
            c.add(f"{r['check']} order isomorphism", r["pass"], r["params"], r["counterexample"])


def suite_tableaux_words(p: SuiteParams, c: Claims):
    n_max = p.max_ideal if p.max_ideal is not None else 7
    for d in p.chosen():
        bad = None
        bad_roots = None
        count = 0
        for level in ideals_by_size(d, n_max):
            for z in level:
                count += 1
                r = tableaux_words_bijection_check(z)
                if not r["pass"] and bad is None:
                    bad = {"ideal": r["params"]["ideal"]["cells"], **(r["counterexample"] or {})}
                if bad_roots is None and not ideal_roots_match(z):
                    bad_roots = {"ideal": [list(k) for k in z.key()]}
        params = {"diagram": d.to_json(), "max_ideal": n_max, "ideals": count}
        c.add("tableaux biject with reduced words of w_zeta", bad is None, params, bad)
        c.add("R(w_zeta) = hk(zeta) and w_zeta fully commutative", bad_roots is None, params, bad_roots)


def suite_pluscule_characterization(p: SuiteParams, c: Claims):
    max_length = p.max_ideal if p.max_ideal is not None else 5
    if p.diagrams:
        diagrams = p.diagrams
    else:
        diagrams = [d for k in (2, 3, 4) for d in small_diagrams(k)]
        diagrams += [d for d in standard_diagrams() if d.kappa <= 4 and d not in diagrams]
    for d in diagrams:
        r = pluscule_characterization_check(d, max_length)
        c.add("pluscule elements are exactly the w_zeta", r["pass"], r["params"], r["counterexample"])


def suite_classical(p: SuiteParams, c: Claims):
    for lam in ((3, 2, 1), (4, 2), (2, 2, 1)):
        for name, ok in triangle_check(lam).items():
            c.add(f"classical {name}", ok, {"lambda": list(lam)})
    d = CylindricDiagram.make((2, -3), (5, 4))
    t = find_tableau_for_word(d, EXAMPLE_WORD)
    c.add("the six-letter word comes from a tableau of a 6-cell ideal", t is not None,
          {"diagram": d.to_json(), "word": list(EXAMPLE_WORD),
           "tableau": [_cell(x) for x in t] if t else None})


SUITES: dict[str, Callable[[SuiteParams, Claims], None]] = {
    "ex-hook": suite_ex_hook,
    "pi-set": suite_pi_set,
    "ex-ord-regression": suite_ex_ord_regression,
    "hk-bijection": suite_hk_bijection,
    "hkr-recurrence": suite_hkr_recurrence,
    "pluscule-words": suite_pluscule_words,
    "order-isomorphism": suite_order_isomorphism,
    "trichotomy": suite_trichotomy,
    "ideal-bruhat": suite_ideal_bruhat,
    "tableaux-words": suite_tableaux_words,
    "pluscule-characterization": suite_pluscule_characterization,
    "classical": suite_classical,
}

# suites that check fixed examples and ignore the diagram/depth parameters
FIXED_SUITES = {"ex-hook", "pi-set", "ex-ord-regression", "classical"}


def run_suite(name: str, params: SuiteParams | None = None) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    params = params or SuiteParams()
    claims = Claims()
    start = time.perf_counter()
    try:
        SUITES[name](params, claims)
    except Exception as exc:  # a crash is a failed check, reported with its message
        claims.add("suite ran to completion", False, counterexample=f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    return {
        "check": name,
        "params": {} if name in FIXED_SUITES else params.to_json(),
        "pass": claims.ok,
        "counterexample": claims.counterexample,
        "claims": claims.items,
        "seconds": round(elapsed, 3),
    }


def _run_packed(args) -> dict:
    return run_suite(*args)


def run_suites(names: Sequence[str], params: SuiteParams | None = None, jobs: int = 1) -> list[dict]:
    """Run suites, optionally across a process pool; output order follows ``names``."""
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    work = [(name, params) for name in names]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_packed, work))
    return [_run_packed(w) for w in work]
