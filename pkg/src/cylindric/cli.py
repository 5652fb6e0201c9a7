"""Command line: render, enumerate and verify.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .diagrams import CylindricDiagram, content, generation, ideals_by_size, window
from .hooks import hk, to_dot
from .ideals_bruhat import word_of_ideal
from .render import render_ascii, render_svg
from .verify import SUITES, SuiteParams, run_suites
from .weyl import WordCapExceeded, reduced_words

FORMATS = ("text", "json", "dot", "svg")
ORDERS = ("diagram", "modified", "heap", "tableau")


class InputError(ValueError):
    pass


def parse_ints(text: str, name: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
    except ValueError:
        raise InputError(f"{name} must be comma-separated integers, got {text!r}") from None


@dataclass
class Config:
    omega: tuple[int, int] | None = None
    lam: tuple[int, ...] | None = None
    depth: int = 1
    max_ideal: int | None = None
    suites: list[str] = field(default_factory=lambda: list(SUITES))
    format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if (self.omega is None) != (self.lam is None):
            raise InputError("--omega and --lambda must be given together")
        if self.omega is not None:
            if len(self.omega) != 2 or self.omega[0] < 1 or self.omega[1] > -1:
                raise InputError(f"--omega must be M,-L with M, L >= 1, got {self.omega}")
        if self.depth < 0:
            raise InputError("--depth must be non-negative")
        if self.max_ideal is not None and self.max_ideal < 0:
            raise InputError("--max-ideal must be non-negative")
        if self.format not in FORMATS:
            raise InputError(f"--format must be one of {', '.join(FORMATS)}")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise InputError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
        self._diagram = None
        if self.omega is not None:
            try:
                self._diagram = CylindricDiagram.make(self.omega, self.lam)
            except ValueError as exc:
                raise InputError(str(exc)) from None

    @property
    def diagram(self) -> CylindricDiagram | None:
        return self._diagram

    def require_diagram(self) -> CylindricDiagram:
        if self._diagram is None:
            raise InputError("this command needs --omega and --lambda")
        return self._diagram


def config_from_args(args) -> Config:
    suites = list(SUITES)
    if getattr(args, "suite", None) is not None:
        suites = [s for s in args.suite.split(",") if s]
    return Config(
        omega=parse_ints(args.omega, "--omega") if args.omega else None,
        lam=parse_ints(args.lam, "--lambda") if args.lam is not None else None,
        depth=args.depth,
        max_ideal=args.max_ideal,
        suites=suites,
        format=args.format,
        seed=args.seed,
    )


# ------------------------------------------------------------------ commands


def cmd_render(cfg: Config, order: str, out) -> int:
    d = cfg.require_diagram()
    if cfg.format == "svg":
        out.write(render_svg(d, cfg.depth))
    elif cfg.format == "dot":
        out.write(to_dot(d, cfg.depth, order))
    elif cfg.format == "json":
        b = d.bottom
        json.dump({
            "diagram": d.to_json(),
            "depth": cfg.depth,
            "bottom": [[x.a, x.b] for x in b.cells],
            "maximal": sorted([x.a, x.b] for x in b.maximal),
            "minimal": sorted([x.a, x.b] for x in b.minimal),
            "cells": [{"cell": [x.a, x.b], "content": content(d, x)} for x in window(d, cfg.depth)],
        }, out)
        out.write("\n")
    else:
        out.write(render_ascii(d, cfg.depth))
    return 0


def cmd_enumerate(cfg: Config, what: str, cap: int, out) -> int:
    d = cfg.require_diagram()
    if what == "hooks":
        for x in window(d, cfg.depth):
            h = hk(d, x)
            if cfg.format == "json":
                out.write(json.dumps({"cell": [x.a, x.b], "content": content(d, x), "hk": h.to_json()}) + "\n")
            else:
                out.write(f"{x!r}  con={content(d, x)}  N={generation(d, x)}  hk={h}\n")
        return 0
    n = cfg.max_ideal if cfg.max_ideal is not None else 3
    if what == "words" and n > cap:
        raise WordCapExceeded(f"ideal size {n} exceeds the word cap {cap}")
    levels = ideals_by_size(d, n)
    targets = levels[n] if what == "words" else [z for level in levels for z in level]
    for z in targets:
        cells = [[x.a, x.b] for x in sorted(z.cells)]
        if what == "ideals":
            if cfg.format == "json":
                out.write(json.dumps(z.to_json()) + "\n")
            else:
                out.write((" ".join(f"({a},{b})" for a, b in cells) or "∅") + "\n")
            continue
        w = word_of_ideal(z).element
        for word in sorted(reduced_words(w, cap)):
            if cfg.format == "json":
                out.write(json.dumps({"cells": cells, "word": list(word)}) + "\n")
            else:
                out.write(f"{' '.join(f'({a},{b})' for a, b in cells)}  :  {' '.join(f's{i}' for i in word)}\n")
    return 0


def _counterexample_picture(report: dict) -> str | None:
    ce = report.get("counterexample") or {}
    diagram = ce.get("diagram")
    if not diagram:
        return None
    d = CylindricDiagram.from_json(diagram)
    cells = []
    detail = ce.get("detail")
    if isinstance(detail, dict):
        for key in ("x", "y", "cell"):
            if key in detail:
                cells.append(d.cell(*detail[key]))
    return render_ascii(d, ce.get("depth") or 1, highlight=cells)


def cmd_verify(cfg: Config, jobs: int, out, err) -> int:
    params = SuiteParams(
        diagrams=[cfg.diagram] if cfg.diagram is not None else None,
        depth=cfg.depth if cfg.diagram is not None else None,
        max_ideal=cfg.max_ideal,
        seed=cfg.seed,
    )
    reports = run_suites(cfg.suites, params, jobs)
    ok = all(r["pass"] for r in reports)
    if cfg.format == "text":
        for r in reports:
            out.write(f"{'PASS' if r['pass'] else 'FAIL'}  {r['check']:<26} {len(r['claims']):>4} claims  {r['seconds']:.2f}s\n")
    else:
        json.dump({"pass": ok, "suites": reports}, out, indent=2)
        out.write("\n")
    for r in reports:
        if not r["pass"]:
            err.write(f"counterexample in {r['check']}: {json.dumps(r['counterexample'])}\n")
            pic = _counterexample_picture(r)
            if pic:
                err.write(pic)
    return 0 if ok else 1


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--omega", help="period as M,-L")
    common.add_argument("--lambda", dest="lam", help="generalized partition A,B,...")
    common.add_argument("--depth", type=int, default=1, help="window depth (default 1)")
    common.add_argument("--max-ideal", type=int, default=None, help="largest ideal size")
    common.add_argument("--format", default="text", choices=FORMATS)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="cylindric", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("render", parents=[common], help="draw a window of a diagram")
    r.add_argument("--order", default="diagram", choices=ORDERS, help="order drawn by --format dot")
    e = sub.add_parser("enumerate", parents=[common], help="list ideals, hook lengths or words")
    e.add_argument("what", choices=("ideals", "hooks", "words"))
    e.add_argument("--cap", type=int, default=12, help="longest word listed (default 12)")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", default=None, help=f"comma-separated subset of: {', '.join(SUITES)}")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = config_from_args(args)
        if args.command == "render":
            return cmd_render(cfg, args.order, out)
        if args.command == "enumerate":
            return cmd_enumerate(cfg, args.what, args.cap, out)
        return cmd_verify(cfg, args.jobs, out, err)
    except (InputError, WordCapExceeded) as exc:
        err.write(f"error: {exc}\n")
        return 2
