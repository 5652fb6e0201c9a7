"""Write ASCII and SVG pictures of the standard diagrams into a directory.

    python scripts/render_examples.py [outdir]
"""
import pathlib
import sys

from cylindric.diagrams import CylindricDiagram
from cylindric.render import render_ascii, render_svg
from cylindric.verify import NINE_RESIDUE_DIAGRAM, standard_diagrams


def slug(d: CylindricDiagram) -> str:
    return f"m{d.m}_l{d.ell}_" + "_".join(str(p) for p in d.lam).replace("-", "n")


def main(outdir: str = "renders") -> int:
    out = pathlib.Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for d in standard_diagrams() + [CylindricDiagram.make(*NINE_RESIDUE_DIAGRAM)]:
        name = slug(d)
        (out / f"{name}.txt").write_text(render_ascii(d, depth=1))
        (out / f"{name}.svg").write_text(render_svg(d, depth=1))
        print(out / name)
    return 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
