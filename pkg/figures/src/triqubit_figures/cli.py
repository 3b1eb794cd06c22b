"""render_figures <run_dir> [--figures fig1,fig2,...] [--out DIR]"""

from __future__ import annotations

import argparse
import sys

from .io import FigureDataError
from .render import FIGURES, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_figures",
        description="Render publication-style figures from a triqubit run directory",
    )
    parser.add_argument("run_dir")
    parser.add_argument("--figures", default=",".join(sorted(FIGURES)),
                        help="comma-separated figure ids (default: all eight)")
    parser.add_argument("--out", help="output directory (default: the run directory)")
    args = parser.parse_args(argv)
    requested = [name.strip() for name in args.figures.split(",") if name.strip()]
    failures = 0
    for figure_id in requested:
        try:
            path = render(figure_id, args.run_dir, args.out)
            print(f"rendered {figure_id} -> {path}")
        except FigureDataError as exc:
            failures += 1
            print(f"{figure_id}: {exc}", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
