#!/usr/bin/env python3
"""Render the worked examples into a small SVG gallery.

Writes four files into the output directory (default ./gallery):

    square_on_plane.svg      1+x+y+xy on the plane, both polygons
    cremona_conic.svg        x+y+xy on the sixfold del Pezzo
    nodal_cubic.svg          the degree 3 cubic on the nine ray fan
    nine_ray_fan.svg         that fan by itself

Every byte is deterministic, so re-running never dirties a checkout.
"""

import argparse
import pathlib

from toricbn import build_fan, laurent_curve, preset, render_fan_svg, render_polygons_svg

NINE_RAY_FIXED = [
    (2, -1), (-1, 2), (-1, -1),
    (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="gallery", help="output directory")
    args = parser.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    nine = build_fan(NINE_RAY_FIXED)
    jobs = {
        "square_on_plane.svg": render_polygons_svg(
            preset("P2"),
            laurent_curve({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}),
        ),
        "cremona_conic.svg": render_polygons_svg(
            preset("Bl3P2"),
            laurent_curve({(1, 0): 1, (0, 1): 1, (1, 1): 1}),
        ),
        "nodal_cubic.svg": render_polygons_svg(
            nine,
            laurent_curve({(2, 1): 1, (1, 2): 1, (1, 1): -3, (0, 0): 1}),
        ),
        "nine_ray_fan.svg": render_fan_svg(nine),
    }
    for name, svg in jobs.items():
        path = out / name
        path.write_text(svg, encoding="utf-8")
        print(f"wrote {path} ({len(svg)} bytes)")


if __name__ == "__main__":
    main()
