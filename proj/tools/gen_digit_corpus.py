#!/usr/bin/env python3
"""Generate the vector digit corpus under data/digits.

Each digit is a set of centre-line strokes, randomly distorted, thickened
with shapely and traced back as closed cubic Bezier outlines (outer rings
and holes), which is the form a bitmap vectorizer produces.

Usage: gen_digit_corpus.py [--out DIR] [--seed N]
"""

import argparse
import json
import math
import random
from pathlib import Path

from shapely.geometry import LineString, MultiPolygon
from shapely.ops import unary_union


def arc(cx, cy, rx, ry, a0, a1, n=24):
    pts = []
    for i in range(n + 1):
        a = math.radians(a0 + (a1 - a0) * i / n)
        pts.append((cx + rx * math.cos(a), cy + ry * math.sin(a)))
    return pts


# Image coordinates: x to the right, y downwards, 28 x 28 canvas.
SKELETONS = {
    0: [arc(14, 14, 5, 8.5, 0, 360)],
    1: [[(11.5, 8.5), (14.5, 5), (14.5, 23.5)]],
    2: [arc(14, 10, 5, 5, 200, 380) + [(9, 23), (20, 23)]],
    3: [arc(13.5, 9.5, 4.5, 4.5, 200, 450), arc(13.5, 18.5, 5.0, 4.5, 270, 520)],
    4: [[(16.5, 5), (8, 18), (21, 18)], [(16.5, 9), (16.5, 24)]],
    5: [[(19, 5), (10.5, 5), (10, 13)] + arc(13.5, 17.5, 5.5, 5.5, 232, 510)],
    6: [[(18.5, 5.5), (14, 7.5), (10.5, 11), (9, 15.5)], arc(14, 18, 5, 5, 0, 360)],
    7: [[(8.5, 5), (20, 5), (12, 24)]],
    8: [arc(14, 9.5, 4, 4.5, 0, 360), arc(14, 18.5, 5, 5, 0, 360)],
    9: [arc(14, 10, 5, 5, 0, 360), [(19, 10), (18.5, 16), (16, 24)]],
}


def distort(strokes, rng, amount):
    if amount == 0:
        return strokes
    shear = rng.uniform(-0.25, 0.25) * amount
    sx = 1 + rng.uniform(-0.15, 0.1) * amount
    sy = 1 + rng.uniform(-0.12, 0.08) * amount
    rot = math.radians(rng.uniform(-8, 8) * amount)
    tx = rng.uniform(-1.5, 1.5) * amount
    ty = rng.uniform(-1.2, 1.2) * amount
    bend = rng.uniform(-0.6, 0.6) * amount
    out = []
    for stroke in strokes:
        pts = []
        for x, y in stroke:
            x, y = x - 14, y - 14
            x = x * sx + shear * y + bend * math.sin(y / 4)
            y = y * sy
            x, y = x * math.cos(rot) - y * math.sin(rot), x * math.sin(rot) + y * math.cos(rot)
            x += 14 + tx + rng.gauss(0, 0.3 * amount)
            y += 14 + ty + rng.gauss(0, 0.3 * amount)
            pts.append((x, y))
        out.append(pts)
    return out


def ring_to_bezier(coords):
    pts = list(coords)[:-1]
    n = len(pts)
    segs = []
    for i in range(n):
        p0, p1 = pts[i - 1], pts[i]
        p2, p3 = pts[(i + 1) % n], pts[(i + 2) % n]
        c1 = (p1[0] + (p2[0] - p0[0]) / 6, p1[1] + (p2[1] - p0[1]) / 6)
        c2 = (p2[0] - (p3[0] - p1[0]) / 6, p2[1] - (p3[1] - p1[1]) / 6)
        segs.append([p1, c1, c2, p2])
    return [[[round(c, 4) for c in p] for p in seg] for seg in segs]


def trace(strokes, width):
    shape = unary_union(
        [LineString(s).buffer(width / 2, quad_segs=4) for s in strokes]
    ).simplify(0.3)
    polys = list(shape.geoms) if isinstance(shape, MultiPolygon) else [shape]
    subpaths = []
    for poly in polys:
        subpaths.append(ring_to_bezier(poly.exterior.coords))
        for hole in poly.interiors:
            subpaths.append(ring_to_bezier(hole.coords))
    # Rounding can separate a segment end from the next start; rejoin.
    for sp in subpaths:
        for i, seg in enumerate(sp):
            sp[(i + 1) % len(sp)][0] = list(seg[3])
    return subpaths


def make(label, rng, amount):
    width = 2.8 if amount == 0 else rng.uniform(2.2, 3.4)
    strokes = distort(SKELETONS[label], rng, amount)
    return {"expected_label": label, "subpaths": trace(strokes, width)}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "digits"))
    parser.add_argument("--seed", type=int, default=20191)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    sets = {
        "templates": [make(d, rng, 0) for d in range(10)],
        "train": [make(d, rng, 1) for d in range(10) for _ in range(8)],
        "holdout": [make(d, rng, 1) for d in range(10) for _ in range(6)],
        "seeds": [make(5, rng, 1) for _ in range(260)],
    }
    for name, models in sets.items():
        with open(out / f"{name}.json", "w") as f:
            json.dump(models, f, separators=(",", ":"))
            f.write("\n")
        print(f"{name}: {len(models)} models")


if __name__ == "__main__":
    main()
