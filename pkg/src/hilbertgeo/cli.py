"""Command-line interface.

JSON goes to stdout (17 significant digits, so values round-trip at
double precision); ``--format csv`` prints a header row and one value
row instead.  Exit codes: 0 success, 2 usage error, 3 quadrature
non-convergence, 4 geometric degeneracy or I/O failure.  The
HILBERTGEO_THREADS environment variable caps internal parallelism
(0 = all cores; unset = serial).
"""

import argparse
import json
import sys

import numpy as np

from . import bounds, hexplane, svgfig, verify
from .domains import PolygonDomain, domain_from_dict
from .errors import GeometryError, HilbertGeoError, InvalidParameter, NonConvergence
from .ideal import (
    IdealTriangle,
    canonical_triangle_region,
    shape_of_ideal_triangle,
    shape_parameter,
    triangle_area_closed,
    triangle_area_numeric,
)
from .metric import (
    Normalization,
    hilbert_area_mc,
    hilbert_area_quadrature,
    hilbert_distance,
    p_area_density,
)
from .projective import ProjPoint, cross_ratio_proj
from .quadrature import (
    Rect,
    RegionUnion,
    TriangleRegion,
    UniformTriangleSampler,
)


def _fmt_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        if not np.isfinite(v):
            return "null"
        return format(float(v), ".17g")
    if v is None:
        return "null"
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_fmt_value(x) for x in v) + "]"
    raise TypeError("cannot serialize %r" % (v,))


def _emit(payload, fmt):
    if fmt == "csv":
        keys = list(payload)
        print(",".join(keys))
        print(",".join(_fmt_value(payload[k]).replace(",", ";") for k in keys))
        return
    body = ", ".join('"%s": %s' % (k, _fmt_value(v)) for k, v in payload.items())
    print("{" + body + "}")


def _parse_pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidParameter("expected 'x,y', got %r" % text)
    return float(parts[0]), float(parts[1])


def _parse_domain(text):
    return domain_from_dict(json.loads(text))


def _parse_vertex(v):
    if len(v) == 2:
        return ProjPoint(v[0], v[1], 1.0)
    if len(v) == 3:
        return ProjPoint(*v)
    raise InvalidParameter("vertices must be [x,y] or [x,y,z]")


def _parse_tau(text):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return np.asarray(json.load(fh), dtype=float)
    return np.array([float(x) for x in text.split(",")])


def _parse_chi(text):
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def _parse_region(text):
    d = json.loads(text)
    kind = d.get("type")
    if kind == "rect":
        (x0, x1), (y0, y1) = d["x"], d["y"]
        return Rect(x0, x1, y0, y1)
    if kind == "triangle":
        return TriangleRegion(*d["vertices"])
    if kind == "polygon":
        v = np.asarray(d["vertices"], float)
        PolygonDomain(v)  # validates convex ccw
        tris = [TriangleRegion(v[0], v[i], v[i + 1]) for i in range(1, len(v) - 1)]
        return RegionUnion(*tris)
    if kind == "canonical-ideal-triangle":
        return canonical_triangle_region(float(d["t"]))
    raise InvalidParameter("unknown region type %r" % (kind,))


def _region_samplers(region):
    if isinstance(region, TriangleRegion):
        return [UniformTriangleSampler(region.p0, region.p1, region.p2)]
    if isinstance(region, RegionUnion):
        out = []
        for r in region.regions:
            out.extend(_region_samplers(r))
        return out
    raise InvalidParameter("Monte Carlo area needs a triangle or polygon region")


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="hilbertgeo",
        description="Hilbert-geometry computations: distances, densities, "
        "areas, Hex-plane facts, shape parameters and surface bounds.")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cr", help="cross-ratio of four reals")
    p.add_argument("y", type=float, nargs=4)

    p = sub.add_parser("dist", help="Hilbert distance between two points")
    p.add_argument("--domain", required=True)
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--norm", choices=("full", "announced"), default="full")

    p = sub.add_parser("density", help="p-area density at a point")
    p.add_argument("--domain", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--samples", type=int, default=1024)
    p.add_argument("--norm", choices=("full", "announced"), default="full")

    p = sub.add_parser("area", help="Hilbert area of a region")
    p.add_argument("--domain", required=True)
    p.add_argument("--region", required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--norm", choices=("full", "announced"), default="full")
    p.add_argument("--mc", type=int, default=0,
                   help="use Monte Carlo with this many samples")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("hex", help="Hex-plane norm, distance, circle stats")
    hx = p.add_subparsers(dest="hex_command", required=True)
    h = hx.add_parser("norm")
    h.add_argument("vector")
    h = hx.add_parser("dist")
    h.add_argument("a")
    h.add_argument("b")
    h = hx.add_parser("circle")
    h.add_argument("radius", type=float)
    h.add_argument("--samples", type=int, default=60)

    p = sub.add_parser("shape", help="shape parameter of an ideal triangle")
    p.add_argument("--domain", required=True)
    p.add_argument("--vertices", required=True,
                   help="JSON list of three boundary points")

    p = sub.add_parser("triangle-area", help="ideal-triangle area B(t)")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--norm", choices=("full", "announced"), default="full")

    p = sub.add_parser("surface-bound", help="area lower bound of a surface")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--tau", required=True,
                   help="comma list of triangle invariants, or @file.json")
    p.add_argument("--norm", choices=("full", "announced"), default="announced")

    p = sub.add_parser("orbifold-bound", help="area lower bound of an orbifold")
    p.add_argument("--chi-orb", dest="chi_orb", required=True,
                   help="orbifold Euler characteristic, e.g. -1/42")

    p = sub.add_parser("plot-foliation", help="SVG of the canonical triangle")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--size", type=int, default=480)
    p.add_argument("--leaves", type=int, default=14)

    sub.add_parser("verify", help="run the full numeric verification suite")
    return ap


def _run(args):
    fmt = args.format
    cmd = args.command
    if cmd == "cr":
        pts = [ProjPoint(y, 0.0, 1.0) for y in args.y]
        rp = cross_ratio_proj(*pts)
        value = None if rp.is_infinite() else rp.value()
        _emit({"cr": value, "num": rp.num, "den": rp.den}, fmt)
        return 0
    if cmd == "dist":
        dom = _parse_domain(args.domain)
        d = hilbert_distance(dom, np.array(_parse_pair(args.src)),
                             np.array(_parse_pair(args.dst)),
                             Normalization.parse(args.norm))
        _emit({"distance": d, "normalization": args.norm}, fmt)
        return 0
    if cmd == "density":
        dom = _parse_domain(args.domain)
        dens = p_area_density(dom, np.array(_parse_pair(args.point)),
                              n=args.samples, norm=Normalization.parse(args.norm))
        _emit({"density": dens, "normalization": args.norm,
               "samples": args.samples}, fmt)
        return 0
    if cmd == "area":
        dom = _parse_domain(args.domain)
        region = _parse_region(args.region)
        norm = Normalization.parse(args.norm)
        if args.mc > 0:
            res = hilbert_area_mc(dom, _region_samplers(region), args.mc,
                                  args.seed, norm)
        else:
            res = hilbert_area_quadrature(dom, region, norm, tol=args.tol)
        _emit({"area": res.value, "error_estimate": res.error_estimate,
               "evaluations": res.evaluations, "normalization": args.norm}, fmt)
        return 0
    if cmd == "hex":
        if args.hex_command == "norm":
            _emit({"norm": hexplane.hex_norm(_parse_pair(args.vector))}, fmt)
        elif args.hex_command == "dist":
            _emit({"distance": hexplane.hex_distance(_parse_pair(args.a),
                                                     _parse_pair(args.b))}, fmt)
        else:
            circ, area = hexplane.hex_circle_stats(args.radius, args.samples)
            _emit({"circumference": circ, "p_area": area,
                   "radius": args.radius}, fmt)
        return 0
    if cmd == "shape":
        dom = _parse_domain(args.domain)
        verts = [_parse_vertex(v) for v in json.loads(args.vertices)]
        if len(verts) != 3:
            raise InvalidParameter("need exactly three vertices")
        tri = IdealTriangle(dom, *verts)
        raw = shape_of_ideal_triangle(tri, canonical=False)
        canon = raw.canonicalized()
        _emit({"t": canon.t, "t_raw": raw.t, "tau": raw.tau}, fmt)
        return 0
    if cmd == "triangle-area":
        norm = Normalization.parse(args.norm)
        if args.numeric:
            area = triangle_area_numeric(args.t, args.tol) * norm.area_scale
        else:
            area = triangle_area_closed(args.t, norm)
        _emit({"area": area, "t": args.t, "normalization": args.norm}, fmt)
        return 0
    if cmd == "surface-bound":
        norm = Normalization.parse(args.norm)
        spec = bounds.SurfaceSpec(args.genus, _parse_tau(args.tau))
        _emit({
            "alpha": bounds.alpha_bound(spec, norm),
            "coarse": bounds.coarse_bound(bounds.euler_characteristic(args.genus), norm),
            "normalization": args.norm,
            "triangle_count": bounds.ideal_triangle_count(args.genus),
        }, fmt)
        return 0
    if cmd == "orbifold-bound":
        spec = bounds.OrbifoldSpec(_parse_chi(args.chi_orb))
        _emit({"bound": bounds.orbifold_bound(spec),
               "chi_orb": spec.chi_orb, "normalization": "announced"}, fmt)
        return 0
    if cmd == "plot-foliation":
        nbytes = svgfig.emit_foliation_svg(args.t, args.out, size=args.size,
                                           leaves=args.leaves)
        _emit({"out": args.out, "bytes": nbytes}, fmt)
        return 0
    if cmd == "verify":
        results = verify.run_all()
        failed = [r for r in results if not r.passed]
        print("%d/%d checks passed" % (len(results) - len(failed), len(results)))
        return 0 if not failed else 1
    raise InvalidParameter("unknown command %r" % (cmd,))


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return _run(args)
    except NonConvergence as exc:
        print("non-convergence: %s" % exc, file=sys.stderr)
        return 3
    except InvalidParameter as exc:
        print("invalid parameter: %s" % exc, file=sys.stderr)
        return 2
    except GeometryError as exc:
        print("geometric degeneracy: %s" % exc, file=sys.stderr)
        return 4
    except (OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4
    except HilbertGeoError as exc:  # pragma: no cover - safety net
        print("error: %s" % exc, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
