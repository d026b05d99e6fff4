"""Command line front end.

Every command emits a single JSON document on stdout (bare arrays for
vector results, schema-tagged objects otherwise).  Exit codes: 0 success,
1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fan, render, shear, triangulation
from .curves import AllowableCurve, TaggedArc, Puncture, Tagging, \
    arcs_compatible, classify_pair, curves_compatible
from .errors import DomainError, BoundExhausted, SphereLamError
from .lattice import Slope
from .shear import BASE_TRI, Tangle, TypeITri
from .selftest import run_selftest

SCHEMA = "sphere-lam/1"


def _doc(**fields) -> str:
    return json.dumps({"schema": SCHEMA, **fields}, indent=None, sort_keys=False)


def _parse_curve(text: str) -> AllowableCurve:
    return AllowableCurve.from_json(json.loads(text))


def _parse_tri(text: str) -> TypeITri:
    return TypeITri.from_json(json.loads(text))


def _parse_tagged_triangulation(text: str) -> triangulation.TaggedTriangulation:
    return triangulation.TaggedTriangulation.from_json(json.loads(text))


def _parse_object(text: str):
    """An arc or a curve, depending on the JSON fields."""
    obj = json.loads(text)
    if "closed" in obj or (obj.get("ends") and "spiral" in obj["ends"][0]):
        return AllowableCurve.from_json(obj)
    return TaggedArc.from_json(obj)


def _parse_tags(items: list[str]):
    out = []
    for item in items:
        v, _, t = item.partition("=")
        out.append((Puncture.parse(v.strip()), Tagging(t.strip())))
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spherelam",
        description="Exact curves, triangulations and shear coordinates "
        "on the four-punctured sphere.",
    )
    p.add_argument("--plain", action="store_true",
                   help="line-oriented text output instead of JSON")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("shear", help="shear coordinates of a curve")
    s.add_argument("--curve", required=True, help="curve JSON")
    s.add_argument("--tri", help="type-I triangulation JSON (default: base)")
    s.add_argument("--method", choices=("formula", "word", "oracle"),
                   default="formula")

    s = sub.add_parser("compat", help="compatibility of two arcs or curves")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)

    s = sub.add_parser("triangulate", help="build a triangulation from type data")
    s.add_argument("--type", required=True, dest="tri_type",
                   choices=("I", "II", "III", "IV", "V", "VI"))
    s.add_argument("--p", help="first slope")
    s.add_argument("--q", help="second slope")
    s.add_argument("--r", help="third slope (types I, VI)")
    s.add_argument("--v", help="distinguished puncture, e.g. 00")
    s.add_argument("--v-prime", help="secondary puncture (types III, IV)")
    s.add_argument("--tag", action="append", default=[],
                   help="puncture tagging, e.g. 00=plain (repeatable)")

    s = sub.add_parser("classify", help="type data of a triangulation")
    s.add_argument("--tri", required=True, help="triangulation JSON (6 arcs)")

    s = sub.add_parser("flip", help="flip one arc of a triangulation")
    s.add_argument("--tri", required=True)
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("badj", help="signed adjacency matrix (all-plain)")
    s.add_argument("--tri", required=True)

    s = sub.add_parser("mutate", help="matrix mutation")
    s.add_argument("--matrix", required=True, help="6x6 matrix JSON")
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("cones", help="maximal cones at bounded height")
    s.add_argument("--max-height", type=int, default=6)
    s.add_argument("--json", action="store_true", help="accepted for symmetry")

    s = sub.add_parser("locate", help="quasi-lamination of an integer vector")
    s.add_argument("--vector", required=True, help='JSON array, e.g. "[-3,2,1,-3,2,1]"')
    s.add_argument("--max-height", type=int, default=6)

    s = sub.add_parser("gvectors", help="g-vector list at bounded height")
    s.add_argument("--max-height", type=int, default=6)

    s = sub.add_parser("universal", help="universal coefficient list")
    s.add_argument("--form", choices=("thm12", "thm81"), default="thm81")
    s.add_argument("--max-height", type=int, default=6)

    s = sub.add_parser("tangle-check", help="null-tangle witness search")
    s.add_argument("--tangle", required=True,
                   help='JSON: [{"curve": {...}, "weight": n}, ...]')
    s.add_argument("--max-height", type=int, default=6)

    s = sub.add_parser("render", help="render lifted curves to SVG")
    s.add_argument("--curve", action="append", default=[])
    s.add_argument("--tri", help="type-I triangulation for the grid")
    s.add_argument("--window", default="0,2,0,2",
                   help="xmin,xmax,ymin,ymax")
    s.add_argument("--out", required=True, help="output SVG path")

    sub.add_parser("selftest", help="re-run the published fixtures")
    return p


def _cmd_shear(args) -> str:
    curve = _parse_curve(args.curve)
    tri = _parse_tri(args.tri) if args.tri else BASE_TRI
    if args.method == "formula":
        vec = shear.shear_wrt(curve, tri)
    elif args.method == "word":
        if tri != BASE_TRI:
            raise DomainError("the word method computes against the base triangulation")
        vec = shear.shear_via_word(curve)
    else:
        if tri != BASE_TRI:
            raise DomainError("the oracle computes against the base triangulation")
        vec = shear.shear_oracle(curve)
    return json.dumps(list(vec))


def _cmd_compat(args) -> str:
    x, y = _parse_object(args.a), _parse_object(args.b)
    if isinstance(x, TaggedArc) != isinstance(y, TaggedArc):
        raise DomainError("compare two arcs or two curves, not a mix")
    if isinstance(x, TaggedArc):
        ok = arcs_compatible(x, y)
        klass = classify_pair(x, y).value
        return _doc(compatible=ok, **{"class": klass})
    return _doc(compatible=curves_compatible(x, y))


def _cmd_triangulate(args) -> str:
    slopes = [Slope.parse(s) for s in (args.p, args.q, args.r) if s]
    spec = triangulation.TriType(
        args.tri_type,
        tuple(slopes),
        v=Puncture.parse(args.v) if args.v else None,
        v_prime=Puncture.parse(args.v_prime) if args.v_prime else None,
        taggings=_parse_tags(args.tag),
    )
    tri = triangulation.build_type(spec)
    return _doc(triangulation=tri.to_json(),
                type=triangulation.classify(tri).to_json())


def _cmd_classify(args) -> str:
    tri = _parse_tagged_triangulation(args.tri)
    return _doc(type=triangulation.classify(tri).to_json())


def _cmd_flip(args) -> str:
    tri = _parse_tagged_triangulation(args.tri)
    if not 0 <= args.k < 6:
        raise DomainError("arc index must be in 0..5")
    flipped = triangulation.flip(tri, args.k)
    return _doc(triangulation=flipped.to_json(),
                type=triangulation.classify(flipped).to_json())


def _cmd_badj(args) -> str:
    tri = _parse_tagged_triangulation(args.tri)
    return json.dumps([list(r) for r in triangulation.signed_adjacency(tri)])


def _cmd_mutate(args) -> str:
    B = tuple(tuple(row) for row in json.loads(args.matrix))
    if len(B) != 6 or any(len(r) != 6 for r in B):
        raise DomainError("matrix must be 6x6")
    if any(B[i][j] != -B[j][i] for i in range(6) for j in range(6)):
        raise DomainError("matrix must be skew-symmetric")
    if not 0 <= args.k < 6:
        raise DomainError("mutation index must be in 0..5")
    return json.dumps([list(r) for r in triangulation.mutate(B, args.k)])


def _cmd_cones(args) -> str:
    cones = fan.cone_index(args.max_height).cones
    return _doc(
        max_height=args.max_height,
        count=len(cones),
        cones=[
            {"kind": c.kind, "generators": [list(g) for g in c.generators]}
            for c in cones
        ],
    )


def _cmd_locate(args) -> str:
    v = json.loads(args.vector)
    if len(v) != 6 or any(not isinstance(x, int) for x in v):
        raise DomainError("vector must be six integers")
    lam = fan.locate(tuple(v), args.max_height)
    return _doc(lamination=[
        {"curve": c.to_json(), "weight": w} for c, w in lam.weights
    ])


def _cmd_gvectors(args) -> str:
    return _doc(max_height=args.max_height,
                vectors=[list(v) for v in fan.g_vectors(args.max_height)])


def _cmd_universal(args) -> str:
    vecs = fan.universal_coeffs(args.max_height, args.form)
    return _doc(max_height=args.max_height, vectors=[list(v) for v in vecs])


def _cmd_tangle_check(args) -> str:
    entries = json.loads(args.tangle)
    weights = tuple(
        (AllowableCurve.from_json(e["curve"]), int(e["weight"])) for e in entries
    )
    tangle = Tangle(weights)
    witness = shear.find_witness(tangle, args.max_height)
    if witness is None:
        return _doc(witness=None)
    return _doc(witness=witness.to_json(),
                shear=list(shear.tangle_shear(tangle, witness)))


def _cmd_render(args) -> str:
    curves = tuple(_parse_curve(c) for c in args.curve)
    tri = _parse_tri(args.tri) if args.tri else BASE_TRI
    window = tuple(int(x) for x in args.window.split(","))
    if len(window) != 4:
        raise DomainError("window must be xmin,xmax,ymin,ymax")
    spec = render.RenderSpec(curves=curves, triangulation=tri, window=window)
    doc = render.render(spec)
    with open(args.out, "w") as fh:
        fh.write(doc)
    return _doc(written=args.out, bytes=len(doc))


def _cmd_selftest(_args) -> str:
    checks = run_selftest()
    failed = [c for c in checks if not c[1]]
    doc = _doc(
        passed=len(checks) - len(failed),
        failed=len(failed),
        failures=[c[0] for c in failed],
    )
    if failed:
        raise DomainError(doc)
    return doc


_DISPATCH = {
    "shear": _cmd_shear,
    "compat": _cmd_compat,
    "triangulate": _cmd_triangulate,
    "classify": _cmd_classify,
    "flip": _cmd_flip,
    "badj": _cmd_badj,
    "mutate": _cmd_mutate,
    "cones": _cmd_cones,
    "locate": _cmd_locate,
    "gvectors": _cmd_gvectors,
    "universal": _cmd_universal,
    "tangle-check": _cmd_tangle_check,
    "render": _cmd_render,
    "selftest": _cmd_selftest,
}


def _plain_text(out: str) -> str:
    """Flatten a JSON document to line-oriented text."""
    doc = json.loads(out)
    if isinstance(doc, list):
        return " ".join(json.dumps(x) for x in doc)
    lines = []
    for key, value in doc.items():
        if key == "schema":
            continue
        if isinstance(value, list):
            lines.append(f"{key}:")
            lines.extend("  " + json.dumps(item) for item in value)
        else:
            lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines)


def run(argv: list[str]) -> tuple[int, str]:
    """Dispatch a command line; returns (exit code, stdout text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (int(e.code or 0) and 2, "")
    try:
        out = _DISPATCH[args.command](args)
    except (DomainError, BoundExhausted) as e:
        return 1, json.dumps({"schema": SCHEMA, "error": str(e)})
    except (ValueError, KeyError, json.JSONDecodeError, SphereLamError) as e:
        return 1, json.dumps({"schema": SCHEMA, "error": f"{type(e).__name__}: {e}"})
    if args.plain:
        return 0, _plain_text(out)
    return 0, out


def main(argv: list[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
