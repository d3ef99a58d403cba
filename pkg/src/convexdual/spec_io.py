"""JSON body specifications: parsing, evaluation and serialization.

A specification is a tree.  Leaves build bodies directly (``disk``,
``polygon``, ``pieces``, ``gallery``); nodes apply an operation to one
``operand`` (or to ``left`` and ``right`` for ``glue``).  Angles are radians.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .body import PlanarBody, disk, make_body, polygon, reflect, rotate
from .errors import ConvexError, SpecParseError
from .gallery import gallery
from .geometry import Point2
from .pieces import DEFAULT_SAMPLES, CircularArc, Corner, PolarArc, SampledArc, SupportPiece
from .polarity import dual, hull_with_points, intersect_halfplanes, polar
from .selfdual import glue_halves, make_selfdual, make_selfdual_smooth, normalize_rotation

LEAVES = ("disk", "polygon", "pieces", "gallery")
UNARY = {
    "polar": polar,
    "dual": dual,
    "reflect": reflect,
    "make_selfdual": make_selfdual,
    "make_selfdual_smooth": make_selfdual_smooth,
    "normalize_rotation": normalize_rotation,
}
WITH_ARGS = ("rotate", "hull_with_points", "intersect_halfplanes")
NODE_TYPES = LEAVES + tuple(UNARY) + WITH_ARGS + ("glue",)
PIECE_KINDS = ("corner", "circular_arc", "sampled_arc", "polar_arc")


@dataclass
class BodySpec:
    type: str
    fields: dict = field(default_factory=dict)
    operands: list[BodySpec] = field(default_factory=list)
    path: str = "$"


class SpecEvalError(ConvexError):
    """An evaluation failure, carrying the code of the underlying error and the node path."""

    def __init__(self, path: str, cause: Exception):
        self.path = path
        self.cause = cause
        code = getattr(cause, "code", type(cause).__name__)
        super().__init__(f"at {path}: {cause}", code=code)


# ---------------------------------------------------------------- parsing


def _fail(path: str, message: str):
    raise SpecParseError(f"{message} (at {path})")


def _number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(path, f"expected a number, got {json.dumps(value)}")
    return float(value)


def _point(value, path: str) -> tuple[float, float]:
    if not isinstance(value, list) or len(value) != 2:
        _fail(path, "expected a point [x, y]")
    return _number(value[0], path + "[0]"), _number(value[1], path + "[1]")


def _points(value, path: str) -> list[tuple[float, float]]:
    if not isinstance(value, list):
        _fail(path, "expected a list of points")
    return [_point(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _numbers(value, path: str) -> list[float]:
    if not isinstance(value, list):
        _fail(path, "expected a list of numbers")
    return [_number(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _check_keys(obj: dict, allowed: set, path: str) -> None:
    extra = set(obj) - allowed
    if extra:
        _fail(path, f"unexpected key(s) {', '.join(sorted(extra))}")


def _require(obj: dict, key: str, path: str):
    if key not in obj:
        _fail(path, f"missing key {key!r}")
    return obj[key]


def _parse_arc_source(obj, path: str) -> dict:
    if not isinstance(obj, dict):
        _fail(path, "expected an arc object")
    kind = _require(obj, "kind", path)
    if kind == "circular_arc":
        _check_keys(obj, {"kind", "center", "radius"}, path)
        return {"kind": kind, "center": _point(_require(obj, "center", path), path + ".center"),
                "radius": _number(_require(obj, "radius", path), path + ".radius")}
    if kind == "sampled_arc":
        _check_keys(obj, {"kind", "thetas", "values", "derivatives"}, path)
        out = {"kind": kind, "thetas": _numbers(_require(obj, "thetas", path), path + ".thetas"),
               "values": _numbers(_require(obj, "values", path), path + ".values")}
        if "derivatives" in obj:
            out["derivatives"] = _numbers(obj["derivatives"], path + ".derivatives")
        return out
    if kind == "polar_arc":
        _check_keys(obj, {"kind", "source"}, path)
        return {"kind": kind, "source": _parse_arc_source(_require(obj, "source", path), path + ".source")}
    _fail(path, f"unknown arc kind {json.dumps(kind)}")


def _parse_piece(obj, path: str) -> dict:
    if not isinstance(obj, dict):
        _fail(path, "expected a piece object")
    kind = _require(obj, "kind", path)
    if kind not in PIECE_KINDS:
        _fail(path, f"unknown piece kind {json.dumps(kind)}; expected one of {', '.join(PIECE_KINDS)}")
    out = {"kind": kind}
    for key in ("from_angle", "to_angle"):
        if key in obj:
            out[key] = _number(obj[key], f"{path}.{key}")
        elif kind != "sampled_arc":
            _fail(path, f"missing key {key!r}")
    if kind == "corner":
        _check_keys(obj, {"kind", "point", "from_angle", "to_angle"}, path)
        out["point"] = _point(_require(obj, "point", path), path + ".point")
        return out
    rest = {k: v for k, v in obj.items() if k not in ("from_angle", "to_angle")}
    out.update(_parse_arc_source(rest, path))
    return out


def _parse_node(obj, path: str) -> BodySpec:
    if not isinstance(obj, dict):
        _fail(path, "expected an object with a 'type' key")
    kind = _require(obj, "type", path)
    if kind not in NODE_TYPES:
        _fail(path, f"unknown type {json.dumps(kind)}")
    if kind == "disk":
        _check_keys(obj, {"type", "radius", "center"}, path)
        f = {"radius": _number(obj.get("radius", 1.0), path + ".radius")}
        if "center" in obj:
            f["center"] = _point(obj["center"], path + ".center")
        return BodySpec(kind, f, path=path)
    if kind == "polygon":
        _check_keys(obj, {"type", "vertices"}, path)
        return BodySpec(kind, {"vertices": _points(_require(obj, "vertices", path), path + ".vertices")}, path=path)
    if kind == "pieces":
        _check_keys(obj, {"type", "pieces"}, path)
        raw = _require(obj, "pieces", path)
        if not isinstance(raw, list) or not raw:
            _fail(path + ".pieces", "expected a non-empty list of pieces")
        return BodySpec(kind, {"pieces": [_parse_piece(p, f"{path}.pieces[{i}]") for i, p in enumerate(raw)]}, path=path)
    if kind == "gallery":
        _check_keys(obj, {"type", "name", "params"}, path)
        name = _require(obj, "name", path)
        if not isinstance(name, str):
            _fail(path + ".name", "expected a string")
        params = obj.get("params")
        if params is not None and not isinstance(params, (list, dict)):
            _fail(path + ".params", "expected a list or an object")
        return BodySpec(kind, {"name": name, "params": params}, path=path)
    if kind == "glue":
        _check_keys(obj, {"type", "left", "right"}, path)
        left = _parse_node(_require(obj, "left", path), path + ".left")
        right = _parse_node(_require(obj, "right", path), path + ".right")
        return BodySpec(kind, {}, [left, right], path=path)
    operand = _parse_node(_require(obj, "operand", path), path + ".operand")
    if kind in UNARY:
        _check_keys(obj, {"type", "operand"}, path)
        return BodySpec(kind, {}, [operand], path=path)
    if kind == "rotate":
        _check_keys(obj, {"type", "operand", "angle"}, path)
        return BodySpec(kind, {"angle": _number(_require(obj, "angle", path), path + ".angle")}, [operand], path=path)
    if kind == "hull_with_points":
        _check_keys(obj, {"type", "operand", "points"}, path)
        return BodySpec(kind, {"points": _points(_require(obj, "points", path), path + ".points")}, [operand], path=path)
    # intersect_halfplanes
    _check_keys(obj, {"type", "operand", "halfplanes"}, path)
    raw = _require(obj, "halfplanes", path)
    if not isinstance(raw, list):
        _fail(path + ".halfplanes", "expected a list of [normal_angle, offset] pairs")
    hps = []
    for i, h in enumerate(raw):
        p = f"{path}.halfplanes[{i}]"
        if isinstance(h, dict):
            _check_keys(h, {"normal", "offset"}, p)
            hps.append((_number(_require(h, "normal", p), p + ".normal"), _number(_require(h, "offset", p), p + ".offset")))
        else:
            hps.append(_point(h, p))
    return BodySpec(kind, {"halfplanes": hps}, [operand], path=path)


def parse_spec(text: str) -> BodySpec:
    """Parse JSON text into a :class:`BodySpec`; syntax errors report line and column."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return _parse_node(obj, "$")


# ---------------------------------------------------------------- evaluation


def _arc_kind(d: dict):
    if d["kind"] == "circular_arc":
        return CircularArc(Point2(*d["center"]), d["radius"])
    if d["kind"] == "sampled_arc":
        return SampledArc(d["thetas"], d["values"], d.get("derivatives"))
    return PolarArc(_arc_kind(d["source"]))


def _build_piece(d: dict) -> SupportPiece:
    if d["kind"] == "corner":
        return SupportPiece(Corner(Point2(*d["point"])), d["from_angle"], d["to_angle"])
    kind = _arc_kind(d)
    start = d.get("from_angle", d["thetas"][0] if d["kind"] == "sampled_arc" else None)
    end = d.get("to_angle", d["thetas"][-1] if d["kind"] == "sampled_arc" else None)
    return SupportPiece(kind, start, end)


def eval_spec(spec: BodySpec) -> PlanarBody:
    """Evaluate a parsed tree; errors are re-raised with the failing node's path."""
    try:
        return _eval(spec)
    except SpecEvalError:
        raise
    except (ConvexError, ValueError) as exc:
        raise SpecEvalError(spec.path, exc) from exc


def _eval(spec: BodySpec) -> PlanarBody:
    operands = [eval_spec(o) for o in spec.operands]
    f = spec.fields
    try:
        if spec.type == "disk":
            return disk(f["radius"], Point2(*f.get("center", (0.0, 0.0))))
        if spec.type == "polygon":
            return polygon(f["vertices"])
        if spec.type == "pieces":
            return make_body([_build_piece(p) for p in f["pieces"]], "pieces")
        if spec.type == "gallery":
            return gallery(f["name"], f["params"])
        if spec.type in UNARY:
            return UNARY[spec.type](operands[0])
        if spec.type == "rotate":
            return rotate(operands[0], f["angle"])
        if spec.type == "hull_with_points":
            return hull_with_points(operands[0], f["points"])
        if spec.type == "intersect_halfplanes":
            return intersect_halfplanes(operands[0], f["halfplanes"])
        return glue_halves(operands[0], operands[1])
    except (ConvexError, ValueError) as exc:
        raise SpecEvalError(spec.path, exc) from exc


def load_body(text: str) -> PlanarBody:
    return eval_spec(parse_spec(text))


# ---------------------------------------------------------------- serialization


def _arc_json(kind) -> dict:
    if isinstance(kind, CircularArc):
        return {"kind": "circular_arc", "center": [kind.center.x, kind.center.y], "radius": kind.radius}
    if isinstance(kind, SampledArc):
        out = {"kind": "sampled_arc", "thetas": kind.thetas.tolist(), "values": kind.values.tolist()}
        if kind.derivatives is not None:
            out["derivatives"] = kind.derivatives.tolist()
        return out
    return {"kind": "polar_arc", "source": _arc_json(kind.source)}


def serialize(body: PlanarBody, exact: bool = False, samples: int = DEFAULT_SAMPLES) -> dict:
    """A ``pieces`` specification of ``body``.

    Polar arcs are tabulated as sampled arcs on their own interval unless
    ``exact`` is set, in which case the nested source arc is written out.
    """
    pieces = []
    for p in body.pieces:
        k = p.kind
        if isinstance(k, Corner):
            d = {"kind": "corner", "point": [k.point.x, k.point.y]}
        elif isinstance(k, PolarArc) and not exact:
            d = _arc_json(SampledArc.from_kind(k, p.start, p.end, samples))
        else:
            d = _arc_json(k)
        d["from_angle"] = p.start
        d["to_angle"] = p.end
        pieces.append(d)
    return {"type": "pieces", "pieces": pieces}


def dumps(body: PlanarBody, exact: bool = False, samples: int = DEFAULT_SAMPLES) -> str:
    return json.dumps(serialize(body, exact, samples))
