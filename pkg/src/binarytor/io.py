"""JSON documents for complexes, binary complexes, objects of C[F]/B[F] and maps.

Matrices are arrays of rows, every entry a decimal string such as ``"3"`` or
``"-1/2"``.  Differentials are keyed by the degree they leave: ``"d": {"1":
[[...]]}`` is ``d_1: X_1 -> X_0``.  Shapes follow from ``lo`` and ``dims``, so
empty matrices may be written ``[]``.

Every parse failure raises :class:`DocumentError` carrying a JSON path such as
``$.d.1[0][2]``.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .complexes import BinaryComplex, ChainComplex, ChainMap, ComplexOfComplexes, GradedObject
from .matrix import Matrix
from .relative import FunctorSpec, RelObject, RelObjectB, RelObjectC, parse_functor
from .rings import Ring, RingError, parse_ring

KINDS = ("chain", "binary", "graded", "rel-object", "map", "bicomplex")


class DocumentError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


# -- scalars and matrices ---------------------------------------------------------

def format_scalar(x) -> str:
    return str(Fraction(x))


def parse_scalar(ring: Ring, text, path: str = "$"):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise DocumentError(path, f"entry must be a decimal string, got {text!r}")
    try:
        return ring.coerce(Fraction(text) if isinstance(text, str) else text)
    except (ValueError, ZeroDivisionError, RingError) as e:
        raise DocumentError(path, f"bad entry {text!r}: {e}") from None


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in m]


def matrix_from_json(ring: Ring, data, rows: int, cols: int, path: str = "$") -> Matrix:
    if not isinstance(data, list):
        raise DocumentError(path, "matrix must be an array of rows")
    if rows == 0 or cols == 0:
        if any(r for r in data):
            raise DocumentError(path, f"expected an empty {rows}x{cols} matrix")
        return Matrix.zeros(ring, rows, cols)
    if len(data) != rows:
        raise DocumentError(path, f"expected {rows} rows, got {len(data)}")
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise DocumentError(f"{path}[{i}]", f"expected a row of {cols} entries")
        out.append([parse_scalar(ring, x, f"{path}[{i}][{j}]") for j, x in enumerate(row)])
    return Matrix.from_rows(ring, out, cols)


# -- documents ----------------------------------------------------------------------------

def _field(doc: dict, key: str, path: str, types=None):
    if not isinstance(doc, dict):
        raise DocumentError(path, "expected an object")
    if key not in doc:
        raise DocumentError(path, f"missing field {key!r}")
    v = doc[key]
    if types is not None and (isinstance(v, bool) or not isinstance(v, types)):
        raise DocumentError(f"{path}.{key}", f"expected {getattr(types, '__name__', types)}")
    return v


def _ring(doc: dict, path: str) -> Ring:
    text = _field(doc, "ring", path, str)
    try:
        return parse_ring(text)
    except (ValueError, RingError) as e:
        raise DocumentError(f"{path}.ring", str(e)) from None


def _diffs(ring: Ring, g: GradedObject, data, path: str) -> dict[int, Matrix]:
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise DocumentError(path, "differentials must be an object keyed by degree")
    out = {}
    for key, m in data.items():
        try:
            n = int(key)
        except ValueError:
            raise DocumentError(f"{path}.{key}", "degree keys must be integers") from None
        if not (g.lo < n <= g.hi):
            raise DocumentError(f"{path}.{key}", f"degree {n} outside {g.lo + 1}..{g.hi}")
        out[n] = matrix_from_json(ring, m, g.dim(n - 1), g.dim(n), f"{path}.{key}")
    return out


def _graded_header(doc: dict, path: str):
    ring = _ring(doc, path)
    lo = _field(doc, "lo", path, int)
    dims = _field(doc, "dims", path, list)
    for k, x in enumerate(dims):
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            raise DocumentError(f"{path}.dims[{k}]", "dimensions are nonnegative integers")
    return ring, GradedObject(ring, lo, tuple(dims))


def from_document(doc, path: str = "$"):
    """Parse a decoded JSON value into a graded object, complex or rel-object."""
    kind = _field(doc, "kind", path, str)
    if kind == "rel-object":
        return _rel_from_document(doc, path)
    if kind not in ("chain", "binary", "graded"):
        raise DocumentError(f"{path}.kind", f"unknown kind {kind!r}")
    ring, g = _graded_header(doc, path)
    if kind == "graded":
        return g
    if kind == "chain":
        return ChainComplex(ring, g.lo, g.dims, _diffs(ring, g, doc.get("d"), f"{path}.d"))
    return BinaryComplex(ring, g.lo, g.dims, _diffs(ring, g, doc.get("d_top"), f"{path}.d_top"),
                         _diffs(ring, g, doc.get("d_bot"), f"{path}.d_bot"))


def _degree_maps(ring: Ring, data, source: GradedObject, target: GradedObject,
                 path: str) -> dict[int, Matrix]:
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise DocumentError(path, "maps must be an object keyed by degree")
    out = {}
    for key, m in data.items():
        try:
            n = int(key)
        except ValueError:
            raise DocumentError(f"{path}.{key}", "degree keys must be integers") from None
        out[n] = matrix_from_json(ring, m, target.dim(n), source.dim(n), f"{path}.{key}")
    return out


def _rel_from_document(doc: dict, path: str) -> RelObject:
    text = _field(doc, "functor", path, str)
    try:
        F = parse_functor(text)
    except ValueError as e:
        raise DocumentError(f"{path}.functor", str(e)) from None
    category = doc.get("category", "B")
    if category not in ("B", "C"):
        raise DocumentError(f"{path}.category", "category is 'B' or 'C'")
    srcs = _field(doc, "src", path, list)
    arity = 2 if category == "B" else 1
    if len(srcs) != arity:
        raise DocumentError(f"{path}.src", f"expected {arity} source complexes")
    src = [from_document(s, f"{path}.src[{k}]") for k, s in enumerate(srcs)]
    tar = from_document(_field(doc, "tar", path, dict), f"{path}.tar")
    for k, s in enumerate(src):
        if not isinstance(s, ChainComplex):
            raise DocumentError(f"{path}.src[{k}]", "sources are chain complexes")
        if s.ring != F.source:
            raise DocumentError(f"{path}.src[{k}]", f"expected ring {F.source.name}")
    want = BinaryComplex if category == "B" else ChainComplex
    if not isinstance(tar, want) or tar.ring != F.target:
        raise DocumentError(f"{path}.tar", f"expected a {want.__name__} over {F.target.name}")
    comps = doc.get("comp") or [{}] * arity
    if not isinstance(comps, list) or len(comps) != arity:
        raise DocumentError(f"{path}.comp", f"expected {arity} comparison maps")
    cls = RelObjectB if category == "B" else RelObjectC
    shell = cls(F, tuple(src), tar, ())
    comp = [_degree_maps(F.target, c, F(s), shell.tar_side(k), f"{path}.comp[{k}]")
            for k, (c, s) in enumerate(zip(comps, src))]
    try:
        return cls(F, tuple(src), tar, tuple(comp))
    except ValueError as e:
        raise DocumentError(f"{path}.comp", str(e)) from None


def to_document(x) -> dict:
    if isinstance(x, RelObject):
        return {"kind": "rel-object", "functor": x.functor.name,
                "category": "B" if isinstance(x, RelObjectB) else "C",
                "src": [to_document(s) for s in x.src], "tar": to_document(x.tar),
                "comp": [{str(n): matrix_to_json(m) for n, m in c.maps} for c in x.comp]}
    head = {"ring": x.ring.name, "lo": x.lo, "dims": list(x.dims)}
    if isinstance(x, BinaryComplex):
        return {"kind": "binary", **head,
                "d_top": {str(n): matrix_to_json(x.diff_top(n)) for n in range(x.lo + 1, x.hi + 1)},
                "d_bot": {str(n): matrix_to_json(x.diff_bot(n)) for n in range(x.lo + 1, x.hi + 1)}}
    if isinstance(x, ChainComplex):
        return {"kind": "chain", **head,
                "d": {str(n): matrix_to_json(m) for n, m in x.differentials().items()}}
    return {"kind": "graded", **head}


def map_from_document(doc, source, target, path: str = "$") -> ChainMap:
    """A chain map document ``{"kind": "map", "maps": {"n": matrix}}``."""
    kind = _field(doc, "kind", path, str)
    if kind != "map":
        raise DocumentError(f"{path}.kind", "expected kind 'map'")
    if source.ring != target.ring:
        raise DocumentError(path, "source and target lie over different rings")
    maps = _degree_maps(source.ring, doc.get("maps"), source, target, f"{path}.maps")
    try:
        return ChainMap(source, target, maps)
    except ValueError as e:
        raise DocumentError(f"{path}.maps", str(e)) from None


def map_to_document(f: ChainMap) -> dict:
    return {"kind": "map", "maps": {str(n): matrix_to_json(m) for n, m in f.maps}}


def bicomplex_from_document(doc, path: str = "$") -> ComplexOfComplexes:
    """``{"kind": "bicomplex", "ilo": i, "rows": [...], "vertical": [...]}``.

    ``vertical[k]`` maps row ``ilo + k + 1`` to row ``ilo + k``: one family
    ``{"n": matrix}``, or a list of two families (top, bottom).
    """
    kind = _field(doc, "kind", path, str)
    if kind != "bicomplex":
        raise DocumentError(f"{path}.kind", "expected kind 'bicomplex'")
    ilo = _field(doc, "ilo", path, int)
    rows = [from_document(r, f"{path}.rows[{k}]") for k, r in enumerate(_field(doc, "rows", path, list))]
    if not rows:
        raise DocumentError(f"{path}.rows", "at least one row is needed")
    for k, r in enumerate(rows):
        if not isinstance(r, (ChainComplex, BinaryComplex)) or r.ring != rows[0].ring:
            raise DocumentError(f"{path}.rows[{k}]", "rows are complexes over one ring")
    verts = doc.get("vertical") or []
    if not isinstance(verts, list) or len(verts) != len(rows) - 1:
        raise DocumentError(f"{path}.vertical", f"expected {len(rows) - 1} vertical maps")
    out = []
    for k, v in enumerate(verts):
        src, tar = rows[k + 1], rows[k]
        fams = v if isinstance(v, list) else [v]
        if not 1 <= len(fams) <= 2:
            raise DocumentError(f"{path}.vertical[{k}]", "one or two families")
        parsed = tuple(_degree_maps(src.ring, f, src, tar, f"{path}.vertical[{k}]") for f in fams)
        out.append(parsed if len(parsed) == 2 else parsed[0])
    return ComplexOfComplexes(ilo, tuple(rows), tuple(out))


def jsonable(x):
    """Report values: documents for objects, strings for scalars and classes."""
    from .torsion import UnitClass
    if isinstance(x, (GradedObject, RelObject)):
        return to_document(x)
    if isinstance(x, Matrix):
        return matrix_to_json(x)
    if isinstance(x, ChainMap):
        return map_to_document(x)
    if isinstance(x, UnitClass):
        return str(x.value)
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "__dataclass_fields__"):
        return {k: jsonable(getattr(x, k)) for k in x.__dataclass_fields__}
    return repr(x)


def loads(text: str, path: str = "$"):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"line {e.lineno} column {e.colno}", e.msg) from None
    return from_document(doc, path)


def dumps(x) -> str:
    return json.dumps(to_document(x), indent=2)


def load(filename: str):
    with open(filename) as fh:
        return loads(fh.read())


def load_json(filename: str):
    with open(filename) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as e:
            raise DocumentError(f"{filename} line {e.lineno} column {e.colno}", e.msg) from None
