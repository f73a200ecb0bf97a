"""JSON encoding of fields, groups, algebras, gradings and instance files.

All scalars travel as strings so that fixtures stay exact and diff-friendly:
rationals as "p/q", prime-field elements as decimal digits, cyclotomic
elements as comma-joined rational coordinates on the power basis of the
root.  Group elements travel as canonical coordinate lists.  Readers
validate shapes and cross-references before any mathematics runs and raise
SchemaError on malformed data; writers emit exactly what the readers accept.
"""

import json
from fractions import Fraction

from .abgroup import FgAbelianGroup, GroupHom
from .algebra import Algebra, Subspace
from .errors import SchemaError
from .grading import GGrading, Grading, validate_grading
from .scalar import make_field

__all__ = [
    "FORMAT_VERSION",
    "scalar_to_str",
    "scalar_from_str",
    "field_to_json",
    "field_from_json",
    "subspace_to_json",
    "subspace_from_json",
    "algebra_to_json",
    "algebra_from_json",
    "group_to_json",
    "group_from_json",
    "element_to_json",
    "element_from_json",
    "hom_to_json",
    "hom_from_json",
    "grading_to_json",
    "grading_from_json",
    "ggrading_to_json",
    "ggrading_from_json",
    "instance_to_json",
    "instance_from_json",
    "load_instance",
    "dump_json",
]

FORMAT_VERSION = 1


def _require(cond, message):
    if not cond:
        raise SchemaError(message)


def _as_dict(data, what):
    _require(isinstance(data, dict), f"{what} must be an object")
    return data


def _as_list(data, what):
    _require(isinstance(data, list), f"{what} must be an array")
    return data


def _as_int(data, what):
    _require(isinstance(data, int) and not isinstance(data, bool),
             f"{what} must be an integer")
    return data


# ---------------------------------------------------------------------------
# scalars and fields


def scalar_to_str(x):
    """Exact string form of a scalar, by field kind."""
    kind = x.field.kind
    if kind == "rationals":
        return str(x.value)
    if kind == "prime":
        return str(x.value)
    return ",".join(str(c) for c in x.value)


def scalar_from_str(field, s):
    """Parse the exact string form; raises SchemaError on garbage."""
    _require(isinstance(s, str), "scalar must be a string")
    try:
        if field.kind == "rationals":
            return field.scalar(Fraction(s))
        if field.kind == "prime":
            return field.scalar(int(s))
        return field.scalar([Fraction(t) for t in s.split(",")])
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(f"bad scalar {s!r}: {e}")


def field_to_json(field):
    return field.descriptor()


def field_from_json(data):
    return make_field(_as_dict(data, "field"))


# ---------------------------------------------------------------------------
# subspaces and algebras


def subspace_to_json(space):
    """Canonical basis rows, each a list of scalar strings."""
    return [[scalar_to_str(x) for x in row] for row in space.rows]


def subspace_from_json(field, dim, data):
    rows = _as_list(data, "subspace")
    out = []
    for row in rows:
        row = _as_list(row, "subspace row")
        _require(len(row) == dim, f"subspace row length {len(row)} != {dim}")
        out.append([scalar_from_str(field, s) for s in row])
    return Subspace(field, dim, out)


def algebra_to_json(alg):
    """dim, optional labels, and the nonzero products as a sparse table."""
    products = {}
    for i in range(alg.dim):
        for j in range(alg.dim):
            vec = alg.table[i][j]
            terms = [[k, scalar_to_str(c)] for k, c in enumerate(vec) if c]
            if terms:
                products[f"{i},{j}"] = terms
    out = {"dim": alg.dim, "products": products}
    if alg.labels:
        out["labels"] = list(alg.labels)
    return out


def algebra_from_json(field, data):
    data = _as_dict(data, "algebra")
    dim = _as_int(data.get("dim"), "algebra dim")
    _require(dim >= 1, "algebra dim must be positive")
    labels = data.get("labels")
    if labels is not None:
        labels = _as_list(labels, "labels")
        _require(len(labels) == dim, "one label per basis vector required")
        _require(all(isinstance(s, str) for s in labels),
                 "labels must be strings")
    entries = {}
    products = _as_dict(data.get("products", {}), "products")
    for key, terms in products.items():
        parts = key.split(",")
        _require(len(parts) == 2, f"bad product key {key!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise SchemaError(f"bad product key {key!r}")
        _require(0 <= i < dim and 0 <= j < dim,
                 f"product key {key!r} out of range")
        parsed = []
        for term in _as_list(terms, f"products[{key}]"):
            term = _as_list(term, "product term")
            _require(len(term) == 2, "product term must be [index, scalar]")
            k = _as_int(term[0], "product index")
            _require(0 <= k < dim, f"product index {k} out of range")
            parsed.append((k, scalar_from_str(field, term[1])))
        entries[(i, j)] = parsed
    return Algebra.from_sparse(field, dim, entries, labels=labels)


# ---------------------------------------------------------------------------
# groups, elements, homs


def group_to_json(group):
    return {
        "generators": group.ngens,
        "relations": [list(r) for r in group.relations],
    }


def group_from_json(data):
    data = _as_dict(data, "group")
    ngens = _as_int(data.get("generators"), "group generators")
    _require(ngens >= 0, "generator count must be nonnegative")
    relations = []
    for row in _as_list(data.get("relations", []), "group relations"):
        row = _as_list(row, "relation")
        _require(len(row) == ngens, "one coefficient per generator required")
        relations.append([_as_int(c, "relation coefficient") for c in row])
    return FgAbelianGroup(ngens, relations)


def element_to_json(el):
    return list(el.coords)


def element_from_json(group, data):
    coords = _as_list(data, "group element")
    _require(len(coords) == group.coord_len,
             f"element needs {group.coord_len} canonical coordinates")
    return group.from_canonical([_as_int(c, "coordinate") for c in coords])


def hom_to_json(h):
    return {
        "domain": group_to_json(h.domain),
        "codomain": group_to_json(h.codomain),
        "images": [element_to_json(img) for img in h.images],
    }


def hom_from_json(data, codomain=None):
    """Reads a hom; codomain, when supplied, overrides the embedded one so
    degrees land in an already-constructed group."""
    data = _as_dict(data, "hom")
    domain = group_from_json(data.get("domain"))
    if codomain is None:
        codomain = group_from_json(data.get("codomain"))
    images = _as_list(data.get("images"), "hom images")
    _require(len(images) == domain.coord_len,
             "one image per canonical generator required")
    return GroupHom(
        domain, codomain, [element_from_json(codomain, d) for d in images]
    )


# ---------------------------------------------------------------------------
# gradings


def grading_to_json(grading):
    return {"components": [subspace_to_json(c) for c in grading.components]}


def grading_from_json(algebra, data):
    data = _as_dict(data, "grading")
    comps = [
        subspace_from_json(algebra.field, algebra.dim, c)
        for c in _as_list(data.get("components"), "components")
    ]
    return validate_grading(algebra, comps)


def ggrading_to_json(gg):
    return {
        "group": group_to_json(gg.group),
        "components": [subspace_to_json(c) for c in gg.components],
        "degrees": [element_to_json(d) for d in gg.degrees],
    }


def ggrading_from_json(algebra, data):
    data = _as_dict(data, "ggrading")
    group = group_from_json(data.get("group"))
    comps = [
        subspace_from_json(algebra.field, algebra.dim, c)
        for c in _as_list(data.get("components"), "components")
    ]
    degrees = _as_list(data.get("degrees"), "degrees")
    _require(len(degrees) == len(comps), "one degree per component required")
    degs = [element_from_json(group, d) for d in degrees]
    return GGrading(algebra, group, comps, degs)


# ---------------------------------------------------------------------------
# instance files


def instance_to_json(objs):
    """Serialize a bundle with keys among field, algebra, grading, ggrading,
    group, hom, matrix."""
    field = objs["field"]
    out = {"format": FORMAT_VERSION, "field": field_to_json(field)}
    if "algebra" in objs:
        out["algebra"] = algebra_to_json(objs["algebra"])
    if "grading" in objs:
        out["grading"] = grading_to_json(objs["grading"])
    if "ggrading" in objs:
        out["ggrading"] = ggrading_to_json(objs["ggrading"])
    if "group" in objs:
        out["group"] = group_to_json(objs["group"])
    if "hom" in objs:
        out["hom"] = hom_to_json(objs["hom"])
    if "matrix" in objs:
        out["matrix"] = [[scalar_to_str(x) for x in row]
                         for row in objs["matrix"]]
    return out


def instance_from_json(data):
    """Parse an instance file into live objects.

    Returns a dict with "field" plus whichever of algebra, grading,
    ggrading, group, hom, matrix the file carries.  The hom's codomain is
    identified with the ggrading's group when both are present.
    """
    data = _as_dict(data, "instance")
    _require(data.get("format") == FORMAT_VERSION,
             f"unsupported format {data.get('format')!r}")
    _require("field" in data, "instance needs a field")
    field = field_from_json(data["field"])
    out = {"field": field}
    algebra = None
    if "algebra" in data:
        algebra = algebra_from_json(field, data["algebra"])
        out["algebra"] = algebra
    if "grading" in data:
        _require(algebra is not None, "grading needs an algebra")
        out["grading"] = grading_from_json(algebra, data["grading"])
    if "ggrading" in data:
        _require(algebra is not None, "ggrading needs an algebra")
        out["ggrading"] = ggrading_from_json(algebra, data["ggrading"])
    if "group" in data:
        out["group"] = group_from_json(data["group"])
    if "hom" in data:
        codomain = out["ggrading"].group if "ggrading" in out else None
        out["hom"] = hom_from_json(data["hom"], codomain=codomain)
    if "matrix" in data:
        rows = _as_list(data["matrix"], "matrix")
        out["matrix"] = [
            [scalar_from_str(field, s) for s in _as_list(row, "matrix row")]
            for row in rows
        ]
    return out


def load_instance(path):
    """Read and parse an instance file from disk."""
    try:
        with open(path) as f:
            data = json.load(f)
    except OSError as e:
        raise SchemaError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path} is not valid JSON: {e}")
    return instance_from_json(data)


def dump_json(obj):
    """Canonical byte-stable rendering: sorted keys, two-space indent."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
