"""The ``algebra-bundle v1`` JSON format.

A bundle holds one field and named algebras, bimodules, maps, tensors and
forms.  Scalars are integers or ``"a/b"`` strings.  Emitting is canonical
(sorted keys, canonical scalars) so ``emit(load(x))`` is byte-stable.

Maps name their source and target spaces: an algebra or bimodule name, with
a trailing ``*`` for the dual space.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

import numpy as np

from .algebra import Algebra, Bimodule, BimoduleAlgebra, validate_algebra, validate_bimodule, validate_bimodule_algebra
from .field import Field, FieldError
from .frobenius import BilinearForm

SCHEMA = "algebra-bundle v1"
SECTIONS = ("algebras", "bimodules", "maps", "tensors", "forms")


class BundleError(ValueError):
    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


@dataclass(frozen=True, eq=False)
class MapEntry:
    source: str
    target: str
    matrix: np.ndarray


@dataclass(frozen=True, eq=False)
class TensorEntry:
    algebra: str
    t: np.ndarray


@dataclass(eq=False)
class Bundle:
    field: Field
    algebras: dict = dc_field(default_factory=dict)
    bimodules: dict = dc_field(default_factory=dict)
    maps: dict = dc_field(default_factory=dict)
    tensors: dict = dc_field(default_factory=dict)
    forms: dict = dc_field(default_factory=dict)
    module_base: dict = dc_field(default_factory=dict)
    form_base: dict = dc_field(default_factory=dict)

    def space_dim(self, name: str) -> int:
        base = name[:-1] if name.endswith("*") else name
        if base in self.algebras:
            return self.algebras[base].dim
        if base in self.bimodules:
            return self.bimodules[base].dim
        raise KeyError(name)

    def only_algebra(self) -> tuple[str, Algebra]:
        if len(self.algebras) != 1:
            raise BundleError("algebras", f"expected exactly one algebra, found {len(self.algebras)}")
        return next(iter(self.algebras.items()))

    def get(self, section: str, name: str):
        table = getattr(self, section)
        if name not in table:
            known = ", ".join(sorted(table)) or "none"
            raise BundleError(f"{section}.{name}", f"not found (known: {known})")
        return table[name]


def _expect(obj, kind, loc):
    if not isinstance(obj, kind):
        raise BundleError(loc, f"expected {kind.__name__}, got {type(obj).__name__}")
    return obj


def _scalars(f: Field, data, shape: tuple, loc: str) -> np.ndarray:
    def walk(x, depth, path):
        if depth == len(shape):
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise BundleError(path, f"scalar must be an integer or 'a/b' string, got {x!r}")
            try:
                return f.scalar(x)
            except (FieldError, ZeroDivisionError) as exc:
                msg = str(exc)
                if "not representable" not in msg:
                    msg = f"scalar not representable: {msg}"
                raise BundleError(path, msg) from None
        if not isinstance(x, list) or len(x) != shape[depth]:
            raise BundleError(path, f"expected a list of length {shape[depth]}")
        return [walk(y, depth + 1, f"{path}[{i}]") for i, y in enumerate(x)]

    out = np.empty(shape, dtype=object)
    vals = walk(data, 0, loc)
    out[...] = np.array(vals, dtype=object).reshape(shape) if shape else vals
    return out


def _keys(obj: dict, required: set, optional: set, loc: str):
    missing = required - obj.keys()
    if missing:
        raise BundleError(loc, f"missing key {sorted(missing)[0]!r}")
    extra = obj.keys() - required - optional
    if extra:
        raise BundleError(f"{loc}.{sorted(extra)[0]}", "unknown key")


def _dim(x, loc) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise BundleError(loc, "dimension must be a positive integer")
    return x


def parse_bundle(data, validate: bool = True) -> Bundle:
    _expect(data, dict, "")
    _keys(data, {"field"}, {"schema", *SECTIONS}, "")
    if "schema" in data and data["schema"] != SCHEMA:
        raise BundleError("schema", f"unsupported schema {data['schema']!r}")
    try:
        f = Field.parse(_expect(data["field"], str, "field"))
    except FieldError as exc:
        raise BundleError("field", str(exc)) from None
    b = Bundle(f)
    for name, spec in _expect(data.get("algebras", {}), dict, "algebras").items():
        loc = f"algebras.{name}"
        _expect(spec, dict, loc)
        _keys(spec, {"dim", "c"}, {"labels"}, loc)
        n = _dim(spec["dim"], f"{loc}.dim")
        c = _scalars(f, spec["c"], (n, n, n), f"{loc}.c")
        labels = spec.get("labels")
        if labels is not None:
            if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
                raise BundleError(f"{loc}.labels", f"expected {n} strings")
            labels = tuple(labels)
        A = Algebra(f, c, labels, name=name)
        if validate:
            rep = validate_algebra(A.c, f)
            if not rep.passed:
                raise BundleError(loc, f"not associative, witness {rep.first_failure.witness}")
        b.algebras[name] = A
    for name, spec in _expect(data.get("bimodules", {}), dict, "bimodules").items():
        loc = f"bimodules.{name}"
        _expect(spec, dict, loc)
        _keys(spec, {"algebra", "dim", "left", "right"}, {"product"}, loc)
        base = spec["algebra"]
        if base not in b.algebras:
            raise BundleError(f"{loc}.algebra", f"unknown algebra {base!r}")
        A = b.algebras[base]
        n, m = A.dim, _dim(spec["dim"], f"{loc}.dim")
        left = _scalars(f, spec["left"], (n, m, m), f"{loc}.left")
        right = _scalars(f, spec["right"], (n, m, m), f"{loc}.right")
        if "product" in spec:
            V = BimoduleAlgebra(A, left, right, _scalars(f, spec["product"], (m, m, m), f"{loc}.product"))
            rep = validate_bimodule_algebra(A, V) if validate else None
        else:
            V = Bimodule(A, left, right)
            rep = validate_bimodule(A, V) if validate else None
        if rep is not None and not rep.passed:
            bad = rep.first_failure
            raise BundleError(loc, f"fails {bad.id}, witness {bad.witness}")
        b.bimodules[name] = V
        b.module_base[name] = base
    for name, spec in _expect(data.get("maps", {}), dict, "maps").items():
        loc = f"maps.{name}"
        _expect(spec, dict, loc)
        _keys(spec, {"source", "target", "matrix"}, set(), loc)
        dims = []
        for key in ("source", "target"):
            try:
                dims.append(b.space_dim(_expect(spec[key], str, f"{loc}.{key}")))
            except KeyError:
                raise BundleError(f"{loc}.{key}", f"unknown space {spec[key]!r}") from None
        M = _scalars(f, spec["matrix"], (dims[1], dims[0]), f"{loc}.matrix")
        b.maps[name] = MapEntry(spec["source"], spec["target"], M)
    for name, spec in _expect(data.get("tensors", {}), dict, "tensors").items():
        loc = f"tensors.{name}"
        _expect(spec, dict, loc)
        _keys(spec, {"algebra", "t"}, set(), loc)
        if spec["algebra"] not in b.algebras:
            raise BundleError(f"{loc}.algebra", f"unknown algebra {spec['algebra']!r}")
        n = b.algebras[spec["algebra"]].dim
        b.tensors[name] = TensorEntry(spec["algebra"], _scalars(f, spec["t"], (n, n), f"{loc}.t"))
    for name, spec in _expect(data.get("forms", {}), dict, "forms").items():
        loc = f"forms.{name}"
        _expect(spec, dict, loc)
        _keys(spec, {"algebra", "B"}, set(), loc)
        if spec["algebra"] not in b.algebras:
            raise BundleError(f"{loc}.algebra", f"unknown algebra {spec['algebra']!r}")
        A = b.algebras[spec["algebra"]]
        b.forms[name] = BilinearForm(A, _scalars(f, spec["B"], (A.dim, A.dim), f"{loc}.B"))
        b.form_base[name] = spec["algebra"]
    return b


def load_bundle(path, validate: bool = True) -> Bundle:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise BundleError(str(path), f"cannot read: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleError(f"{path}:{exc.lineno}:{exc.colno}", f"invalid JSON: {exc.msg}") from None
    return parse_bundle(data, validate=validate)


def _lists(f: Field, arr) -> list:
    return np.vectorize(f.format, otypes=[object])(np.asarray(arr, dtype=object)).tolist()


def bundle_to_json(b: Bundle) -> dict:
    f = b.field
    out: dict = {"schema": SCHEMA, "field": f.label}
    algs = {}
    for name, A in b.algebras.items():
        spec = {"dim": A.dim, "c": _lists(f, A.c)}
        if A.labels:
            spec["labels"] = list(A.labels)
        algs[name] = spec
    mods = {}
    for name, V in b.bimodules.items():
        spec = {
            "algebra": b.module_base[name],
            "dim": V.dim,
            "left": _lists(f, V.left),
            "right": _lists(f, V.right),
        }
        if isinstance(V, BimoduleAlgebra):
            spec["product"] = _lists(f, V.d)
        mods[name] = spec
    out["algebras"] = algs
    out["bimodules"] = mods
    out["maps"] = {k: {"source": m.source, "target": m.target, "matrix": _lists(f, m.matrix)} for k, m in b.maps.items()}
    out["tensors"] = {k: {"algebra": t.algebra, "t": _lists(f, t.t)} for k, t in b.tensors.items()}
    out["forms"] = {k: {"algebra": b.form_base[k], "B": _lists(f, B.Bmat)} for k, B in b.forms.items()}
    return out


def canonical_dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def emit_bundle(b: Bundle) -> str:
    return canonical_dumps(bundle_to_json(b))


def write_bundle(b: Bundle, path):
    Path(path).write_text(emit_bundle(b))


def bundle_for(A: Algebra, name: str | None = None) -> Bundle:
    """A bundle holding just ``A``."""
    b = Bundle(A.field)
    b.algebras[name or A.name or "A"] = A
    return b
