"""
JSON documents for models, cochains and jets.

All scalars are exact strings (``"3"``, ``"-1/2"``; residues for prime
fields). JSON integers are tolerated on input, floating-point literals are
rejected.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import ParseError, ValidationError
from .fields import FieldError, field_from_json
from .models import (AlgebraPresentation, BialgebraPresentation,
                     build_algebra_model, build_bialgebra_model, canonical_json)
from .deformation import DeformationJet, GaugeJet

BUNDLED = {
    "dual_numbers": "dual_numbers.json",
    "dual_numbers_2": "dual_numbers_2.json",
    "matrix_2": "matrix_2.json",
    "group_z2": "group_z2.json",
    "group_klein": "group_klein.json",
    "group_z3_f5": "group_z3_f5.json",
}


def _reject_float(text):
    raise ParseError(f"floating-point literal {text} is not exact")


def loads(text):
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def load_json(path):
    return loads(Path(path).read_text(encoding="utf-8"))


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _scalar(field, value, loc):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"expected an exact scalar string, got {value!r}", loc)
    try:
        return field(value)
    except (FieldError, ValueError) as exc:
        raise ParseError(str(exc), loc) from None


def _array(field, value, shape, loc):
    if not shape:
        return _scalar(field, value, loc)
    if not isinstance(value, list) or len(value) != shape[0]:
        raise ParseError(f"expected a list of length {shape[0]}", loc)
    return [_array(field, v, shape[1:], f"{loc}[{i}]") for i, v in enumerate(value)]


def _tensor(field, value, shape, loc):
    nested = _array(field, value, shape, loc)
    out = np.empty(shape, dtype=object)
    for idx in np.ndindex(*shape):
        x = nested
        for i in idx:
            x = x[i]
        out[idx] = x
    return out


def _need(doc, key, loc="document"):
    if key not in doc:
        raise ParseError(f"missing key {key!r}", loc)
    return doc[key]


def presentation_from_document(doc):
    if not isinstance(doc, dict):
        raise ParseError("model document must be a JSON object")
    try:
        field = field_from_json(_need(doc, "field"))
    except FieldError as exc:
        raise ParseError(str(exc), "field") from None
    kind = _need(doc, "kind")
    if kind not in ("algebra", "bialgebra"):
        raise ParseError(f"unknown kind {kind!r}", "kind")
    d = _need(doc, "dim")
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ParseError("dim must be a positive integer", "dim")
    basis = _need(doc, "basis")
    if not isinstance(basis, list) or len(basis) != d or not all(isinstance(b, str) for b in basis):
        raise ParseError(f"basis must be {d} strings", "basis")
    mul = _tensor(field, _need(doc, "mul"), (d, d, d), "mul")
    unit = _tensor(field, _need(doc, "unit"), (d,), "unit")
    alg = AlgebraPresentation(field, d, tuple(basis), mul, unit)
    if kind == "algebra":
        return alg
    comul = _tensor(field, _need(doc, "comul"), (d, d, d), "comul")
    counit = _tensor(field, _need(doc, "counit"), (d,), "counit")
    return BialgebraPresentation(alg, comul, counit)


def parse_model(doc, name=None):
    """Validated model from a parsed document (dict) or JSON text."""
    if isinstance(doc, str):
        doc = loads(doc)
    pres = presentation_from_document(doc)
    name = name or doc.get("name")
    if isinstance(pres, BialgebraPresentation):
        return build_bialgebra_model(pres, name)
    return build_algebra_model(pres, name)


def load_model(path):
    path = Path(path)
    return parse_model(load_json(path), name=path.stem)


def bundled_document(name):
    text = resources.files("monodef").joinpath("data", BUNDLED[name]).read_text(encoding="utf-8")
    return loads(text)


def load_bundled(name):
    return parse_model(bundled_document(name), name=name)


def model_to_document(model):
    return model.presentation.to_document()


def serialize_model(model) -> str:
    return canonical_json(model_to_document(model))


# -- cochains and jets -----------------------------------------------------

def cochain_to_json(c):
    F = c.model.field
    return {
        "type": "cochain",
        "degree": c.degree,
        "shape": list(c.payload.shape),
        "entries": [F.format(x) for x in c.payload.reshape(-1)],
    }


def cochain_from_json(model, doc, loc="cochain"):
    if not isinstance(doc, dict):
        raise ParseError("cochain must be a JSON object", loc)
    k = _need(doc, "degree", loc)
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ParseError("degree must be a non-negative integer", f"{loc}.degree")
    shape = tuple(_need(doc, "shape", loc))
    if shape != model.payload_shape(k):
        raise ParseError(f"shape {list(shape)} does not fit degree {k} of this model", f"{loc}.shape")
    entries = _need(doc, "entries", loc)
    if not isinstance(entries, list) or len(entries) != model.cochain_dim(k):
        raise ParseError(f"expected {model.cochain_dim(k)} entries", f"{loc}.entries")
    vals = [_scalar(model.field, v, f"{loc}.entries[{i}]") for i, v in enumerate(entries)]
    return model.from_vector(k, vals)


def jet_to_json(jet):
    kind = "gauge_jet" if isinstance(jet, GaugeJet) else "deformation_jet"
    return {"type": kind, "order": jet.order, "terms": [cochain_to_json(t) for t in jet.terms]}


def jet_from_json(model, doc, loc="jet"):
    if not isinstance(doc, dict):
        raise ParseError("jet must be a JSON object", loc)
    kind = doc.get("type", "deformation_jet")
    terms = _need(doc, "terms", loc)
    if not isinstance(terms, list) or not terms:
        raise ParseError("terms must be a non-empty list", f"{loc}.terms")
    cochains = [cochain_from_json(model, t, f"{loc}.terms[{i}]") for i, t in enumerate(terms)]
    try:
        if kind == "gauge_jet":
            return GaugeJet(model, cochains)
        if kind == "deformation_jet":
            return DeformationJet(model, cochains)
    except ValueError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ParseError(str(exc), loc) from None
    raise ParseError(f"unknown jet type {kind!r}", f"{loc}.type")


def write_bundled(directory):
    """Regenerate the bundled model documents from :mod:`monodef.presets`."""
    from .presets import standard_model
    directory = Path(directory)
    for name, filename in BUNDLED.items():
        model = standard_model(name)
        (directory / filename).write_text(dumps(model_to_document(model)), encoding="utf-8")
