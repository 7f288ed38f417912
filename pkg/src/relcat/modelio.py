"""JSON model files, the embedded worked-example model and generated models.

A model file is a JSON object::

    {"name": "...", "lattice": "chain:3" | {"elements": [...], "cover": [[lo, hi], ...]},
     "objects": {"A": ["a"], "B": 2},
     "relations": {"C": {"from": "B", "to": "B", "matrix": [["0", "1"], ["0", "0"]]}},
     "defs": {"E": "I[B] | C"}, "fixed": ["C"], "sorts": {"A": ["A"]},
     "products": [["A", "B"]], "powers": ["B"], "nepowers": ["B"], "nepower_route": "split",
     "group": {"A": "Z3", "e": "e", "f": "f", "n": "n"},
     "rno": {"R": "R", "i": "i", "C": "C", "add": "add"},
     "auto_witnesses": true}

Relation endpoints are sort expressions (``R*R``, ``1``, ``P(A)``) resolved
against the model. Matrix entries are lattice element names.
"""
from __future__ import annotations

import copy
import json
from pathlib import Path

from . import relcore as rc
from . import structures as st
from .lattice import HeytingAlgebra, lattice_spec, parse_lattice


class ModelError(ValueError):
    pass


_KEYS = {"name", "lattice", "objects", "relations", "defs", "fixed", "sorts", "products", "powers",
         "nepowers", "nepower_route", "group", "rno", "auto_witnesses", "description"}

PAPER_MODEL = {
    "name": "paper3chain",
    "description": "three-element chain 0 < u < 1 with the two-element strict order C and X = (0 u)",
    "lattice": {"name": "chain:0u1", "elements": ["0", "u", "1"], "cover": [["0", "u"], ["u", "1"]]},
    "objects": {"A": ["a"], "B": ["b1", "b2"]},
    "relations": {
        "C": {"from": "B", "to": "B", "matrix": [["0", "1"], ["0", "0"]]},
        "X": {"from": "A", "to": "B", "matrix": [["0", "u"]]},
    },
    "defs": {"E": "I[B] | C"},
    "fixed": ["C"],
}

# golden values of the worked example, in printing order
PAPER_GOLDEN = [
    ("ubd(E,X)", "ubd(E, X)", [["0", "1"]]),
    ("lbd(E,ubd(E,X))", "lbd(E, ubd(E, X))", [["1", "1"]]),
    ("lub(E,X)", "lub(E, X)", [["0", "1"]]),
    ("lub(E,X);conv(C)", "lub(E, X) ; conv(C)", [["1", "0"]]),
    ("X;conv(C)", "X ; conv(C)", [["u", "0"]]),
    ("star(star(X;conv(C)))", "star(star(X ; conv(C)))", [["1", "0"]]),
]


def _resolve(model: st.Model, text: str) -> rc.Obj:
    from .lawlang.evaluate import Compiler
    from .lawlang.parser import parse_sort
    return Compiler(model, dict(model.objects)).obj(parse_sort(str(text)))


def _matrix(model: st.Model, src: rc.Obj, tgt: rc.Obj, rows) -> rc.Rel:
    # ints are element names here, never indices
    named = [[str(x) for x in row] for row in rows]
    return rc.make_rel(src, tgt, model.alg, named)


def model_from_dict(d: dict, auto: bool | None = None) -> st.Model:
    if not isinstance(d, dict):
        raise ModelError("a model must be a JSON object")
    unknown = set(d) - _KEYS
    if unknown:
        raise ModelError(f"unknown model keys: {sorted(unknown)}")
    if "lattice" not in d:
        raise ModelError("model needs a 'lattice'")
    alg = parse_lattice(d["lattice"])
    if auto is None:
        auto = bool(d.get("auto_witnesses", True))
    m = st.Model(alg, name=d.get("name", "model"), auto=True)
    for name, carrier in (d.get("objects") or {}).items():
        m.add_object(name, [f"x{i}" for i in range(carrier)] if isinstance(carrier, int) else carrier)
    for a, b in d.get("products") or []:
        m.register_product(m.obj(a), m.obj(b))
    for a in d.get("powers") or []:
        m.register_power(st.power(m.obj(a), alg, bound=m.power_bound))
    route = d.get("nepower_route", "canonical")
    for a in d.get("nepowers") or []:
        if route == "split":
            m.register_nepower(st.theorem3_witness(m.obj(a), alg, bound=m.power_bound))
        else:
            m.register_nepower(st.non_empty_power(m.obj(a), alg, bound=m.power_bound))
    for name, spec in (d.get("relations") or {}).items():
        try:
            src, tgt = _resolve(m, spec["from"]), _resolve(m, spec["to"])
            m.add_relation(name, _matrix(m, src, tgt, spec["matrix"]))
        except KeyError as e:
            raise ModelError(f"relation {name!r}: missing {e}") from None
    m.defs.update(d.get("defs") or {})
    m.fixed = list(d.get("fixed") or [])
    for name in m.fixed:
        if name not in m.relations:
            raise ModelError(f"fixed relation {name!r} is not defined")
    m.sort_bindings = {k: list(v) for k, v in (d.get("sorts") or {}).items()}
    for names in m.sort_bindings.values():
        for n in names:
            m.obj(n)
    if d.get("group"):
        g = d["group"]
        m.group = st.GroupCandidate(m.obj(g["A"]), m.relations[g["e"]], m.relations[g["f"]], m.relations[g["n"]])
    if d.get("rno"):
        r = d["rno"]
        m.rno = st.RnoCandidate(m.obj(r["R"]), m.relations[r["i"]], m.relations[r["C"]], m.relations[r["add"]])
    m.auto = auto
    m.source = copy.deepcopy(d)
    return m


def model_to_dict(m: st.Model) -> dict:
    """Serialise a model; inverse of :func:`model_from_dict` up to witness caches."""
    if m.source is not None:
        return copy.deepcopy(m.source)
    from .lawlang.evaluate import obj_sort
    from .lawlang.syntax import sort_str
    d = {"name": m.name, "lattice": lattice_spec(m.alg),
         "objects": {k: list(o.carrier) for k, o in m.objects.items()},
         "relations": {k: {"from": sort_str(obj_sort(r.src)), "to": sort_str(obj_sort(r.tgt)), "matrix": r.names()}
                       for k, r in m.relations.items()}}
    if m.defs:
        d["defs"] = dict(m.defs)
    if m.fixed:
        d["fixed"] = list(m.fixed)
    if m.sort_bindings:
        d["sorts"] = {k: list(v) for k, v in m.sort_bindings.items()}
    return d


def load_model(path) -> st.Model:
    """A JSON file path, or the name of an embedded model (``paper3chain``)."""
    if str(path) in BUILTIN:
        return builtin(str(path))
    p = Path(path)
    try:
        d = json.loads(p.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ModelError(f"model file {str(p)!r} not found") from None
    except json.JSONDecodeError as e:
        raise ModelError(f"{p}: invalid JSON ({e})") from None
    d.setdefault("name", p.stem)
    return model_from_dict(d)


def save_model(m: st.Model | dict, path) -> Path:
    d = m if isinstance(m, dict) else model_to_dict(m)
    p = Path(path)
    p.write_text(json.dumps(d, indent=2) + "\n", encoding="utf-8")
    return p


def paper_model() -> st.Model:
    return model_from_dict(PAPER_MODEL)


# -- example files -------------------------------------------------------------------

def _cyclic_dict(order: int) -> dict:
    m = st.Model(parse_lattice("bool"), name=f"z{order}group")
    g = st.cyclic_group(order, m, name=f"Z{order}")
    z = f"Z{order}"
    return {
        "name": f"z{order}group",
        "lattice": "bool",
        "objects": {z: list(g.A.carrier)},
        "relations": {
            "e": {"from": "1", "to": z, "matrix": g.e.names()},
            "f": {"from": f"{z}*{z}", "to": z, "matrix": g.f.names()},
            "n": {"from": z, "to": z, "matrix": g.n.names()},
        },
        "fixed": ["e", "f", "n"],
        "sorts": {"A": [z]},
        "group": {"A": z, "e": "e", "f": "f", "n": "n"},
    }


def _saturating_rno(size: int) -> dict:
    """Crisp chain 0 < 1 < ... with the strict order and addition truncated at the top."""
    carrier = [str(k) for k in range(size)]
    top = size - 1
    bit = lambda b: "1" if b else "0"
    c = [[bit(a < b) for b in range(size)] for a in range(size)]
    add = [[bit(min(a + b, top) == k) for k in range(size)] for a in range(size) for b in range(size)]
    one = min(1, top)
    return {
        "name": f"rno{size}",
        "lattice": "bool",
        "objects": {"R": carrier},
        "relations": {
            "i": {"from": "1", "to": "R", "matrix": [[bit(k == one) for k in range(size)]]},
            "C": {"from": "R", "to": "R", "matrix": c},
            "add": {"from": "R*R", "to": "R", "matrix": add},
        },
        "fixed": ["i", "C", "add"],
        "sorts": {"R": ["R"], "A": ["R"]},
        "rno": {"R": "R", "i": "i", "C": "C", "add": "add"},
    }


EXAMPLES = {
    "paper3chain": lambda: copy.deepcopy(PAPER_MODEL),
    "bool2": lambda: {"name": "bool2", "lattice": "bool", "objects": {"A": ["a1", "a2"]}},
    "z3group": lambda: _cyclic_dict(3),
    "rno2chain": lambda: _saturating_rno(2),
    "rno1": lambda: _saturating_rno(1),
}

BUILTIN = {"paper3chain": PAPER_MODEL}


def builtin(name: str) -> st.Model:
    return model_from_dict(EXAMPLES[name]())


def write_examples(directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    return [save_model(make(), out / f"{name}.json") for name, make in EXAMPLES.items()]


# -- generated models -------------------------------------------------------------------

def generated_model(alg: HeytingAlgebra, sizes: dict, name: str | None = None) -> st.Model:
    """One object per law sort, of the given carrier size, with the sort bound to it."""
    label = ",".join(f"|{s}|={n}" for s, n in sizes.items())
    m = st.Model(alg, name=name or f"{alg.name}[{label}]")
    for s, n in sizes.items():
        m.add_object(s, [f"{s.lower()}{k + 1}" for k in range(n)])
        m.sort_bindings[s] = [s]
    return m
