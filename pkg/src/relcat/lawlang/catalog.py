"""The shipped law catalog, loaded from ``catalog.rlaw``."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .parser import parse_laws
from .syntax import Law
from .typecheck import typecheck_law


def catalog_text() -> str:
    return resources.files(__package__).joinpath("catalog.rlaw").read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def _laws() -> tuple[Law, ...]:
    laws = parse_laws(catalog_text())
    seen = set()
    for law in laws:
        if law.id in seen:
            raise ValueError(f"duplicate law id {law.id!r} in catalog")
        seen.add(law.id)
        typecheck_law(law)
    return tuple(laws)


def catalog() -> list[Law]:
    return list(_laws())


def get_law(law_id: str) -> Law:
    for law in _laws():
        if law.id == law_id:
            return law
    raise KeyError(f"no law {law_id!r} in the catalog")


def select(spec: str | list | None) -> list[Law]:
    """Laws named by a comma list (``"all"`` or empty means every law).

    A trailing ``*`` matches a prefix, so ``"rnoAxiom*"`` selects all ten axioms.
    """
    if spec is None or spec == "all" or spec == ["all"]:
        return catalog()
    names = spec.split(",") if isinstance(spec, str) else list(spec)
    out = []
    for name in (n.strip() for n in names):
        if not name:
            continue
        if name.endswith("*"):
            hits = [law for law in _laws() if law.id.startswith(name[:-1])]
            if not hits:
                raise KeyError(f"no law matches {name!r}")
            out += [h for h in hits if h not in out]
        else:
            law = get_law(name)
            if law not in out:
                out.append(law)
    return out
