"""JSON formats and text rendering.

* Eisenstein integer: ``[a, b]``
* matrix: ``{"rows": r, "cols": c, "entries": [[a, b], ...]}`` (row-major)
* lattice: ``{"rank": n, "gram": <matrix>, "ambient": {"gram": <matrix>, "basis": <matrix>}}``
  with ``ambient`` optional
* K/Z[w] value in a torsion form: ``[a, b, den]``

Human-readable output renders ``a + b*w`` as ``"a+b*w"``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .constructions import BUILTIN_LATTICES
from .finite_space import FiniteHermitianSpace
from .lattice import HermitianLattice
from .linalg import Matrix
from .ring import EisensteinInt, EisensteinScalar, parse_eisenstein


class InputError(ValueError):
    """Malformed or invalid user input."""


def render(x) -> str:
    return str(x)


def render_vector(v) -> str:
    return "(" + ", ".join(render(x) for x in v) + ")"


def eisenstein_to_json(x: EisensteinInt) -> list[int]:
    return [x.a, x.b]


def eisenstein_from_json(obj) -> EisensteinInt:
    try:
        return parse_eisenstein(obj)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None


def vector_to_json(v) -> list[list[int]]:
    return [eisenstein_to_json(x) for x in v]


def scalar_to_json(x) -> list[int]:
    s = EisensteinScalar.coerce(x)
    return [s.num.a, s.num.b, s.den]


def matrix_to_json(m: Matrix) -> dict:
    return m.to_json()


def matrix_from_json(obj) -> Matrix:
    if not isinstance(obj, dict):
        raise InputError("matrix JSON must be an object with rows, cols and entries")
    try:
        return Matrix.from_json(obj)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None


def lattice_to_json(lat: HermitianLattice) -> dict:
    out = {"rank": lat.rank, "gram": lat.gram.to_json()}
    if lat.has_ambient:
        out["ambient"] = {"gram": lat.ambient_gram.to_json(), "basis": lat.basis.to_json()}
    return out


def lattice_from_json(obj, name: str = "") -> HermitianLattice:
    if not isinstance(obj, dict) or "gram" not in obj:
        raise InputError("lattice JSON must be an object with a gram matrix")
    gram = matrix_from_json(obj["gram"])
    if "rank" in obj and obj["rank"] != gram.rows:
        raise InputError(f"rank {obj['rank']} does not match gram size {gram.rows}")
    amb = obj.get("ambient")
    try:
        if amb is None:
            return HermitianLattice(gram, name=name)
        if not isinstance(amb, dict) or "gram" not in amb or "basis" not in amb:
            raise InputError("ambient needs gram and basis")
        return HermitianLattice(gram, matrix_from_json(amb["gram"]),
                                matrix_from_json(amb["basis"]), name=name)
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from None


def space_to_json(space: FiniteHermitianSpace) -> dict:
    return {
        "invariant_factors": [eisenstein_to_json(d) for d in space.invariant_factors],
        "order": space.order(),
        "form": [[scalar_to_json(x) for x in row] for row in space.form],
    }


def builtin_names() -> list[str]:
    return ["@" + k for k in BUILTIN_LATTICES]


def load_lattice(ref: str) -> HermitianLattice:
    """A builtin ``@name`` or the path of a lattice JSON file."""
    if ref.startswith("@"):
        key = ref[1:]
        lookup = {k.lower(): f for k, f in BUILTIN_LATTICES.items()}
        if key.lower() not in lookup:
            raise InputError(f"unknown builtin lattice {ref!r}; choose from {', '.join(builtin_names())}")
        return lookup[key.lower()]()
    return lattice_from_json(_read_json(ref), name=Path(ref).stem)


def load_matrix(ref: str) -> Matrix:
    return matrix_from_json(_read_json(ref))


def _read_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


def save_lattice(lat: HermitianLattice, path: str) -> None:
    Path(path).write_text(json.dumps(lattice_to_json(lat), indent=2) + "\n")
