"""
Loading and validating input documents (JSON or TOML, chosen by suffix).
"""

import json
import logging
import tomllib
from dataclasses import dataclass, field
from pathlib import Path

from django.core.exceptions import ValidationError

from drinfeld.modules import DrinfeldModuleSpec, validate
from kummer.lattice import LatticeSpec

from .forms import (
    ElementForm,
    EndomorphismsForm,
    FieldForm,
    LatticeForm,
    ModuleForm,
    ParamsForm,
)

logger = logging.getLogger(__name__)


@dataclass
class Document:
    field: object
    spec: DrinfeldModuleSpec
    lattice: LatticeSpec
    has_lattice: bool = False
    depth: int = None
    prec: int = None
    bound: object = None
    element: object = None
    endomorphisms: list = field(default_factory=list)


def load_document(path):
    path = Path(path)
    try:
        if path.suffix == ".toml":
            with path.open("rb") as handle:
                return tomllib.load(handle)
        if path.suffix == ".json":
            with path.open(encoding="utf-8") as handle:
                return json.load(handle)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}", code="io")
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise ValidationError(f"cannot parse {path}: {exc}", code="syntax")
    raise ValidationError(
        f"unsupported input format {path.suffix!r}, use .json or .toml",
        code="format",
    )


def _checked(block, form):
    if not form.is_valid():
        messages = [
            f"{block}.{name}: {error}" if name != "__all__" else f"{block}: {error}"
            for name, errors in form.errors.items()
            for error in errors
        ]
        raise ValidationError(messages)
    return form.cleaned_data


def parse_document(data, overrides=None):
    """
    Validate every block and build the field, the validated module and the
    optional lattice.  Values in overrides (command-line flags) replace the
    params block entry by entry.
    """
    if not isinstance(data, dict):
        raise ValidationError("the document must be a table of blocks")
    for block in ("field", "module"):
        if not isinstance(data.get(block), dict):
            raise ValidationError(f"the document needs a {block} block")

    field_spec = _checked("field", FieldForm(data=data["field"]))["spec"]
    phi_t = _checked("module", ModuleForm(field_spec, data=data["module"]))["phi_t"]
    spec = validate(DrinfeldModuleSpec(field_spec, phi_t))

    lattice_block = data.get("lattice")
    if lattice_block is not None and not isinstance(lattice_block, dict):
        raise ValidationError("the lattice block must be a table")
    lattice = _checked("lattice", LatticeForm(field_spec, data=lattice_block or {}))

    params = dict(data.get("params") or {})
    for key, value in (overrides or {}).items():
        if value is not None:
            params[key] = value
    params = _checked("params", ParamsForm(data=params))

    element = None
    if "element" in data:
        element = _checked(
            "element", ElementForm(field_spec, data={"element": data["element"]})
        )["element"]
    endomorphisms = _checked(
        "endomorphisms",
        EndomorphismsForm(
            field_spec, data={"endomorphisms": data.get("endomorphisms")}
        ),
    )["endomorphisms"]

    document = Document(
        field=field_spec,
        spec=spec,
        lattice=lattice["lattice"],
        has_lattice=lattice_block is not None,
        depth=params["depth"],
        prec=params["prec"],
        bound=params["bound"],
        element=element,
        endomorphisms=endomorphisms,
    )
    logger.debug(f"parsed document for {spec}, lattice {document.lattice}")
    return document
