"""Exact Hochschild deformation theory of modules.

Documents are passed as JSON text or as plain dicts; results come back as
``(exit_code, dict)`` where exit code 0 is an affirmative verdict, 1 a
negative verdict with its certificate and 2 an input or resource error.
"""

import json

from ._core import (
    InputError,
    ResourceError,
    cohomology_dims as _cohomology_dims,
    commands,
    differential_matrix as _differential_matrix,
    fixture as _fixture,
    run as _run,
)

__all__ = [
    "InputError",
    "ResourceError",
    "commands",
    "fixture",
    "run",
    "differential_matrix",
    "cohomology_dims",
    "validate",
    "cohomology",
    "cocycle",
    "coboundary",
    "obstruction",
    "extend",
    "integrate",
    "normalize",
    "conjugate",
    "equiv_step",
    "rigidity",
]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def fixture(name):
    return json.loads(_fixture(name))


def run(command, document, *, field=None, order=None, degree=None):
    code, text = _run(command, _text(document), field, order, degree)
    return code, json.loads(text)


def differential_matrix(document, degree):
    return _differential_matrix(_text(document), degree)


def cohomology_dims(document, degree):
    return _cohomology_dims(_text(document), degree)


def _command(name):
    def call(document, **kwargs):
        return run(name, document, **kwargs)

    call.__name__ = name.replace("-", "_")
    call.__doc__ = f"Runs the '{name}' command."
    return call


validate = _command("validate")
cohomology = _command("cohomology")
cocycle = _command("cocycle")
coboundary = _command("coboundary")
obstruction = _command("obstruction")
extend = _command("extend")
integrate = _command("integrate")
normalize = _command("normalize")
conjugate = _command("conjugate")
equiv_step = _command("equiv-step")
rigidity = _command("rigidity")
