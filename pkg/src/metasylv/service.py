"""HTTP service exposing counting, conversion, diagrams and verification.

The service owns all input validation and size-limit policy; the CLI is a
thin client.  Errors carry a machine-readable kind: request-shape problems
are rejected by the model validation (422), payload content problems map
to "bad_payload", and cap violations to "size_limit".
"""

from __future__ import annotations

import math
import os
from typing import Any, Literal, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .convert import convert as convert_payload
from .diagram import (
    LatticeDiagram,
    diagram_from_covers,
    metasylvester_lattice_diagram,
    weak_lattice_diagram,
)
from .errors import MetasylvError, SizeLimit, StabilityViolation
from .metasylvester import count_classes
from .tamari import enumerate_ballot_paths, rotation_covers
from .verify import SUITE_NAMES, run_suite
from .weak_order import count_mpermutations

ENUM_CAP = 12
DIAGRAM_CAP = 9
HARD_CAP = 14


def default_cap(fallback: int) -> int:
    env = os.environ.get("METASYLV_MAX_NM")
    return int(env) if env else fallback


def _check_cap(n: int, m: int, cap: Optional[int], fallback: int) -> None:
    limit = cap if cap is not None else default_cap(fallback)
    if n * m > limit:
        raise SizeLimit(f"n*m = {n * m} exceeds the cap {limit}")


class CountRequest(BaseModel):
    n: int = Field(ge=1)
    m: int = Field(ge=1)
    object: Literal["mperms", "classes", "trees", "chains", "ballot-paths"]
    max_nm: Optional[int] = None


class ConvertRequest(BaseModel):
    from_rep: Literal["mperm", "maxclass", "tree", "inversions", "code",
                      "chain", "dyck-chain"] = Field(alias="from")
    to_rep: Literal["mperm", "maxclass", "tree", "inversions", "code",
                    "chain", "dyck-chain"] = Field(alias="to")
    payload: Any
    n: Optional[int] = None
    m: Optional[int] = None

    model_config = {"populate_by_name": True}


class HasseRequest(BaseModel):
    n: int = Field(ge=1)
    m: int = Field(ge=1)
    lattice: Literal["weak", "metasylvester", "mtamari"]
    format: Literal["dot", "json"] = "json"
    max_nm: Optional[int] = None
    verify: bool = False


class VerifyRequest(BaseModel):
    suite: Literal["weak-lattice", "intervals", "semi-quotient",
                   "bijections", "tamari", "all"]
    max_nm: int = Field(default=4, ge=1, le=HARD_CAP)


def fuss_catalan(n: int, m: int) -> int:
    return math.comb((m + 1) * n, n) // (m * n + 1)


def build_diagram(n: int, m: int, lattice: str) -> LatticeDiagram:
    if lattice == "weak":
        return weak_lattice_diagram(n, m)
    if lattice == "metasylvester":
        return metasylvester_lattice_diagram(n, m)
    return diagram_from_covers("mtamari", enumerate_ballot_paths(n, m),
                               lambda p: p.steps, rotation_covers)


def create_app() -> FastAPI:
    app = FastAPI(title="metasylv")

    @app.exception_handler(SizeLimit)
    async def _size_limit(_req: Request, exc: SizeLimit):
        return JSONResponse(status_code=413,
                            content={"error": "size_limit", "message": str(exc)})

    @app.exception_handler(StabilityViolation)
    async def _property_failure(_req: Request, exc: StabilityViolation):
        return JSONResponse(status_code=500,
                            content={"error": "property_failure",
                                     "message": str(exc)})

    @app.exception_handler(MetasylvError)
    async def _bad_payload(_req: Request, exc: MetasylvError):
        return JSONResponse(status_code=422,
                            content={"error": "bad_payload", "message": str(exc)})

    @app.post("/count")
    async def count(req: CountRequest):
        _check_cap(req.n, req.m, req.max_nm, ENUM_CAP)
        if req.object == "mperms":
            value = count_mpermutations(req.n, req.m)
        elif req.object == "ballot-paths":
            value = fuss_catalan(req.n, req.m)
        else:
            value = count_classes(req.n, req.m)
        return {"count": value}

    @app.post("/convert")
    async def convert(req: ConvertRequest):
        out = convert_payload(req.from_rep, req.to_rep, req.payload,
                              req.n, req.m)
        return {"payload": out}

    @app.post("/hasse")
    async def hasse(req: HasseRequest):
        _check_cap(req.n, req.m, req.max_nm, DIAGRAM_CAP)
        diagram = build_diagram(req.n, req.m, req.lattice)
        if req.verify and not diagram.is_lattice():
            raise StabilityViolation(
                f"{req.lattice} diagram at ({req.n},{req.m}) is not a lattice")
        if req.format == "dot":
            return {"format": "dot", "diagram": diagram.to_dot()}
        return {"format": "json", "diagram": diagram.to_dict()}

    @app.post("/verify")
    async def verify(req: VerifyRequest):
        report = run_suite(req.suite, req.max_nm)
        return report.to_dict()

    return app


app = create_app()
