"""HTTP service exposing the library over JSON.

Every endpoint is a stateless wrapper: pydantic checks the request shape,
the document layer does the domain validation, and the core modules do
the work. Domain errors map to 422 with the offending field path;
internal invariant violations map to 500.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import documents
from .errors import EllsurfError, InputError
from .feasibility import VerticalSectionProblem, fiber_case_table, vertical_feasibility
from .kodaira import ALL_KINDS, euler_number, fiber_model
from .lattice import QDivisor, zariski_decompose
from .symdiff import HyperellipticModel, invariant_dim, sakai_check
from .verdict import evaluate

Q = Fraction


class BaseSection(BaseModel):
    genus: int = 0


class FiberSection(BaseModel):
    kind: str
    n: Optional[int] = None
    multiplicity: int = 1
    count: int = 1


class FlagsSection(BaseModel):
    isotrivial: bool = False
    cm: Optional[bool] = None
    standard: Optional[bool] = None
    zeta_nef_codim_one: bool = False
    zeta_pseudoeffective: bool = False


class BranchSection(BaseModel):
    order: int
    action: str


class ActionSection(BaseModel):
    group_order: int
    branch: list[BranchSection] = Field(default_factory=list)


class SurfaceDocument(BaseModel):
    base: BaseSection = Field(default_factory=BaseSection)
    fibers: list[FiberSection] = Field(default_factory=list)
    flags: FlagsSection = Field(default_factory=FlagsSection)
    action: Optional[ActionSection] = None
    minimal_model_class: Optional[str] = None
    ruling_genus: Optional[int] = None

    def to_description(self):
        return documents.parse_surface(self.model_dump())


class LatticeRequest(BaseModel):
    gram: list[list[int]]
    labels: Optional[list[str]] = None
    divisor: list[Any]


class SymdiffRequest(BaseModel):
    genus: int = 2
    i: int
    j: int = 0


class SakaiRequest(BaseModel):
    genus: int = 2
    imax: int = 8


class FeasibilityRequest(BaseModel):
    document: Optional[SurfaceDocument] = None
    k: int = 1
    a: Optional[str] = None
    kmax: Optional[int] = None


def create_app() -> FastAPI:
    app = FastAPI(title="ellsurf", version="1.0")

    @app.exception_handler(InputError)
    async def input_error(request: Request, exc: InputError):
        return JSONResponse(
            status_code=422,
            content={"error": str(exc), "path": exc.path},
        )

    @app.exception_handler(EllsurfError)
    async def internal_error(request: Request, exc: EllsurfError):
        return JSONResponse(status_code=500, content={"error": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/verdict")
    def verdict(doc: SurfaceDocument):
        return documents.report_payload(evaluate(doc.to_description()))

    @app.post("/invariants")
    def invariants(doc: SurfaceDocument):
        desc = doc.to_description()
        return documents.invariants_payload(desc.config)

    @app.post("/zariski")
    def zariski(req: LatticeRequest):
        doc = {"gram": req.gram}
        if req.labels is not None:
            doc["labels"] = req.labels
        config = documents.parse_lattice(doc)
        if len(req.divisor) != config.rank:
            raise InputError(
                f"expected {config.rank} coefficients", path="divisor"
            )
        coeffs = [
            documents.parse_rational(v, f"divisor[{i}]")
            for i, v in enumerate(req.divisor)
        ]
        pair = zariski_decompose(QDivisor(config, coeffs))
        return documents.zariski_payload(pair)

    @app.post("/symdiff")
    def symdiff(req: SymdiffRequest):
        model = HyperellipticModel.default(req.genus)
        dim = invariant_dim(model, req.i, req.j)
        return {"genus": req.genus, "i": req.i, "j": req.j, "dimension": dim}

    @app.post("/sakai")
    def sakai(req: SakaiRequest):
        rows = [
            {"i": i, "dimension": sakai_check(req.genus, i)}
            for i in range(1, req.imax + 1)
        ]
        return {"genus": req.genus, "rows": rows}

    @app.post("/feasibility")
    def feasibility(req: FeasibilityRequest):
        if req.kmax is not None:
            rows = fiber_case_table(req.kmax)
            return {
                "rows": [
                    {"kind": r.kind, "k": r.k, "status": r.verdict.status}
                    for r in rows
                ]
            }
        if req.document is None:
            raise InputError(
                "either kmax or a surface document is required",
                path="document",
            )
        desc = req.document.to_description()
        a = None
        if req.a is not None:
            a = documents.parse_rational(req.a, "a")
        verdict = vertical_feasibility(
            VerticalSectionProblem(desc.config, req.k, a=a)
        )
        payload = {"status": verdict.status, "k": verdict.k}
        if verdict.witness is not None:
            payload["witness"] = {
                "general_fiber": documents.format_rational(
                    verdict.witness.general_fiber
                ),
                "parts": [
                    {
                        "fiber": part.label,
                        "coefficients": [
                            documents.format_rational(c)
                            for c in part.coefficients
                        ],
                    }
                    for part in verdict.witness.parts
                ],
            }
            payload["note"] = verdict.note
        return payload

    @app.get("/catalog")
    def catalog():
        rows = []
        for t in ALL_KINDS:
            model = fiber_model(t)
            rows.append(
                {
                    "kind": t.label,
                    "euler": euler_number(t),
                    "components": model.config.rank,
                    "multiplicities": list(model.mult_vector),
                    "singular_points": len(model.znodes),
                }
            )
        return {"rows": rows}

    return app


app = create_app()
