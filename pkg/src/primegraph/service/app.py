"""FastAPI service wrapping the classification toolkit.

Stateless endpoints over the core package; builtin groups and character
tables are cached per process, so a long-running service amortizes the
enumeration and validation work across requests.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import chartab
from ..classify import (
    Family,
    classify,
    fixture,
    necessary_edge_removal_check,
    strict_psl33_obstruction,
)
from ..construct import (
    construct,
    eval_prime_graph,
    recipe_from_json_dict,
    verify_obligations,
)
from ..errors import (
    CapabilityError,
    ContractViolation,
    DataIntegrityError,
    InvalidInput,
    NotApplicable,
    PrimeGraphError,
    SizeLimitExceeded,
)
from ..graphs import chromatic_number_oracle, complement, triangles
from ..groups import builtin, group_from_json_dict, order_spectrum, prime_graph
from ..realize import realize as realize_recipe
from . import schemas

_STATUS = {
    InvalidInput: 400,
    NotApplicable: 400,
    ContractViolation: 409,
    SizeLimitExceeded: 413,
    CapabilityError: 422,
    DataIntegrityError: 500,
}


def create_app() -> FastAPI:
    app = FastAPI(
        title="primegraph",
        description="Prime graph classification, construction and verification",
    )

    @app.exception_handler(PrimeGraphError)
    async def _handle(request: Request, exc: PrimeGraphError):
        status = next(
            (code for cls, code in _STATUS.items() if isinstance(exc, cls)), 500
        )
        return JSONResponse(
            status_code=status,
            content=schemas.ErrorResponse(
                error=type(exc).__name__, detail=str(exc)
            ).model_dump(),
        )

    @app.get("/")
    def meta() -> dict:
        return {
            "service": "primegraph",
            "families": [f.cli_name for f in Family],
            "endpoints": [
                "/classify",
                "/construct",
                "/prime-graph",
                "/verify-tables",
                "/fixtures/{name}",
                "/oracle",
                "/edge-removal",
                "/psl33-obstruction",
            ],
        }

    def _input_graph(model: schemas.GraphModel, is_complement: bool):
        g = model.to_graph()
        return complement(g) if is_complement else g

    @app.post("/classify", response_model=schemas.ClassifyResponse)
    def classify_endpoint(req: schemas.ClassifyRequest) -> schemas.ClassifyResponse:
        gamma = _input_graph(req.graph, req.complement)
        families = (
            list(Family) if req.family == "auto" else [Family.from_name(req.family)]
        )
        verdicts = [
            schemas.VerdictModel(**classify(gamma, fam).to_json_dict())
            for fam in families
        ]
        return schemas.ClassifyResponse(verdicts=verdicts)

    @app.post("/edge-removal", response_model=schemas.VerdictModel)
    def edge_removal_endpoint(req: schemas.EdgeRemovalRequest) -> schemas.VerdictModel:
        gamma = _input_graph(req.graph, req.complement)
        verdict = necessary_edge_removal_check(gamma, Family.from_name(req.family))
        return schemas.VerdictModel(**verdict.to_json_dict())

    @app.post("/psl33-obstruction", response_model=schemas.ObstructionResponse)
    def obstruction_endpoint(req: schemas.ObstructionRequest) -> schemas.ObstructionResponse:
        gamma = _input_graph(req.graph, req.complement)
        witness = strict_psl33_obstruction(gamma)
        return schemas.ObstructionResponse(
            obstructed=witness is not None, witness=witness
        )

    @app.post("/construct", response_model=schemas.ConstructResponse)
    def construct_endpoint(req: schemas.ConstructRequest) -> schemas.ConstructResponse:
        gamma = _input_graph(req.graph, req.complement)
        family = Family.from_name(req.family)
        verdict = classify(gamma, family)
        vm = schemas.VerdictModel(**verdict.to_json_dict())
        if not verdict.accept:
            return schemas.ConstructResponse(accepted=False, verdict=vm)
        recipe, assignment = construct(gamma, family)
        realization = None
        if req.realize:
            rz = realize_recipe(recipe, max_order=req.max_order)
            expected = eval_prime_graph(recipe)
            realization = schemas.RealizationModel(
                order=rz.order,
                degree=rz.degree,
                permutation_group=rz.is_permutation_group,
                symbolic_modules=[(r, d) for r, d in rz.symbolic_modules],
                prime_graph=schemas.GraphModel.from_graph(rz.prime_graph()),
                matches_recipe=rz.prime_graph() == expected,
            )
        return schemas.ConstructResponse(
            accepted=True,
            verdict=vm,
            recipe=recipe.to_json_dict(),
            assignment=assignment.to_json_dict(),
            obligations=verify_obligations(recipe).to_json_dict(),
            realization=realization,
        )

    @app.post("/prime-graph", response_model=schemas.PrimeGraphResponse)
    def prime_graph_endpoint(req: schemas.PrimeGraphRequest) -> schemas.PrimeGraphResponse:
        provided = [x is not None for x in (req.builtin, req.group, req.recipe)]
        if sum(provided) != 1:
            raise InvalidInput("provide exactly one of builtin, group, recipe")
        if req.builtin is not None:
            group = builtin(req.builtin)
            graph = prime_graph(group)
            name, order = group.name, group.order()
            spectrum = sorted(order_spectrum(group))
        elif req.group is not None:
            group = group_from_json_dict(req.group.model_dump())
            graph = prime_graph(group)
            name, order = group.name, group.order()
            spectrum = sorted(order_spectrum(group))
        else:
            recipe = recipe_from_json_dict(req.recipe)
            graph = eval_prime_graph(recipe)
            name, order, spectrum = "recipe", 0, None
        comp = complement(graph)
        return schemas.PrimeGraphResponse(
            name=name,
            order=order,
            spectrum=spectrum,
            graph=schemas.GraphModel.from_graph(graph),
            complement=schemas.GraphModel.from_graph(comp),
            graph_dot=graph.to_dot() if req.dot else None,
            complement_dot=comp.to_dot() if req.dot else None,
        )

    @app.post("/verify-tables", response_model=schemas.VerifyTablesResponse)
    def verify_tables_endpoint() -> schemas.VerifyTablesResponse:
        claims = chartab.verify_fixed_point_claims()
        tables = chartab.validate_all_tables()
        reports = [schemas.ReportModel(**t.to_json_dict()) for t in tables]
        return schemas.VerifyTablesResponse(
            ok=claims.ok and all(t.ok for t in tables),
            claims=schemas.ReportModel(**claims.to_json_dict()),
            tables=reports,
        )

    @app.get("/fixtures/{name}", response_model=schemas.FixtureResponse)
    def fixture_endpoint(name: str) -> schemas.FixtureResponse:
        g = fixture(name)
        return schemas.FixtureResponse(
            name=name, graph=schemas.GraphModel.from_graph(g), dot=g.to_dot()
        )

    @app.post("/oracle", response_model=schemas.OracleResponse)
    def oracle_endpoint(req: schemas.OracleRequest) -> schemas.OracleResponse:
        g = _input_graph(req.graph, req.complement)
        return schemas.OracleResponse(
            chromatic_number=chromatic_number_oracle(g),
            triangles=[[str(v) for v in t.vertices] for t in triangles(g)],
        )

    return app
