"""HTTP front end: every library capability behind a stateless endpoint.

Domain errors (bad grids, dimension mismatches, capacity caps) surface as
HTTP 400 with a plain-text detail; malformed request bodies get FastAPI's
usual 422.
"""

from __future__ import annotations

from fastapi import APIRouter, FastAPI, Path, Request
from fastapi.responses import JSONResponse

from .. import __version__, engine, graph, grid, gf2, rulematrix, rules, verify
from . import schemas

router = APIRouter()


@router.get("/", response_model=schemas.ServiceInfo)
def service_info() -> schemas.ServiceInfo:
    return schemas.ServiceInfo(name="linca2d", version=__version__)


@router.get("/rules/{rule}", response_model=schemas.RuleInfoResponse)
def rule_info(rule: int = Path(ge=0, le=511)) -> schemas.RuleInfoResponse:
    fundamentals = rules.decompose(rule)
    deps = []
    for weight in fundamentals:
        dr, dc = rules.offset_of(weight)
        deps.append(schemas.NeighborDependency(
            weight=weight, row_delta=dr, col_delta=dc,
            direction=rules.DIRECTION_NAMES[(dr, dc)]))
    return schemas.RuleInfoResponse(
        rule=rule,
        binary=f"{rule:09b}",
        fundamentals=list(fundamentals),
        dependencies=deps,
        transpose_partner_rule=rules.partner_rule(rule),
        text=rules.describe_rule(rule),
    )


@router.post("/step", response_model=schemas.StepResponse)
def step_grid(req: schemas.StepRequest) -> schemas.StepResponse:
    g = grid.parse_grid(req.grid)
    out = engine.step(g, req.rule)
    return schemas.StepResponse(grid=grid.serialize_grid(out), rows=g.m, cols=g.n)


@router.post("/evolve", response_model=schemas.EvolveResponse)
def evolve_grid(req: schemas.EvolveRequest) -> schemas.EvolveResponse:
    g = grid.parse_grid(req.grid)
    trajectory = engine.evolve(g, req.rule, req.steps)
    return schemas.EvolveResponse(
        generations=[grid.serialize_grid(t) for t in trajectory],
        rows=g.m, cols=g.n)


@router.post("/matrix", response_model=schemas.MatrixResponse)
def rule_matrix(req: schemas.MatrixRequest) -> schemas.MatrixResponse:
    mat = rulematrix.build(req.rule, req.rows, req.cols)
    text = gf2.serialize_matrix(mat, req.format, rule=req.rule,
                                grid_dims=(req.rows, req.cols))
    return schemas.MatrixResponse(text=text, dim=mat.dim, ones=mat.popcount())


@router.post("/graph", response_model=schemas.GraphResponse)
def rule_graph(req: schemas.GraphRequest) -> schemas.GraphResponse:
    if req.colored:
        g = graph.colored_graph(req.rule, req.rows, req.cols)
    else:
        g = graph.from_matrix(rulematrix.build(req.rule, req.rows, req.cols))
    return schemas.GraphResponse(dot=graph.to_dot(g),
                                 vertex_count=g.vertex_count,
                                 edge_count=len(g.edges))


@router.post("/analyze", response_model=schemas.AnalyzeResponse)
def analyze_rule(req: schemas.AnalyzeRequest) -> schemas.AnalyzeResponse:
    mat = rulematrix.build(req.rule, req.rows, req.cols)
    st = graph.stats(graph.from_matrix(mat))
    rank = mat.rank()
    resp = schemas.AnalyzeResponse(
        rule=req.rule,
        rows=req.rows,
        cols=req.cols,
        dim=mat.dim,
        ones=mat.popcount(),
        rank=rank,
        invertible=rank == mat.dim,
        self_loop_count=st.self_loop_count,
        isolated=list(st.isolated),
        component_count=st.component_count,
        components=[list(c) for c in st.weak_components],
        out_degrees=list(st.out_degrees),
        in_degrees=list(st.in_degrees),
        text="",
    )
    resp.text = _analysis_text(resp)
    return resp


@router.post("/verify", response_model=schemas.VerifyResponse)
def verify_rules(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    reports = verify.run_suites(req.rows, req.cols, suite=req.suite,
                                trials=req.trials, seed=req.seed)
    models = [
        schemas.ReportModel(
            suite=r.suite_name,
            cases_run=r.cases_run,
            failures=[schemas.FailureModel(case_id=f.case_id, expected=f.expected,
                                           actual=f.actual) for f in r.failures],
            seed=r.seed,
            dims=[list(d) for d in r.dims_tested],
            expected_divergences=[schemas.DivergenceModel(case_id=c, detail=d)
                                  for c, d in r.expected_divergences],
            passed=r.passed,
        )
        for r in reports
    ]
    return schemas.VerifyResponse(
        passed=all(r.passed for r in reports),
        reports=models,
        text="\n".join(verify.render_report(r) for r in reports),
    )


def _analysis_text(a: schemas.AnalyzeResponse) -> str:
    isolated = " ".join(f"v{v}" for v in a.isolated) if a.isolated else "none"
    sizes = " ".join(str(len(c)) for c in a.components)
    lines = [
        f"rule {a.rule} on {a.rows}x{a.cols} grid (matrix dim {a.dim})",
        f"ones: {a.ones}",
        f"rank: {a.rank}",
        f"invertible: {'yes' if a.invertible else 'no'}",
        f"self loops: {a.self_loop_count}",
        f"isolated vertices: {isolated}",
        f"weak components: {a.component_count}",
        f"component sizes: {sizes}",
        f"out degrees: {' '.join(str(d) for d in a.out_degrees)}",
        f"in degrees: {' '.join(str(d) for d in a.in_degrees)}",
    ]
    return "\n".join(lines) + "\n"


async def _domain_error(_: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def create_app() -> FastAPI:
    """Build the service; stateless, so instances are interchangeable."""
    app = FastAPI(title="linca2d", version=__version__,
                  description="Linear two-dimensional cellular automata rules: "
                              "evolution, rule matrices, color graphs, verification.")
    app.include_router(router)
    app.add_exception_handler(ValueError, _domain_error)
    return app


app = create_app()
