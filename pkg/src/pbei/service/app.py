"""FastAPI service wrapping the core package; the CLI covers the same
operations in-process for one-shot use."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..algebra import poly_to_str
from ..betti import koszul_betti
from ..errors import ResourceCapExceeded, check_variable_cap
from ..graphs import automorphisms, classify_pure, from_edge_list, parse_graph
from ..groebner import ideal_intersection, min_generator_degrees
from ..ideals import binomial_edge_ideal, parity_ideal
from ..verify import sweep, verify_case_graphs, verify_exact_sequences, verify_lemmas
from .schemas import (
    BettiRequest,
    BettiResponse,
    ClassifyRequest,
    ClassifyResponse,
    GraphJson,
    GroebnerResponse,
    HealthResponse,
    IdealRequest,
    IdealResponse,
    IntersectRequest,
    IntersectResponse,
    VerifyRequest,
    VerifyResponse,
)


def _graph(spec):
    if isinstance(spec, GraphJson):
        return parse_graph(spec.model_dump())
    return parse_graph(spec)


def _ideal(graph, kind: str, prime: int):
    check_variable_cap(2 * graph.n)
    maker = binomial_edge_ideal if kind == "bei" else parity_ideal
    return maker(graph, prime)


def create_app() -> FastAPI:
    app = FastAPI(title="pbei", version=__version__)

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ResourceCapExceeded)
    async def cap_handler(request: Request, exc: ResourceCapExceeded):
        return JSONResponse(status_code=413, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=__version__)

    @app.post("/ideal", response_model=IdealResponse)
    def ideal(req: IdealRequest):
        g = _graph(req.graph)
        ideal = _ideal(g, req.kind, req.prime)
        return IdealResponse(
            n=g.n,
            prime=req.prime,
            kind=req.kind,
            generators=[poly_to_str(f) for f in ideal.gens],
        )

    @app.post("/gb", response_model=GroebnerResponse)
    def gb(req: IdealRequest):
        g = _graph(req.graph)
        ideal = _ideal(g, req.kind, req.prime)
        return GroebnerResponse(
            n=g.n,
            prime=req.prime,
            order="degrevlex",
            basis=[poly_to_str(f) for f in ideal.groebner_basis()],
        )

    @app.post("/betti", response_model=BettiResponse)
    def betti(req: BettiRequest):
        g = _graph(req.graph)
        ideal = _ideal(g, req.kind, req.prime)
        table = koszul_betti(
            ideal, req.imax, req.jmax, vertex_symmetries=automorphisms(g)
        )
        verdict = table.purity()
        return BettiResponse(
            window=table.window,
            entries=table.nonzero(),
            pure=verdict.pure,
            degree_sequence=list(verdict.degree_sequence),
            witnesses=list(verdict.witnesses),
            diagram=table.render(),
        )

    @app.post("/classify", response_model=ClassifyResponse)
    def classify(req: ClassifyRequest):
        verdict = classify_pure(_graph(req.graph))
        return ClassifyResponse(
            pure=verdict.pure,
            reason=verdict.reason,
            stripped_isolated=list(verdict.stripped_isolated),
        )

    @app.post("/intersect", response_model=IntersectResponse)
    def intersect(req: IntersectRequest):
        ga = _graph(req.graph_a)
        gb_ = _graph(req.graph_b)
        n = max(ga.n, gb_.n)
        if ga.n < n:
            ga = from_edge_list(sorted(ga.edges), n=n)
        if gb_.n < n:
            gb_ = from_edge_list(sorted(gb_.edges), n=n)
        check_variable_cap(2 * n + 1)
        inter = ideal_intersection(
            parity_ideal(ga, req.prime), parity_ideal(gb_, req.prime)
        )
        return IntersectResponse(
            n=n,
            prime=req.prime,
            generators=[poly_to_str(f) for f in inter.gens],
            min_generator_degrees=min_generator_degrees(inter),
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest):
        run_all = not (req.lemmas or req.sequences or req.cases or req.sweep_n)
        reports = []
        if req.lemmas or run_all:
            reports.append(verify_lemmas(req.prime))
        if req.sequences or run_all:
            reports.append(verify_exact_sequences(req.prime))
        if req.cases or run_all:
            reports.append(verify_case_graphs(req.prime))
        sweep_json = None
        ok = all(r.ok for r in reports)
        if req.sweep_n:
            rep = sweep(req.sweep_n, window=(req.imax, req.jmax), p=req.prime)
            sweep_json = rep.to_json()
            ok = ok and rep.ok
        return VerifyResponse(
            ok=ok, reports=[r.to_json() for r in reports], sweep=sweep_json
        )

    return app
