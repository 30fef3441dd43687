"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

from ..algebra import DEFAULT_PRIME


class GraphJson(BaseModel):
    n: int
    edges: list[tuple[int, int]] = Field(default_factory=list)


GraphSpec = Union[str, GraphJson]


class IdealRequest(BaseModel):
    graph: GraphSpec
    kind: Literal["parity", "bei"] = "parity"
    prime: int = DEFAULT_PRIME


class IdealResponse(BaseModel):
    n: int
    prime: int
    kind: str
    generators: list[str]


class GroebnerResponse(BaseModel):
    n: int
    prime: int
    order: str
    basis: list[str]


class BettiRequest(BaseModel):
    graph: GraphSpec
    imax: int
    jmax: int
    kind: Literal["parity", "bei"] = "parity"
    prime: int = DEFAULT_PRIME


class BettiResponse(BaseModel):
    window: tuple[int, int]
    entries: list[tuple[int, int, int]]
    pure: bool
    degree_sequence: list[int]
    witnesses: list[tuple[int, int]]
    diagram: str


class ClassifyRequest(BaseModel):
    graph: GraphSpec


class ClassifyResponse(BaseModel):
    pure: bool
    reason: str
    stripped_isolated: list[int]


class IntersectRequest(BaseModel):
    graph_a: GraphSpec
    graph_b: GraphSpec
    prime: int = DEFAULT_PRIME


class IntersectResponse(BaseModel):
    n: int
    prime: int
    generators: list[str]
    min_generator_degrees: list[int]


class VerifyRequest(BaseModel):
    lemmas: bool = False
    sequences: bool = False
    cases: bool = False
    sweep_n: Optional[int] = None
    imax: int = 8
    jmax: int = 12
    prime: int = DEFAULT_PRIME


class VerifyResponse(BaseModel):
    ok: bool
    reports: list[dict]
    sweep: Optional[dict] = None


class HealthResponse(BaseModel):
    status: str
    version: str
