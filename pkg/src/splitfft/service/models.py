"""Request/response schemas for the HTTP service."""

from typing import Literal, Optional

from pydantic import BaseModel, Field


class TransformRequest(BaseModel):
    re: list[float]
    im: list[float]
    algorithm: Literal["dit", "dif"] = "dit"
    inverse: bool = False


class TransformResponse(BaseModel):
    re: list[float]
    im: list[float]
    m: int
    algorithm: str
    inverse: bool


class VerifyRequest(BaseModel):
    max_m: int = Field(default=6, ge=0)


class VerifyResult(BaseModel):
    m: int
    algorithm: str
    deviation: float
    passed: bool


class VerifyResponse(BaseModel):
    results: list[VerifyResult]
    tolerance: float
    passed: bool


class BenchRequest(BaseModel):
    min_m: int = Field(default=1, ge=0)
    max_m: int = Field(default=10, le=24)
    reps: int = Field(default=3, ge=1, le=100)


class BenchRowOut(BaseModel):
    m: int
    n: int
    algorithm: str
    median_seconds: float
    real_mults: Optional[int] = None
    real_adds: Optional[int] = None
    generic_rotations: Optional[int] = None
    quarter_turns: Optional[int] = None
    identity_rotations: Optional[int] = None


class BenchResponse(BaseModel):
    rows: list[BenchRowOut]


class HealthResponse(BaseModel):
    status: str
    version: str
