"""HTTP service exposing the transform, the dense verifier, and the bench."""

import dataclasses
from functools import lru_cache

import numpy as np
from fastapi import FastAPI, HTTPException

from .. import __version__
from ..bench import run_benchmark
from ..densealg import VERIFY_TOLERANCE, verify_factorization
from ..errors import CapacityError
from ..layout import SplitSignal, deinterleave, interleave
from ..transform import fft, ifft, make_plan
from .models import (
    BenchRequest,
    BenchResponse,
    BenchRowOut,
    HealthResponse,
    TransformRequest,
    TransformResponse,
    VerifyRequest,
    VerifyResponse,
    VerifyResult,
)


@lru_cache(maxsize=32)
def _plan(m: int, algorithm: str):
    return make_plan(m, algorithm)


def create_app() -> FastAPI:
    app = FastAPI(title="splitfft", version=__version__)

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=__version__)

    @app.post("/transform", response_model=TransformResponse)
    def transform(req: TransformRequest):
        try:
            signal = SplitSignal(np.asarray(req.re), np.asarray(req.im))
            buf = interleave(signal)
            plan = _plan(buf.m, req.algorithm)
            if req.inverse:
                ifft(plan, buf)
            else:
                fft(plan, buf)
        except ValueError as exc:  # includes CapacityError
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        out = deinterleave(buf)
        return TransformResponse(
            re=out.re.tolist(),
            im=out.im.tolist(),
            m=buf.m,
            algorithm=req.algorithm,
            inverse=req.inverse,
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest):
        results = []
        try:
            for m in range(1, req.max_m + 1):
                for algo in ("dit", "dif"):
                    dev = verify_factorization(m, algo)
                    results.append(
                        VerifyResult(
                            m=m,
                            algorithm=algo,
                            deviation=dev,
                            passed=dev <= VERIFY_TOLERANCE,
                        )
                    )
        except CapacityError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return VerifyResponse(
            results=results,
            tolerance=VERIFY_TOLERANCE,
            passed=all(r.passed for r in results),
        )

    @app.post("/bench", response_model=BenchResponse)
    def bench(req: BenchRequest):
        try:
            rows = run_benchmark(req.min_m, req.max_m, req.reps)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        out = []
        for row in rows:
            fields = dataclasses.asdict(row.flops) if row.flops is not None else {}
            out.append(
                BenchRowOut(
                    m=row.m,
                    n=row.n,
                    algorithm=row.algorithm,
                    median_seconds=row.median_seconds,
                    **fields,
                )
            )
        return BenchResponse(rows=out)

    return app


app = create_app()
