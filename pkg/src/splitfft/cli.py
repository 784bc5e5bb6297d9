"""Command-line client for the transform service.

Every subcommand except ``serve`` speaks the service's JSON protocol.  By
default requests run against an in-process instance of the app, so the
CLI works standalone; pass ``--server URL`` to talk to a running server
instead.

Exit codes: 0 success, 1 I/O / parse / request errors, 2 input length is
not a power of two, 3 verification found a deviation above tolerance.
"""

import argparse
import asyncio
import sys

import httpx
import numpy as np

from .layout import SplitSignal, is_power_of_two
from .signalio import SignalFormat, read_signal, write_signal


class CliError(Exception):
    """Carries a message and the process exit code to use."""

    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


async def _post_in_process(path: str, payload: dict) -> httpx.Response:
    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://splitfft.local", timeout=None
    ) as client:
        return await client.post(path, json=payload)


def _post(args, path: str, payload: dict) -> dict:
    try:
        if args.server:
            with httpx.Client(base_url=args.server, timeout=None) as client:
                resp = client.post(path, json=payload)
        else:
            resp = asyncio.run(_post_in_process(path, payload))
    except httpx.HTTPError as exc:
        raise CliError(f"request to {path} failed: {exc}") from exc
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise CliError(f"{path} returned status {resp.status_code}: {detail}")
    return resp.json()


def cmd_transform(args) -> int:
    in_fmt = SignalFormat(args.input_format) if args.input_format else None
    out_fmt = SignalFormat(args.output_format) if args.output_format else None
    signal = read_signal(args.input, in_fmt)
    n = len(signal)
    if not is_power_of_two(n):
        raise CliError(
            f"input has {n} samples; the transform length must be a power of two",
            code=2,
        )
    data = _post(
        args,
        "/transform",
        {
            "re": signal.re.tolist(),
            "im": signal.im.tolist(),
            "algorithm": args.algorithm,
            "inverse": args.inverse,
        },
    )
    result = SplitSignal(np.asarray(data["re"]), np.asarray(data["im"]))
    write_signal(args.output, result, out_fmt)
    return 0


def cmd_verify(args) -> int:
    data = _post(args, "/verify", {"max_m": args.max_m})
    for row in data["results"]:
        status = "PASS" if row["passed"] else "FAIL"
        print(
            f"m={row['m']:<2d} {row['algorithm']:<3s} "
            f"max deviation {row['deviation']:.3e}  {status}"
        )
    if data["passed"]:
        print(f"all factorizations within {data['tolerance']:g} of the DFT")
        return 0
    print("verification FAILED", file=sys.stderr)
    return 3


def cmd_bench(args) -> int:
    data = _post(
        args, "/bench", {"min_m": args.min_m, "max_m": args.max_m, "reps": args.reps}
    )
    print(f"{'m':>3} {'n':>9} {'algo':<6} {'median_s':>12} "
          f"{'mults':>10} {'adds':>12} {'generic':>9} {'quarter':>8} {'identity':>9}")
    for row in data["rows"]:
        def cell(key):
            return "-" if row[key] is None else str(row[key])

        print(f"{row['m']:>3} {row['n']:>9} {row['algorithm']:<6} "
              f"{row['median_seconds']:>12.3e} {cell('real_mults'):>10} "
              f"{cell('real_adds'):>12} {cell('generic_rotations'):>9} "
              f"{cell('quarter_turns'):>8} {cell('identity_rotations'):>9}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitfft",
        description="Radix-2 FFT over separate real/imaginary channels",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="transform a signal file")
    p.add_argument("input", help="input signal (.csv or .bin)")
    p.add_argument("output", help="output signal (.csv or .bin)")
    p.add_argument("--algorithm", choices=["dit", "dif"], default="dit")
    p.add_argument("--inverse", action="store_true", help="apply the inverse transform")
    p.add_argument("--input-format", choices=["csv", "bin"],
                   help="override the format inferred from the input extension")
    p.add_argument("--output-format", choices=["csv", "bin"],
                   help="override the format inferred from the output extension")
    p.add_argument("--server", help="base URL of a running service")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="check the stage factorizations against the DFT")
    p.add_argument("--max-m", type=int, default=6,
                   help="verify sizes 2^1 .. 2^max_m (dense, so small)")
    p.add_argument("--server", help="base URL of a running service")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the kernels against the naive oracle")
    p.add_argument("--min-m", type=int, default=1)
    p.add_argument("--max-m", type=int, default=10)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--server", help="base URL of a running service")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
