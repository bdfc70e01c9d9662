"""Command-line frontend: a thin client over the recognition service.

Every subcommand builds one request and renders the response.  With no
--server option the request is dispatched to an in-process instance of the
service app; with --server URL it goes over HTTP to a running instance.
Exit status: 0 success/accept, 1 reject (recognize only), 2 input error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

_TIMEOUT = None  # batch tool; benchmark requests can legitimately run long


def _request(server: str | None, path: str, payload: dict) -> tuple[int, str]:
    if server is not None:
        response = httpx.post(server.rstrip("/") + path, json=payload, timeout=_TIMEOUT)
        return response.status_code, response.text

    async def dispatch() -> tuple[int, str]:
        from .service.app import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://gpgraph.local", timeout=_TIMEOUT
        ) as client:
            response = await client.post(path, json=payload)
            return response.status_code, response.text

    return asyncio.run(dispatch())


def _fail(status: int, body: str) -> int:
    try:
        detail = json.loads(body).get("detail", body)
    except (json.JSONDecodeError, AttributeError):
        detail = body
    print(f"error: {detail}", file=sys.stderr)
    return 2


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_generate(args) -> int:
    status, body = _request(args.server, "/generate", {"n": args.n, "k": args.k})
    if status != 200:
        return _fail(status, body)
    data = json.loads(body)
    try:
        _write_output(args.out, data["graph_text"])
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.verbose:
        print("outer:", " ".join(map(str, data["outer"])), file=sys.stderr)
        print("inner:", " ".join(map(str, data["inner"])), file=sys.stderr)
    return 0


def cmd_recognize(args) -> int:
    try:
        text = _read_input(args.path)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    status, body = _request(
        args.server, "/recognize", {"graph_text": text, "oracle": args.oracle}
    )
    if status != 200:
        return _fail(status, body)
    sys.stdout.write(body + "\n")
    return 0 if json.loads(body)["is_gp"] else 1


def cmd_sigma(args) -> int:
    try:
        text = _read_input(args.path)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    status, body = _request(args.server, "/sigma", {"graph_text": text})
    if status != 200:
        return _fail(status, body)
    sys.stdout.write(body + "\n")
    return 0


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        print("error: --sizes must be a comma-separated list of integers", file=sys.stderr)
        return 2
    status, body = _request(
        args.server, "/bench", {"sizes": sizes, "k": args.k, "reps": args.reps}
    )
    if status != 200:
        return _fail(status, body)
    lines = ["n,k,wall_time_ns,sigma_steps,accepted"]
    for record in json.loads(body)["records"]:
        lines.append(
            "%d,%d,%d,%d,%s"
            % (
                record["n"],
                record["k"],
                record["wall_time_ns"],
                record["sigma_steps"],
                "true" if record["accepted"] else "false",
            )
        )
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("gpgraph.service.app:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpgraph",
        description="Generate and recognize generalized Petersen graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write GP(n, k) as an edge list")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("out", nargs="?", default="-", help="output path, '-' for stdout")
    p.add_argument("--verbose", action="store_true", help="print the labeling to stderr")
    p.add_argument("--server", default=None, help="URL of a running service instance")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("recognize", help="decide membership for an edge-list file")
    p.add_argument("path", help="input path, '-' for stdin")
    p.add_argument("--oracle", action="store_true", help="force the brute-force oracle")
    p.add_argument(
        "--json", action="store_true", help="emit the JSON result (default output format)"
    )
    p.add_argument("--server", default=None)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("sigma", help="dump the 8-cycle-count edge partition as JSON")
    p.add_argument("path", help="input path, '-' for stdin")
    p.add_argument("--server", default=None)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("bench", help="CSV timing/step records for GP(n, k) recognition")
    p.add_argument("--sizes", required=True, help="comma-separated list of n values")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--server", default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the recognition service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except httpx.HTTPError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
