import asyncio
import json
import logging
from typing import List, Optional

import janus
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.requests import Request
from pydantic import BaseModel, Field
from sse_starlette.sse import EventSourceResponse

from qverify.config import DEFAULT_ORDER, HOST, PORT
from qverify.errors import QLangSyntaxError, QVerifyError
from qverify.overpartitions import CongruenceClaim, CongruenceViolation, scan_congruence
from qverify.qlang import evaluate, parse
from qverify.verifier.catalog import catalog, get_record
from qverify.verifier.engine import iter_verify, verify_all


def parse_arguments():
    import argparse

    parser = argparse.ArgumentParser(description="qverify HTTP service")
    parser.add_argument("--host", default=HOST, type=str, help="Service host")
    parser.add_argument("--port", default=PORT, type=int, help="Service port")
    return parser.parse_args()


class ExpandParams(BaseModel):
    expr: str
    order: int = Field(ge=0)
    modulus: int = Field(default=0, ge=0)


class ExpandResult(BaseModel):
    order: int
    modulus: int
    coefficients: List[int]


class VerifyParams(BaseModel):
    ids: Optional[List[str]] = None
    order: Optional[int] = Field(default=None, ge=0)
    parallel: bool = False
    audit: bool = False


class CatalogEntry(BaseModel):
    id: str
    anchor: str
    relation: str
    modulus: int
    fidelity: str


def _select_records(ids: Optional[List[str]]):
    if not ids:
        return catalog()
    try:
        return [get_record(record_id) for record_id in ids]
    except KeyError as exc:
        raise HTTPException(status_code=404, detail=f"unknown record {exc.args[0]}")


def _check_order(records, order: Optional[int]):
    order = DEFAULT_ORDER if order is None else order
    for record in records:
        if order < record.min_order:
            raise HTTPException(
                status_code=400, detail=dict(msg=f"{record.id} needs order >= {record.min_order}, got {order}")
            )


def expand(params: ExpandParams) -> ExpandResult:
    try:
        value = evaluate(parse(params.expr), params.order, params.modulus)
    except QLangSyntaxError as exc:
        raise HTTPException(
            status_code=400, detail=dict(msg=exc.message, line=exc.line, column=exc.column)
        )
    except QVerifyError as exc:
        raise HTTPException(status_code=400, detail=dict(msg=str(exc)))
    return ExpandResult(order=value.order, modulus=value.modulus, coefficients=value.coefficients())


def scan(claim: CongruenceClaim) -> List[CongruenceViolation]:
    return scan_congruence(claim)


def list_catalog() -> List[CatalogEntry]:
    return [
        CatalogEntry(
            id=r.id, anchor=r.anchor, relation=r.relation, modulus=r.modulus, fidelity=r.fidelity
        )
        for r in catalog()
    ]


def verify(params: VerifyParams):
    records = _select_records(params.ids)
    try:
        reports = verify_all(params.order, params.parallel, params.audit, records)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=dict(msg=str(exc)))
    return [report.to_json_dict() for report in reports]


async def verify_stream(params: VerifyParams, _request: Request):
    async def generate():
        try:
            queue = janus.Queue()

            def sync_generator_wrapper():
                try:
                    for report in iter_verify(records, params.order, params.parallel, params.audit):
                        queue.sync_q.put(report)
                except Exception as e:
                    logging.exception(f"Exception in sync_generator_wrapper: {e}")
                    queue.sync_q.put(e)
                finally:
                    queue.sync_q.put(None)

            async def async_generator_wrapper():
                loop = asyncio.get_event_loop()
                loop.run_in_executor(None, sync_generator_wrapper)
                while True:
                    report = await queue.async_q.get()
                    if report is None:
                        break
                    if isinstance(report, Exception):
                        raise report
                    yield report

            async for report in async_generator_wrapper():
                yield {"data": json.dumps(report.to_json_dict(), ensure_ascii=False)}
                if await _request.is_disconnected():
                    break
        except Exception as exc:
            msg = "An error occurred while verifying the catalog."
            logging.exception(msg)
            yield {"data": json.dumps(dict(error=dict(msg=msg, details=str(exc))), ensure_ascii=False)}
        finally:
            queue.close()
            await queue.wait_closed()

    records = _select_records(params.ids)
    _check_order(records, params.order)
    return EventSourceResponse(generate(), ping=300)


def create_app() -> FastAPI:
    app = FastAPI(docs_url="/")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.add_api_route("/expand", expand, methods=["POST"], response_model=ExpandResult)
    app.add_api_route("/scan", scan, methods=["POST"], response_model=List[CongruenceViolation])
    app.add_api_route("/catalog", list_catalog, methods=["GET"], response_model=List[CatalogEntry])
    app.add_api_route("/verify", verify, methods=["POST"])
    app.add_api_route("/verify/stream", verify_stream, methods=["POST"])
    return app


app = create_app()

if __name__ == "__main__":
    import uvicorn

    from qverify.i18n import setup_i18n, t

    args = parse_arguments()
    setup_i18n()
    logging.info(t("SERVER_START", host=args.host, port=args.port))
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
