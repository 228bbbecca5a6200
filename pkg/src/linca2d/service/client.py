"""Synchronous in-process client: the service API without a server.

Drives the ASGI app directly through httpx's ASGITransport on a private
event loop, so callers get real request/response semantics (status codes,
validation errors) with no socket and no separate process.
"""

from __future__ import annotations

import asyncio

import httpx


class InProcessClient:
    """httpx.Client-alike whose requests run against the app in-process."""

    def __init__(self, app=None):
        if app is None:
            from .app import create_app
            app = create_app()
        self._loop = asyncio.new_event_loop()
        self._client = httpx.AsyncClient(
            transport=httpx.ASGITransport(app=app),
            base_url="http://linca2d.internal",
            timeout=None,
        )

    def request(self, method: str, url: str, **kwargs) -> httpx.Response:
        return self._loop.run_until_complete(
            self._client.request(method, url, **kwargs))

    def get(self, url: str, **kwargs) -> httpx.Response:
        return self.request("GET", url, **kwargs)

    def post(self, url: str, **kwargs) -> httpx.Response:
        return self.request("POST", url, **kwargs)

    def close(self) -> None:
        self._loop.run_until_complete(self._client.aclose())
        self._loop.close()

    def __enter__(self) -> InProcessClient:
        return self

    def __exit__(self, *exc) -> None:
        self.close()
