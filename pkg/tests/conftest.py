import threading
import time
from contextlib import contextmanager

import pytest
import uvicorn

from ryuo_nim.service import create_app


@contextmanager
def running_service():
    """The real service on an ephemeral localhost port, torn down on exit."""
    config = uvicorn.Config(create_app(), host="127.0.0.1", port=0,
                            log_level="warning")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.monotonic() + 10
    while not server.started:
        if time.monotonic() > deadline:
            raise RuntimeError("service did not start")
        time.sleep(0.01)
    port = server.servers[0].sockets[0].getsockname()[1]
    try:
        yield f"http://127.0.0.1:{port}"
    finally:
        server.should_exit = True
        thread.join(timeout=10)


@pytest.fixture(scope="session")
def live_service():
    with running_service() as base_url:
        yield base_url
