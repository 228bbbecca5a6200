"""FastAPI service wrapping the core library; run with uvicorn:

    uvicorn linca2d.service:app
"""

from .app import app, create_app
from .client import InProcessClient

__all__ = ["InProcessClient", "app", "create_app"]
