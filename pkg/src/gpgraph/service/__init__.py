"""HTTP service frontend: FastAPI app plus pydantic request/response models."""

from .app import app, create_app

__all__ = ["app", "create_app"]
