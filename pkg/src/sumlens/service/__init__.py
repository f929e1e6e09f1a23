"""HTTP API and command-line interface."""

from sumlens.service.api import ApiError, create_app

__all__ = ["create_app", "ApiError"]
