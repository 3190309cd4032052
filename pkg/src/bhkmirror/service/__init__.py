"""Service layer: pydantic wire models, handlers, and the FastAPI app."""

from .models import (CompareRequest, HodgeRequest, ModelRequest,
                     OrbifoldInput, Report)

__all__ = ["OrbifoldInput", "ModelRequest", "CompareRequest", "HodgeRequest",
           "Report"]
