"""Session-based HTTP API exposing the game engine and strategies."""

from .app import create_app, view_of
from .store import Session, SessionStore

__all__ = ["create_app", "view_of", "Session", "SessionStore"]
