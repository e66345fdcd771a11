"""File-based session persistence: one JSON file per game under the
data directory (ESGAME_DATA, default ./data)."""

from __future__ import annotations

import json
import os
import time
import uuid
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import MalformedTrace
from .referee import GameState, state_from_trace, state_to_trace


def data_dir() -> Path:
    return Path(os.environ.get("ESGAME_DATA", "./data"))


@dataclass
class SessionRecord:
    game_id: str
    state: GameState
    mode: str  # "human" | "random"
    created_at: float


class SessionStore:
    def __init__(self, root: Optional[Path] = None):
        self.root = Path(root) if root is not None else data_dir()
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, game_id: str) -> Path:
        return self.root / f"{game_id}.json"

    def create(self, state: GameState, mode: str) -> SessionRecord:
        record = SessionRecord(
            game_id=uuid.uuid4().hex[:12],
            state=state,
            mode=mode,
            created_at=time.time(),
        )
        self.save(record)
        return record

    def save(self, record: SessionRecord) -> None:
        payload = {
            "id": record.game_id,
            "mode": record.mode,
            "created_at": record.created_at,
            "trace": state_to_trace(record.state),
        }
        self._path(record.game_id).write_text(json.dumps(payload, indent=1))

    def load(self, game_id: str) -> Optional[SessionRecord]:
        path = self._path(game_id)
        if not path.exists():
            return None
        try:
            payload = json.loads(path.read_text())
            state = state_from_trace(payload["trace"])
            return SessionRecord(
                game_id=payload["id"],
                state=state,
                mode=payload["mode"],
                created_at=payload["created_at"],
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise MalformedTrace(f"corrupt session file {path}: {exc}") from exc

    def delete(self, game_id: str) -> bool:
        path = self._path(game_id)
        if path.exists():
            path.unlink()
            return True
        return False
