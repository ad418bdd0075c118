"""Shared builders for test inputs."""

from __future__ import annotations

import itertools
import json
from pathlib import Path

_media_ids = itertools.count(1)


def image_post(contents, scores, likes=10, comments=2, caption=None, tags=None):
    post = {
        "is_video": False,
        "urls": [f"https://host.example/p/{next(_media_ids):05d}.jpg"],
        "edge_media_preview_like": {"count": likes},
        "edge_media_to_comment": {"count": comments},
        "image_contents": list(contents),
        "image_scores": list(scores),
    }
    if caption is not None:
        post["edge_media_to_caption"] = {"edges": [{"node": {"text": caption}}]}
    if tags is not None:
        post["tags"] = list(tags)
    return post


def video_post(likes=5, comments=1):
    return {
        "is_video": True,
        "urls": ["https://host.example/p/clip.mp4"],
        "edge_media_preview_like": {"count": likes},
        "edge_media_to_comment": {"count": comments},
    }


def write_profile_file(directory: Path, username: str, posts: list) -> Path:
    path = Path(directory) / f"{username}.json"
    path.write_text(json.dumps(posts), encoding="utf-8")
    return path


def write_user_list(directory: Path, entries, name: str = "users.txt") -> Path:
    """entries: iterable of username or (username, category) pairs."""
    lines = []
    for entry in entries:
        if isinstance(entry, str):
            lines.append(entry)
        else:
            username, category = entry
            lines.append(f"{username},{category}" if category else username)
    path = Path(directory) / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
