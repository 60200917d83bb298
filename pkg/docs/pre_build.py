#!/usr/bin/env python3
"""
Pre-build step for the MkDocs site: renders the API reference from docstrings with
pydoc-markdown into docs/api/index.md.
"""

import subprocess
import sys
from pathlib import Path

DOCS_DIR = Path(__file__).parent
PROJECT_ROOT = DOCS_DIR.parent
SECTIONS = ("getting-started", "configuration", "usage", "advanced", "api")


def render_api_reference() -> bool:
    config_file = PROJECT_ROOT / "pydoc-markdown.yml"
    if not config_file.exists():
        print(f"Warning: {config_file} not found; skipping the API reference.")
        return False
    try:
        result = subprocess.run(
            ["pydoc-markdown", "-p", "rigid_jets", "--render-toc"],
            cwd=PROJECT_ROOT,
            check=True,
            capture_output=True,
            text=True,
        )
    except FileNotFoundError:
        print("Warning: pydoc-markdown not found. Install it with: uv add --dev pydoc-markdown[novella]")
        return False
    except subprocess.CalledProcessError as e:
        # a broken docstring must not break the site build
        print(f"Warning: API reference generation failed: {e}\n{e.stderr or ''}")
        return False
    (DOCS_DIR / "api" / "index.md").write_text(result.stdout, encoding="utf-8")
    return True


def main() -> int:
    for section in SECTIONS:
        (DOCS_DIR / section).mkdir(parents=True, exist_ok=True)
    if render_api_reference():
        print("API reference written to docs/api/index.md")
    return 0


if __name__ == "__main__":
    sys.exit(main())
