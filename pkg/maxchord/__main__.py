from pathlib import Path

from dotenv import load_dotenv

# Load .env before importing anything that reads the environment at import time.
load_dotenv(dotenv_path=Path(__file__).resolve().parent.parent / ".env")

from .cli import main  # noqa: E402

if __name__ == "__main__":
    raise SystemExit(main())
