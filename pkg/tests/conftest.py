import json
import pathlib

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def load_catalog(name: str) -> list[str]:
    """Golden catalog fixture: one canonical label per line."""
    text = (FIXTURES / f"{name}.txt").read_text(encoding="utf-8")
    return [line.strip() for line in text.splitlines() if line.strip()]


def load_pins(name: str) -> dict[str, list[str]]:
    """Frozen brute-force results keyed by 'LHS|RHS'."""
    with open(FIXTURES / f"{name}.json", encoding="utf-8") as fh:
        return json.load(fh)
