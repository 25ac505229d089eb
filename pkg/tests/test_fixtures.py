import importlib.util
from pathlib import Path

from conftest import FIXTURES

SCRIPT = Path(__file__).resolve().parent.parent / "scripts" / "make_fixtures.py"


def test_committed_fixtures_are_reproducible(tmp_path, monkeypatch):
    spec = importlib.util.spec_from_file_location("make_fixtures", SCRIPT)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    monkeypatch.setattr(module, "OUT", tmp_path)
    module.main()
    generated = sorted(p.name for p in tmp_path.iterdir())
    assert generated == sorted(p.name for p in FIXTURES.glob("*.txt"))
    for name in generated:
        assert (tmp_path / name).read_text() == (FIXTURES / name).read_text(), name
