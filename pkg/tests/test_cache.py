from __future__ import annotations

import json

from opstar.cache import CACHE_FORMAT, FILENAME, ResultCache, header, seed_entries
from opstar.core import CycleType
from opstar.solver import SearchBudget, Solver, replay
from opstar.verify import verify_decomposition


def test_put_then_reload(tmp_path):
    c = ResultCache(tmp_path, use_seed=False)
    c.put((3, 4), {"rule": "x", "params": {}})
    lines = (tmp_path / FILENAME).read_text().splitlines()
    assert json.loads(lines[0]) == header() and header()["format"] == CACHE_FORMAT
    assert ResultCache(tmp_path, use_seed=False).get((3, 4)) == {"rule": "x", "params": {}}


def test_foreign_header_is_ignored(tmp_path):
    (tmp_path / FILENAME).write_text('{"format": "other", "version": 9}\n{"type": [3], "trace": {}}\n')
    assert ResultCache(tmp_path, use_seed=False).get((3,)) is None


def test_corrupt_lines_are_skipped(tmp_path):
    (tmp_path / FILENAME).write_text(json.dumps(header()) + '\nnot json\n{"type": [5], "trace": {"rule": "walecki"}}\n')
    assert ResultCache(tmp_path, use_seed=False).get((5,)) == {"rule": "walecki"}


def test_non_persistent_cache_writes_nothing(tmp_path):
    c = ResultCache(tmp_path, use_seed=False, persist=False)
    c.put((2,), {})
    assert not (tmp_path / FILENAME).exists()


def test_seed_entries_replay_and_certify():
    seeds = seed_entries()
    assert seeds
    for lengths, trace in seeds.items():
        assert verify_decomposition(replay(trace), CycleType(lengths)).ok, lengths


def test_search_result_is_reused(tmp_path):
    first = Solver(cache=ResultCache(tmp_path, use_seed=False))
    out = first.solve((4, 7))
    assert out.trace.rules() == ["rotational-search"]
    offline = Solver(SearchBudget(allow_search=False), cache=ResultCache(tmp_path, use_seed=False))
    again = offline.solve((4, 7))
    assert again.verdict == "Solved" and again.trace.to_json() == out.trace.to_json()
