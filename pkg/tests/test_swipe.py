import pytest

from fdrepair import (FD, GenConfig, Relation, Schema, generate, swipe,
                      violates)


def test_hospital_snippet_repair(hospital_snippet, hospital_fds):
    out = swipe(hospital_snippet, hospital_fds, seed=3)
    for fd in hospital_fds:
        assert violates(out.repaired, fd) == []
    assert out.repaired.get(4, "#provider") == "10006"
    # the original relation is untouched
    assert hospital_snippet.get(4, "#provider") == "1x006"


def test_already_clean_zero_changes(hospital_snippet, hospital_fds):
    clean = swipe(hospital_snippet, hospital_fds, seed=1).repaired
    out = swipe(clean, hospital_fds, seed=99)
    assert out.change_log == []
    assert out.repaired.rows == clean.rows


def test_single_conflicted_pair_one_cell():
    rel = Relation(Schema(["a", "b"]))
    rel.append(1, ["x", "1"])
    rel.append(2, ["x", "2"])
    out = swipe(rel, [FD(frozenset("a"), "b")], seed=0)
    assert len(out.change_log) == 1


def test_change_log_replays(hospital_snippet, hospital_fds):
    out = swipe(hospital_snippet, hospital_fds, seed=5)
    replay = hospital_snippet.copy()
    for tid, attr, old, new in out.change_log:
        assert replay.get(tid, attr) == old
        replay.set(tid, attr, new)
    assert replay.rows == out.repaired.rows


def test_replay_determinism(hospital_snippet, hospital_fds):
    a = swipe(hospital_snippet, hospital_fds, seed=11)
    b = swipe(hospital_snippet, hospital_fds, seed=11)
    assert a.repaired.rows == b.repaired.rows
    assert a.change_log == b.change_log
    assert a.partition == b.partition


def test_frame_condition_outside_cover(hospital_snippet):
    fds = [FD(frozenset({"hospital name"}), "#provider")]
    out = swipe(hospital_snippet, fds, seed=2)
    for attr in ("city", "measure code", "condition"):
        assert out.repaired.column(attr) == hospital_snippet.column(attr)
    assert set(out.non_repairable) == {"city", "measure code", "condition"}


def test_preservative_closure(hospital_snippet, hospital_fds):
    out = swipe(hospital_snippet, hospital_fds, seed=8)
    for attr in hospital_snippet.schema.attributes:
        assert set(out.repaired.column(attr)) <= set(hospital_snippet.column(attr))


def test_priority_override(hospital_snippet, hospital_fds):
    override = {1: ["hospital name", "#provider"]}
    out = swipe(hospital_snippet, hospital_fds, seed=4,
                priority_override=override)
    assert out.classes[0].stats.priority == ["hospital name", "#provider"]
    for fd in hospital_fds:
        assert violates(out.repaired, fd) == []


def test_schema_mismatch_rejected(hospital_snippet):
    with pytest.raises(Exception):
        swipe(hospital_snippet, [FD(frozenset({"nope"}), "city")], seed=0)


def test_fuzz_repairs_satisfy_all_fds():
    for seed in range(20):
        rel, fds = generate(GenConfig(60, 6, seed=seed))
        out = swipe(rel, fds, seed=seed)
        for fd in fds:
            assert violates(out.repaired, fd) == []


@pytest.mark.parametrize("fn", ["mv", "wv", "max"])
def test_all_builtin_functions_run(fn, hospital_snippet, hospital_fds):
    out = swipe(hospital_snippet, hospital_fds, repair_fn=fn, seed=6)
    for fd in hospital_fds:
        assert violates(out.repaired, fd) == []


def test_nulls_grouped_by_default():
    rel = Relation(Schema(["a", "b"]))
    rel.append(1, [None, "1"])
    rel.append(2, [None, "2"])
    fd = FD(frozenset("a"), "b")
    out = swipe(rel, [fd], seed=0)
    assert len(set(out.repaired.column("b"))) == 1
    # with null-equals-null off the two rows never conflict
    out2 = swipe(rel, [fd], seed=0, null_equals_null=False)
    assert out2.change_log == []
