import pytest

from ybelab.algebra import validate_matched_pair
from ybelab.field import QQ, Field
from ybelab.verify import VERIFIERS, VerifyOptions, default_algebras, matched_pair_instances, run_verifier

F3 = Field(3)

# slow exhaustive F3 runs: dimV = 1, and thm:ansatz on Nil2 only (on the zero algebra every beta passes the gate)
SLOW = {"thm:ansatz", "thm:skewgm", "co:motoaybe1", "co:motoaybe2"}


def _assert_sound(rep):
    assert rep.passed, rep.render()
    assert rep.checks
    assert any(c.detail.get("instances", 0) > 0 for c in rep.checks)
    for c in rep.checks:
        assert c.detail["violations"] == 0 and "first_violation" not in c.detail


@pytest.mark.parametrize("tid", list(VERIFIERS))
def test_exhaustive_f3(tid):
    dimV = 1 if tid in SLOW else None
    if tid == "thm:ansatz":
        algebras = default_algebras(F3, None)[1:2]
    else:
        algebras = default_algebras(F3, None)
    _assert_sound(run_verifier(tid, VerifyOptions(F3, algebras, dimV, exhaustive=True)))


@pytest.mark.parametrize("tid", list(VERIFIERS))
def test_random_q(tid):
    trials = 4 if tid in SLOW else 10
    _assert_sound(run_verifier(tid, VerifyOptions(QQ, default_algebras(QQ, None), None, False, trials, seed=1)))


def test_seeded_runs_repeat():
    opts = VerifyOptions(QQ, default_algebras(QQ, None), None, False, 10, seed=7)
    a = run_verifier("co:mop", opts).to_json(QQ)
    b = run_verifier("co:mop", opts).to_json(QQ)
    assert a == b


def test_unknown_ids():
    with pytest.raises(KeyError):
        run_verifier("thm:nope", VerifyOptions(F3))
    with pytest.raises(ValueError):
        default_algebras(F3, 7)


def test_default_algebras():
    assert [n for n, _ in default_algebras(F3, None)] == ["zeroalg2", "nil2", "dualnum"]
    assert [n for n, _ in default_algebras(F3, 3)] == ["ut2"]


def test_matched_pair_instances_cover_both_outcomes():
    seen = {True: 0, False: 0}
    for mp in matched_pair_instances(F3):
        seen[validate_matched_pair(mp).passed] += 1
    assert seen[True] > 0 and seen[False] > 0
    assert sum(seen.values()) == 3 ** 6
