from __future__ import annotations

import pytest

from mvcheb.diffops import build_D
from mvcheb.exact import MatPoly, Poly
from mvcheb.verify import SUITES, Ranges, first_difference, run_suite, run_suites, thread_count


def test_first_difference_locates_entry():
    a = MatPoly.identity(2)
    b = MatPoly([[Poly((1,)), Poly((0, 1))], [Poly(), Poly((1,))]])
    w = first_difference(a, b)
    assert w is not None and "[0,1]" in w.replace(" ", "")
    assert first_difference(a, a) is None
    assert first_difference(build_D(1), build_D(1)) is None


def test_thread_count(monkeypatch):
    monkeypatch.setenv("MVCHEB_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("MVCHEB_THREADS", "0")
    assert thread_count() == 1


@pytest.mark.parametrize("name", sorted(SUITES))
def test_each_suite_passes_at_default_range(name):
    rep = run_suite(name, Ranges(2, 3))
    assert rep.cases, name
    assert rep.passed, [c.witness for c in rep.failures()]


def test_threaded_and_serial_agree():
    a = run_suite("orthogonality", Ranges(2, 2), threads=1)
    b = run_suite("orthogonality", Ranges(2, 2), threads=4)
    assert [c.case_id for c in a.cases] == [c.case_id for c in b.cases]


def test_crash_becomes_witness(monkeypatch):
    from mvcheb import verify

    def boom():
        raise ZeroDivisionError("bad")

    monkeypatch.setitem(verify.SUITES, "det", lambda r: iter([("det/boom", {}, boom)]))
    rep = run_suites(["det"])[0]
    assert not rep.passed
    assert "ZeroDivisionError" in rep.failures()[0].witness


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nosuch")
