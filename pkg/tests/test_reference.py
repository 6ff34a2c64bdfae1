import pytest

from gps_spectra.reference import ENTRIES, ReferenceEntry, select


def test_entry_counts():
    assert len(select("T1")) == 48
    assert len(select("T2")) == 48
    assert len(select("T3")) == 16
    assert len(select("bounds")) == 4
    assert len(ENTRIES) == 112


def test_bounded_values_inside_their_bounds():
    # transcription self-check: the tabulated energy must bracket correctly
    for e in select("bounds"):
        assert e.bound_lo < e.value < e.bound_hi


def test_bounds_attached_to_weak_spike_ground_states():
    for e in select("bounds"):
        assert e.source == "T1"
        assert (e.ell, e.n) == (0, 0)
    assert {e.lam for e in select("bounds")} == {0.001, 0.01, 0.1, 1.0}


def test_t3_entries_carry_powers():
    assert {e.power for e in select("T3")} == {-1.0, 1.0}
    assert all(e.A == 20.0 and e.ell == 0 for e in select("T3"))


def test_unknown_source_rejected():
    with pytest.raises(ValueError):
        select("T9")


def test_malformed_bounds_rejected():
    with pytest.raises(ValueError):
        ReferenceEntry("T1", 1.0, 1.0, 4.0, 0, 0, 1.0, bound_lo=2.0, bound_hi=1.0)
    with pytest.raises(ValueError):
        ReferenceEntry("T1", 1.0, 1.0, 4.0, 0, 0, 1.0, bound_lo=2.0)
