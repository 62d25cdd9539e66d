import pytest

from cp2tri.labels import (LabelError, format_label, grid_label, int_label,
                           mid_label, pair_label, parse_label, perm_label,
                           s3_label)


def test_total_order_across_kinds():
    labels = [s3_label((0, 2, 1)), grid_label(0, 1), mid_label(1, 2, 3),
              pair_label(1, 1), perm_label((1, 2), (3, 4)), int_label(7)]
    kinds = [l.kind for l in sorted(labels)]
    assert kinds == ["int", "perm", "pair", "mid", "gridu", "permu"]


def test_perm_labels_sorted_like_their_pairings():
    nus = [perm_label((1, 4), (2, 3)), perm_label((1, 2), (3, 4)), perm_label((1, 3), (2, 4))]
    assert [format_label(v) for v in sorted(nus)] == ["p:(12)(34)", "p:(13)(24)", "p:(14)(23)"]


def test_mid_label_canonicalizes_pair_order():
    assert mid_label(4, 1, 2) == mid_label(1, 4, 2)
    assert format_label(mid_label(4, 1, 2)) == "m:14,2"


def test_grid_label_reduces_mod_3():
    assert grid_label(4, -1) == grid_label(1, 2)


@pytest.mark.parametrize("token", [
    "0", "42", "p:(12)(34)", "p:(14)(23)", "v:3,2", "m:24,1", "u:0,2",
    "k:e", "k:(01)", "k:(02)", "k:(12)", "k:(012)", "k:(021)",
])
def test_round_trip(token):
    assert format_label(parse_label(token)) == token


@pytest.mark.parametrize("bad", [
    "p:(12)(24)", "v:5,1", "v:1,4", "m:11,2", "u:3,0", "k:(0)", "k:(011)",
    "w:1,2", "-3", "v:1", "p:(123)",
])
def test_bad_tokens_rejected(bad):
    with pytest.raises(LabelError):
        parse_label(bad)


def test_constructor_validation():
    with pytest.raises(LabelError):
        perm_label((1, 2), (2, 3))
    with pytest.raises(LabelError):
        pair_label(0, 1)
    with pytest.raises(LabelError):
        mid_label(2, 2, 1)
    with pytest.raises(LabelError):
        s3_label((0, 0, 1))
    with pytest.raises(LabelError):
        int_label(-1)
