import pytest
from hypothesis import given, settings, strategies as st

from qweight.crystal import energy, is_classical_highest
from qweight.roots import Partition, partitions_in_box
from qweight.ssot import (SSOT, StripError, as_box_tensor, box_pipelines, epsilon_C, ssot_enumerate, ssot_to_tensor,
                          strip_to_column, validate_strip, x_polynomial_boxcase, x_polynomial_via_ssot)


def test_strip_validation():
    s = validate_strip((1,), (2, 1), (2,))
    assert s.size == 2 * 3 - 1 - 2
    with pytest.raises(StripError, match="column 1"):
        validate_strip((), (1, 1), ())
    with pytest.raises(StripError):
        validate_strip((2,), (1,), ())


def test_column_of_strip():
    c = strip_to_column(validate_strip((1,), (2, 1), (1,)))
    # beta/alpha: cells in columns 2 and 1; beta/gamma: columns 2 and 1
    assert c.letters() == [1, 2, -2, -1]
    assert c.height == 4


def test_example_count_and_tensors():
    found = ssot_enumerate((1,), (1, 1, 1), 2)
    assert len(found) == 3
    images = {as_box_tensor(ssot_to_tensor(T)) for T in found}
    assert {str(t) for t in images} == {"1̅ ⊗ 1 ⊗ 1", "1 ⊗ 1̅ ⊗ 1", "2̅ ⊗ 2 ⊗ 1"}
    assert sorted(epsilon_C(T) for T in found) == [1, 1, 2]
    assert sorted(energy(t) for t in images) == [2, 3, 4]
    assert ssot_enumerate((), (), 0) == [SSOT(())]
    one = [as_box_tensor(ssot_to_tensor(T)).to_json() for T in ssot_enumerate((1,), (1, 1, 1), 1)]
    assert one == [[1, 1, -1], [1, -1, 1]]


def test_json_round_trip():
    for T in ssot_enumerate((1,), (2, 1, 1), 2):
        assert SSOT.from_json(T.to_json()) == T
    with pytest.raises(StripError):
        SSOT.from_json([[[1], [1], []]])


def test_from_chain():
    T = SSOT.from_chain([(), (1,), (2,), (1,)])
    assert T.weight == (1, 1, 1)
    assert T.shape == Partition((1,))


@pytest.mark.parametrize("n,g", [(1, 1), (2, 1), (2, 2), (3, 2), (4, 2), (3, 3)])
def test_pipelines_agree(n, g):
    for shape in partitions_in_box(n, g):
        a, b = box_pipelines(shape, n, g)
        assert a == b
        assert x_polynomial_boxcase(shape, n, g) == x_polynomial_via_ssot(shape, n, g)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.data())
def test_image_properties(n, g, data):
    shapes = partitions_in_box(n, g)
    shape = data.draw(st.sampled_from(shapes))
    for T in ssot_enumerate(shape, (1,) * n, g):
        t = as_box_tensor(ssot_to_tensor(T))
        # weight of the image is the transposed final shape
        assert t.weight(g) == shape.transpose().padded(g)
        assert t.max_index == epsilon_C(T)
        assert is_classical_highest(t, g + 1)
        assert len(T.chain()) == n + 1


def test_general_strip_sizes():
    # strip sizes above one give tall columns; heights match the weight
    for T in ssot_enumerate((1,), (3, 2), 2):
        cols = ssot_to_tensor(T)
        assert [c.height for c in reversed(cols)] == [3, 2]
