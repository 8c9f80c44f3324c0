import numpy as np
import pytest

from omegaorth.matrixfile import (
    MatrixFormatError,
    parse_scalar,
    parse_text,
    render,
    render_matrix,
    render_scalar,
)
from conftest import complex_gaussian


class TestScalars:
    @pytest.mark.parametrize("text,value", [
        ("1", 1.0),
        ("-2.5", -2.5),
        ("1+2i", 1 + 2j),
        ("1-2i", 1 - 2j),
        ("3i", 3j),
        ("i", 1j),
        ("-i", -1j),
        ("+i", 1j),
        ("1.5e-3", 1.5e-3),
        ("2.5E2i", 250j),
        (" 1 + 2 i ", 1 + 2j),
    ])
    def test_forms(self, text, value):
        assert parse_scalar(text) == value

    @pytest.mark.parametrize("text", ["", "abc", "1+2k", "nan", "inf", "1..2"])
    def test_rejects(self, text):
        with pytest.raises(MatrixFormatError):
            parse_scalar(text)

    def test_render_forms(self):
        assert render_scalar(1.5) == "1.5"
        assert render_scalar(1 + 2j) == "1.0+2.0i"
        assert render_scalar(1 - 2j) == "1.0-2.0i"
        assert render_scalar(3j) == "3.0i"
        assert render_scalar(0.0) == "0.0"


class TestParsing:
    def test_basic_entry(self):
        entries = parse_text("A = [[1, 2i], [0, -1]]")
        assert np.array_equal(entries["A"], [[1, 2j], [0, -1]])

    def test_multiline_and_comments(self):
        text = """
        # worked pair
        S = [[0, -1],   # first row
             [0, 1]]
        T = [[0, 1], [0, 1]]
        """
        entries = parse_text(text)
        assert list(entries) == ["S", "T"]
        assert np.array_equal(entries["S"], [[0, -1], [0, 1]])

    def test_rejects_duplicate(self):
        with pytest.raises(MatrixFormatError):
            parse_text("A = [[1]]\nA = [[2]]")

    def test_rejects_non_square(self):
        with pytest.raises(MatrixFormatError):
            parse_text("A = [[1, 2]]")

    def test_rejects_ragged(self):
        with pytest.raises(MatrixFormatError):
            parse_text("A = [[1, 2], [3]]")

    def test_rejects_garbage(self):
        with pytest.raises(MatrixFormatError):
            parse_text("A = [[1]] and leftovers")

    def test_rejects_empty(self):
        with pytest.raises(MatrixFormatError):
            parse_text("# nothing here")


class TestRoundTrip:
    def test_random_matrices_exact(self, rng):
        for k in range(100):
            n = int(rng.integers(1, 5))
            entries = {f"m{k}": complex_gaussian(rng, n)}
            back = parse_text(render(entries))
            assert np.array_equal(back[f"m{k}"], entries[f"m{k}"])

    def test_special_values(self):
        M = np.array([[1e-300, 1e300 + 1e-300j], [-0.0 + 0.0j, 12345.6789j]])
        back = parse_text(render_matrix("x", M))
        assert np.array_equal(back["x"], M)

    def test_render_rejects_bad_name(self):
        with pytest.raises(MatrixFormatError):
            render_matrix("bad name", np.eye(2))
