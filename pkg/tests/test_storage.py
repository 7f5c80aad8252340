"""Tests for artifact writing."""

import json

import pandas as pd
import pytest

from amoeba import archimedean_tropicalization, tropical_hypersurface
from models import DomainBox, RasterImage
from storage import FileManager, write_points

SQUARE = DomainBox.cube(-2.0, 2.0, 2)


def _image(width, height, color=(10, 20, 30)):
    return RasterImage.blank(width, height, SQUARE, color)


def test_ppm_single_pixel(tmp_path):
    path = FileManager().write_image(_image(1, 1), tmp_path / "one.ppm")
    assert path.read_bytes() == b"P6\n1 1\n255\n" + bytes([10, 20, 30])
    assert len(path.read_bytes()) == 11 + 3


def test_ppm_layout(tmp_path):
    image = _image(3, 2)
    image.pixels[0, 2] = (255, 0, 0)
    data = FileManager().write_ppm(image, tmp_path / "small.ppm").read_bytes()
    header = b"P6\n3 2\n255\n"
    assert data.startswith(header)
    body = data[len(header):]
    assert len(body) == 3 * 3 * 2
    assert body[6:9] == bytes([255, 0, 0])


def test_svg_overlay(tmp_path, line):
    curve = tropical_hypersurface(archimedean_tropicalization(line))
    path = FileManager().write_image(_image(20, 20), tmp_path / "line.svg", "svg", curve=curve)
    text = path.read_text(encoding="utf-8")
    assert text.startswith('<?xml version="1.0"')
    assert 'version="1.1"' in text
    assert "data:image/png;base64," in text
    assert text.count("<polyline") == 3
    assert text.count("<circle") == 1
    assert 'cx="10.000" cy="10.000"' in text


def test_svg_without_curve(tmp_path):
    text = FileManager().write_svg(_image(4, 4), tmp_path / "plain.svg").read_text(encoding="utf-8")
    assert "<polyline" not in text
    assert text.rstrip().endswith("</svg>")


def test_unknown_image_format(tmp_path):
    with pytest.raises(ValueError):
        FileManager().write_image(_image(2, 2), tmp_path / "x.png", "png")


def test_json_is_deterministic(tmp_path):
    files = FileManager()
    data = {"b": 1, "a": [1.5, None, True]}
    first = files.write_json(data, tmp_path / "one.json").read_text(encoding="utf-8")
    second = files.write_json(data, tmp_path / "two.json").read_text(encoding="utf-8")
    assert first == second
    assert first.endswith("\n")
    assert list(json.loads(first)) == ["b", "a"]


def test_points_are_sorted(tmp_path):
    path = write_points([[1.0, 0.0], [0.0, 2.0], [0.0, 1.0]], tmp_path / "points.json")
    assert json.loads(path.read_text(encoding="utf-8")) == [[0.0, 1.0], [0.0, 2.0], [1.0, 0.0]]


def test_nested_directories_are_created(tmp_path):
    target = tmp_path / "a" / "b" / "table.csv"
    FileManager().write_table(pd.DataFrame({"x": [1, 2]}), target)
    assert target.read_text(encoding="utf-8").splitlines() == ["x", "1", "2"]


def test_unwritable_path_raises_oserror(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("", encoding="utf-8")
    with pytest.raises(OSError):
        FileManager().write_json({}, blocker / "report.json")


def test_default_path_uses_output_dir(tmp_path, env):
    config = env(output_dir=tmp_path / "out")
    path = FileManager(config).default_path("amoeba", "ppm")
    assert path == tmp_path / "out" / "amoeba.ppm"
    assert path.parent.is_dir()
