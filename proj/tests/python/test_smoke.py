import json
import os
import pathlib

import pytest

import tkklab

CONFIGS = pathlib.Path(os.environ.get("TKKLAB_CONFIGS", pathlib.Path(__file__).parents[2] / "configs"))


def test_field_arithmetic():
    k = tkklab.FiniteField(5, [2, 0, 1])
    assert k.order == 25
    for a in range(1, 25):
        assert k.mul(a, k.inv(a)) == 1


def test_rejects_small_characteristic():
    with pytest.raises(ValueError):
        tkklab.FiniteField(3)


def test_parse_config_roundtrip():
    cfg = tkklab.parse_config('[field]\ntype = "Fp"\np = 7\n[algebra]\nfamily = "exchange"\n')
    assert cfg["field"]["p"] == 7
    assert cfg["algebra"]["family"] == "exchange"


def test_unknown_key_is_config_error():
    with pytest.raises(tkklab.ConfigError, match="algebra.etaa"):
        tkklab.parse_config('[field]\ntype = "Fp"\np = 5\n[algebra]\nfamily = "matrix"\netaa = 2\n')


def test_build_tkk_exchange():
    rc, out, _ = tkklab.run("build-tkk", str(CONFIGS / "exchange_f5.toml"))
    assert rc == 0
    assert "= 8" in out


def test_triangle_geometry_is_hexagon(tmp_path):
    path = tmp_path / "tri.json"
    rc, _, err = tkklab.run_text(
        "geometry", '[field]\ntype = "Fp"\np = 5\n[algebra]\nfamily = "exchange"\n', out=str(path)
    )
    assert rc == 0, err
    stats = tkklab.polygon_stats(path.read_text())
    assert (stats["points"], stats["lines"]) == (186, 62)
    assert (stats["girth"], stats["diameter"]) == (12, 6)
    assert stats["thin"]
    assert json.loads(path.read_text())["field"]["p"] == 5
