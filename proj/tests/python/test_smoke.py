import json
import os
import subprocess

import pytest

import akblocks


def test_weight_example():
    lam = "3,3,2|2,1|1,1,1,1,1,1|2,2,1"
    assert akblocks.weight(lam, 9, [1, 1, 5, 2]) == 1
    assert akblocks.weight(akblocks.conjugate(lam), 9, [1, 1, 5, 2]) == 6


def test_conjugate_strings():
    assert akblocks.conjugate("2|-") == "-|1,1"
    assert akblocks.conjugate("3,3,2|2,1|1,1,1,1,1,1|2,2,1") == "3,2|6|2,1|3,3,2"
    assert akblocks.conjugate(akblocks.conjugate("2,1|1")) == "2,1|1"


def test_dominance():
    assert akblocks.dominates("2|-", "1|1")
    assert not akblocks.dominates("1|1", "2|-")


def test_quantum_characteristic():
    assert akblocks.quantum_characteristic(7, 2) == 3
    assert akblocks.quantum_characteristic(5, 4) == 2
    assert akblocks.smallest_element_of_order(7, 3) == 2


def test_counts_and_params():
    assert akblocks.count_standard_tableaux("1|1") == 2
    assert akblocks.count_standard_tableaux("2|-") == 1
    assert akblocks.conjugate_params(9, [1, 1, 5, 2]) == [7, 4, 8, 8]


def test_blocks():
    doc = akblocks.blocks(2, 3, [0, 1])
    assert len(doc["blocks"]) == 3
    weights = sorted(b["weight"] for b in doc["blocks"])
    assert weights == [0, 0, 1]
    big = next(b for b in doc["blocks"] if b["weight"] == 1)
    assert big["members"] == ["2|-", "1|1", "-|1,1"]
    assert big["is_chain"]


def test_classify_weight_one():
    rep = akblocks.classify_weight_one(2, 3, [0, 1], "1|1")
    assert rep["s"] == 3
    assert rep["chain"] == ["-|1,1", "1|1", "2|-"]
    assert rep["n_lambda"] == [1, 2, 1]
    assert rep["dim_L"] == [1, 1]
    assert rep["dim_rad_cell"] == [0, 1, 1]
    assert rep["lambda_sets"]["Lambda3"] == ["2|-"]
    with pytest.raises(ValueError):
        akblocks.classify_weight_one(2, 3, [0, 1], "1,1|-")  # weight-zero block


def test_verify_block():
    doc = akblocks.verify_block(5, 4, [0, 0], 1, [1, 0])
    assert doc["pass"]
    assert doc["dim_radB"] == 1
    assert doc["radB_square_dim"] == 0

    doc = akblocks.verify_block(7, 2, [0, 1], 2, [1, 1, 0])
    assert doc["pass"]
    assert doc["dim_radB"] == 4
    assert doc["radB_cube_dim"] == 0
    assert doc["mirror"]["q"] == 4


def test_verify_rejects_weight_zero():
    with pytest.raises(ValueError):
        akblocks.verify_block(5, 4, [0, 1], 1, [1, 0])


def test_search():
    hits = akblocks.search(2, 1, 2, [2, 3])
    assert any(h["e"] == 3 and h["n"] == 2 and h["s"] == 3 for h in hits)
    assert any(h["e"] == 2 and h["n"] == 1 and h["s"] == 2 for h in hits)


def test_cli_roundtrip():
    cli = os.environ.get("AKBLOCKS_CLI")
    if not cli:
        pytest.skip("AKBLOCKS_CLI not set")
    out = subprocess.run(
        [cli, "weight", "--e", "9", "--a", "1,1,5,2", "3,3,2|2,1|1,1,1,1,1,1|2,2,1"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "1"
    blocks_out = subprocess.run(
        [cli, "blocks", "--n", "2", "--e", "3", "--a", "0,1"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(blocks_out.stdout) == akblocks.blocks(2, 3, [0, 1])
