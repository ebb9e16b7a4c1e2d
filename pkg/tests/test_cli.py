"""Tests for the command-line interface and the JSON document format."""

from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ttmotifs.cli import (
    DocumentError,
    document_from_collection,
    document_from_json,
    document_to_json,
    main,
    motif_to_text,
    parse_motif_line,
)
from ttmotifs.constructions import STRATEGIES
from ttmotifs.core import MOTIF_KINDS, Motif, chain, collider, fork


def run_cli(capsys, argv, stdin_text=None, monkeypatch=None):
    """Invoke main() the way the console script would, capturing output."""
    if stdin_text is not None:
        assert monkeypatch is not None
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse usage failures
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- decompose --------------------------------------------------------------


def test_decompose_text_tt8_chain_max(capsys):
    code, out, err = run_cli(capsys, ["decompose", "--n", "8", "--strategy", "chain-max", "--format", "text"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 14
    assert lines[0] == "v1 -> v7 -> v8"
    assert lines[12] == "v1 -> v8 <- v2"
    assert out.endswith("\n")
    assert err == ""


def test_decompose_trivial_order_json(capsys):
    code, out, err = run_cli(capsys, ["decompose", "--n", "1", "--strategy", "mixed", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "schema_version": "1",
        "n": 1,
        "kind": "decomposition",
        "motifs": [],
        "unused_arcs": [],
    }


def test_decompose_packing_warns_and_exits_3(capsys):
    code, out, err = run_cli(capsys, ["decompose", "--n", "6", "--strategy", "fork-max", "--format", "json"])
    assert code == 3
    payload = json.loads(out)
    assert payload["kind"] == "packing"
    assert payload["unused_arcs"] == [[5, 6]]
    assert "unused" in err


def test_decompose_diagram_format(capsys):
    code, out, err = run_cli(capsys, ["decompose", "--n", "8", "--strategy", "collider-max", "--format", "diagram"])
    assert code == 0
    assert len(out.splitlines()) == 8
    assert out.splitlines()[0].startswith("   2 3 4")


def test_decompose_diagram_rejects_large_order(capsys):
    code, out, err = run_cli(capsys, ["decompose", "--n", "120", "--strategy", "mixed", "--format", "diagram"])
    assert code == 2
    assert "JSON" in err


def test_decompose_rejects_bad_order(capsys):
    code, out, err = run_cli(capsys, ["decompose", "--n", "0", "--strategy", "mixed"])
    assert code == 2
    code, out, err = run_cli(capsys, ["decompose", "--n", "eight"])
    assert code == 2


def test_decompose_rejects_unknown_strategy(capsys):
    code, out, err = run_cli(capsys, ["decompose", "--n", "8", "--strategy", "triangle-max"])
    assert code == 2


def test_decompose_default_strategy_is_mixed(capsys):
    code, out, _ = run_cli(capsys, ["decompose", "--n", "8", "--format", "json"])
    assert code == 0
    default_payload = json.loads(out)
    code, out, _ = run_cli(capsys, ["decompose", "--n", "8", "--strategy", "mixed", "--format", "json"])
    assert json.loads(out) == default_payload


# --- counts -----------------------------------------------------------------


def test_counts_text_examples(capsys):
    code, out, _ = run_cli(capsys, ["counts", "--n", "13"])
    assert code == 0
    assert "packing numbers: chain 36, collider 36, fork 36" in out
    assert "mixed counts: chains 6, colliders 3, forks 30" in out

    code, out, _ = run_cli(capsys, ["counts", "--n", "2"])
    assert code == 0
    assert "admissible: no" in out
    assert "packing numbers: chain 0, collider 0, fork 0" in out

    code, out, _ = run_cli(capsys, ["counts", "--n", "8"])
    assert "motif slots: 14" in out


def test_counts_json(capsys):
    code, out, _ = run_cli(capsys, ["counts", "--n", "8", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["admissible"] is True
    assert payload["arcs"] == 28
    assert payload["motif_slots"] == 14
    assert payload["packing_numbers"] == {"chain": 12, "collider": 12, "fork": 12}
    assert payload["mixed_counts"] == {"chains": 3, "colliders": 2, "forks": 9}
    assert payload["center_capacities"][0] == {"vertex": 1, "chain": 0, "collider": 0, "fork": 3}

    code, out, _ = run_cli(capsys, ["counts", "--n", "6", "--format", "json"])
    payload = json.loads(out)
    assert payload["admissible"] is False
    assert payload["motif_slots"] is None
    assert payload["mixed_counts"] is None


# --- verify -----------------------------------------------------------------


def _document_text(n, kind, motifs, unused):
    return json.dumps(
        {
            "schema_version": "1",
            "n": n,
            "kind": kind,
            "motifs": motifs,
            "unused_arcs": unused,
        }
    )


def test_verify_valid_decomposition_via_file(tmp_path, capsys):
    path = tmp_path / "doc.json"
    path.write_text(document_to_json(document_from_collection(STRATEGIES["mixed"](8))))
    code, out, _ = run_cli(capsys, ["verify", "--input", str(path)])
    assert code == 0
    assert "valid: yes" in out and "decomposition: yes" in out


def test_verify_valid_packing_exits_3(tmp_path, capsys):
    path = tmp_path / "doc.json"
    path.write_text(document_to_json(document_from_collection(STRATEGIES["chain-max"](6))))
    code, out, _ = run_cli(capsys, ["verify", "--input", str(path)])
    assert code == 3
    assert "valid: yes" in out and "decomposition: no" in out


def test_verify_duplicate_motif_document(capsys, monkeypatch):
    text = _document_text(
        8,
        "packing",
        [{"type": "chain", "vertices": [1, 2, 3]}, {"type": "chain", "vertices": [1, 2, 3]}],
        [],
    )
    code, out, _ = run_cli(capsys, ["verify"], stdin_text=text, monkeypatch=monkeypatch)
    assert code == 1
    assert "duplicate arc (1,2)" in out


def test_verify_non_canonical_motif_document(capsys, monkeypatch):
    text = _document_text(8, "packing", [{"type": "fork", "vertices": [2, 1, 3]}], [])
    code, out, _ = run_cli(capsys, ["verify"], stdin_text=text, monkeypatch=monkeypatch)
    assert code == 1
    assert "canonical" in out


def test_verify_malformed_documents(capsys, monkeypatch):
    bad_inputs = [
        "{not json",
        json.dumps({"n": 8}),
        json.dumps({"schema_version": "2", "n": 8, "kind": "packing", "motifs": [], "unused_arcs": []}),
        _document_text(8, "packing", [{"type": "triangle", "vertices": [1, 2, 3]}], []),
        _document_text(8, "packing", [{"type": "chain", "vertices": [1, 2]}], []),
        _document_text(0, "packing", [], []),
        _document_text(8, "socks", [], []),
        json.dumps([1, 2, 3]),
    ]
    for text in bad_inputs:
        code, out, err = run_cli(capsys, ["verify"], stdin_text=text, monkeypatch=monkeypatch)
        assert code == 2, text
        assert "malformed" in err


def test_verify_coverage_gap_on_wrong_declared_kind(capsys, monkeypatch):
    # A single chain over TT_3 covers only 2 of 3 arcs yet claims otherwise.
    text = _document_text(3, "decomposition", [{"type": "chain", "vertices": [1, 2, 3]}], [])
    code, out, _ = run_cli(capsys, ["verify"], stdin_text=text, monkeypatch=monkeypatch)
    assert code == 1
    assert "declares a decomposition" in out or "unused_arcs disagree" in out


def test_verify_coverage_gap_on_wrong_unused_list(capsys, monkeypatch):
    text = _document_text(
        3,
        "packing",
        [{"type": "chain", "vertices": [1, 2, 3]}],
        [[1, 2]],  # actually (1, 3) is the uncovered arc
    )
    code, out, _ = run_cli(capsys, ["verify"], stdin_text=text, monkeypatch=monkeypatch)
    assert code == 1
    assert "unused_arcs disagree" in out


def test_verify_missing_file(capsys):
    code, out, err = run_cli(capsys, ["verify", "--input", "/nonexistent/doc.json"])
    assert code == 2


def test_verify_json_report(tmp_path, capsys):
    path = tmp_path / "doc.json"
    path.write_text(document_to_json(document_from_collection(STRATEGIES["fork-max"](9))))
    code, out, _ = run_cli(capsys, ["verify", "--input", str(path), "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["valid"] is True
    assert payload["is_decomposition"] is True
    assert payload["counts"] == {"chains": 0, "colliders": 2, "forks": 16}


# --- oracle -----------------------------------------------------------------


def test_oracle_match(capsys):
    code, out, _ = run_cli(capsys, ["oracle", "--kind", "chain", "--n", "6"])
    assert code == 0
    assert "optimum: 6" in out
    assert "comparison: MATCH" in out


def test_oracle_witness_lines_parse_back(capsys):
    code, out, _ = run_cli(capsys, ["oracle", "--kind", "fork", "--n", "5", "--witness"])
    assert code == 0
    lines = out.splitlines()
    start = lines.index("witness:") + 1
    motifs = [parse_motif_line(line.strip()) for line in lines[start:]]
    assert len(motifs) == 4
    assert all(m.kind == "fork" for m in motifs)


def test_oracle_inconclusive_under_tiny_budget(capsys):
    code, out, _ = run_cli(capsys, ["oracle", "--kind", "chain", "--n", "8", "--max-nodes", "3"])
    assert code == 0
    assert "exhausted: no" in out
    assert "INCONCLUSIVE" in out


def test_oracle_json(capsys):
    code, out, _ = run_cli(capsys, ["oracle", "--kind", "collider", "--n", "7", "--format", "json", "--witness"])
    assert code == 0
    payload = json.loads(out)
    assert payload["optimum"] == 9
    assert payload["exhausted"] is True
    assert payload["comparison"] == "MATCH"
    assert payload["nodes"] > 0
    assert len(payload["witness"]) == 9


def test_oracle_rejects_bad_budget(capsys):
    code, out, err = run_cli(capsys, ["oracle", "--kind", "chain", "--n", "5", "--max-nodes", "0"])
    assert code == 2


# --- document format --------------------------------------------------------


@pytest.mark.parametrize("strategy", sorted(STRATEGIES))
def test_json_round_trip_is_byte_identical(strategy):
    for n in range(1, 51):
        emitted = document_to_json(document_from_collection(STRATEGIES[strategy](n)))
        assert document_to_json(document_from_json(emitted)) == emitted
        assert emitted.endswith("\n")


def test_document_declared_fields_survive_parsing():
    text = _document_text(5, "packing", [{"type": "chain", "vertices": [1, 2, 3]}], [[1, 3]])
    document = document_from_json(text)
    assert document.kind == "packing"
    assert document.unused_arcs == ((1, 3),)
    assert document.to_collection().motifs == (chain(1, 2, 3),)


def test_document_rejects_non_integer_payloads():
    with pytest.raises(DocumentError):
        document_from_json(_document_text(8, "packing", [{"type": "chain", "vertices": [1, 2, "3"]}], []))
    with pytest.raises(DocumentError):
        document_from_json(_document_text(8, "packing", [], [[1, True]]))
    with pytest.raises(DocumentError):
        document_from_json(_document_text("8", "packing", [], []))


# --- arrow notation ---------------------------------------------------------


def test_motif_text_examples():
    assert motif_to_text(chain(1, 7, 8)) == "v1 -> v7 -> v8"
    assert motif_to_text(collider(3, 4, 8)) == "v3 -> v8 <- v4"
    assert motif_to_text(fork(1, 2, 3)) == "v2 <- v1 -> v3"


def test_parse_motif_line_accepts_either_symmetric_order():
    assert parse_motif_line("v4 -> v8 <- v3") == collider(3, 4, 8)
    assert parse_motif_line("v3 <- v1 -> v2") == fork(1, 2, 3)


def test_parse_motif_line_rejects_garbage():
    for bad in ["", "v1 -> v2", "v1 <- v2 <- v3", "1 -> 2 -> 3", "v2 -> v1 -> v3"]:
        with pytest.raises(ValueError):
            parse_motif_line(bad)


@st.composite
def canonical_motifs(draw):
    n = draw(st.integers(min_value=3, max_value=40))
    triple = tuple(sorted(draw(st.sets(st.integers(1, n), min_size=3, max_size=3))))
    kind = draw(st.sampled_from(MOTIF_KINDS))
    return Motif(kind, triple)


@settings(max_examples=200)
@given(canonical_motifs())
def test_arrow_notation_round_trip(motif):
    assert parse_motif_line(motif_to_text(motif)) == motif


# --- end to end through the real interpreter --------------------------------


def test_pipeline_through_subprocess(tmp_path):
    emit = subprocess.run(
        [sys.executable, "-m", "ttmotifs", "decompose", "--n", "9", "--strategy", "collider-max", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert emit.returncode == 0
    check = subprocess.run(
        [sys.executable, "-m", "ttmotifs", "verify"],
        input=emit.stdout,
        capture_output=True,
        text=True,
    )
    assert check.returncode == 0
    assert "valid: yes" in check.stdout
