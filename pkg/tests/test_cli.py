import json

import pytest

import sensebridge
from sensebridge.cli import main


def test_translate_music_sentence(capsys):
    code = main(
        ["translate", "--ontology", "music_ontology", "--text", "a minha bateria está ruim"]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "drums" in out


def test_translate_without_ontology_uses_backend_only(capsys):
    code = main(["translate", "--text", "a minha bateria está ruim"])
    out = capsys.readouterr().out
    assert code == 0
    assert "battery" in out


def test_translate_trace_flag_prints_json(capsys):
    code = main(
        ["translate", "--ontology", "music_ontology", "--text", "a bateria chegou", "--trace"]
    )
    out = capsys.readouterr().out
    assert code == 0
    trace = json.loads(out.split("\n", 1)[1])
    assert trace["iteration"] == 1


def test_translate_seed_binding(capsys):
    code = main(
        [
            "translate",
            "--ontology", "vehicle_ontology",
            "--seed-binding", "bateria=drums",
            "--text", "ok, e a bateria estava completa?",
        ]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "drums" in out


def test_translate_missing_lexicon_file_is_input_error(capsys):
    code = main(["translate", "--lexicon", "/no/such/file.tsv", "--text", "olá"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_translate_unknown_ontology_is_input_error(capsys):
    code = main(["translate", "--ontology", "missing_ontology", "--text", "olá"])
    assert code == 1


def test_translate_bad_seed_binding_syntax(capsys):
    code = main(
        ["translate", "--ontology", "music_ontology", "--seed-binding", "nope",
         "--text", "olá"]
    )
    assert code == 1


def test_eval_prints_report(capsys):
    code = main(["eval"])
    out = capsys.readouterr().out
    assert code == 0
    assert "baseline" in out and "disambig" in out
    assert "Financial" in out


def test_eval_writes_json(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code = main(["eval", "--json-out", str(out_path)])
    capsys.readouterr()
    assert code == 0
    data = json.loads(out_path.read_text(encoding="utf-8"))
    assert data["counts"]["Music"] >= 20


def test_context_command(capsys):
    code = main(
        ["context", "--log", str(sensebridge.data_path("logs", "music_chat_log.tsv"))]
    )
    assert code == 0
    assert capsys.readouterr().out.strip() == "Music"


def test_context_command_missing_log(capsys):
    code = main(["context", "--log", "/no/such/log.tsv"])
    assert code == 1


def test_serve_write_config(tmp_path, capsys):
    target = tmp_path / "svc.conf"
    code = main(["serve", "--write-config", str(target)])
    capsys.readouterr()
    assert code == 0
    content = target.read_text(encoding="utf-8")
    assert "listen_address=" in content
    assert "persistence_dir=" in content


def test_unknown_subcommand_exits_nonzero():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
