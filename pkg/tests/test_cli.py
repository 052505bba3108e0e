import io
import subprocess
import sys

import pytest

from graphrecon.cli import main
from graphrecon.deck import deck_of, format_deck
from graphrecon.graph import Graph, cycle, disjoint_union, path, star, wheel

K1_W5 = str(disjoint_union(Graph.empty(1), wheel(5)))
C4 = str(cycle(4))


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_member(capsys):
    code, out, _ = run(capsys, "check", K1_W5)
    assert code == 0
    assert "v1=0 others={1} k=2" in out and "v1=1 others={0} k=2" in out


def test_check_nonmember(capsys):
    code, out, _ = run(capsys, "check", C4)
    assert code == 1 and "not a class member" in out


def test_check_garbage(capsys):
    code, _, err = run(capsys, "check", "%%garbage")
    assert code == 2 and "at byte 0" in err


def test_check_porcelain_from_file(capsys, tmp_path):
    f = tmp_path / "graphs.g6"
    f.write_text(f"{K1_W5}\n{C4}\n")
    code, out, _ = run(capsys, "check", str(f), "--porcelain")
    assert code == 1
    assert out.splitlines() == [
        f"witness\t{K1_W5}\t0\t1\t2",
        f"witness\t{K1_W5}\t1\t0\t2",
        f"nonmember\t{C4}",
    ]


def test_deck(capsys):
    code, out, _ = run(capsys, "deck", "Bw")
    assert code == 0 and out == "A_\nA_\nA_\n"
    code, out, _ = run(capsys, "deck", "Bg")
    assert code == 0 and out == "A?\nA_\nA_\n"
    code, _, _ = run(capsys, "deck", "@")
    assert code == 2


def test_reconstruct_from_stdin(capsys, monkeypatch):
    deck_text = format_deck(deck_of(disjoint_union(Graph.empty(1), wheel(5))))
    code, out, _ = run(capsys, "reconstruct", "-", "--porcelain", stdin=deck_text, monkeypatch=monkeypatch)
    assert code == 0
    lines = out.splitlines()
    assert [line.split("\t")[0] for line in lines] == ["candidates", "survivor", "unique"]
    assert lines[-1] == "unique\ttrue"


def test_reconstruct_nonmember_deck(capsys, tmp_path):
    f = tmp_path / "c4.deck"
    f.write_text(format_deck(deck_of(cycle(4))))
    code, out, _ = run(capsys, "reconstruct", str(f))
    assert "unique: false" in out
    assert code == 1


def test_reconstruct_inconsistent_cards(capsys, tmp_path):
    f = tmp_path / "bad.deck"
    f.write_text("A_\nA_\nBw\n")
    code, _, err = run(capsys, "reconstruct", str(f))
    assert code == 1 and "illegitimate" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "3")
    assert code == 0 and "counterexamples: 0" in out
    code, out, _ = run(capsys, "verify", "7", "--porcelain")
    assert code == 0
    assert out.splitlines()[0] == "n: 7"
    code, _, _ = run(capsys, "verify", "9")
    assert code == 2


def test_verify_shard_flag(capsys):
    code, out, _ = run(capsys, "verify", "6", "--shard", "0/2")
    assert code == 0
    with pytest.raises(SystemExit) as info:
        main(["verify", "6", "--shard", "2/2"])
    assert info.value.code == 2


def test_lemmas(capsys):
    code, out, _ = run(capsys, "lemmas", K1_W5, "--trials", "100", "--seed", "1")
    assert code == 0
    assert out.count("pass") == 3
    code, _, err = run(capsys, "lemmas", C4)
    assert code == 1 and "not in class" in err
    code, _, err = run(capsys, "lemmas", K1_W5, "--trials", "0")
    assert code == 0 and "warning" in err


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "9", "--count", "3", "--seed", "11")
    assert code == 0 and len(out.splitlines()) == 3
    again = run(capsys, "generate", "9", "--count", "3", "--seed", "11")[1]
    assert again == out
    assert run(capsys, "generate", "4")[0] == 2


def test_deterministic_output(capsys):
    g = str(disjoint_union(star(3), star(5)))
    first = run(capsys, "lemmas", g, "--trials", "5", "--seed", "3", "--porcelain")
    second = run(capsys, "lemmas", g, "--trials", "5", "--seed", "3", "--porcelain")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "graphrecon", "deck", str(path(3))],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "A?\nA_\nA_\n"


def test_missing_subcommand():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
