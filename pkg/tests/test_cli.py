import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlpdiff.cli import run

from conftest import FIXTURES


def fx(name):
    return str(FIXTURES / name)


def test_mdiff_section2(fixture_text):
    res = run(["mdiff", fx("file1.txt"), fx("file2.txt")])
    assert res.stdout == fixture_text("section2.mdiff")
    assert res.status == 1


def test_mdiff_identical(fixture_text):
    res = run(["mdiff", fx("file1.txt"), fx("file1.txt")])
    assert (res.stdout, res.status) == (fixture_text("file1.txt"), 0)


def test_diff_angle_lines():
    res = run(["diff", fx("file1.txt"), fx("file2.txt")])
    assert (res.stdout, res.status) == ("< school.\n> university.\n", 1)
    assert run(["diff", fx("file1.txt"), fx("file1.txt")]).status == 0


def test_reconstruct_round_trip(tmp_path, fixture_text):
    out = tmp_path / "out.mdiff"
    out.write_text(run(["mdiff", fx("file1.txt"), fx("file2.txt")]).stdout)
    assert run(["reconstruct", "--first", str(out)]).stdout == fixture_text("file1.txt")
    assert run(["reconstruct", "--second", str(out)]).stdout == fixture_text("file2.txt")


def test_stdin_dash(fixture_text):
    res = run(["mdiff", "-", fx("file2.txt")], stdin=fixture_text("file1.txt").encode())
    assert res.stdout == fixture_text("section2.mdiff")
    res = run(["reconstruct", "--second", "-"], stdin=res.stdout.encode())
    assert res.stdout == fixture_text("file2.txt")


def test_stdin_twice_is_usage_error():
    res = run(["mdiff", "-", "-"], stdin=b"a\n")
    assert res.status == 2


def test_words_mode(fixture_text):
    res = run(["mdiff", "--words", fx("written_table2.txt"), fx("spoken_table1.txt")])
    assert res.stdout == fixture_text("table2.mdiff")


def test_tokenize():
    res = run(["tokenize", "--words", "-"], stdin=b"I go  to\nschool.\n")
    assert res.stdout == "I\ngo\nto\nschool.\n"


def test_resolve(fixture_text):
    assert run(["resolve", fx("like.mdiff")]).stdout == fixture_text("system1.txt")
    assert run(["resolve", fx("like_marked.mdiff")]).stdout == fixture_text("system2.txt")


def test_diff3_summary_and_listing():
    res = run(["diff3", "--summary", fx("system1.txt"), fx("system1.txt"), fx("system2.txt")])
    assert res.status == 1
    assert "agree regions: 2\ndisagree regions: 1\n" in res.stdout
    listing = run(["diff3", fx("system1.txt"), fx("system1.txt"), fx("system2.txt")]).stdout
    assert listing == "====\n1:\n  like\tVerb\n2:\n  like\tVerb\n3:\n  like\tPreposition\n"
    assert run(["diff3", fx("file1.txt"), fx("file1.txt"), fx("file1.txt")]).status == 0


def test_extract_rules(tmp_path):
    doc = tmp_path / "t2.mdiff"
    doc.write_text(run(["mdiff", "--words", fx("written_table2.txt"), fx("spoken_table1.txt")]).stdout)
    res = run(["extract-rules", str(doc)])
    assert res.stdout.splitlines()[1:] == [
        "In this paper, we\tToday I'd like to\t1",
        "\tuh\t1",
        "performed\tdone\t1",
    ]
    rev = run(["extract-rules", "--reverse", str(doc), str(doc)])
    assert "done\tperformed\t2" in rev.stdout.splitlines()


def test_align(fixture_text):
    res = run(["align", fx("paper_tagged.txt"), fx("presentation.txt")])
    assert res.stdout == fixture_text("fig4_expected.txt")
    assert res.status == 0


def test_align_custom_affixes(tmp_path):
    (tmp_path / "p").write_text("[[1]]\na\nb\n")
    (tmp_path / "s").write_text("a\nc\n")
    res = run(["align", "--tag-open", "[[", "--tag-close", "]]", str(tmp_path / "p"), str(tmp_path / "s")])
    assert res.stdout == "[[1]]\na\nc\n"


def test_align_warning_goes_to_stderr(tmp_path):
    (tmp_path / "p").write_text("<1>\na\n")
    (tmp_path / "s").write_text("<2>\na\n")
    res = run(["align", str(tmp_path / "p"), str(tmp_path / "s")])
    assert "warning" in res.stderr and res.status == 0


def test_qa():
    res = run(["qa", "--kb", fx("kb_case2.txt"), "--rules", fx("in_of.tsv"), "Where is the capital of Japan?"])
    assert res.stdout == "Tokyo\nscore: 20/26 = 0.769231\n"
    res = run(["qa", "--kb", fx("kb_case2.txt"), "Where is the capital of Japan?"])
    assert res.stdout == "Tokyo\nscore: 18/28 = 0.642857\n"


def test_qa_no_answer(tmp_path):
    kb = tmp_path / "kb"
    kb.write_text("nothing relevant\n")
    res = run(["qa", "--kb", str(kb), "Where is the capital of Japan?"])
    assert res.status == 1 and res.stdout == ""


def test_qa_bad_question():
    res = run(["qa", "--kb", fx("kb_case1.txt"), "Tokyo is big."])
    assert res.status == 2


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["mdiff", "only-one"], ["reconstruct", "x.mdiff"], ["extract-rules", "--context", "-1", "f"]],
)
def test_usage_errors(argv):
    res = run(argv)
    assert res.status == 2
    assert res.stderr


def test_missing_file():
    res = run(["mdiff", "/nonexistent/a", "/nonexistent/b"])
    assert res.status == 2 and res.stdout == ""


def test_malformed_reports_file_and_line(tmp_path):
    bad = tmp_path / "bad.mdiff"
    bad.write_text("a\n;===== begin =====\nb\n")
    res = run(["resolve", str(bad)])
    assert res.status == 2
    assert f"{bad}:2:" in res.stderr
    assert res.stdout == ""


def test_marker_collision_reports_file_and_line(tmp_path):
    f = tmp_path / "f"
    f.write_text("a\n;-----------------\n")
    res = run(["mdiff", str(f), str(f)])
    assert res.status == 2 and f"{f}:2:" in res.stderr and res.stdout == ""


def test_invalid_utf8(tmp_path):
    f = tmp_path / "f"
    f.write_bytes(b"\xff\xfe\n")
    assert run(["tokenize", str(f)]).status == 2


def test_crlf_input_written_as_lf(tmp_path):
    f = tmp_path / "f"
    f.write_bytes(b"a\r\nb\r\n")
    assert run(["tokenize", str(f)]).stdout == "a\nb\n"


file_text = st.lists(
    st.text(alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="\n\r;"), max_size=5),
    max_size=15,
).map(lambda lines: "".join(line + "\n" for line in lines))


@settings(max_examples=60, deadline=None)
@given(file_text, file_text)
def test_shell_level_round_trip(tmp_path_factory, a, b):
    d = tmp_path_factory.mktemp("rt")
    (d / "a").write_text(a, encoding="utf-8")
    (d / "b").write_text(b, encoding="utf-8")
    merged = run(["mdiff", str(d / "a"), str(d / "b")])
    assert merged.status == (0 if a == b else 1)
    (d / "m").write_text(merged.stdout, encoding="utf-8")
    assert run(["reconstruct", "--first", str(d / "m")]).stdout == a
    assert run(["reconstruct", "--second", str(d / "m")]).stdout == b
    assert run(["mdiff", str(d / "a"), str(d / "b")]).stdout == merged.stdout


def test_end_to_end_subprocess(tmp_path):
    out = tmp_path / "out.mdiff"
    with open(out, "wb") as fh:
        proc = subprocess.run(
            [sys.executable, "-m", "nlpdiff", "mdiff", fx("file1.txt"), fx("file2.txt")], stdout=fh
        )
    assert proc.returncode == 1
    proc = subprocess.run(
        [sys.executable, "-m", "nlpdiff", "reconstruct", "--second", str(out)], capture_output=True
    )
    assert proc.returncode == 0
    assert proc.stdout == (FIXTURES / "file2.txt").read_bytes()
