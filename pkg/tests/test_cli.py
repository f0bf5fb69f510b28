import io
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from langrep import cli
from langrep.errors import InputFormatError
from langrep.formats import format_graph, format_word, parse_graph, parse_host, parse_word
from langrep.graphs import Graph, all_graphs, cycle_graph, is_isomorphic

C4 = "n 4\n1 2\n2 3\n3 4\n1 4\n"
C5 = "n 5\n1 2\n2 3\n3 4\n4 5\n1 5\n"
P3 = "n 3\n1 2\n2 3\n"
K23 = "n 5\nvertices: a1 a2 b1 b2 b3\n" + "".join(f"a{i} b{j}\n" for i in (1, 2) for j in (1, 2, 3))


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin, sys.stdout, sys.stderr
    sys.stdin, sys.stdout, sys.stderr = io.StringIO(stdin), out, err
    try:
        code = cli.main(argv)
    finally:
        sys.stdin, sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (("c4", C4), ("c5", C5), ("p3", P3), ("k23", K23)):
        p = tmp_path / f"{name}.g"
        p.write_text(text)
        paths[name] = str(p)
    return paths


class TestGraphFile:
    def test_parse(self):
        g = parse_graph("# comment\n" + C4)
        assert g == cycle_graph(4)

    def test_named_vertices(self):
        g = parse_graph(K23)
        assert g.n == 5 and g.m == 6

    def test_serialise_sorted(self):
        assert format_graph(parse_graph("n 3\n3 2\n1 2\n")) == "n 3\n1 2\n2 3\n"

    @pytest.mark.parametrize("bad", [
        "1 2\n", "n 2\n1 2\n1 2\n", "n 2\n1 3\n", "n 2\n1 1\n", "n x\n", "n 2\n1 2 3\n",
        "n 2\nvertices: a\n", "n 2\nvertices: a a\n", "n 1\nvertices: a:b\n",
    ])
    def test_rejects(self, bad):
        with pytest.raises(InputFormatError):
            parse_graph(bad)

    def test_host_loops(self):
        h = parse_host("n 2\n1 1\n1 2\n")
        assert h.loops == frozenset({"1"}) and h.allows("1", "1") and not h.allows("2", "2")

    @given(st.integers(1, 5), st.data())
    def test_roundtrip(self, n, data):
        g = data.draw(st.sampled_from(all_graphs(n)))
        text = format_graph(g)
        assert parse_graph(text) == g
        assert format_graph(parse_graph(text)) == text


class TestWordFile:
    def test_tokens(self):
        assert parse_word("10 2 10\n") == ("10", "2", "10")

    def test_compact(self):
        assert parse_word("423121123142\n", compact=True) == tuple("423121123142")
        with pytest.raises(InputFormatError):
            parse_word("12 3\n", compact=True)
        with pytest.raises(InputFormatError):
            format_word(["10"], compact=True)

    def test_empty(self):
        with pytest.raises(InputFormatError):
            parse_word("\n")

    def test_format(self):
        assert format_word(("a", "b")) == "a b\n"
        assert format_word("ab", compact=True) == "ab\n"


class TestDecode:
    def test_palindrome(self):
        code, out, _ = run(["decode", "--lang", "pal", "--word", "-", "--compact"], "423121123142\n")
        assert code == 0 and parse_graph(out) == cycle_graph(4)

    def test_single_letter(self):
        code, out, _ = run(["decode", "--lang", "classical", "--word", "-"], "a\n")
        assert code == 0 and parse_graph(out) == Graph(["a"])

    def test_copy(self):
        code, out, _ = run(["decode", "--lang", "copy", "--word", "-", "--compact"], "121324123142\n")
        assert parse_graph(out) == cycle_graph(4)

    def test_bad_spec(self):
        code, _, err = run(["decode", "--lang", "pal(", "--word", "-"], "a\n")
        assert code == 2 and "error" in err

    def test_bad_word(self):
        assert run(["decode", "--lang", "pal", "--word", "-"], "")[0] == 2

    def test_asymmetric(self):
        assert run(["decode", "--lang", "finite:01", "--word", "-"], "a b\n")[0] == 3


class TestEncode:
    def test_copy(self, files):
        code, out, err = run(["encode", "--scheme", "copy", "--graph", files["c4"], "--compact"])
        assert code == 0 and out.strip() == "121324123142"
        assert err.strip() == "length=12 bits=24"

    def test_sparse_report(self, files):
        code, out, err = run(["encode", "--scheme", "sparse", "--graph", files["c4"]])
        assert code == 0 and len(out.split()) == 16
        assert err.strip() == "length=16 bits=32"

    def test_dyck_c5(self, files):
        assert run(["encode", "--scheme", "dyck", "--graph", files["c5"]])[0] == 4

    def test_aux_order(self, files, tmp_path):
        aux = tmp_path / "order"
        aux.write_text("1 2\n1 4\n3 2\n3 4\n")
        code, out, _ = run(["encode", "--scheme", "dyck", "--graph", files["c4"], "--aux", str(aux), "--compact"])
        assert out.strip() == "13243124132413421324"

    def test_aux_bipartition(self, files, tmp_path):
        aux = tmp_path / "parts"
        aux.write_text("a1 a2\nb1 b2 b3\n")
        code, out, _ = run(["encode", "--scheme", "bip-pal", "--graph", files["k23"], "--aux", str(aux)])
        assert code == 0 and out.split()[:2] == ["a1", "a2"]

    def test_bad_aux(self, files, tmp_path):
        aux = tmp_path / "parts"
        aux.write_text("a1 b1\na2 b2 b3\n")
        assert run(["encode", "--scheme", "bip-pal", "--graph", files["k23"], "--aux", str(aux)])[0] == 2

    def test_aux_colouring_and_intervals(self, files, tmp_path):
        col = tmp_path / "col"
        col.write_text("1 1\n2 2\n3 1\n4 2\n")
        assert run(["verify", "--scheme", "mod:2", "--graph", files["c4"], "--aux", str(col)])[0] == 0
        iv = tmp_path / "iv"
        iv.write_text("1 1 3\n2 4 6\n3 5 7\n4 2 8\n")
        # complement of C4 is 2K2: 1,3 overlap and 2,4 overlap
        assert run(["verify", "--scheme", "interval-union", "--graph", files["c4"], "--aux", str(iv)])[0] == 2


class TestVerify:
    @pytest.mark.parametrize("scheme", ["palindrome", "detp", "copy", "sparse", "lyndon"])
    def test_universal(self, scheme, tmp_path):
        for n in range(1, 9):
            g = Graph([str(i) for i in range(1, n + 1)],
                      [(str(i), str(j)) for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i * j) % 3])
            p = tmp_path / f"g{n}.g"
            p.write_text(format_graph(g))
            code, out, _ = run(["verify", "--scheme", scheme, "--graph", str(p)])
            assert code == 0 and out.strip() == "OK"

    def test_bipartite(self, files):
        assert run(["verify", "--scheme", "bip-pal", "--graph", files["k23"]])[:2] == (0, "OK\n")
        assert run(["verify", "--scheme", "bip-lyndon", "--graph", files["k23"]])[0] == 0

    def test_cluster_p3(self, files):
        assert run(["verify", "--scheme", "cluster", "--graph", files["p3"]])[0] == 4

    def test_host(self, files):
        assert run(["verify", "--scheme", f"hgraph:{files['c5']}", "--graph", files["c5"]])[0] == 0
        assert run(["verify", "--scheme", f"hgraph:{files['p3']}", "--graph", files["c5"]])[0] == 4

    def test_unknown_scheme(self, files):
        assert run(["verify", "--scheme", "bogus", "--graph", files["c4"]])[0] == 2


class TestAtlas:
    def test_dyck(self):
        code, out, _ = run(["atlas", "--lang", "dyck", "--class", "comparability", "--max-n", "4", "--max-len", "10"])
        assert code == 0 and "refuted: 0" in out

    def test_balanced(self):
        assert run(["atlas", "--lang", "balanced", "--class", "cluster", "--max-n", "4", "--max-len", "8"])[0] == 0

    def test_copy_mod(self):
        assert run(["atlas", "--lang", "copy-mod:2", "--class", "k-colorable:2",
                    "--max-n", "4", "--max-len", "12"])[0] == 0

    def test_counterexample_exit(self):
        code, out, _ = run(["atlas", "--lang", "pal", "--class", "bipartite", "--max-n", "3", "--max-len", "5"])
        assert code == 7 and "refuted" in out

    def test_resource_bound(self):
        assert run(["atlas", "--lang", "pal", "--class", "bipartite", "--max-n", "6", "--max-len", "5"])[0] == 5

    def test_lines(self):
        code, out, _ = run(["atlas", "--lang", "balanced", "--class", "cluster", "--max-n", "3",
                            "--max-len", "6", "--lines"])
        assert any(line.startswith("covered\t") for line in out.splitlines())


def test_list_langs():
    code, out, _ = run(["list-langs"])
    assert code == 0 and "dyck" in out and "copy-mod:<k>" in out


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "langrep", "decode", "--lang", "copy", "--word", "-", "--compact"],
                          input="121324123142\n", capture_output=True, text=True)
    assert proc.returncode == 0 and is_isomorphic(parse_graph(proc.stdout), cycle_graph(4))


def test_encode_decode_composition(files):
    for scheme, lang in (("palindrome", "pal"), ("copy", "copy"), ("dyck", "dyck"), ("bip-lyndon", "lyndon-odd"),
                         ("mod:2", "copy-mod:2")):
        _, word, _ = run(["encode", "--scheme", scheme, "--graph", files["c4"]])
        code, out, _ = run(["decode", "--lang", lang, "--word", "-"], word)
        assert code == 0 and is_isomorphic(parse_graph(out), cycle_graph(4))
