from codebruijn.bench import WORKLOADS, Row, church, plot, run
from codebruijn.lam import pretty_named


def test_church_numeral():
    assert pretty_named(church(2)) == "\\a.\\b.a (a b)"


def test_rows_and_figure(tmp_path, capsys):
    rows = run(WORKLOADS, [1, 3], 1000)
    assert len(rows) == 2 * len(WORKLOADS)
    for r in rows:
        assert len(r.tsv().split("\t")) == len(Row.HEADER.split("\t"))
    carried = [r for r in rows if r.workload == "under_binders"]
    assert all(r.hsub_visits < r.naive_visits for r in carried)
    out = tmp_path / "visits.png"
    plot(rows, str(out))
    assert out.stat().st_size > 0
