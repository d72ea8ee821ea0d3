import io
import json

import pytest

from braidkit.cli import main
from braidkit.planar import map_to_json

FACT = json.dumps({"strands": 3, "factors": ["1", "2"]})
FACT_MOVED = json.dumps({"strands": 3, "factors": ["1 2 -1", "1"]})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def triangle_json():
    return json.dumps(
        {
            "vertices": [
                {"id": "p1", "kind": "puncture"},
                {"id": "p2", "kind": "puncture"},
                {"id": "p3", "kind": "puncture"},
            ],
            "edges": [
                {"id": "a", "ends": ["p1", "p2"]},
                {"id": "b", "ends": ["p2", "p3"]},
                {"id": "c", "ends": ["p3", "p1"]},
            ],
            "rotations": {
                "p1": ["a:0", "c:1"],
                "p2": ["b:0", "a:1"],
                "p3": ["c:0", "b:1"],
            },
            "mode": "free",
        }
    )


def test_nf_json_payload(capsys):
    code, out, _ = run(capsys, "nf", "--strands", "3", "--format", "json", "1")
    assert code == 0
    assert json.loads(out) == {
        "strands": 3,
        "deltaPower": 0,
        "factors": [[2, 1, 3]],
        "canonicalLength": 1,
        "key": "3:0:2,1,3",
    }


def test_nf_half_twist_absorbed(capsys):
    code, out, _ = run(capsys, "nf", "--strands", "3", "--format", "json", "1 2 1")
    assert code == 0
    payload = json.loads(out)
    assert payload["deltaPower"] == 1
    assert payload["factors"] == []
    assert payload["key"] == "3:1:"


def test_eq_exit_codes(capsys):
    code, out, _ = run(capsys, "eq", "--strands", "3", "1 2 1", "2 1 2")
    assert (code, out.strip()) == (0, "equal")
    code, out, _ = run(capsys, "eq", "--strands", "3", "1", "2")
    assert (code, out.strip()) == (1, "not equal")


def test_conj(capsys):
    code, out, _ = run(capsys, "conj", "--strands", "3", "1", "2")
    assert (code, out.strip()) == (0, "-2 1 2")


def test_band_expand(capsys):
    code, out, _ = run(capsys, "band-expand", "--strands", "3", "3:1")
    assert (code, out.strip()) == (0, "2 1 -2")


def test_delta2(capsys):
    code, out, _ = run(capsys, "delta2", "--strands", "3")
    assert (code, out.strip()) == (0, "1 2 1 2 1 2")


def test_hurwitz_apply_inline(capsys):
    code, out, _ = run(capsys, "hurwitz-apply", "--format", "json", FACT, "[1]")
    assert code == 0
    payload = json.loads(out)
    assert payload["strands"] == 3
    assert payload["factors"] == ["1 2 -1", "1"]
    assert payload["productKey"]
    code, out, _ = run(capsys, "hurwitz-apply", FACT, "[1]")
    assert (code, out.strip().splitlines()) == (0, ["1: 1 2 -1", "2: 1"])


def test_hurwitz_apply_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "fact.json"
    path.write_text(FACT, encoding="utf-8")
    code, out, _ = run(capsys, "hurwitz-apply", str(path), "[1]")
    assert code == 0
    assert out.splitlines()[0] == "1: 1 2 -1"
    monkeypatch.setattr("sys.stdin", io.StringIO(FACT))
    code, out, _ = run(capsys, "hurwitz-apply", "-", "[1]")
    assert code == 0
    assert out.splitlines()[0] == "1: 1 2 -1"


def test_hurwitz_path_found(capsys):
    code, out, _ = run(capsys, "hurwitz-path", FACT, FACT_MOVED)
    assert (code, out.strip()) == (0, "found: 1")


def test_hurwitz_path_not_comparable(capsys):
    other = json.dumps({"strands": 3, "factors": ["1", "1"]})
    code, out, _ = run(capsys, "hurwitz-path", FACT, other)
    assert code == 1
    assert "not comparable" in out


def test_hurwitz_path_capped(capsys):
    code, out, _ = run(capsys, "hurwitz-path", "--depth-cap", "0", FACT, FACT_MOVED)
    assert code == 2
    assert "caps exhausted" in out


def test_hurwitz_path_orbit_exhausted(capsys):
    # An identity factor never turns into a generator, and the search
    # proves it by closing both orbits.
    src = json.dumps({"strands": 3, "factors": ["1 2", ""]})
    code, out, _ = run(capsys, "hurwitz-path", src, FACT)
    assert code == 1
    assert "orbit exhausted" in out


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", FACT)
    assert (code, out.strip()) == (0, "visited=3 truncated=False depths=1,2")
    code, out, _ = run(capsys, "orbit", "--size-cap", "2", FACT)
    assert code == 2


def test_orbit_json_deterministic(capsys):
    first = run(capsys, "orbit", "--keys", "--format", "json", FACT)
    second = run(capsys, "orbit", "--keys", "--format", "json", FACT)
    assert first == second
    payload = json.loads(first[1])
    assert payload["visited"] == 3
    assert len(payload["keys"]) == 3
    assert payload["depthCap"] is None


def test_rewrite_class(capsys):
    code, out, _ = run(capsys, "rewrite-class", "--strands", "3", "3:2 2:1")
    assert code == 0
    assert out.splitlines()[0] == "size=3 truncated=False"
    code, _, _ = run(capsys, "rewrite-class", "--strands", "3", "--size-cap", "2", "3:2 2:1")
    assert code == 2


def test_positive_path(capsys):
    code, out, _ = run(capsys, "positive-path", "--strands", "3", "3:2 2:1", "3:1 3:2")
    assert (code, out.strip()) == (0, "found: 1")
    code, out, _ = run(capsys, "positive-path", "--strands", "3", "3:2 2:1", "2:1 3:2")
    assert code == 1
    assert "not equal" in out
    code, out, _ = run(
        capsys, "positive-path", "--strands", "3", "--size-cap", "1", "3:2 2:1", "2:1 3:1"
    )
    assert code == 2
    assert "inconclusive" in out


def test_semiframe_accept(capsys):
    code, out, _ = run(capsys, "semiframe", triangle_json())
    assert (code, out.strip()) == (0, "accepted witnesses=p1:0")


def test_semiframe_reject(capsys):
    from braidkit.planar import CombMap, Edge, Vertex

    wheel = CombMap(
        tuple(Vertex(f"p{i}", "puncture") for i in (1, 2, 3, 4)),
        (
            Edge("a", ("p1", "p2")),
            Edge("b", ("p2", "p3")),
            Edge("c", ("p3", "p1")),
            Edge("d", ("p4", "p1")),
            Edge("e", ("p4", "p2")),
            Edge("f", ("p4", "p3")),
        ),
        {
            "p1": ("a:0", "d:1", "c:1"),
            "p2": ("b:0", "e:1", "a:1"),
            "p3": ("c:0", "f:1", "b:1"),
            "p4": ("f:0", "d:0", "e:0"),
        },
    )
    code, out, _ = run(capsys, "semiframe", json.dumps(map_to_json(wheel)))
    assert code == 1
    assert out.startswith("rejected:")


def test_semiframe_malformed(capsys):
    code, _, err = run(capsys, "semiframe", '{"vertices": []}')
    assert code == 3
    assert "error:" in err


def test_verify_relations(capsys):
    code, out, _ = run(capsys, "verify", "--strands", "3", "relations")
    assert code == 0
    assert out.strip() == "PASS relations (strands=3, checks=2)"


def test_verify_json_deterministic(capsys):
    argv = ("verify", "--strands", "3", "--format", "json", "relations", "chain-rules")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    payload = json.loads(first[1])
    assert payload["ok"] is True
    assert [s["suite"] for s in payload["suites"]] == ["relations", "chain-rules"]


def test_verify_inconclusive(capsys):
    code, out, _ = run(capsys, "verify", "--strands", "3", "--size-cap", "1", "twist-closure")
    assert code == 2
    assert out.startswith("INCONCLUSIVE twist-closure")


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 3
    assert "unknown suite" in err


def test_threads_validation(capsys):
    code, _, err = run(capsys, "eq", "--threads", "0", "1", "1")
    assert code == 3
    assert "--threads" in err
    code, _, _ = run(capsys, "eq", "--threads", "2", "1", "1")
    assert code == 0


def test_bad_word_is_an_input_error(capsys):
    code, _, err = run(capsys, "nf", "--strands", "3", "1 x")
    assert code == 3
    assert err.startswith("error:")
    code, _, err = run(capsys, "nf", "--strands", "3", "3")
    assert code == 3


def test_bad_json_is_an_input_error(capsys):
    code, _, err = run(capsys, "orbit", "{not json")
    assert code == 3
    assert err.startswith("error:")


def test_usage_error_raises_systemexit():
    with pytest.raises(SystemExit):
        main([])
