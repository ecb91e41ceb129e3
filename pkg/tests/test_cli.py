"""Command-line behavior: output shapes, exit codes, determinism."""

import json

from geodual.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCcm:
    def test_layered_contains_j_block(self, capsys, data_dir):
        code, out, _ = run(capsys, "ccm", data_dir / "layered.imp")
        assert code == 0
        lines = out.splitlines()
        assert "1 2 4" in lines and "1 3 5" in lines and "2 3 5" in lines
        assert len(lines) == 9

    def test_by_element(self, capsys, data_dir):
        code, out, _ = run(capsys, "ccm", data_dir / "layered.imp", "--by-element")
        assert code == 0
        assert "j: 1 2 4" in out.splitlines()

    def test_json(self, capsys, data_dir):
        code, out, _ = run(capsys, "ccm", data_dir / "layered.imp", "--json")
        rows = [json.loads(line) for line in out.splitlines()]
        assert {"element": "j", "meet": ["1", "2", "4"]} in rows

    def test_unranked_exits_2(self, capsys, data_dir):
        code, out, err = run(capsys, "ccm", data_dir / "crossed.imp")
        assert code == 2
        assert "rank" in err

    def test_empty_meet_printed_as_dot(self, capsys, data_dir):
        code, out, _ = run(capsys, "ccm", data_dir / "chain.imp")
        assert code == 0
        assert out.splitlines() == ["2", "."]

    def test_jobs_flag_matches_sequential(self, capsys, data_dir):
        code1, out1, _ = run(capsys, "ccm", data_dir / "layered.imp")
        code2, out2, _ = run(capsys, "ccm", data_dir / "layered.imp", "--jobs", "2")
        assert (code1, out1) == (code2, out2)


class TestSid:
    def test_layered_meets_recover_base(self, capsys, data_dir):
        code, out, _ = run(capsys, "sid", data_dir / "layered.mf")
        assert code == 0
        assert out.splitlines() == [
            "elements: 1 2 3 4 5 j",
            "1 2 -> 4",
            "3 -> 5",
            "4 5 -> j",
        ]

    def test_verify_flag(self, capsys, data_dir):
        code, out, _ = run(capsys, "sid", data_dir / "layered.mf", "--verify")
        assert code == 0
        assert "4 5 -> j" in out

    def test_strict_flag(self, capsys, data_dir):
        code, out, _ = run(capsys, "sid", data_dir / "layered.mf", "--strict")
        assert code == 0

    def test_parse_error_exits_1(self, capsys, tmp_path):
        bad = tmp_path / "bad.mf"
        bad.write_text("elements: a b\nq\n")
        code, _, err = run(capsys, "sid", bad)
        assert code == 1
        assert "bad.mf:2" in err

    def test_jobs_flag_matches_sequential(self, capsys, data_dir):
        code1, out1, _ = run(capsys, "sid", data_dir / "layered.mf")
        code2, out2, _ = run(capsys, "sid", data_dir / "layered.mf", "--jobs", "2")
        assert (code1, out1) == (code2, out2)


class TestCriticalBase:
    def test_crossed_identity(self, capsys, data_dir):
        code, out, _ = run(capsys, "critical-base", data_dir / "crossed.imp")
        assert code == 0
        assert out.splitlines()[0] == "elements: 1 2 3 4 5"
        assert "4 5 -> 3" in out.splitlines()

    def test_cyclic_exits_2(self, capsys, tmp_path):
        f = tmp_path / "cyc.imp"
        f.write_text("elements: a b\na -> b\nb -> a\n")
        code, _, err = run(capsys, "critical-base", f)
        assert code == 2


class TestRankCheck:
    def test_layered_ranked(self, capsys, data_dir):
        code, out, _ = run(capsys, "rank-check", data_dir / "layered.imp")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "ranked"
        assert "j=0" in lines and "1=2" in lines and "4=1" in lines

    def test_crossed_conflict_exits_2(self, capsys, data_dir):
        code, out, _ = run(capsys, "rank-check", data_dir / "crossed.imp")
        assert code == 2
        lines = out.splitlines()
        assert lines[0] == "conflict"
        assert any(line.startswith("witness:") for line in lines)

    def test_json_mode(self, capsys, data_dir):
        code, out, _ = run(capsys, "rank-check", data_dir / "layered.imp", "--json")
        data = json.loads(out)
        assert data["ranked"] is True and data["ranks"]["j"] == 0

    def test_missing_file_exits_1(self, capsys, tmp_path):
        code, _, err = run(capsys, "rank-check", tmp_path / "nope.imp")
        assert code == 1


class TestDualReduce:
    def test_dual_check_positive(self, capsys, data_dir):
        code, out, _ = run(
            capsys,
            "dual-check",
            data_dir / "bool2.imp",
            "--plus", data_dir / "bool2_plus.mf",
            "--minus", data_dir / "bool2_minus.mf",
        )
        assert code == 0
        assert out.strip() == "dual"

    def test_dual_check_negative(self, capsys, data_dir, tmp_path):
        smaller = tmp_path / "plus.mf"
        smaller.write_text("elements: 1 2\n1\n")
        code, out, _ = run(
            capsys,
            "dual-check",
            data_dir / "bool2.imp",
            "--plus", smaller,
            "--minus", data_dir / "bool2_minus.mf",
        )
        assert code == 0
        assert out.strip() == "not dual"

    def test_reduce_writes_files(self, capsys, data_dir, tmp_path):
        out_base = tmp_path / "omega.imp"
        out_meets = tmp_path / "omega.mf"
        code, out, _ = run(
            capsys,
            "reduce",
            data_dir / "bool2.imp",
            "--plus", data_dir / "bool2_plus.mf",
            "--minus", data_dir / "bool2_minus.mf",
            "--out-base", out_base,
            "--out-meets", out_meets,
        )
        assert code == 0
        assert out_base.read_text() == "elements: 1 2 z\n1 2 -> z\n"
        lines = out_meets.read_text().splitlines()
        assert lines[0] == "elements: 1 2 z"
        assert sorted(lines[1:]) == ["1", "1 z", "2", "2 z"]

    def test_unclosed_antichain_exits_1(self, capsys, data_dir, tmp_path):
        bad = tmp_path / "plus.mf"
        bad.write_text("elements: 1 2\n1\n1 2\n")  # comparable members
        code, _, err = run(
            capsys,
            "dual-check",
            data_dir / "bool2.imp",
            "--plus", bad,
            "--minus", data_dir / "bool2_minus.mf",
        )
        assert code == 1


class TestRoundtripCommand:
    def test_layered_ok(self, capsys, data_dir):
        code, out, _ = run(capsys, "roundtrip", data_dir / "layered.imp")
        assert code == 0
        assert "roundtrip ok" in out

    def test_chain_ok(self, capsys, data_dir):
        code, out, _ = run(capsys, "roundtrip", data_dir / "chain.imp")
        assert code == 0

    def test_unranked_exits_2(self, capsys, data_dir):
        code, _, err = run(capsys, "roundtrip", data_dir / "crossed.imp")
        assert code == 2

    def test_generated_corpus_roundtrips(self, capsys, tmp_path):
        import random

        from geodual.formats import write_imp
        from geodual.oracle import random_ranked_base

        rng = random.Random(2718)
        for i in range(10):
            base = random_ranked_base(rng, max_elements=9, max_implications=14)
            path = tmp_path / f"gen{i}.imp"
            write_imp(base, path)
            code, out, _ = run(capsys, "roundtrip", path)
            assert code == 0, out


class TestOracleCommands:
    def test_closed_sets(self, capsys, data_dir):
        code, out, _ = run(capsys, "oracle", "closed-sets", data_dir / "chain.imp")
        assert code == 0
        assert out.splitlines() == [".", "2", "1 2"]

    def test_meets(self, capsys, data_dir):
        code, out, _ = run(capsys, "oracle", "meets", data_dir / "chain.imp")
        assert out.splitlines() == [".", "2"]

    def test_joins(self, capsys, data_dir):
        code, out, _ = run(capsys, "oracle", "joins", data_dir / "chain.imp")
        assert out.splitlines() == ["2", "1 2"]

    def test_mingens(self, capsys, data_dir):
        code, out, _ = run(
            capsys, "oracle", "mingens", data_dir / "layered.imp", "--target", "j"
        )
        assert sorted(out.splitlines()) == ["1 2 3", "1 2 5", "3 4", "4 5"]

    def test_mingens_requires_target(self, capsys, data_dir):
        code, _, err = run(capsys, "oracle", "mingens", data_dir / "layered.imp")
        assert code == 1

    def test_transversals(self, capsys, data_dir):
        code, out, _ = run(capsys, "oracle", "transversals", data_dir / "layered_j.hg")
        assert sorted(out.splitlines()) == ["1 2 3", "1 2 5", "3 4", "4 5"]

    def test_partition(self, capsys, data_dir):
        code, out, _ = run(capsys, "oracle", "partition", data_dir / "layered.mf")
        assert code == 0
        assert "j: 1 2 4" in out.splitlines()

    def test_generators_emit_parseable_output(self, capsys):
        from geodual.formats import parse_hg, parse_imp
        from geodual.ranking import RankFunction, compute_rank

        code, out, _ = run(capsys, "oracle", "gen-ranked", "--seed", "5")
        base = parse_imp(out)
        assert isinstance(compute_rank(base), RankFunction)
        code, out, _ = run(capsys, "oracle", "gen-acyclic", "--seed", "5")
        parse_imp(out)
        code, out, _ = run(capsys, "oracle", "gen-hypergraph", "--seed", "5")
        parse_hg(out)

    def test_missing_file_reported(self, capsys):
        code, _, err = run(capsys, "oracle", "closed-sets")
        assert code == 1


class TestDeterminism:
    COMMANDS = [
        ("ccm", "layered.imp"),
        ("ccm", "layered.imp", "--by-element"),
        ("ccm", "layered.imp", "--json"),
        ("sid", "layered.mf"),
        ("critical-base", "crossed.imp"),
        ("critical-base", "uneven.imp"),
        ("rank-check", "layered.imp"),
        ("rank-check", "crossed.imp"),
        ("oracle", "closed-sets", "crossed.imp"),
        ("oracle", "meets", "layered.imp"),
        ("oracle", "mingens", "layered.imp", "--target", "j"),
        ("oracle", "transversals", "layered_j.hg"),
        ("oracle", "gen-ranked", "--seed", "11"),
        ("oracle", "gen-acyclic", "--seed", "11"),
    ]

    def test_byte_identical_reruns(self, capsys, data_dir):
        def run_all():
            chunks = []
            for cmd in self.COMMANDS:
                argv = [
                    str(data_dir / part) if str(part).endswith((".imp", ".mf", ".hg")) else part
                    for part in cmd
                ]
                main([str(a) for a in argv])
                chunks.append(capsys.readouterr().out)
            return "".join(chunks).encode()

        assert run_all() == run_all()
