from tempnli.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main


def test_oracle_prints_label(capsys):
    code = main(
        [
            "oracle",
            "--premise", "He left his job at 12 PM.",
            "--hypothesis", "He left his job before 5 PM.",
        ]
    )
    assert code == EXIT_OK
    assert capsys.readouterr().out.strip() == "entailment"


def test_oracle_rejects_unparseable_text(capsys):
    code = main(["oracle", "--premise", "He left.", "--hypothesis", "He left before 5 PM."])
    assert code == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_usage_errors_exit_one(capsys):
    assert main(["generate", "--set", "nope"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE
    assert main(["stats"]) == EXIT_USAGE


def test_generate_stats_verify_cycle(tmp_path, capsys):
    out = tmp_path / "order.tsv"
    code = main(
        [
            "generate", "--set", "temp-order", "--split", "test",
            "--seed", "5", "--iterations", "1", "--out", str(out),
        ]
    )
    assert code == EXIT_OK
    assert out.exists()
    capsys.readouterr()

    assert main(["stats", "--in", str(out)]) == EXIT_OK
    stats_output = capsys.readouterr().out
    assert stats_output.startswith("rows\t")

    assert main(["verify", "--in", str(out)]) == EXIT_OK
    assert "verified" in capsys.readouterr().out


def test_generate_both_splits_writes_directory(tmp_path, capsys):
    out_dir = tmp_path / "sets"
    code = main(
        [
            "generate", "--set", "temp-duration", "--split", "both",
            "--seed", "5", "--iterations", "1", "--out", str(out_dir),
            "--format", "jsonl",
        ]
    )
    assert code == EXIT_OK
    assert (out_dir / "temp-duration.train.jsonl").exists()
    assert (out_dir / "temp-duration.test.jsonl").exists()


def test_generate_same_flags_identical_bytes(tmp_path, capsys):
    args = [
        "generate", "--set", "cross-unit", "--split", "test",
        "--seed", "11", "--iterations", "1",
    ]
    first = tmp_path / "one.tsv"
    second = tmp_path / "two.tsv"
    assert main(args + ["--out", str(first)]) == EXIT_OK
    assert main(args + ["--out", str(second), "--workers", "3"]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_verify_detects_corruption(tmp_path, capsys):
    out = tmp_path / "dur.tsv"
    assert (
        main(
            [
                "generate", "--set", "temp-duration", "--split", "test",
                "--seed", "5", "--iterations", "1", "--out", str(out),
            ]
        )
        == EXIT_OK
    )
    text = out.read_text(encoding="utf-8")
    corrupted = text.replace("\tentailment\t", "\tcontradiction\t", 1)
    assert corrupted != text
    out.write_text(corrupted, encoding="utf-8")
    capsys.readouterr()
    assert main(["verify", "--in", str(out)]) == EXIT_VERIFY
    assert "verification failed" in capsys.readouterr().err


def test_missing_input_file_is_io_error(tmp_path, capsys):
    assert main(["stats", "--in", str(tmp_path / "absent.tsv")]) == EXIT_IO
    assert main(["verify", "--in", str(tmp_path / "absent.tsv")]) == EXIT_IO


def test_malformed_dataset_is_io_error(tmp_path, capsys):
    path = tmp_path / "junk.tsv"
    path.write_text("not\ta\tdataset\n", encoding="utf-8")
    assert main(["stats", "--in", str(path)]) == EXIT_IO


def test_custom_templates_flag(tmp_path, capsys):
    templates = tmp_path / "mini.tsv"
    templates.write_text(
        "id\tsplit\toccurrence_units\tduration_units\toccurrence_past\toccurrence_future"
        "\tduration_stem\tduration_alt\n"
        "nap\ttest\thour\t\the took a nap\the will take a nap\t\t\n",
        encoding="utf-8",
    )
    out = tmp_path / "nap.tsv"
    code = main(
        [
            "generate", "--set", "temp-order", "--split", "test", "--seed", "1",
            "--iterations", "1", "--templates", str(templates), "--out", str(out),
        ]
    )
    assert code == EXIT_OK
    rows = out.read_text(encoding="utf-8").splitlines()[1:]
    assert rows
    assert all("\tnap\t" in row for row in rows)
