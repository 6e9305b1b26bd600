import json

import pytest

from src.config import Settings, settings
from src.main import EXIT_OK, EXIT_USAGE, CliConfig, OutputFormat, build_parser, main, parse_config
from src.verification import read_report


class TestParsing:
    def test_defaults(self):
        config = CliConfig(command="verify")
        assert config.p == 17
        assert config.qs == [3, 5, 7, 9, 17, 25]

    def test_even_q_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["theorem", "--q", "4"])
        assert excinfo.value.code == EXIT_USAGE
        assert "q must be odd" in capsys.readouterr().err

    def test_even_prime_is_a_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--prime", "2"])
        assert excinfo.value.code == EXIT_USAGE

    @pytest.mark.parametrize("argv", [
        ["--quiet", "--format", "json", "theorem", "--q", "5"],
        ["theorem", "--q", "5", "--quiet", "--format", "json"],
        ["--format", "json", "theorem", "--quiet", "--q", "5"],
    ])
    def test_output_flags_on_either_side_of_the_command(self, argv):
        config = parse_config(build_parser(), argv)
        assert config.format == OutputFormat.JSON
        assert config.verbosity == -1
        assert config.q == 5

    def test_output_flag_defaults(self):
        config = parse_config(build_parser(), ["survey"])
        assert config.format == OutputFormat.PLAIN
        assert config.verbosity == 0

    def test_missing_command(self):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == EXIT_USAGE


class TestCommands:
    def test_info(self, capsys):
        assert main(["--quiet", "info"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "126 roots, 63 positive" in out
        assert "Z/2" in out
        for dim in ("69", "79", "63"):
            assert dim in out

    @pytest.mark.parametrize("q, structure", [(17, "C.Sym3"), (7, "C.Sym3"), (5, "C.3"), (3, "C.3")])
    def test_theorem(self, capsys, q, structure):
        assert main(["--quiet", "theorem", "--q", str(q)]) == EXIT_OK
        assert capsys.readouterr().out.startswith(structure + " ")

    def test_logs_stay_off_stdout(self, capsys):
        assert main(["theorem", "--q", "7", "--verbose", "--format", "json"]) == EXIT_OK
        captured = capsys.readouterr()
        assert json.loads(captured.out)["outer_part"] == "Sym3"
        assert "Dispatching theorem" in captured.err

    def test_theorem_json(self, capsys):
        assert main(["--quiet", "--format", "json", "theorem", "--q", "3"]) == EXIT_OK
        decision = json.loads(capsys.readouterr().out)
        assert decision["outer_part"] == "3"
        assert decision["agrees"] is True

    def test_sweep(self, capsys, monkeypatch):
        monkeypatch.setattr(settings, "theorem_sweep_limit", 50)
        assert main(["--quiet", "theorem", "--sweep"]) == EXIT_OK
        assert "C.Sym3" in capsys.readouterr().out

    def test_h1(self, capsys):
        assert main(["--quiet", "h1"]) == EXIT_OK
        out = capsys.readouterr().out
        for descriptor in ("(2^2 x Inndiag(D4(q))).Sym3", "(2 x 2D4(q).2).2", "(2^2 x Inndiag(D4(q))).2",
                           "3D4(q).3", "(2D4(q).2).4"):
            assert descriptor in out

    def test_census(self, capsys):
        assert main(["--quiet", "census"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "total: 127" in out
        for dim in ("63", "69", "79"):
            assert dim in out

    def test_survey(self, capsys):
        assert main(["--quiet", "survey"]) == EXIT_OK
        assert "contradiction reproduced: True" in capsys.readouterr().out

    @pytest.mark.slow
    def test_verify_writes_json(self, tmp_path, monkeypatch):
        monkeypatch.setattr(settings, "jacobi_samples", 50)
        monkeypatch.setattr(settings, "h_agreement_samples", 10)
        monkeypatch.setattr(settings, "commutator_samples", 20)
        target = tmp_path / "report.json"
        assert main(["--quiet", "verify", "--prime", "17", "--q", "3", "5", "--json", str(target)]) == EXIT_OK
        report = read_report(str(target))
        assert report.engine.p == 17
        assert report.all_passed


class TestSettings:
    def test_prefixed_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("CHEVKIT_DEFAULT_PRIME", "41")
        monkeypatch.setenv("chevkit_theorem_sweep_limit", "64")
        loaded = Settings()
        assert loaded.default_prime == 41
        assert loaded.theorem_sweep_limit == 64

    def test_reserved_seed_is_ignored(self, monkeypatch):
        monkeypatch.setenv("CHEVKIT_SEED", "7")
        loaded = Settings()
        assert loaded.sample_seed == 20240917
        assert not hasattr(loaded, "seed")
