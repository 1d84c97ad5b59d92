"""
Tests for the verification run, the suites, the report and the command line
"""

from pathlib import Path

import pytest

from main import EXIT_USAGE, format_identities, format_manifolds, main
from src.catalog import list_manifolds, resolve, sample_points
from src.exceptions import (
    ConfigurationError,
    DegenerateMetricError,
    SamplingExhaustedError,
    UnknownSuiteError,
)
from src.reporting import ReportRecord, read_report, summarize, write_report
from src.results import CheckContext, CheckResult, CheckStatus
from src.runner import ManifoldRequest, RunConfig, execute, resolve_thread_count
from src.suites import (
    AcmTheoremSuite,
    CoreIdentitiesSuite,
    HermitianTheoremSuite,
    OracleSurveySuite,
    PointContext,
    WeakTheoremSuite,
)

PROJECT_ROOT = Path(__file__).resolve().parent.parent


def _run_config(*names: str, suites: tuple[str, ...] | None = None, points: int = 2) -> RunConfig:
    return RunConfig.from_defaults(
        manifolds=tuple(ManifoldRequest(name) for name in names),
        suites=suites,
        points=points,
        seed=3,
    )


def _point(name: str, index: int = 0, params: dict | None = None) -> PointContext:
    instance = resolve(name, params)
    points = sample_points(instance, index + 1, seed=1)
    return PointContext(instance, points[index], index)


class TestRunConfig:
    """Test run configuration defaults and validation"""

    def test_defaults_come_from_config(self):
        run_config = RunConfig.from_defaults()
        assert "core-identities" in run_config.suites
        assert run_config.points == 25
        assert run_config.tol == pytest.approx(1e-8)
        assert run_config.manifolds[0] == ManifoldRequest("kaehler_flat")

    def test_overrides_skip_none(self):
        run_config = RunConfig.from_defaults(points=4, seed=None)
        assert run_config.points == 4
        assert run_config.seed == 1

    def test_points_must_be_positive(self):
        with pytest.raises(ConfigurationError):
            RunConfig.from_defaults(points=0).validate()

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuiteError) as exc_info:
            RunConfig.from_defaults(suites=("nope",)).validate()
        assert "core-identities" in exc_info.value.get_user_guidance()

    def test_header_describes_the_run(self):
        header = _run_config("polar_plane").header()
        assert header["points"] == 2
        assert header["manifolds"] == [{"name": "polar_plane", "params": {}}]


class TestThreadCount:
    """Test TORSION_LAB_THREADS handling"""

    def test_override_caps_threads(self, monkeypatch):
        monkeypatch.setenv("TORSION_LAB_THREADS", "2")
        assert resolve_thread_count() == 2

    def test_at_least_one_thread(self, monkeypatch):
        monkeypatch.setenv("TORSION_LAB_THREADS", "0")
        assert resolve_thread_count() == 1

    def test_config_maximum(self, monkeypatch):
        monkeypatch.setenv("TORSION_LAB_THREADS", "64")
        assert resolve_thread_count() == 4

    def test_invalid_value(self, monkeypatch):
        monkeypatch.setenv("TORSION_LAB_THREADS", "abc")
        with pytest.raises(ConfigurationError) as exc_info:
            resolve_thread_count()
        assert exc_info.value.config_key == "TORSION_LAB_THREADS"


class TestSuites:
    """Test suite applicability and per-point results"""

    def test_hermitian_suite_skips_weak_structure(self):
        ctx = _point("weak_conformal_f")
        suite = HermitianTheoremSuite()
        assert suite.applicable(ctx) is not None
        assert suite.run_point(ctx) == []

    def test_acm_suite_needs_reeb_data(self):
        suite = AcmTheoremSuite()
        assert suite.applicable(_point("kaehler_flat")) == "no Reeb data"
        assert suite.applicable(_point("acm_product")) is None

    def test_weak_suite_skips_singular_P(self):
        ctx = _point("lorentz_flat", params={"f01": 1.0})
        assert WeakTheoremSuite().applicable(ctx) == "I - f^2 is singular"

    def test_hermitian_suite_results(self):
        """Formula, oracle and metricity agree at a Hermitian point"""
        records = HermitianTheoremSuite().run_point(_point("hermitian_rotated_J", index=1))
        by_id = {r.result.id: r.result for r in records}
        assert by_id["HERMITIAN_VS_ORACLE"].status is CheckStatus.PASS
        assert by_id["METRICITY_FORMULA"].status is CheckStatus.PASS
        special = by_id["SPECIAL_VS_ORACLE"]
        assert special.status is CheckStatus.SKIPPED
        assert special.residual is not None
        assert all(r.suite == "hermitian-theorem" for r in records)
        assert all(r.result.context.manifold == "hermitian_rotated_J" for r in records)

    def test_acm_suite_results(self):
        """The formula is checked through metricity; the oracle distance is only recorded"""
        records = AcmTheoremSuite().run_point(_point("acm_product", index=1))
        by_id = {r.result.id: r.result for r in records}
        for check in (
            "ACM_REEB_PARALLEL",
            "METRICITY_FORMULA",
            "ACM_HORIZONTAL",
            "ACM_XI_TORSION",
            "ACM_XI_NABLA_F",
        ):
            assert by_id[check].status is CheckStatus.PASS, check
        assert by_id["ACM_XI_TORSION"].residual == 0.0
        comparison = by_id["ACM_VS_ORACLE"]
        assert comparison.status is CheckStatus.SKIPPED
        assert comparison.residual is not None
        assert "minimum-norm" in comparison.skip_reason

    def test_acm_suite_on_contact_control(self):
        """A Reeb field that is not parallel skips the theorem's checks"""
        records = AcmTheoremSuite().run_point(_point("contact_R5", index=1))
        by_id = {r.result.id: r.result for r in records}
        for check in (
            "ACM_REEB_PARALLEL",
            "ACM_VS_ORACLE",
            "METRICITY_FORMULA",
            "ACM_XI_TORSION",
            "ACM_XI_NABLA_F",
        ):
            assert by_id[check].status is CheckStatus.SKIPPED, check
        assert "not parallel" in by_id["ACM_REEB_PARALLEL"].skip_reason

    def test_weak_suite_checks_kernel_columns(self):
        records = WeakTheoremSuite().run_point(_point("f_with_kernel", index=1))
        by_id = {r.result.id: r.result for r in records}
        assert by_id["WEAK_SINGULAR_BRANCH"].status is CheckStatus.PASS

    def test_survey_suite(self):
        records = OracleSurveySuite().run_point(_point("hermitian_rotated_J"))
        statuses = {r.result.id: r.result.status for r in records}
        assert statuses == {
            "ORACLE_CONSISTENT": CheckStatus.PASS,
            "ORACLE_UNIQUE": CheckStatus.PASS,
            "SCALE_INVARIANCE": CheckStatus.PASS,
        }

    def test_point_errors_become_skipped_records(self, mocker):
        """An error while visiting a point is reported, not raised"""
        mocker.patch.object(
            CoreIdentitiesSuite, "process", side_effect=DegenerateMetricError(0.0, 1e-12)
        )
        records = CoreIdentitiesSuite().run_point(_point("kaehler_flat"))
        assert len(records) == 1
        result = records[0].result
        assert result.id == "POINT"
        assert result.status is CheckStatus.SKIPPED
        assert "Degenerate metric" in result.skip_reason

    def test_point_context_caches_the_oracle(self):
        ctx = _point("conformal_kaehler")
        assert ctx.oracle is ctx.oracle
        assert ctx.check_context.coords == ctx.point.coords


class TestExecute:
    """Test the run over suites, manifolds and points"""

    def test_kaehler_run_has_no_failures(self, monkeypatch):
        monkeypatch.setenv("TORSION_LAB_THREADS", "2")
        outcome = execute(_run_config("kaehler_flat", points=3))
        assert outcome.records
        assert outcome.failed == 0
        assert outcome.exit_code == 0

    def test_records_are_deterministic(self, monkeypatch):
        """Parallel scheduling does not change the records or their order"""
        monkeypatch.setenv("TORSION_LAB_THREADS", "3")
        first = execute(_run_config("kaehler_flat", "polar_plane", points=3))
        second = execute(_run_config("kaehler_flat", "polar_plane", points=3))
        assert [r.to_dict() for r in first.records] == [r.to_dict() for r in second.records]

    def test_records_follow_request_order(self):
        outcome = execute(
            _run_config("polar_plane", "kaehler_flat", suites=("oracle-survey",), points=2)
        )
        manifolds = [r.result.context.manifold for r in outcome.records]
        assert manifolds.index("kaehler_flat") > manifolds.index("polar_plane")
        assert manifolds[-1] == "kaehler_flat"

    def test_exhausted_sampling_is_reported(self, mocker):
        mocker.patch(
            "src.runner.sample_points",
            side_effect=SamplingExhaustedError("polar_plane", 0, 2, 20),
        )
        outcome = execute(_run_config("polar_plane", suites=("oracle-survey",)))
        assert [r.result.id for r in outcome.records] == ["SAMPLING"]
        assert outcome.records[0].result.status is CheckStatus.SKIPPED

    def test_failures_set_the_exit_code(self, mocker):
        mocker.patch.object(
            OracleSurveySuite,
            "process",
            return_value=[CheckResult.evaluate("BROKEN", 1.0, 1e-8)],
        )
        outcome = execute(_run_config("kaehler_flat", suites=("oracle-survey",)))
        assert outcome.failed == 2
        assert outcome.exit_code == 1


class TestReporting:
    """Test the summary and the JSON-Lines report"""

    @pytest.fixture
    def records(self):
        context = CheckContext("kaehler_flat", {"dim": 4}, 0, (0.1, 0.2, 0.3, 0.4))
        return [
            ReportRecord("core-identities", CheckResult.evaluate("EIN2", 1e-12, 1e-8)),
            ReportRecord("core-identities", CheckResult.evaluate("EIN2", 1e-3, 1e-8)),
            ReportRecord("core-identities", CheckResult.condition("COND_S1", 0.5, 1e-8)),
            ReportRecord(
                "hermitian-theorem",
                CheckResult.skipped("SPECIAL_VS_ORACLE", "not unique", 1e-8).with_context(context),
            ),
        ]

    def test_summary_counts(self, records):
        summaries = {s.identity: s for s in summarize(records)}
        assert list(summaries) == ["COND_S1", "EIN2", "SPECIAL_VS_ORACLE"]
        ein2 = summaries["EIN2"]
        assert (ein2.run, ein2.passed, ein2.failed, ein2.skipped) == (2, 1, 1, 0)
        assert ein2.max_residual == pytest.approx(1e-3)

    def test_inactive_conditions_do_not_raise_the_maximum(self, records):
        """A skipped condition keeps its residual in the report, not in the summary"""
        summary = {s.identity: s for s in summarize(records)}["COND_S1"]
        assert summary.skipped == 1
        assert summary.max_residual is None

    def test_reported_residuals_stay_out_of_the_summary(self):
        records = [
            ReportRecord("weak-theorem", CheckResult.reported("METRICITY_FORMULA", 3.0, 1e-8, "x")),
            ReportRecord("weak-theorem", CheckResult.evaluate("METRICITY_FORMULA", 1e-12, 1e-8)),
        ]
        (summary,) = summarize(records)
        assert (summary.passed, summary.skipped) == (1, 1)
        assert summary.max_residual == pytest.approx(1e-12)
        assert records[0].to_dict()["residual"] == 3.0

    def test_report_round_trip(self, records, tmp_path):
        path = write_report(tmp_path / "nested" / "report.jsonl", records, {"seed": 3})
        header, rows = read_report(path)
        assert header == {"record": "header", "seed": 3}
        assert len(rows) == 4
        assert rows[2]["skip_reason"] == "condition inactive"
        assert rows[2]["residual"] == 0.5
        assert rows[3]["coords"] == [0.1, 0.2, 0.3, 0.4]
        assert rows[3]["params"] == {"dim": 4}
        assert rows[0]["manifold"] is None

    def test_report_without_header(self, tmp_path):
        path = tmp_path / "broken.jsonl"
        path.write_text('{"identity": "EIN2"}\n', encoding="utf-8")
        with pytest.raises(ValueError):
            read_report(path)


class TestMain:
    """Test the command line in process"""

    def test_list_identities(self, capsys):
        assert main(["--list-identities"]) == 0
        out = capsys.readouterr().out
        assert "EIN2" in out
        assert out.strip() == format_identities().strip()

    def test_list_manifolds(self, capsys):
        assert main(["--list-manifolds"]) == 0
        out = capsys.readouterr().out
        assert "lambdas=2/3" in out
        assert out.strip() == format_manifolds().strip()

    def test_run_writes_report(self, cli_test_env, tmp_path):
        report = tmp_path / "report.jsonl"
        argv = ["--manifold", "kaehler_flat", "--points", "3", "--report", str(report)]
        assert main([*argv, "--quiet"]) == 0
        header, rows = read_report(report)
        assert header["points"] == 3
        assert rows
        assert (tmp_path / "logs" / "run.log").exists()

    def test_repeated_runs_give_identical_records(self, cli_test_env, tmp_path):
        """Everything but the header timestamp is reproducible"""
        reports = [tmp_path / "first.jsonl", tmp_path / "second.jsonl"]
        for report in reports:
            argv = ["--manifold", "polar_plane", "--points", "3", "--seed", "5"]
            assert main([*argv, "--report", str(report), "--quiet"]) == 0
        first, second = (p.read_text(encoding="utf-8").splitlines()[1:] for p in reports)
        assert first == second

    @pytest.mark.parametrize(
        "argv",
        [
            ["--manifold", "nope"],
            ["--manifold", "weighted_product:lambdas=-1/2"],
            ["--manifold", "kaehler_flat", "--suite", "nope"],
            ["--manifold", "kaehler_flat", "--points", "0"],
        ],
    )
    def test_usage_errors(self, cli_test_env, argv):
        assert main([*argv, "--no-report", "--quiet"]) == EXIT_USAGE

    def test_no_report(self, cli_test_env, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert main(["--manifold", "polar_plane", "--points", "2", "--no-report", "--quiet"]) == 0
        assert not (tmp_path / "data").exists()


@pytest.mark.integration
class TestCommandLine:
    """Run main.py as a subprocess"""

    def test_list_manifolds(self, cli_test_env):
        import subprocess
        import sys

        result = subprocess.run(
            [sys.executable, "main.py", "--list-manifolds"],
            cwd=PROJECT_ROOT,
            env=cli_test_env,
            capture_output=True,
            text=True,
            timeout=60,
        )
        assert result.returncode == 0
        assert "conformal_kaehler" in result.stdout

    def test_unknown_manifold_exit_code(self, cli_test_env):
        import subprocess
        import sys

        result = subprocess.run(
            [sys.executable, "main.py", "--manifold", "nope", "--no-report"],
            cwd=PROJECT_ROOT,
            env=cli_test_env,
            capture_output=True,
            text=True,
            timeout=60,
        )
        assert result.returncode == 2
        assert "UNKNOWN MANIFOLD" in result.stdout

    def test_single_suite_run(self, cli_test_env, tmp_path):
        import subprocess
        import sys

        report = tmp_path / "report.jsonl"
        result = subprocess.run(
            [
                sys.executable,
                "main.py",
                "--suite",
                "hermitian-theorem",
                "--manifold",
                "hermitian_rotated_J",
                "--points",
                "5",
                "--report",
                str(report),
            ],
            cwd=PROJECT_ROOT,
            env=cli_test_env,
            capture_output=True,
            text=True,
            timeout=300,
        )
        assert result.returncode == 0, result.stdout
        assert "VERIFICATION SUMMARY" in result.stdout
        _, rows = read_report(report)
        assert {row["suite"] for row in rows} == {"hermitian-theorem"}


@pytest.mark.slow
class TestAcceptance:
    """Sweeps over the catalog instances each theorem is stated for"""

    @pytest.mark.parametrize("name", ["hermitian_rotated_J", "conformal_kaehler"])
    def test_hermitian_formula_never_fails(self, name):
        outcome = execute(_run_config(name, suites=("hermitian-theorem",), points=25))
        checked = [
            r.result
            for r in outcome.records
            if r.result.id in ("HERMITIAN_VS_ORACLE", "METRICITY_FORMULA")
        ]
        assert len(checked) == 50
        assert all(result.status is not CheckStatus.FAIL for result in checked)

    def test_unit_weight_product(self):
        """λ = (1, 1) is Hermitian, so every weak-theorem check holds"""
        run_config = RunConfig.from_defaults(
            manifolds=(ManifoldRequest("weighted_product", {"lambdas": (1.0, 1.0)}),),
            suites=("weak-theorem",),
            points=5,
            seed=3,
        )
        outcome = execute(run_config)
        statuses = [(r.result.id, r.result.status) for r in outcome.records]
        assert ("WEIGHTED_FACTOR_VS_ORACLE", CheckStatus.PASS) in statuses
        assert ("WEAK_VS_ORACLE", CheckStatus.PASS) in statuses
        assert outcome.failed == 0

    @pytest.mark.parametrize("name", ["hermitian_rotated_J", "kaehler_flat"])
    def test_delta_chain_on_hermitian_points(self, name):
        outcome = execute(_run_config(name, suites=("delta-chain",), points=5))
        assert outcome.records
        assert outcome.failed == 0

    def test_almost_contact_product(self):
        outcome = execute(_run_config("acm_product", suites=("acm-theorem",), points=5))
        assert outcome.failed == 0
        for check in ("ACM_REEB_PARALLEL", "METRICITY_FORMULA", "ACM_XI_TORSION"):
            statuses = {r.result.status for r in outcome.records if r.result.id == check}
            assert statuses == {CheckStatus.PASS}, check

    def test_singular_branch(self):
        outcome = execute(_run_config("f_with_kernel", suites=("weak-theorem",), points=5))
        branch = [r.result for r in outcome.records if r.result.id == "WEAK_SINGULAR_BRANCH"]
        assert len(branch) == 5
        assert all(result.status is not CheckStatus.FAIL for result in branch)
        assert any(result.status is CheckStatus.PASS for result in branch)

    def test_numerics_hygiene_across_catalog(self):
        """Finite differences and both dF routes agree on every catalog manifold"""
        names = tuple(spec.name for spec in list_manifolds())
        first = execute(_run_config(*names, suites=("core-identities",), points=3))
        second = execute(_run_config(*names, suites=("core-identities",), points=3))
        checked = [
            r.result for r in first.records if r.result.id in ("FD_VALIDATE", "DF_ROUTES")
        ]
        visited = {r.result.context.manifold for r in first.records if r.result.id != "SAMPLING"}
        assert visited
        assert {result.context.manifold for result in checked} == visited
        assert all(result.status is not CheckStatus.FAIL for result in checked)
        assert [r.to_dict() for r in first.records] == [r.to_dict() for r in second.records]
