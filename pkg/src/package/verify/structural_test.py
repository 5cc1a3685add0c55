from package.verify.options import VerifyOptions
from package.verify.structural import interlacing, stieltjes


def test_random_steps_interlace(quick_options: VerifyOptions):
    quick_options.trials = 90

    (report,) = interlacing(quick_options).reports

    assert report.statistic == 0
    assert report.details == {"periodic": 0, "bead": 0, "corners": 0}
    assert report.passed


def test_stieltjes_checks_pass(quick_options: VerifyOptions):
    reports = stieltjes(quick_options).reports

    assert [r.test for r in reports] == [
        "closed-form-vs-partial-sums",
        "derivative-vs-central-differences",
        "translation-invariance",
    ]
    assert all(r.passed for r in reports)
