import io

from twobridge import casson, cli, golden, seminorm, surfaces
from twobridge.alexander import AlexanderData
from twobridge.exact import IntPoly
from twobridge.worked_examples import CHECKS, run_worked_examples


def run(**kw):
    out = io.StringIO()
    ok = run_worked_examples(out=out, **kw)
    return ok, out.getvalue().splitlines()


def failing(lines):
    return [ln for ln in lines if ln.startswith("not ok")]


def test_full_run_passes():
    ok, lines = run()
    assert ok
    assert len(CHECKS) >= 10
    assert lines[0] == f"1..{len(CHECKS)}" and lines[-1] == f"# PASS {len(CHECKS)}/{len(CHECKS)}"


def test_subprocess_mode():
    ok, lines = run(subprocess_mode=True)
    assert ok, failing(lines)


def test_stubbed_alexander_fails_admissibility(monkeypatch):
    stub = lambda k: AlexanderData(IntPoly.from_coeffs([1]), True)  # noqa: E731
    monkeypatch.setattr(casson, "alexander", stub)
    monkeypatch.setattr(cli, "alexander", stub)
    ok, lines = run()
    assert not ok
    assert any("12/1 inadmissible" in ln for ln in failing(lines))


def test_missing_seifert_correction_fails_weight_check(monkeypatch):
    real = surfaces.all_surfaces

    def uncorrected(k):
        return [surfaces.SurfaceDatum(s.expansion, s.boundary_slope, s.doubled_weight + s.is_seifert, s.is_seifert)
                for s in real(k)]

    for mod in (surfaces, seminorm, casson, cli, golden):
        monkeypatch.setattr(mod, "all_surfaces", uncorrected)
    ok, lines = run()
    assert not ok
    assert any("Seifert surface has weight 0" in ln for ln in failing(lines))
