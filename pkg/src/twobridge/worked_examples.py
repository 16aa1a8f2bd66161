"""End-to-end worked examples, driven through the command line.

Each check runs one or more ``twobridge`` commands and compares the output
with a hand-derived number. Checked values:

    K(27,10)  seminorm 2|p| + 3|p+4q| + 5|p-6q| + 3|p-12q|
    K(27,10)  six surfaces, slopes 0,0,-4,6,6,12, weights 1,1,3,1,4,3
    K(27,10)  ||1/2|| = 153 and lambda(M_{1/2}) = 70
    K(27,10)  A-hat degrees (78, 13)
    K(15,11)  total weights 0 -> 4, +-8 -> 2, +-14 -> 1 (up to mirror), degrees (30, 7)
    K(11,4)   four surfaces, degrees (30, 5)
    K(5,1), K(7,1)   torus degrees (20, 2) and (42, 3)
    K(3,1)    lambda' = 3, two surfaces, Seifert weight 0, lambda(M_1) = 2
    K(3,1)    12/1 rejected by the Alexander condition, 5/1 accepted
    lambda(M_{1/0}) = 0 for a sweep of knots
    excluded slopes of J(2,-2), J(4,-2), J(4,2), J(4,4), J(3,-4)
    figure-eight at 4/1 is a strict boundary slope (exit 3)

Run with ``twobridge worked-examples`` or ``python -m twobridge.worked_examples``.
"""
from __future__ import annotations

import contextlib
import io
import json
import subprocess
import sys
from fractions import Fraction
from typing import Callable


class CheckFailed(Exception):
    pass


def _run_inprocess(argv: list[str]) -> tuple[int, str]:
    from .cli import main

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stderr(err):
        try:
            code = main(argv, out=out)
        except SystemExit as exc:  # argparse usage errors
            code = exc.code if isinstance(exc.code, int) else 1
    return code, out.getvalue()


def _run_subprocess(argv: list[str]) -> tuple[int, str]:
    proc = subprocess.run([sys.executable, "-m", "twobridge", *argv],
                          capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout


class Runner:
    def __init__(self, subprocess_mode: bool = False):
        self.invoke = _run_subprocess if subprocess_mode else _run_inprocess

    def json(self, *argv: str) -> dict:
        code, text = self.invoke([*argv, "--json"])
        if code != 0:
            raise CheckFailed(f"{' '.join(argv)} exited {code}")
        return json.loads(text)

    def code(self, *argv: str) -> int:
        return self.invoke(list(argv))[0]


def _frac(obj) -> Fraction:
    return Fraction(obj["num"], obj["den"])


def _expect(got, want, what: str):
    if got != want:
        raise CheckFailed(f"{what}: got {got!r}, want {want!r}")


def _halved_terms(payload) -> dict[int, Fraction]:
    return {t["slope"]: Fraction(t["doubled_weight"], 2)
            for t in payload["seminorm_terms"] if t["doubled_weight"]}


def check_811_display(r: Runner):
    terms = _halved_terms(r.json("seminorm", "K(27,10)"))
    _expect(terms, {0: 2, -4: 3, 6: 5, 12: 3}, "8_11 seminorm coefficients")


def check_811_surfaces(r: Runner):
    surf = r.json("surfaces", "K(27,10)")["surfaces"]
    pairs = sorted((s["slope"], _frac(s["weight"])) for s in surf)
    want = sorted([(0, 1), (0, 1), (-4, 3), (6, 1), (6, 4), (12, 3)])
    _expect(pairs, want, "8_11 surfaces")


def check_811_values(r: Runner):
    _expect(_frac(r.json("seminorm", "K(27,10)", "1/2")["value"]), 153, "||1/2||")
    _expect(_frac(r.json("casson", "K(27,10)", "1/2")["casson"]["value"]), 70, "lambda(M_1/2)")


def check_811_degrees(r: Runner):
    deg = r.json("info", "K(27,10)")["ahat_degrees"]
    _expect((deg["deg_M"], deg["deg_L"]), (78, 13), "8_11 degrees")


def check_74(r: Runner):
    terms = _halved_terms(r.json("seminorm", "K(15,11)"))
    want = {0: 4, 8: 2, 14: 1}
    if terms != want and terms != {-n: w for n, w in want.items()}:
        raise CheckFailed(f"7_4 totals {terms}")
    deg = r.json("info", "K(15,11)")["ahat_degrees"]
    _expect((deg["deg_M"], deg["deg_L"]), (30, 7), "7_4 degrees")


def check_62(r: Runner):
    _expect(len(r.json("surfaces", "K(11,4)")["surfaces"]), 4, "6_2 surface count")
    deg = r.json("info", "K(11,4)")["ahat_degrees"]
    _expect((deg["deg_M"], deg["deg_L"]), (30, 5), "6_2 degrees")


def check_torus(r: Runner):
    for spec, want in (("K(5,1)", (20, 2)), ("K(7,1)", (42, 3))):
        deg = r.json("info", spec)["ahat_degrees"]
        _expect((deg["deg_M"], deg["deg_L"]), want, f"{spec} degrees")


def check_trefoil_lambda_prime(r: Runner):
    _expect(_frac(r.json("info", "K(3,1)")["lambda_prime"]), 3, "trefoil lambda'")


def check_trefoil_surfaces(r: Runner):
    surf = r.json("surfaces", "K(3,1)")["surfaces"]
    _expect(len(surf), 2, "trefoil surface count")
    seifert = [s for s in surf if s["seifert"]]
    _expect(len(seifert), 1, "trefoil Seifert surfaces")
    _expect(_frac(seifert[0]["weight"]), 0, "trefoil Seifert weight")


def check_trefoil_casson(r: Runner):
    _expect(_frac(r.json("casson", "K(3,1)", "1/1")["casson"]["value"]), 2, "lambda(M_1)")


def check_trefoil_admissibility(r: Runner):
    _expect(r.code("casson", "K(3,1)", "12/1"), 3, "K(3,1) at 12/1 exit code")
    res = r.json("casson", "K(3,1)", "12/1", "--force")["casson"]["admissibility"]
    _expect(res["alexander_ok"], False, "alexander_ok at 12/1")
    _expect(r.code("casson", "K(3,1)", "5/1"), 0, "K(3,1) at 5/1 exit code")


def check_meridian_sweep(r: Runner):
    for spec in ("K(3,1)", "K(5,2)", "K(7,3)", "K(13,5)", "K(27,10)", "K(29,8)", "J(5,-6)"):
        _expect(_frac(r.json("casson", spec, "1/0", "--force")["casson"]["value"]), 0, f"{spec} at 1/0")


def check_exceptional(r: Runner):
    table = {"J(2,-2)": [-4, 4], "J(4,-2)": [4], "J(4,2)": [-4], "J(4,4)": [0], "J(3,-4)": [-8]}
    for spec, want in table.items():
        _expect(sorted(r.json("exceptional", spec)["exceptional_slopes"]), want, f"excluded slopes of {spec}")


def check_figure_eight(r: Runner):
    for slope in ("4/1", "-4/1"):
        _expect(r.code("casson", "J(2,-2)", slope), 3, f"figure-eight at {slope}")


CHECKS: list[tuple[str, Callable[[Runner], None]]] = [
    ("8_11 seminorm coefficients 2,3,5,3 at slopes 0,-4,6,12", check_811_display),
    ("8_11 surfaces and weights", check_811_surfaces),
    ("8_11 ||1/2|| = 153, lambda = 70", check_811_values),
    ("8_11 A-hat degrees (78, 13)", check_811_degrees),
    ("7_4 total weights and degrees (30, 7)", check_74),
    ("6_2 surfaces and degrees (30, 5)", check_62),
    ("torus knots 5_1, 7_1 degrees", check_torus),
    ("trefoil lambda' = 3", check_trefoil_lambda_prime),
    ("trefoil Seifert surface has weight 0", check_trefoil_surfaces),
    ("trefoil lambda(M_1) = 2", check_trefoil_casson),
    ("trefoil 12/1 inadmissible, 5/1 admissible", check_trefoil_admissibility),
    ("lambda(M_1/0) = 0 sweep", check_meridian_sweep),
    ("excluded slope tables", check_exceptional),
    ("figure-eight +-4 is inapplicable", check_figure_eight),
]


def run_worked_examples(out=None, subprocess_mode: bool = False) -> bool:
    """Run every check, print TAP lines, return True iff all pass."""
    out = out or sys.stdout
    runner = Runner(subprocess_mode)
    out.write(f"1..{len(CHECKS)}\n")
    failed = 0
    for i, (name, fn) in enumerate(CHECKS, 1):
        try:
            fn(runner)
        except Exception as exc:  # a crash is a failed check
            failed += 1
            detail = str(exc).replace("\n", " ") or type(exc).__name__
            out.write(f"not ok {i} - {name} # {detail}\n")
        else:
            out.write(f"ok {i} - {name}\n")
    verdict = "PASS" if not failed else "FAIL"
    out.write(f"# {verdict} {len(CHECKS) - failed}/{len(CHECKS)}\n")
    return failed == 0


if __name__ == "__main__":
    sys.exit(0 if run_worked_examples(subprocess_mode="--subprocess" in sys.argv) else 2)
