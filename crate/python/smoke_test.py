#!/usr/bin/env python3
"""Smoke test for the racah_py extension module.

Builds nothing itself: it locates the compiled cdylib under target/
(release preferred), copies it next to a temp dir as racah_py.so and
imports it. Run after either of:

    cargo build --release -p racah-py
    cargo build -p racah-py
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "release" / "libracah_py.so",
        ROOT / "target" / "debug" / "libracah_py.so",
        ROOT / "target" / "release" / "racah_py.dll",
        ROOT / "target" / "debug" / "racah_py.dll",
        ROOT / "target" / "release" / "libracah_py.dylib",
        ROOT / "target" / "debug" / "libracah_py.dylib",
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("no compiled racah_py found; run `cargo build -p racah-py` first")
    staging = pathlib.Path(tempfile.mkdtemp(prefix="racah_py_"))
    suffix = ".pyd" if built.suffix == ".dll" else ".so"
    shutil.copy2(built, staging / f"racah_py{suffix}")
    sys.path.insert(0, str(staging))
    import racah_py

    return racah_py


def main():
    r = load_module()
    checks = 0

    def check(condition, label):
        nonlocal checks
        assert condition, f"FAILED: {label}"
        checks += 1
        print(f"ok: {label}")

    # tensor layer
    c1 = r.casimir(1, 3)
    check(c1.is_central(), "Casimir element is central")
    t12 = r.polarized_trace([1, 2], 2)
    check(t12.is_central(), "polarized trace T^(1,2) is central")
    c12 = r.intermediate_casimir(1, 2, 2)
    decomposition = (c12 - r.casimir(1, 2)) - r.casimir(2, 2)
    check(decomposition == t12, "C_12 - C_1 - C_2 == T^(1,2)")
    check(r.adjoint_action("e12", c1).is_zero(), "adjoint action kills the Casimir")
    t123 = r.polarized_trace([1, 2, 3], 3)
    t213 = r.polarized_trace([2, 1, 3], 3)
    check((t123 + t213).is_zero(), "T^(1,2,3) is antisymmetric")

    # symbolic layer and the defining relations
    p12 = r.RacahExpr.p(3, 1, 2)
    p23 = r.RacahExpr.p(3, 2, 3)
    f123 = r.RacahExpr.f(3, 1, 2, 3)
    lhs = p12.commutator(p23) - (f123 + f123)
    check(lhs.eval_in_tensor(3).is_zero(), "[P_12, P_23] = 2 F_123 in the image")
    check(
        r.build_w(3, 1, 2, 3).eval_in_tensor(3).is_zero(),
        "w_123 evaluates to zero",
    )
    report = r.verify_relation("srn8_x", [1, 2, 3, 4], 4)
    check(report["residual_zero"], "x_1234 evaluates to zero")
    suite = r.relation_suite(3)
    check(all(rep["residual_zero"] for rep in suite), f"n=3 suite ({len(suite)} instances)")

    # series layer
    check(r.catalan(3) == 5, "catalan(3) == 5")
    check(r.riordan(4) == 3, "riordan(4) == 3")
    check(r.p_poly(2) == [1, 0, 1, 4, 1, 0, 1], "numerator at n=4")
    check(
        r.closed_form_series(4, 5) == [1, 0, 10, 4, 55, 36],
        "series coefficients at n=4",
    )
    check(
        r.closed_form_series(5, 12)
        == r.constant_term_series(5, 12)
        == r.tilde_formula_series(5, 12),
        "three series routes agree at n=5",
    )
    check(r.check_palindrome(6), "numerator palindromy at r=6")
    check(r.check_riordan_expansion(5), "Riordan expansion at r=5")
    check(r.check_gould_identity(3, 2, 2, 3), "Gould identity instance")
    check(r.multigraded_specialization_matches(3, 6), "multigraded specialization")

    # pbw layer
    check(r.pbw_verify_counts(4, 6), "basis counts match series at n=4")
    cert = r.pbw_independence_rank(4, 5)
    check(
        cert["pass"] and cert["rank"] == 36,
        "36 independent basis monomials at n=4, degree 5",
    )

    print(f"\nall {checks} smoke checks passed")


if __name__ == "__main__":
    main()
