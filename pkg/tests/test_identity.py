from fractions import Fraction

import pytest

from radreduce.construct import (
    InstanceParams,
    cofactor_poly,
    cofactor_symbolic,
    sqrt_part_poly,
    sqrt_part_symbolic,
    trace_poly,
    trace_poly_symbolic,
)
from radreduce.identity import (
    fundamental_identity_sides,
    verify_all,
    verify_expansion,
    verify_fundamental_identity,
    verify_recurrences,
)
from radreduce.poly import ParamPoly, Poly

F = Fraction


def fpoly(*coeffs):
    return Poly([F(c) for c in coeffs])


class TestExpansion:
    def test_cubic_by_hand(self):
        # (X+1)^3 - 3X(X+1) = X^3 + 1, checked with direct polynomial arithmetic.
        x_plus_1 = fpoly(1, 1)
        lhs = x_plus_1**3 - fpoly(0, 3) * x_plus_1
        assert lhs == fpoly(1, 0, 0, 1)
        assert verify_expansion(3).ok

    def test_quintic_by_hand(self):
        x_plus_1 = fpoly(1, 1)
        lhs = x_plus_1**5 - fpoly(0, 5) * x_plus_1**3 + fpoly(0, 0, 5) * x_plus_1
        assert lhs == fpoly(1, 0, 0, 0, 0, 1)
        assert verify_expansion(5).ok

    @pytest.mark.parametrize("p", list(range(3, 30, 2)) + [199])
    def test_sweep(self, p):
        report = verify_expansion(p)
        assert report.ok, [c for c in report.checks if not c.passed]


class TestFundamentalIdentity:
    @pytest.mark.parametrize("p", range(3, 30, 2))
    def test_symbolic(self, p):
        report = verify_fundamental_identity(p)
        assert report.ok, [c for c in report.checks if not c.passed]

    @pytest.mark.parametrize(
        "p,d,R", [(3, -7, 50), (5, 2, 5), (7, -2158, 4656966), (5, F(1, 2), F(-3, 4))]
    )
    def test_concrete_cross_check(self, p, d, R):
        # Independent route: build f, A, f' with plain rational coefficients
        # and check 4 D^2 R A^2 = f*f' + Z^2 - 4D as concrete polynomials.
        params = InstanceParams.create(p, d, R)
        f = trace_poly(params)
        A = sqrt_part_poly(params)
        fp = cofactor_poly(params)
        lhs = A * A * (4 * params.D**2 * params.R)
        rhs = f * fp + fpoly(-4 * params.D, 0, 1)
        assert lhs == rhs

    def test_substitution_cross_check(self):
        # Substitute the quintic golden parameters into both symbolic sides.
        lhs, rhs = fundamental_identity_sides(5)
        d0, D0 = F(2), F(-1)
        assert lhs.map(lambda c: c.subs(d0, D0)) == rhs.map(lambda c: c.subs(d0, D0))

    def test_left_degree(self):
        lhs, _ = fundamental_identity_sides(9)
        assert lhs.degree == 2 * 9 - 2


class TestRecurrenceReport:
    @pytest.mark.parametrize("p", range(5, 30, 2))
    def test_sweep(self, p):
        report = verify_recurrences(p)
        assert report.ok, [c for c in report.checks if not c.passed]

    def test_requires_p_at_least_5(self):
        with pytest.raises(ValueError):
            verify_recurrences(3)

    def test_check_names(self):
        names = {c.name for c in verify_recurrences(7).checks}
        assert "s-symbolic-extraction" in names
        assert "t-symbolic-extraction" in names


def _perturb(poly: Poly, index: int) -> Poly:
    coeffs = list(poly.coeffs) + [ParamPoly()] * (index + 1 - len(poly.coeffs))
    coeffs[index] = coeffs[index] + ParamPoly.const(1)
    return Poly(coeffs)


class TestMutationDetection:
    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_any_single_coefficient_perturbation_fails(self, p):
        builders = {
            "trace": trace_poly_symbolic(p),
            "sqrt_num": sqrt_part_symbolic(p).numerator,
            "cofactor_num": cofactor_symbolic(p).numerator,
        }
        for which, original in builders.items():
            for index in range(original.degree + 1):
                mutated = _perturb(original, index)
                kwargs = {which: mutated}
                report = verify_fundamental_identity(p, **kwargs)
                failing = [c for c in report.checks if not c.passed]
                assert failing, f"perturbing {which}[{index}] at p={p} went undetected"
                assert any(
                    c.witness and "Z^" in c.witness for c in failing
                ), "failure must name a witness monomial"

    def test_witness_names_the_monomial(self):
        mutated = _perturb(trace_poly_symbolic(3), 2)
        report = verify_fundamental_identity(3, trace=mutated)
        bad = [c for c in report.checks if not c.passed][0]
        assert "Z^" in bad.witness and ("d^" in bad.witness or "D^" in bad.witness)


class TestCombinedReport:
    def test_merges_all_checks(self):
        report = verify_all(7)
        assert report.ok
        names = [c.name for c in report.checks]
        assert "fundamental-identity" in names
        assert "expansion-reconstructs-with-system-coefficients" in names
        assert "s-two-term-recurrence" in names

    def test_small_p_skips_recurrences(self):
        names = [c.name for c in verify_all(3).checks]
        assert "s-two-term-recurrence" not in names

    def test_report_json_shape(self):
        obj = verify_all(5).to_json()
        assert obj["p"] == 5 and obj["ok"] is True
        assert all(set(c) == {"name", "pass", "witness"} for c in obj["checks"])
