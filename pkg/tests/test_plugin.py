def test_code_context_fixture(testdir):
    testdir.makepyfile(
        """
        import pytest


        def test_plain_fixture(code_context):
            assert code_context.p == 3
            assert code_context.n == 3
            code = code_context.code("0;0;0;x+1")
            assert code.dim == 2
            assert code_context.element("x^3") == code_context.element("-1")
            assert code_context.poly("x^3+1").degree == 3


        @pytest.mark.negacyclic(p=5, n=5, enum_budget=100, seed=7)
        def test_marked_fixture(code_context):
            assert code_context.settings.enum_budget == 100
            assert code_context.settings.seed == 7
            report = code_context.distance(code_context.code("0;0;0;(x+1)^4"))
            assert report.d_oracle == 5
            assert report.d_formula == 5
        """
    )
    result = testdir.runpytest("-p", "negacyclic")
    result.assert_outcomes(passed=2)
