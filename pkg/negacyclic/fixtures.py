try:
    from hypothesis import strategies as st
except ImportError:  # pragma: nocover
    pass
else:
    from .codes import Code, NegacyclicCode
    from .field import FpPoly, PrimeField
    from .ring import ModulusKind, RElem, RPoly

    def fp_polys(field: PrimeField, max_degree: int) -> st.SearchStrategy[FpPoly]:
        return st.lists(st.integers(0, field.p - 1), max_size=max_degree + 1).map(
            field.poly
        )

    def relems(field: PrimeField) -> st.SearchStrategy[RElem]:
        digit = st.integers(0, field.p - 1)
        return st.builds(
            lambda a, b, c, d: RElem(a, b, c, d, field=field),
            digit,
            digit,
            digit,
            digit,
        )

    def rpolys(field: PrimeField, modulus: ModulusKind) -> st.SearchStrategy[RPoly]:
        part = fp_polys(field, modulus.n - 1)
        return st.tuples(part, part, part, part).map(
            lambda parts: RPoly(*parts, modulus=modulus)
        )

    def torsion_rpolys(
        field: PrimeField, modulus: ModulusKind
    ) -> st.SearchStrategy[RPoly]:
        """
        Elements whose parts carry random powers of x + 1, so the codes they
        generate have proper torsion layers.
        """
        g = field.poly((1, 1))
        part = st.builds(
            lambda k, f: g ** k * f,
            st.integers(0, modulus.n),
            fp_polys(field, modulus.n - 1),
        )
        return st.tuples(part, part, part, part).map(
            lambda parts: RPoly(*parts, modulus=modulus)
        )

    def codes(
        field: PrimeField, n: int, max_generators: int = 2
    ) -> st.SearchStrategy[Code]:
        modulus = ModulusKind.negacyclic(n)
        generators = st.lists(
            torsion_rpolys(field, modulus), min_size=1, max_size=max_generators
        )
        return generators.map(
            lambda gens: NegacyclicCode.from_generators(gens, field, n)
        )
