import pytest

from rookideal import (
    GF2,
    DEFAULT_FIELD,
    Board,
    Monomial,
    MonomialIdeal,
    VariableSet,
    betti_table,
    betti_table_hochster,
    betti_table_koszul,
    board_symmetries,
    colon_sequence_reg_bound,
    facet_ideal,
    fixture_ideal,
    hilbert_series,
    invariant_report,
    min_gens,
    private_variable_reg,
    stanley_reisner_ideal,
    sum_formula_predict,
    terai_check,
)

import oracles

V2 = VariableSet.generic(2)
EDGE = min_gens([Monomial(V2, (1, 1))], V2)


class TestKoszulRoute:
    def test_principal_ideal(self):
        table = betti_table_koszul(EDGE)
        assert table.entries == {(0, 2): 1}
        assert table.reg() == 2 and table.pd() == 0

    def test_two_by_two_matches_taylor_oracle(self):
        ideal = facet_ideal(Board(2, 2))
        assert betti_table_koszul(ideal).entries == oracles.taylor_two_generators(ideal)

    def test_generator_row_counts_degrees(self):
        ideal = facet_ideal(Board(2, 3)) ** 2
        table = betti_table_koszul(ideal)
        by_degree = {}
        for g in ideal.gens:
            by_degree[g.degree] = by_degree.get(g.degree, 0) + 1
        assert {j: b for (i, j), b in table.entries.items() if i == 0} == by_degree

    def test_square_power_regularity(self):
        quotient = betti_table_koszul(facet_ideal(Board(2, 2)) ** 2).quotient()
        assert quotient.reg() == 4

    def test_rejects_degenerate(self):
        with pytest.raises(ValueError):
            betti_table_koszul(MonomialIdeal.zero(V2))
        with pytest.raises(ValueError):
            betti_table_koszul(MonomialIdeal.unit_ideal(V2))


class TestHochsterRoute:
    def test_edge(self):
        assert betti_table_hochster(EDGE).entries == {(0, 2): 1}

    def test_two_by_three_board(self):
        quotient = betti_table_hochster(facet_ideal(Board(2, 3))).quotient()
        assert quotient.reg() == 2
        assert quotient.pd() == 4
        assert quotient.depth() == 2

    def test_three_by_three_board(self):
        quotient = betti_table_hochster(facet_ideal(Board(3, 3))).quotient()
        assert quotient.reg() == 4

    def test_rejects_non_squarefree(self):
        with pytest.raises(ValueError):
            betti_table_hochster(facet_ideal(Board(2, 2)) ** 2)

    def test_matches_full_subset_oracle(self):
        for ideal in (
            facet_ideal(Board(2, 2)),
            fixture_ideal("L_six"),
            stanley_reisner_ideal(Board(2, 2)),
        ):
            expected = oracles.full_subset_hochster(ideal, DEFAULT_FIELD)
            assert betti_table_hochster(ideal).entries == expected

    def test_symmetry_orbits_change_nothing(self):
        for m, n in [(2, 3), (3, 3)]:
            board = Board(m, n)
            ideal = facet_ideal(board)
            plain = betti_table_hochster(ideal)
            from rookideal.betti import clear_table_cache

            clear_table_cache()
            orbit = betti_table_hochster(ideal, symmetries=board_symmetries(board))
            assert plain.entries == orbit.entries

    def test_threads_change_nothing(self):
        from rookideal.betti import clear_table_cache

        ideal = facet_ideal(Board(2, 4))
        plain = betti_table_hochster(ideal)
        clear_table_cache()
        threaded = betti_table_hochster(ideal, threads=2)
        assert plain.entries == threaded.entries

    def test_threads_and_symmetries_together(self):
        from rookideal.betti import clear_table_cache

        board = Board(3, 4)
        ideal = facet_ideal(board)
        plain = betti_table_hochster(ideal)
        clear_table_cache()
        combined = betti_table_hochster(
            ideal, symmetries=board_symmetries(board), threads=2
        )
        assert plain.entries == combined.entries


class TestTableViews:
    def test_quotient_shift(self):
        ideal = facet_ideal(Board(2, 3))
        table = betti_table(ideal)
        quotient = table.quotient()
        assert quotient.beta(0, 0) == 1
        for (i, j), b in table.entries.items():
            assert quotient.beta(i + 1, j) == b
        assert quotient.reg() == table.reg() - 1
        assert quotient.pd() == table.pd() + 1

    def test_json_shape(self):
        payload = betti_table(EDGE).to_json_dict()
        assert payload == {
            "subject": "ideal",
            "field": 32003,
            "ambient": 2,
            "entries": [[0, 2, 1]],
            "reg": 2,
            "pd": 0,
        }

    def test_text_triangle(self):
        text = betti_table(facet_ideal(Board(2, 2))).to_text()
        lines = text.splitlines()
        assert lines[0].split() == ["0", "1"]
        assert lines[1].split() == ["total:", "2", "1"]


class TestInvariantReport:
    def test_row_board_power(self):
        ideal = facet_ideal(Board(1, 3)) ** 2
        report = invariant_report(ideal)
        assert report.reg == 1 and report.depth == 0

    def test_three_by_three(self):
        report = invariant_report(facet_ideal(Board(3, 3)))
        assert (report.reg, report.pd, report.depth) == (4, 5, 4)
        assert (report.dim, report.height, report.bight) == (6, 3, 4)
        assert report.a_invariant == 0

    def test_fixture_regularity(self):
        assert betti_table(fixture_ideal("L_six")).reg() == 3

    def test_extra_ambient_raises_depth_and_dim(self):
        base = invariant_report(EDGE)
        extended = invariant_report(EDGE, ambient_count=4)
        assert extended.depth == base.depth + 2
        assert extended.dim == base.dim + 2
        assert (extended.reg, extended.pd) == (base.reg, base.pd)

    def test_ambient_below_support_rejected(self):
        with pytest.raises(ValueError):
            invariant_report(facet_ideal(Board(2, 2)), ambient_count=3)

    def test_cross_check_flags_nothing_on_small_boards(self):
        report = invariant_report(facet_ideal(Board(2, 3)), cross_check=True)
        assert report.torsion_warning is False

    def test_cross_check_flags_characteristic_dependence(self):
        # non-face ideal of a 6-vertex projective-plane triangulation: the
        # classic example whose resolution grows one step longer mod 2
        from rookideal import SimplicialComplex, sr_ideal_of_complex

        facets = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [1, 3, 4], [1, 3, 5], [2, 3, 5], [2, 4, 5],
        ]
        cx = SimplicialComplex.from_facets(VariableSet.generic(6), facets)
        ideal = sr_ideal_of_complex(cx)
        report = invariant_report(ideal, cross_check=True)
        assert report.torsion_warning is True
        assert betti_table(ideal, DEFAULT_FIELD).pd() == 2
        assert betti_table(ideal, GF2).pd() == 3

    def test_power_report_uses_radical_primes(self):
        report = invariant_report(facet_ideal(Board(2, 3)) ** 2)
        assert (report.height, report.dim, report.bight) == (3, 3, 4)


class TestHilbert:
    def test_edge_series(self):
        series = hilbert_series(EDGE)
        assert series.numerator == (1, 1)
        assert series.denominator_power == 1
        assert series.a_invariant == 0

    def test_two_by_two(self):
        series = hilbert_series(facet_ideal(Board(2, 2)))
        assert series.numerator == (1, 2, 1)
        assert series.denominator_power == 2
        assert series.a_invariant == 0

    def test_three_by_three(self):
        assert hilbert_series(facet_ideal(Board(3, 3))).a_invariant == 0

    def test_maximal_ideal(self):
        ideal = facet_ideal(Board(1, 3))
        series = hilbert_series(ideal)
        assert series.numerator == (1,) and series.denominator_power == 0

    def test_zero_ideal_full_ring(self):
        series = hilbert_series(MonomialIdeal.zero(V2))
        assert series.numerator == (1,) and series.denominator_power == 2
        assert series.a_invariant == -2

    def test_rejects_non_squarefree(self):
        with pytest.raises(ValueError):
            hilbert_series(facet_ideal(Board(2, 2)) ** 2)


class TestTerai:
    def test_edge(self):
        assert terai_check(EDGE)

    def test_two_by_two(self):
        assert terai_check(facet_ideal(Board(2, 2)))

    def test_three_by_three(self):
        ideal = facet_ideal(Board(3, 3))
        assert terai_check(ideal, symmetries=board_symmetries(Board(3, 3)))
        assert betti_table_koszul(ideal.alexander_dual()).reg() == 5


class TestPrivateVariableReg:
    def test_disjoint_edges(self):
        ideal = min_gens(
            [
                Monomial(VariableSet.generic(4), (1, 1, 0, 0)),
                Monomial(VariableSet.generic(4), (0, 0, 1, 1)),
            ],
            VariableSet.generic(4),
        )
        assert private_variable_reg(ideal) == 3
        assert betti_table(ideal).reg() == 3

    def test_board_has_no_private_variables(self):
        assert private_variable_reg(facet_ideal(Board(2, 3))) is None

    def test_tail_ideal_from_three_row_argument(self):
        # two nested window products over a 2x4 block: reg = 2n - 3 at n = 4
        n = 4
        vs = Board(2, n).vars
        row1 = Monomial.from_support(vs, range(n))
        mixed = Monomial.from_support(
            vs, [k for k in range(2, n)] + [n + k for k in range(2, n)]
        )
        ideal = min_gens([row1, mixed], vs)
        assert private_variable_reg(ideal) == 2 * n - 3
        assert betti_table(ideal).reg() == 2 * n - 3


class TestColonSequence:
    def test_peel_two_disjoint_edges(self):
        vs = VariableSet.generic(4)
        ideal = min_gens(
            [Monomial(vs, (1, 1, 0, 0)), Monomial(vs, (0, 0, 1, 1))], vs
        )
        bound, trace = colon_sequence_reg_bound(ideal, list(ideal.gens), "peel")
        assert bound == 3 == betti_table(ideal).reg()
        assert len(trace) == 3

    def test_add_empty_order_degenerates(self):
        ideal = facet_ideal(Board(2, 2))
        bound, trace = colon_sequence_reg_bound(ideal, [], "add")
        assert bound == betti_table(ideal).reg()
        assert len(trace) == 1

    def test_three_row_replay(self):
        board = Board(3, 3)
        two_row = facet_ideal(Board(2, 3))
        lifted = [Monomial(board.vars, g.exponents + (0,) * 3) for g in two_row.gens]
        bound, trace = colon_sequence_reg_bound(facet_ideal(board), lifted, "add")
        steps = [s for s in trace if not s.note]
        assert all(s.colon_reg <= 3 for s in steps)
        assert bound <= 5
        assert betti_table(facet_ideal(board)).reg() <= bound

    def test_peel_requires_exact_generators(self):
        ideal = facet_ideal(Board(2, 2))
        with pytest.raises(ValueError):
            colon_sequence_reg_bound(ideal, [ideal.gens[0]], "peel")

    def test_bound_dominates_reg_on_random_orders(self):
        ideal = facet_ideal(Board(2, 3))
        true_reg = betti_table(ideal).reg()
        bound, _ = colon_sequence_reg_bound(ideal, list(ideal.gens), "peel")
        assert bound >= true_reg


class TestSumFormula:
    @staticmethod
    def principal_powers(t):
        # quotient of a degree-2 principal ideal power: reg 2k - 1, depth 1
        return [(2 * k - 1, 1) for k in range(1, t + 1)]

    def test_square_board_power_two(self):
        predicted = sum_formula_predict(self.principal_powers(2), self.principal_powers(2), 2)
        assert predicted == (4, 2)
        report = invariant_report(facet_ideal(Board(2, 2)) ** 2)
        assert predicted == (report.reg, report.depth)

    def test_t_one_reduces_to_sum_law(self):
        assert sum_formula_predict([(1, 1)], [(1, 1)], 1) == (2, 2)

    def test_depth_prediction_constant(self):
        for t in (1, 2, 3):
            predicted = sum_formula_predict(
                self.principal_powers(t), self.principal_powers(t), t
            )
            assert predicted[1] == 2

    def test_incomplete_tables_rejected(self):
        with pytest.raises(ValueError):
            sum_formula_predict([(1, 1)], [(1, 1)], 2)
