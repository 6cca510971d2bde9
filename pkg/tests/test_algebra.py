import pytest

from auslander import exactla as la
from auslander.algebra import (
    QuiverPresentation,
    algebra_from_presentation,
    cartan_matrix,
    check_algebra,
    is_semisimple,
    opposite,
    radical,
    radical_power_dims,
)
from auslander.errors import FieldTooSmall, InputError, NotAdmissible
from auslander.exactla import Field
from auslander.modules import end_algebra
from auslander.standard import primitive_idempotents, standard_modules

from conftest import BATTERY_FAMILIES, designated, family

Q = Field("Q")


def loop(relation_power=None, bound=10, field=Q):
    rels = () if relation_power is None else (((1, ("x",) * relation_power),),)
    return QuiverPresentation(field, ("1",), (("x", "1", "1"),), rels, bound)


def semisimple_k2():
    return algebra_from_presentation(QuiverPresentation(Q, ("1", "2"), (), (), 2))


def test_linear_a2_basis(a2):
    a = a2.algebra
    assert a.dim == 3
    assert sorted(a.labels) == ["a1", "e_1", "e_2"]


def test_dual_numbers_basis():
    a = algebra_from_presentation(loop(2))
    assert a.dim == 2
    assert list(a.labels) == ["e_1", "x"]


def test_free_loop_not_admissible():
    with pytest.raises(NotAdmissible):
        algebra_from_presentation(loop(None, bound=10))


def test_bad_presentations():
    with pytest.raises(InputError):
        QuiverPresentation(Q, ("1",), (("x", "1", "2"),), (), 3)
    with pytest.raises(InputError):
        # inhomogeneous relation x^2 - x^3
        QuiverPresentation(Q, ("1",), (("x", "1", "1"),), (((1, ("x", "x")), (-1, ("x", "x", "x"))),), 5)


def test_noncommutative_relation_quotient():
    # two loops x, y with xy = yx and all length-2 monomials in x alone zero
    pres = QuiverPresentation(
        Q,
        ("1",),
        (("x", "1", "1"), ("y", "1", "1")),
        (((1, ("x", "y")), (-1, ("y", "x"))), ((1, ("x", "x")),), ((1, ("y", "y")),)),
        5,
    )
    a = algebra_from_presentation(pres)
    # basis e, x, y, xy
    assert a.dim == 4
    check_algebra(a)


def _row_span(rows):
    return la.row_space(rows)[0] if rows.nrows() else rows


def test_radical_examples(a2):
    a = algebra_from_presentation(loop(2))
    j = radical(a)
    assert j.nrows() == 1 and j == a.field.matrix([[0, 1]])
    assert radical(semisimple_k2()).nrows() == 0
    ja = radical(a2.algebra)
    arrow = a2.algebra.labels.index("a1")
    assert ja.nrows() == 1 and ja[0, arrow] == 1 and la.rank(ja) == 1


@pytest.mark.parametrize("kind,n", BATTERY_FAMILIES)
def test_radical_of_path_quotients_is_arrow_ideal(kind, n):
    # oracle: for an admissible quotient the radical is spanned by the paths of positive length
    a = family(kind, n).algebra
    arrows_span = [i for i, (_, _, word) in enumerate(a.paths) if len(word) >= 1]
    j = radical(a)
    assert j.nrows() == len(arrows_span)
    expected = a.field.matrix([[1 if k == i else 0 for k in range(a.dim)] for i in arrows_span]) if arrows_span else j
    assert la.rank(la.vstack(a.field, [j, expected], a.dim)) == len(arrows_span)


def test_trace_radical_needs_large_prime():
    a = algebra_from_presentation(loop(2, field=Field("Fp", 2)))
    with pytest.raises(FieldTooSmall):
        radical(a)


@pytest.mark.parametrize("kind,n", BATTERY_FAMILIES)
def test_radical_nilpotent_and_top_semisimple(kind, n):
    a = family(kind, n).algebra
    dims = radical_power_dims(a)
    assert dims[-1] == 0
    assert all(x > y for x, y in zip(dims, dims[1:]))
    # basic algebras: dim A/J = number of vertices
    assert a.dim - radical(a).nrows() == len(a.idempotents)


def test_semisimple():
    assert is_semisimple(semisimple_k2())
    assert not is_semisimple(algebra_from_presentation(loop(2)))


def test_opposite(a2):
    a = algebra_from_presentation(loop(2))
    assert opposite(a).right_mult == a.right_mult
    a = a2.algebra
    op = opposite(a)
    e1, arrow = a.labels.index("e_1"), a.labels.index("a1")
    assert a.product_coords(e1, arrow) == op.product_coords(arrow, e1)
    assert a.product_coords(arrow, e1) == op.product_coords(e1, arrow)
    assert a.product_coords(e1, arrow) != a.product_coords(arrow, e1)
    assert opposite(op) is a or opposite(op).right_mult == a.right_mult


@pytest.mark.parametrize("kind,n", BATTERY_FAMILIES)
def test_dimension_is_sum_of_corners(kind, n):
    a = family(kind, n).algebra
    assert sum(map(sum, cartan_matrix(a))) == a.dim


def _check_idempotents(a, idem):
    field = a.field
    total = field.zeros(1, a.dim)
    for e in idem:
        assert a.multiply(e, e) == e
        total += e
    for i, e in enumerate(idem):
        for j, f in enumerate(idem):
            if i != j:
                assert la.is_zero_matrix(a.multiply(e, f))
    assert total == a.unit_vector()


def test_primitive_idempotents_examples(a2):
    assert len(primitive_idempotents(a2.algebra)) == 2
    assert len(primitive_idempotents(algebra_from_presentation(loop(2)))) == 1
    gamma = end_algebra(designated(a2, "generator").module).algebra
    idem = primitive_idempotents(gamma)
    assert len(idem) == 3
    _check_idempotents(gamma, idem)


def test_primitive_idempotents_of_non_basic_endomorphism_ring(a2):
    from auslander.modules import direct_sum

    p1 = a2.catalogue[1]
    m, _, _ = direct_sum([p1, p1, a2.catalogue[0]], a2.algebra)
    gamma = end_algebra(m).algebra
    idem = primitive_idempotents(gamma)
    assert len(idem) == 3
    _check_idempotents(gamma, idem)


def test_standard_modules_a2(a2):
    st = standard_modules(a2.algebra)
    assert [s.dim for s in st.simples] == [1, 1]
    assert [p.module.dim for p in st.projectives] == [2, 1]
    assert [q.dim for q in st.injectives] == [1, 2]


def test_standard_modules_dual_numbers():
    st = standard_modules(algebra_from_presentation(loop(2)))
    assert [s.dim for s in st.simples] == [1]
    assert [p.module.dim for p in st.projectives] == [2]
    assert [q.dim for q in st.injectives] == [2]


def test_standard_modules_semisimple():
    st = standard_modules(semisimple_k2())
    assert [s.dim for s in st.simples] == [1, 1]
    assert [p.module.dim for p in st.projectives] == [1, 1]
    assert [q.dim for q in st.injectives] == [1, 1]


@pytest.mark.parametrize("kind,n", BATTERY_FAMILIES)
def test_projectives_fill_the_algebra(kind, n):
    from auslander.homological import top_dimension
    from auslander.modules import hom_dim

    a = family(kind, n).algebra
    st = standard_modules(a)
    # basic: each projective once
    assert sum(p.module.dim for p in st.projectives) == a.dim
    for i, p in enumerate(st.projectives):
        assert top_dimension(p.module) == 1
        tops = [hom_dim(p.module, s) for s in st.simples]
        assert tops == [1 if k == i else 0 for k in range(len(st.simples))]


def test_structure_table_associative_for_end_algebras(rad3):
    gamma = end_algebra(designated(rad3, "lambda_dlambda").module).algebra
    check_algebra(gamma)
