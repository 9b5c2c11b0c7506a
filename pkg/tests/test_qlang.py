import pytest

from qverify.errors import EvaluationError, QLangSyntaxError, QVerifyError, UnknownIdentifierError
from qverify.qlang import ast, evaluate, lower_eta_term, parse, to_text
from qverify.qlang.evaluator import EtaTerm
from qverify.series import EtaQuotient, Monomial
from qverify.verifier.catalog import catalog

EXPRESSIONS = [
    "64 * f2^22 / f1^23",
    "dissect(f2/f1^2, 4, 3)",
    "phi - phi(q^25) - 2*q^1*subst(D,5) - 2*q^4*subst(E,5)",
    "mod(f1^5 - f5, 5)",
    "-f1^2 + 3",
    "f1 - (f2 - f3)",
    "f1/(f2*f3)",
    "(f1 + f2)^-3",
    "-(f1 + q)*-f2",
    "--f1",
    "theta(-q^3, 1)",
    "poch(-1, 2)*poch(q^3, 10)",
    "shiftdiv(q*f1, 1)",
    "negq(phi(-q))",
    "D(q^5)^4*E(q^5)/phi(q^5)",
    "2*p^3 - k",
]


def test_parse_product_quotient():

    tree = parse("64 * f2^22 / f1^23")
    assert tree == ast.Div(
        ast.Mul(ast.IntLiteral(64), ast.PowInt(ast.EtaF(2), 22)),
        ast.PowInt(ast.EtaF(1), 23),
    )


def test_parse_dissect():

    tree = parse("dissect(f2/f1^2, 4, 3)")
    assert tree == ast.Dissect(ast.Div(ast.EtaF(2), ast.PowInt(ast.EtaF(1), 2)), 4, 3)


def test_precedence_and_associativity():

    assert parse("-f1^2") == ast.Neg(ast.PowInt(ast.EtaF(1), 2))
    assert parse("f1 - f2 - f3") == ast.Sub(ast.Sub(ast.EtaF(1), ast.EtaF(2)), ast.EtaF(3))
    assert parse("f1 + f2*f3") == ast.Add(ast.EtaF(1), ast.Mul(ast.EtaF(2), ast.EtaF(3)))
    assert parse("f1**2") == parse("f1 ^ 2")
    assert parse("  f1\n*\tf2 ") == parse("f1*f2")


def test_named_series_sugar():

    assert parse("phi(q^5)") == ast.PhiAt(5)
    assert parse("phi(q)") == ast.PhiAt(1)
    assert parse("D(q^5)") == ast.SubstQ(ast.DSeries(), 5)
    assert parse("E(q)") == ast.ESeries()
    assert parse("phi(-q)") == ast.NegQ(ast.Phi())
    assert parse("q") == ast.QPower(1)
    assert parse("q^0") == ast.QPower(0)


def test_monomial_arguments():

    assert parse("theta(-q, -q^2)") == ast.Theta(Monomial(-1, 1), Monomial(-1, 2))
    assert parse("poch(-1, 1)") == ast.Poch(Monomial(-1, 0), 1)


@pytest.mark.parametrize("text", EXPRESSIONS)
def test_print_parse_round_trip(text):

    tree = parse(text)
    assert parse(to_text(tree)) == tree


def test_catalog_sides_round_trip():

    for record in catalog():
        for side in (record.lhs, record.rhs):
            assert parse(to_text(side)) == side


@pytest.mark.parametrize("text", EXPRESSIONS)
def test_spans_nest(text):

    tree = parse(text)
    size = len(text.encode("utf-8"))
    assert 0 <= tree.span.start <= tree.span.end <= size
    for node in ast.walk(tree):
        for child in ast.children(node):
            assert node.span.contains(child.span)


def test_dangling_operator():

    with pytest.raises(QLangSyntaxError) as info:
        parse("f1^")
    assert info.value.column == 3
    assert info.value.span == ast.SourceSpan(2, 3)
    assert info.value.caret("f1^") == "f1^\n  ^"


@pytest.mark.parametrize(
    "text",
    ["f1^", "f1 +", "(f1", "f1 $ f2", "dissect(f1, 2)", "dissect(f1, 2, 2)", "", "f1 f2", "f1^q", "theta(f1, q)",
     "poch(1, 2)", "phi(f1)", "mod(f1, 0)", "subst(f1, 0)", "2 * )"],
)
def test_syntax_errors_have_spans_inside_the_text(text):

    with pytest.raises(QLangSyntaxError) as info:
        parse(text)
    span = info.value.span
    assert 0 <= span.start <= span.end <= len(text.encode("utf-8"))
    assert info.value.line >= 1 and info.value.column >= 1


@pytest.mark.parametrize("text", ["2*\u0663", "f\u0661", "q^\uff12"])
def test_non_ascii_digits_are_rejected(text):

    with pytest.raises(QLangSyntaxError) as info:
        parse(text)
    assert info.value.line == 1


def test_error_position_on_later_line():

    with pytest.raises(QLangSyntaxError) as info:
        parse("f1 +\n  f2 * ?")
    assert (info.value.line, info.value.column) == (2, 8)


@pytest.mark.parametrize("text", ["g1", "f0", "phi2", "P"])
def test_unknown_identifiers(text):

    with pytest.raises(UnknownIdentifierError):
        parse(text)


def test_evaluate_overpartitions():

    assert evaluate("f2/f1^2", 10).coefficients() == [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232]


def test_evaluate_phi_five_dissection():

    assert evaluate("phi - phi(q^25) - 2*q^1*subst(D,5) - 2*q^4*subst(E,5)", 200).is_zero()
    assert evaluate("phi - phi(q^25) - 2*q*D(q^5) - 2*q^4*E(q^5)", 200).is_zero()


def test_evaluate_modular():

    value = evaluate("mod(f1^5 - f5, 5)", 300, 5)
    assert value.modulus == 5
    assert value.is_zero()


def test_evaluate_quotient_forms_agree():

    assert evaluate("64 * f2^22 / f1^23", 60) == evaluate("64*(f2^22/f1^23)", 60)
    assert evaluate("dissect(f2/f1^2, 8, 7)", 60) == evaluate("64*f2^22/f1^23", 60)


@pytest.mark.parametrize(
    "text",
    ["f2/f1^2", "dissect(f2/f1^2, 5, 0)", "shiftdiv(phi - 1, 1)", "subst(D, 5)*negq(f1)", "p - 2*q*f2^3*f3^3*f12^6/(f1*f4^2*f6^9)"],
)
def test_evaluation_is_truncation_consistent(text):

    low, high = evaluate(text, 20), evaluate(text, 45)
    assert low.coefficients() == high.coefficients()[:21]


def test_evaluation_error_carries_span():

    text = "f1 + shiftdiv(f2, 1)"
    with pytest.raises(EvaluationError) as info:
        evaluate(text, 10)
    assert text.encode("utf-8")[info.value.span.start:info.value.span.end] == b"shiftdiv(f2, 1)"


def test_non_unit_division_is_an_evaluation_error():

    with pytest.raises(EvaluationError, match="not invertible"):
        evaluate("1/(2 + q)", 10)


def test_lower_eta_term():

    term = lower_eta_term(parse("-2*q^3*f1^2/f4"))
    assert term == EtaTerm(-2, 3, EtaQuotient.of({1: 2, 4: -1}))
    assert lower_eta_term(parse("f1 + f2")) is None
    assert lower_eta_term(parse("1/(2*f1)")) is None


def test_negative_modulus_is_a_qverify_error():

    with pytest.raises(QVerifyError):
        evaluate("f1", 5, -1)
