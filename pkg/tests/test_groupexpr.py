import pytest

from permclass.errors import GroupExprError
from permclass.groupexpr import (
    NamedGroup,
    Product,
    Wreath2,
    evaluate,
    format_expr,
    group_from_text,
    parse,
)


def test_parse_product():
    assert parse("A6 x A6") == Product(NamedGroup("A6"), NamedGroup("A6"))


def test_parse_wreath():
    assert parse("wr2(PGammaL(2,9))") == Wreath2(NamedGroup("PGammaL(2,9)"))


def test_parse_left_associative():
    expr = parse("A5 x A5 x A6")
    assert expr == Product(
        Product(NamedGroup("A5"), NamedGroup("A5")), NamedGroup("A6")
    )


def test_parse_unicode_product():
    assert parse("A6 × A6") == parse("A6 x A6")


def test_parse_whitespace_insensitive():
    assert parse("A6xA6") == parse(" A6   x  A6 ")
    assert parse("wr2( A6 )") == parse("wr2(A6)")


def test_parse_fixed_names():
    for name in ("PSL(2,9)", "PGL(2,9)", "PGammaL(2,9)", "M10", "U4(2)"):
        assert parse(name) == NamedGroup(name)


def test_parse_dangling_operator():
    with pytest.raises(GroupExprError) as err:
        parse("A6 x")
    assert err.value.offset == 5


def test_parse_unknown_name():
    with pytest.raises(GroupExprError):
        parse("Q8")
    with pytest.raises(GroupExprError) as err:
        parse("A6 x Q8")
    assert err.value.offset == 6


def test_parse_unsupported_degree():
    with pytest.raises(GroupExprError):
        parse("A17")
    with pytest.raises(GroupExprError):
        parse("S2")


def test_parse_trailing_junk():
    with pytest.raises(GroupExprError):
        parse("A6)")
    with pytest.raises(GroupExprError):
        parse("wr2(A6")


def test_format_round_trip():
    texts = [
        "A6",
        "A6 x A6",
        "wr2(A6)",
        "wr2(PGammaL(2,9))",
        "A5 x A6 x S4",
        "wr2(A5 x A5)",
        "U4(2) x M10",
    ]
    for text in texts:
        expr = parse(text)
        assert parse(format_expr(expr)) == expr


def test_evaluate_orders():
    assert group_from_text("A5").order.value == 60
    assert group_from_text("A6 x A6").order.value == 129600
    assert group_from_text("M10").order.value == 720
    assert group_from_text("PSL(2,9)").order.value == 360
    assert group_from_text("PGammaL(2,9)").order.value == 1440
    assert group_from_text("U4(2)").order.value == 25920
    assert group_from_text("wr2(A6)").order.value == 259200


def test_evaluate_product_order_multiplies():
    for left, right in (("A5", "S4"), ("A6", "U4(2)")):
        combined = group_from_text(f"{left} x {right}")
        assert (
            combined.order.value
            == group_from_text(left).order.value * group_from_text(right).order.value
        )


def test_evaluate_is_cached():
    assert group_from_text("A6 x A6") is group_from_text("A6  x  A6")
    assert evaluate(parse("M10")) is evaluate(parse("M10"))
