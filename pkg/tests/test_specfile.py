"""Category file parsing and canonical serialisation."""

from __future__ import annotations

import pytest

from invcat import (
    ParseError,
    UndeclaredName,
    dump_category,
    parse_category,
    validate_category,
)

MINIMAL = """{
  "invcat-spec": 1,
  "objects": ["X"],
  "morphisms": [{"name": "1", "src": "X", "tgt": "X"}],
  "identities": {"X": "1"},
  "composition": [{"left": "1", "right": "1", "result": "1"}]
}"""


def test_roundtrip_is_canonical(t1, z2, g2, i2):
    for ic in (t1, z2, g2, i2):
        text = dump_category(ic.cat, ic.inverse)
        cat, declared = parse_category(text)
        assert cat.objects == ic.cat.objects
        assert cat.morphisms == ic.cat.morphisms
        assert cat.table == ic.cat.table
        assert declared == ic.inverse
        assert dump_category(cat, declared) == text


def test_inverse_field_is_optional():
    cat, declared = parse_category(MINIMAL)
    assert declared is None
    assert validate_category(cat).ok
    assert "inverse" not in dump_category(cat)


def test_syntax_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_category('{"invcat-spec": 1,\n  "objects": [}', "broken.json")
    assert err.value.line == 2
    assert err.value.column is not None
    assert err.value.details["line"] == 2


@pytest.mark.parametrize(
    "mutation, message_part",
    [
        ('{"invcat-spec": 2, "objects": [], "morphisms": [], "identities": {}, "composition": []}', "schema version"),
        ('{"objects": [], "morphisms": [], "identities": {}, "composition": []}', "missing required"),
        ('{"invcat-spec": 1, "objects": [], "morphisms": [], "identities": {}, "composition": [], "extra": 1}', "unknown field"),
        ('[1, 2]', "top level"),
        ('{"invcat-spec": 1, "objects": "X", "morphisms": [], "identities": {}, "composition": []}', "objects must be"),
    ],
)
def test_schema_errors(mutation, message_part):
    with pytest.raises(ParseError) as err:
        parse_category(mutation)
    assert message_part in err.value.message


def test_morphism_entry_errors():
    base = '{"invcat-spec": 1, "objects": ["X"], "morphisms": [%s], "identities": {"X": "1"}, "composition": []}'
    with pytest.raises(ParseError, match="lacks"):
        parse_category(base % '{"name": "1", "src": "X"}')
    with pytest.raises(ParseError, match="unknown field"):
        parse_category(base % '{"name": "1", "src": "X", "tgt": "X", "color": "red"}')
    with pytest.raises(ParseError, match="duplicate morphism"):
        parse_category(
            base % '{"name": "1", "src": "X", "tgt": "X"}, {"name": "1", "src": "X", "tgt": "X"}'
        )


def test_composition_entry_errors():
    base = (
        '{"invcat-spec": 1, "objects": ["X"],'
        ' "morphisms": [{"name": "1", "src": "X", "tgt": "X"}],'
        ' "identities": {"X": "1"}, "composition": [%s]}'
    )
    with pytest.raises(ParseError, match="duplicate composition"):
        parse_category(
            base
            % '{"left": "1", "right": "1", "result": "1"}, {"left": "1", "right": "1", "result": "1"}'
        )
    with pytest.raises(UndeclaredName):
        parse_category(base % '{"left": "1", "right": "1", "result": "ghost"}')


def test_undeclared_identity():
    with pytest.raises(UndeclaredName):
        parse_category(
            '{"invcat-spec": 1, "objects": ["X"], "morphisms": [],'
            ' "identities": {"X": "1"}, "composition": []}'
        )
