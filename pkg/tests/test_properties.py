"""Randomized properties tying the printer, parser, validator, and emitted grammar together.

Trees come from helpers.random_conforming_tree, which builds straight from
registry signatures and shares no code with the validator or the printer.
"""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from ludokit.grammar import (
    ParseError,
    builtin_registry,
    emit_grammar,
    parse_text,
    render,
    tokenize,
    validate,
)

REGISTRY = builtin_registry()
RECOGNIZER = helpers.EbnfRecognizer(emit_grammar(REGISTRY))

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def conforming(seed: int):
    return helpers.random_conforming_tree(REGISTRY, random.Random(seed))


@settings(max_examples=100, deadline=None)
@given(seed=seeds)
def test_render_parse_round_trip(seed):
    tree = conforming(seed)
    assert parse_text(render(tree)) == tree


@settings(max_examples=100, deadline=None)
@given(seed=seeds)
def test_conforming_trees_validate(seed):
    assert validate(conforming(seed), REGISTRY) == []


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_recognizer_agrees_on_conforming_trees(seed):
    # the grammar emitter and the validator must accept the same language
    assert RECOGNIZER.accepts(tokenize(render(conforming(seed))))


@settings(max_examples=60, deadline=None)
@given(seed=seeds, mseed=seeds)
def test_unknown_keyword_rejected_everywhere(seed, mseed):
    mutated = helpers.mutate_unknown_keyword(conforming(seed), random.Random(mseed))
    errors = validate(mutated, REGISTRY)
    assert errors
    assert any("zz" in e.message for e in errors)
    assert not RECOGNIZER.accepts(tokenize(render(mutated)))


@settings(max_examples=60, deadline=None)
@given(seed=seeds, wseed=seeds)
def test_whitespace_and_comments_do_not_change_the_parse(seed, wseed):
    tree = conforming(seed)
    rng = random.Random(wseed)
    fillers = (" ", "  ", "\t", "\n", " \n ", " // noise\n")
    text = rng.choice(fillers).join(t.text for t in tokenize(render(tree)))
    assert parse_text(text) == tree


@settings(max_examples=60, deadline=None)
@given(seed=seeds)
def test_tokenizer_is_deterministic_with_increasing_positions(seed):
    text = render(conforming(seed))
    first = tokenize(text)
    assert first == tokenize(text)
    positions = [t.position for t in first]
    assert positions == sorted(set(positions))


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_truncated_text_fails_to_parse(seed):
    # the last token is always the root's closing paren
    text = render(conforming(seed)).rstrip()
    try:
        parse_text(text[:-1])
    except ParseError:
        return
    raise AssertionError("truncated description parsed")


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_trailing_tokens_fail_to_parse(seed):
    text = render(conforming(seed)) + " (stray)"
    try:
        parse_text(text)
    except ParseError as err:
        assert "trailing" in err.message
        return
    raise AssertionError("trailing tokens parsed")
