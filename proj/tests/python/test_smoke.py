"""End-to-end checks of the Python bindings against the reference data."""

import os
from pathlib import Path

import pytest

import punnet

DATA_DIR = Path(os.environ["PUNNET_DATA_DIR"])


@pytest.fixture(scope="module")
def corpus():
    lexicon = punnet.Lexicon.load((DATA_DIR / "reference.lex").read_text())
    homonyms = punnet.HomonymBase.load((DATA_DIR / "reference.hom").read_text(), lexicon)
    return lexicon, homonyms


def full_config():
    config = punnet.GenerationConfig()
    config.reconstructed_schemata = True
    return config


def test_lexicon_queries(corpus):
    lexicon, homonyms = corpus
    assert len(lexicon) == 88
    assert len(homonyms) == 14

    entry = lexicon.lookup("jumper_1")
    assert entry.written_form == "jumper"
    assert entry.category == "noun"
    assert entry.relations["specifying_adj"] == ["warm", "woolly"]
    assert lexicon.lookup("ghost_9") is None
    assert "jumper_1" in lexicon
    assert lexicon.relation_values("spring_cabbage", "class") == ["vegetable"]
    assert "spring_cabbage" in lexicon.lexemes_with("class", "vegetable")
    assert lexicon.genuine_noun_phrase("  Spring   Cabbage ")
    assert homonyms.homonyms_of("queue") == [("cue_1", "homophone")]


def test_default_run_sticks_to_core_schemata(corpus):
    lexicon, homonyms = corpus
    jokes = punnet.generate(lexicon, homonyms, punnet.GenerationConfig())
    assert len(jokes) == 7
    assert {joke.provenance.schema for joke in jokes} == {"lotus", "jumper"}


def test_full_run_reproduces_attested_riddles(corpus):
    lexicon, homonyms = corpus
    jokes = punnet.generate(lexicon, homonyms, full_config())
    assert len(jokes) == 20

    pairs = {(joke.question, joke.answer) for joke in jokes}
    assert (
        "What do you get when you cross a sheep and a kangaroo?",
        "A woolly jumper.",
    ) in pairs
    assert ("What kind of line has sixteen balls?", "A pool queue.") in pairs


def test_records_round_trip_and_regenerate(corpus):
    lexicon, homonyms = corpus
    jokes = punnet.generate(lexicon, homonyms, full_config())
    records = punnet.export_records(jokes)
    parsed = punnet.parse_records(records)
    assert len(parsed) == len(jokes)
    assert punnet.export_records(parsed) == records

    first = parsed[0]
    again = punnet.regenerate(first.provenance, lexicon, homonyms)
    assert again.question == first.question
    assert again.answer == first.answer
    assert first.provenance.labels["char_hom"].value


def test_config_parsing_and_weights(corpus):
    lexicon, homonyms = corpus
    config = punnet.parse_config("max = 2\nweight = lotus use_syn 0.0\n")
    assert config.max_jokes == 2
    assert config.weight_for("lotus", "use_syn") == 0.0
    jokes = punnet.generate(lexicon, homonyms, config)
    assert len(jokes) == 2
    assert all(joke.provenance.template_name != "use_syn" for joke in jokes)


def test_parse_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        punnet.Lexicon.load("lexeme = x\ncategory = flower_pot\n")
    with pytest.raises(ValueError):
        punnet.parse_config("max = two\n")
    with pytest.raises(ValueError):
        punnet.parse_records("not json\n")


def test_catalogue_listings():
    names = dict(punnet.schema_names())
    assert names["lotus"] is False
    assert names["queue"] is True
    assert len(names) == 6
    assert "whats_adj_verb" in punnet.template_names()
    assert "role original_np" in punnet.describe_schema("lotus")


def test_export_text_shape(corpus):
    lexicon, homonyms = corpus
    jokes = punnet.generate(lexicon, homonyms, punnet.GenerationConfig())
    text = punnet.export_text(jokes)
    assert text.startswith("Q: ")
    assert text.count("\nA: ") == len(jokes)
