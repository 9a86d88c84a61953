"""Shared fixtures: quick sentence construction and the worked example."""

from udparse.conllu import Sentence, Token

EXAMPLE_TAGS = ("PRON", "ADV", "VERB", "DET", "ADJ", "NOUN", "ADP", "DET", "NOUN")
EXAMPLE_FORMS = ("They", "also", "had", "a", "special", "connection",
                 "to", "some", "extremists")
EXAMPLE_HEADS = (3, 3, 0, 6, 6, 3, 9, 9, 6)
EXAMPLE_IN_DEGREES = (0, 0, 4, 0, 1, 5, 0, 0, 5)
EXAMPLE_CONTENT_ORDER = (3, 6, 9, 5)
EXAMPLE_FUNCTION_ORDER = (1, 2, 4, 7, 8)


def make_sentence(tags, forms=None, heads=None, meta=None) -> Sentence:
    forms = forms or tuple(f"w{i + 1}" for i in range(len(tags)))
    heads = heads or (None,) * len(tags)
    tokens = tuple(
        Token(index=i + 1, form=forms[i], upos=tags[i], gold_head=heads[i])
        for i in range(len(tags)))
    return Sentence(tokens, meta=dict(meta or {}))


def example_sentence() -> Sentence:
    return make_sentence(EXAMPLE_TAGS, EXAMPLE_FORMS)


def example_conllu(heads=None) -> str:
    """The example sentence as a CoNLL-U block (gold heads optional)."""
    heads = heads or ("_",) * len(EXAMPLE_TAGS)
    lines = []
    for i, (form, tag) in enumerate(zip(EXAMPLE_FORMS, EXAMPLE_TAGS), start=1):
        lines.append(f"{i}\t{form}\t_\t{tag}\t_\t_\t{heads[i - 1]}\t_\t_\t_")
    return "\n".join(lines) + "\n"
