"""
Chapter tags for a presentation transcript
==========================================

A paper carries ``<Chapter n>`` markers; its presentation does not.  Merging
the two and throwing away everything paper-only except the markers puts
the chapter boundaries into the transcript.
"""

from nlpdiff import TokenSeq, chapters_of, propagate_tags


def one_word_per_line(*parts):
    tokens = []
    for part in parts:
        tokens.extend([part] if part.startswith("<") else part.split())
    return TokenSeq(tuple(tokens))


paper = one_word_per_line(
    "<Chapter 1>", "In this paper, we describe the meaning sort.", "</Chapter 1>",
    "<Chapter 2>", "In general, sorting is performed by using the alphabetical order.", "</Chapter 2>",
    "<Chapter 3>", "We propose sorting by meaning instead.", "</Chapter 3>",
)
talk = one_word_per_line(
    "Today I'd like to describe uh the meaning sort. In general, sorting is done by "
    "the alphabetical order. So we uh propose sorting by meaning instead."
)

annotated = propagate_tags(paper, talk)
print("\n".join(annotated))

for span in chapters_of(annotated):
    print(f"{span.tag}: {' '.join(span.tokens)}")
