"""
Written versus spoken text
==========================

Word-level merge of a written passage and its spoken rendition, then the
paired differences as rewrite rules.
"""

from nlpdiff import Direction, aggregate, extract_pairs, merge, render, tokenize_words
from nlpdiff.rules import dumps

written = tokenize_words("In this paper, we describe the meaning sort. In general, sorting is performed by")
spoken = tokenize_words("Today I'd like to describe uh the meaning sort. In general, sorting is done by")

doc = merge(written, spoken)
print(render(doc))

for pair in extract_pairs(doc, k=1):
    print(f"{pair.left_context} [{' '.join(pair.source)}] -> [{' '.join(pair.target)}] {pair.right_context}")

# written -> spoken, and the inverse direction
print(dumps(aggregate(extract_pairs(doc))))
print(dumps(aggregate(extract_pairs(doc), Direction.SECOND_TO_FIRST)))
