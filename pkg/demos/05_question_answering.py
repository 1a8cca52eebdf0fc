"""
Answering by best match
=======================

The question's interrogative becomes ``X``; whatever the best-matching
knowledge sentence pairs with ``X`` is the answer.  A rewrite rule can make
the sentences closer before matching.
"""

from nlpdiff import RuleSet, answer, merge, prepare_question, render, similarity, tokenize_words

question = "Where is the capital of Japan?"
prepared = prepare_question(question).tokens
print(" ".join(prepared))

for sentence in ["Tokyo is the capital of Japan.", "Tokyo is the capital in Japan."]:
    knowledge = tokenize_words(sentence)
    print(render(merge(prepared, knowledge)))
    print("similarity", similarity(prepared, knowledge))

kb = [
    "Kyoto was the old capital of Japan.",
    "Tokyo is the capital in Japan.",
    "Osaka is a big city in Japan.",
]
rules = RuleSet.from_rules([(["in"], ["of"])])
result = answer(question, kb, rules)
print("answer:", result.answer_text)
print("from:", result.knowledge_sentence)
print("similarity", result.initial_score, "->", result.score, "via", list(result.applied_rules))
