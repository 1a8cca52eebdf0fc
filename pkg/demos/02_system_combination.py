"""
Combining two analyzers
=======================

A worker reads the merged output of two part-of-speech taggers and puts an
``x`` in front of the separator wherever the second tagger is right.
Resolving the document keeps the chosen side of every difference.
"""

from nlpdiff import agreement_report, merge, parse, render, resolve, tokenize_lines

system1 = tokenize_lines("We\tNoun\nlike\tVerb\napples\tNoun\n")
system2 = tokenize_lines("We\tNoun\nlike\tPreposition\napples\tNoun\n")

text = render(merge(system1, system2))
print(text)

# Nothing marked: the first system wins everywhere.
print(list(resolve(parse(text))))

# Mark the one difference, as a worker would in an editor.
marked = text.replace(";-----------------", "x;-----------------")
print(list(resolve(parse(marked))))

# With a third system, count where all three agree.
system3 = tokenize_lines("We\tPronoun\nlike\tVerb\napples\tNoun\n")
report = agreement_report(system1, system2, system3)
print(f"agree: {report.agree_regions} regions / {report.agree_tokens} tokens, "
      f"disagree: {report.disagree_regions} regions")
