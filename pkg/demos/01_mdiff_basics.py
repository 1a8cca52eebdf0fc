"""
Merged differences
==================

Two four-line files, their plain diff, the merged document, and recovery
of both originals from it.
"""

from nlpdiff import diff, merge, reconstruct_first, reconstruct_second, render, tokenize_lines
from nlpdiff.diff import HunkKind

first = tokenize_lines("I\ngo\nto\nschool.\n")
second = tokenize_lines("I\ngo\nto\nuniversity.\n")

# The classic view only shows what changed.
for hunk in diff(first, second).hunks:
    prefix = {HunkKind.DELETE: "< ", HunkKind.INSERT: "> "}.get(hunk.kind)
    if prefix:
        for token in hunk.tokens:
            print(prefix + token)

# The merged view keeps the common lines too.
doc = merge(first, second)
print(render(doc), end="")

# Common + upper sides give the first file back, common + lower the second.
assert reconstruct_first(doc) == first
assert reconstruct_second(doc) == second
print(f"{doc.token_count} tokens stored for {len(first) + len(second)} input tokens")
