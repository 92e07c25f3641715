"""Enumerating every code a given code can map onto.

The images of a code C under all morphisms form a downward-closed family
in the quotient poset of codes.  Because every morphism factors through an
irredundant tuple of proper trunks, the engine can walk those tuples
exhaustively, canonicalize each image, and return the complete census.

The finale compares a twelve-word code against two thirteen-word
extensions: exactly four of its images are reachable from neither.
"""

import time

from codecat import (enumerate_reduced_images, format_code,
                     image_set_difference, parse_code,
                     verify_image_membership)

# Warm-up: the full census for a five-word code fits on one screen.
c5 = parse_code("{12,23,1,3,0}")
out = enumerate_reduced_images(c5)
print(f"{format_code(c5)} has {len(out.images)} reachable images:")
for img in out.images:
    print("  ", format_code(img))
print(f"(explored {out.stats.explored} trunk tuples, "
      f"pruned {out.stats.pruned})")
print()

# Membership questions come with a witness morphism when the answer is yes.
target = parse_code("{12,34,1,3,0}")
w = verify_image_membership(c5, target)
print(f"can {format_code(c5)} map onto a copy of {format_code(target)}?",
      "yes" if w else "no")
if w:
    print("witness trunk generators:",
          [sorted(t.generator) if t.generator is not None else None
           for t in w.trunks])
print()

# The flagship comparison.  CF sits inside both DF (two extra words) and
# EF (one extra word); almost everything CF reaches, one of them reaches.
cf = parse_code("{2345,123,134,145,13,14,23,34,45,3,4,0}")
df = parse_code("{2345,234,345,123,134,145,13,14,23,34,45,3,4,0}")
ef = parse_code("{2345,123,134,145,13,14,23,34,45,3,4,1,0}")

t0 = time.time()
for name, code in (("CF", cf), ("DF", df), ("EF", ef)):
    census = enumerate_reduced_images(code, jobs=2)
    print(f"{name}: {len(census.images)} images "
          f"({census.stats.explored} tuples explored, "
          f"{census.stats.wall_time:.2f}s)")

leftover = image_set_difference(cf, [df, ef], jobs=2)
print(f"\nimages of CF reachable from neither extension "
      f"({len(leftover)}, total {time.time() - t0:.2f}s):")
for code in leftover:
    print("  ", format_code(code))
