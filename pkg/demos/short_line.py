"""Why a straight line of seven cells with the general in the middle needs 9 steps.

We work inside the line variation, where every instance is a horizontal
segment. A time t is safe when some node cannot tell the instance apart from
a larger one whose far end it has not heard from yet. The demo prints the
chain of look-alike lines at t = 8 and the closed class at t = 9.
"""

from fssp.grid import radius, render_ascii, serialize
from fssp.mft.localmap import is_safe, mft_localmap
from fssp.variations import LINE_AB, line

C = line(3, 3)
print("instance:")
print(render_ascii(C))
print()

verdict = is_safe(C, 8, LINE_AB)
print(f"t = 8 safe: {verdict.safe}")
for D, link in zip(verdict.chain.configs, (None, *verdict.chain.links)):
    via = f"  (indistinguishable at node {link.v})" if link else ""
    print(f"  {serialize(D)}  radius {radius(D)}{via}")
print()

verdict = is_safe(C, 9, LINE_AB)
print(f"t = 9 safe: {verdict.safe}; its class holds {verdict.class_size} line(s)")
print()

print("minimum firing time for lines with the general at index a:")
for a in range(5):
    values = [mft_localmap(line(a, b), LINE_AB).value for b in (a, a + 1, a + 2)]
    print(f"  a = {a}: b = a, a+1, a+2 -> {values}")
