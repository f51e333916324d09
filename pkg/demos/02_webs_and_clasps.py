"""Build small webs layer by layer and reduce them with the skein rules.

Run: python3 demos/02_webs_and_clasps.py
"""

from a2braid.coefficients import ONE
from a2braid.webs import Strip, add_clasp, format_diagram, reduce_element


def value(strip):
    return reduce_element([(ONE, strip.close())])


circle = Strip().cup(0, "u").cap(0)
print("circle      ->", value(circle).scalar())

theta = Strip().cup(0, "u").split(0).merge(0).cap(0)
print("theta web   ->", value(theta).scalar())

# a positive crossing between an upward and a downward strand, closed off
hopf = Strip().cup(0, "u").cup(2, "u").cross(1).cross(1).cap(2).cap(0)
print("Hopf link   ->", value(hopf).scalar())

print()
print("The clasp P_2 expands into two webs:")
s = Strip(["u", "u"])
add_clasp(s, 0, 2, "u")
for c, w in value(s).items():
    print(f"  coefficient {c}, {w.count('src') + w.count('snk')} trivalent vertices")



def clasps(count):
    t = Strip(["u", "u"])
    for _ in range(count):
        add_clasp(t, 0, 2, "u")
    return value(t)


print()
print("Stacking P_2 twice gives the same element:", clasps(2) == clasps(1))

print()
print("Diagrams have a plain-text form, read by `a2braid oracle --diagram FILE`:")
print(format_diagram(Strip().cup(0, "u").split(0).merge(0).cap(0).close()))
