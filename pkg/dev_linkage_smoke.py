"""Dev scratch: linkage chains against hand-checked values."""

import time

from brmult.fields import PrimeField
from brmult.ideals import Ideal
from brmult.linkage import (
    auslander_chain,
    br_by_links,
    colength_by_links,
    link_chain,
    link_once,
    submatrix_chain,
)
from brmult.modules import Presentation, buchsbaum_rim
from brmult.sampling import GeneralSampler

fp = PrimeField(2**31 - 1)
sampler = GeneralSampler(11, field=fp)

# m^2: one link to the maximal ideal class, alternating sum 4 - 1 = 3.
m2 = Ideal.parse("x^2, x*y, y^2", fp)
ch = link_chain(m2, sampler, "m2")
print("m2 chain:", len(ch), "mus", ch.mingens, "es", ch.multiplicities)
assert len(ch) == 1 and ch.terminal
assert colength_by_links(ch) == 3

# m^3: e = 9, colength 6, so the tail must contribute -3.
m3 = Ideal.parse("x^3, x^2*y, x*y^2, y^3", fp)
ch3 = link_chain(m3, sampler, "m3")
print("m3 chain:", len(ch3), "mus", ch3.mingens, "es", ch3.multiplicities)
assert ch3.multiplicities[0] == 9
assert colength_by_links(ch3) == 6

# Complete intersection: nothing to do.
ci = Ideal.parse("x^3, y^5", fp)
ch0 = link_chain(ci, sampler, "ci")
assert len(ch0) == 0 and colength_by_links(ch0) == 15

# Precondition: mu = 2 refuses to link.
try:
    link_once(ci, sampler)
    raise AssertionError("expected ValueError")
except ValueError as exc:
    print("link_once precondition:", exc)

# Block chain of the standard rank-2 example.
P = Presentation.parse("x, 0, y; 0, y, x", fp)
t0 = time.time()
bch = submatrix_chain(P, sampler, "p2")
print(
    "block chain mus", bch.mingens, "es", bch.multiplicities,
    "in %.2fs" % (time.time() - t0),
)
assert bch.mingens == [3, 2]
assert bch.multiplicities == [4, 1]
assert colength_by_links(bch) == 3

dual = auslander_chain(bch.matrix, bch)
print("dual chain ok:", [len(a.gens) for a in dual])

rep = br_by_links(P, sampler, "p2br")
print("br by links:", rep.value, "lead", rep.leading_multiplicity)
assert rep.value == 3 and rep.reference == 3

# Rank 3: exercises the row-drop designated pair at step 1.
rows = "x^2, 0, y^2, 0, x*y; 0, y^2, x^2, x*y, 0; x*y, x^2, 0, y^2, 0"
P3 = Presentation.parse(rows, fp)
t0 = time.time()
br3 = buchsbaum_rim(P3, route="reduction", sampler=sampler)
print("rank3 br:", br3.value, "in %.2fs" % (time.time() - t0))
t0 = time.time()
bch3 = submatrix_chain(P3, sampler, "p3")
print(
    "rank3 chain mus", bch3.mingens, "es", bch3.multiplicities,
    "in %.2fs" % (time.time() - t0),
)
assert colength_by_links(bch3) == bch3.ideals[0].colength()
dual3 = auslander_chain(bch3.matrix, bch3)
print("rank3 dual ok")
t0 = time.time()
rep3 = br_by_links(P3, sampler, "p3br")
print(
    "rank3 br by links:", rep3.value,
    "(reference %d) in %.2fs" % (rep3.reference, time.time() - t0),
)
print("all linkage smoke cases passed")
