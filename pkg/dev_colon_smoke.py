"""Dev scratch: cross-check the linear-algebra colon against elimination."""

import time

from brmult.fields import PrimeField, QQ
from brmult.ideals import Ideal, maximal_ideal
from brmult.poly import Polynomial
from brmult.sampling import GeneralSampler

fp = PrimeField(2**31 - 1)

# 1. Non-monomial colon, both backends over the same field.
b = Ideal.parse("x^2 + y^2, x*y", fp)
a = Ideal.parse("x + y", fp)
lin = b.colon(a)
b2 = Ideal.parse("x^2 + y^2, x*y", fp)
b2._span = False  # force the elimination path
elim = b2.colon(a)
print("lin gens:", lin)
print("elim gens:", elim)
assert lin.equals(elim), "linear vs elimination colon disagree"
print("case 1 ok, colength", lin.colength())

# 2. Monomial staircase colon vs linear colon on the same data.
mono_b = Ideal.parse("x^3, x*y, y^3", fp)
mono_c = mono_b.colon(Ideal.parse("y", fp))
poly_b = Ideal(
    [g for g in mono_b.gens] + [Ideal.parse("x^3 + x*y", fp).gens[0]], fp
)
poly_c = poly_b.colon(Ideal.parse("y", fp))
print("monomial colon:", mono_c, "linear colon:", poly_c)
assert mono_c.equals(poly_c)
print("case 2 ok")

# 3. Liaison bookkeeping: CI reduction b inside monomial a,
#    ell(R/(b:a)) = e(a) - ell(R/a), and the link is an involution.
from brmult.multiplicity import minimal_reduction

sampler = GeneralSampler(7, field=fp)
a3 = Ideal.parse("x^3, x*y, y^3", fp)
t0 = time.time()
red = minimal_reduction(a3, sampler)
b3 = red.ideal
c3 = b3.colon(a3)
lc = c3.colength()
print(
    "e =", red.colength, "ell(R/a) =", a3.colength(), "ell(R/c) =", lc,
    "in %.2fs" % (time.time() - t0),
)
assert lc == red.colength - a3.colength()
back = b3.colon(c3)
assert back.equals(a3), "involution failed"
print("case 3 ok (involution holds)")

# 4. Bigger data shaped like the acceptance runs: seeded monomial ideal,
#    reduction, one full link, timing.
rng = sampler.stream("smoke-big")
from brmult.sampling import random_monomial_ideal

mono = random_monomial_ideal(rng, max_gens=5, max_exp=12)
a4 = Ideal.from_monomial(mono, fp)
print("a4 staircase gens:", len(a4.gens), "colength", a4.colength())
t0 = time.time()
red4 = minimal_reduction(a4, sampler)
t1 = time.time()
c4 = red4.ideal.colon(a4)
t2 = time.time()
lc4 = c4.colength()
back4 = red4.ideal.colon(c4)
t3 = time.time()
assert back4.equals(a4)
t4 = time.time()
print(
    "e =", red4.colength,
    "ell(R/c) =", lc4,
    "identity:", lc4 == red4.colength - a4.colength(),
)
print(
    "times: reduction %.2fs colon %.2fs involution %.2fs equals %.2fs"
    % (t1 - t0, t2 - t1, t3 - t2, t4 - t3)
)
assert lc4 == red4.colength - a4.colength()
print("case 4 ok")

# 5. mingens of the linked ideal, exercised via colength of m*c.
mg = c4.mingens_count()
print("mingens of link:", mg)
print("all smoke cases passed")
