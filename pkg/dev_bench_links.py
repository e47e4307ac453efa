"""Dev scratch: time 25 seeded linkage chains (acceptance shape)."""

import time

from brmult.fields import PrimeField
from brmult.ideals import Ideal
from brmult.linkage import colength_by_links, link_chain
from brmult.sampling import GeneralSampler, random_monomial_ideal

fp = PrimeField(2**31 - 1)
sampler = GeneralSampler(20260822, field=fp)

t_all = time.time()
worst = 0.0
for k in range(25):
    rng = sampler.stream(f"bench:{k}")
    mono = random_monomial_ideal(rng, max_gens=5, max_exp=12)
    a = Ideal.from_monomial(mono, fp)
    t0 = time.time()
    ch = link_chain(a, sampler, f"bench:{k}")
    total = colength_by_links(ch)
    dt = time.time() - t0
    worst = max(worst, dt)
    print(
        f"{k:2d} gens={len(a.gens)} colength={total:4d} "
        f"links={len(ch)} es={ch.multiplicities} {dt:5.2f}s"
    )
print("total %.1fs worst %.2fs" % (time.time() - t_all, worst))
