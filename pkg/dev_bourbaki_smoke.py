import time

from brmult.bourbaki import (
    assume_pipeline,
    bourbaki_pair,
    br_all_rank,
    br_by_bourbaki,
    dependence_example,
)
from brmult.errors import VerificationError
from brmult.fields import PrimeField
from brmult.modules import Presentation, buchsbaum_rim
from brmult.sampling import GeneralSampler

fp = PrimeField()
s = GeneralSampler(7, fp)

# 1. rank-2 hand example
M = Presentation.parse("x, 0, y; 0, y, x", fp)
pair = bourbaki_pair(M, s)
print("I gens:", [str(g) for g in pair.bourbaki_ideal.gens])
print("J gens:", [str(g) for g in pair.module_image.gens])
assert pair.bourbaki_ideal.colength() == 1
assert pair.module_image.colength() == 4
rep = br_by_bourbaki(M, s)
print("br_by_bourbaki rank2:", rep.value, "=", rep.e_image, "-", rep.e_ideal)
assert rep.value == 3

# 2. full pipeline on the same module
data = assume_pipeline(M, pair.bourbaki_ideal, pair.module_image, pair.kernel, s)
rep2 = br_all_rank(data)
print("all-rank rank2:", rep2.summands)
assert rep2.value == 3

# 3. rank-3 hand matrix
M3 = Presentation.parse(
    "x^2,0,y^2,0,x*y; 0,y^2,x^2,x*y,0; x*y,x^2,0,y^2,0", fp
)
t0 = time.time()
rep3 = br_by_bourbaki(M3, s)
print(f"br_by_bourbaki rank3: {rep3.value} ({time.time() - t0:.2f}s)")
assert rep3.value == 24
assert rep3.chain is not None

# 4. dependence witness, fixed non-general J'
t0 = time.time()
bad = dependence_example(sampler=GeneralSampler(3, fp))
try:
    br_all_rank(bad)
    raise SystemExit("expected a mismatch")
except VerificationError as exc:
    print(f"dependence mismatch ({time.time() - t0:.1f}s):", exc.actual)
    assert exc.expected == 420
    assert exc.actual["rhs"] == 416
    assert exc.actual["e_J"] == 744
    assert exc.actual["e_I"] == 280
    assert exc.actual["e_F0_IJ"] == 546
    assert exc.actual["e_F0_IJprime"] == 594

print("dependence fixed-J' case OK")
