import time

from brmult.bourbaki import (
    assume_pipeline,
    bourbaki_pair,
    br_all_rank,
    br_by_bourbaki,
    dependence_example,
)
from brmult.fields import PrimeField
from brmult.modules import Presentation
from brmult.sampling import GeneralSampler

fp = PrimeField()

# 5. dependence witness with a certified fresh J'
t0 = time.time()
good = dependence_example(sampler=GeneralSampler(3, fp), fresh=True)
rep = br_all_rank(good)
print(f"fresh J' ({time.time() - t0:.1f}s):", rep.summands)
assert rep.value == 420

# 6/7. random pipelines, criterion shapes
for rank, cols, seeds in ((2, 3, (11, 12)), (3, 4, (21, 22))):
    for seed in seeds:
        s = GeneralSampler(seed, fp)
        rng = s.stream("mat")
        from brmult.sampling import random_matrix

        M = Presentation(
            random_matrix(rng, rank, cols, max_exp=3, field=fp, min_total=1),
            fp,
        )
        t0 = time.time()
        rep = br_by_bourbaki(M, s)
        t1 = time.time()
        pair = bourbaki_pair(M, s, "pipe")
        data = assume_pipeline(
            M, pair.bourbaki_ideal, pair.module_image, pair.kernel, s, "pipe"
        )
        rep2 = br_all_rank(data)
        t2 = time.time()
        print(
            f"rank {rank} seed {seed}: br_by_bourbaki {rep.value} "
            f"({t1 - t0:.1f}s), all_rank {rep2.value} ({t2 - t1:.1f}s) "
            f"summands {rep2.summands}"
        )
        assert rep.value == rep2.value == rep2.reference
print("random pipelines OK")
