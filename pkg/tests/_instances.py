"""Every isoclass of modules up to a total dimension, for oracle sweeps."""

import itertools

from rootcat.linalg import PrimeField
from rootcat.rep_lab import is_isomorphic, path_rank_profile, representations_of_dim


def isoclasses(A, q, max_total):
    field = PrimeField(q)
    out = []
    for total in range(1, max_total + 1):
        for d in itertools.product(range(total + 1), repeat=A.n):
            if sum(d) != total:
                continue
            buckets = {}
            for rep in representations_of_dim(A, field, d):
                b = buckets.setdefault(path_rank_profile(rep), [])
                if not any(is_isomorphic(rep, o) for o in b):
                    b.append(rep)
            for key in sorted(buckets):
                out.extend(buckets[key])
    return out
