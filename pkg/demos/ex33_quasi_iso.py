"""A chain map from a three-term periodic complex E onto the one-term periodic complex P."""

from rootcat.complexes import realize
from rootcat.derived import cone, is_quasi_iso, periodic_end_is_local
from rootcat.verify import Ex33, check_ex33

ex = Ex33(q=3)
E, P, phi = ex.periodic()
print("chain map:", phi.is_chain_map(), " quasi-iso:", is_quasi_iso(phi))
print("End(P) local:", periodic_end_is_local(P))

# %% the same maps on a bounded window; only the two edges carry homology
Ew, Pw, phiw = ex.window(8)
print({k: v.tolist() for k, v in realize(cone(phiw)).nonzero_homology().items()})

# %% summary as the CLI reports it
print(check_ex33())
