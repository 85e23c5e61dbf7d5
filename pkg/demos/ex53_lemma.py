"""The module M over the five-arrow family, its End ring in the root category, and the cone L."""

import json

from rootcat.hall_lie import theorem5_case3, verify_lemma_53
from rootcat.verify import check_gim_ex53

# %% the symmetric matrix is symmetric with a positive entry, so not a Cartan matrix
print(json.dumps(check_gim_ex53(), indent=1))

# %% sub-claims about M, for two sizes and two fields
for m, n in ((1, 2), (2, 2)):
    for q in (3, 5):
        rep = verify_lemma_53(m, n, q)
        print(m, n, q, {k: c["ok"] for k, c in rep["claims"].items()}, "coefficient", rep["claims"]["a"]["coefficient"])

# %% the split-triangle vanishing argument for S_0 against a chain vertex
rep = theorem5_case3(1, 3, 3, q=3)
print("pd", rep["projective_dimension"], "resolution", rep["resolution_terms"], rep["brackets"])
