"""The Lie algebra spanned by indecomposables of the root category of A2, over F_3."""

import numpy as np

from rootcat.hall_lie import build_hall_lie
from rootcat.quiver import load_algebra

table, lie = build_hall_lie(load_algebra("a2"), q=3)
print("basis:", table.labels)  # six u_X plus h_1, h_2
print("dimension", table.dim, "over Z/%d" % table.modulus)

# %% structure constants, reduced mod q - 1
T = table.mod_table()
print("nonzero structure constants:", int(np.count_nonzero(T)))
print("antisymmetric:", table.antisymmetry_ok(), " Jacobi failures:", len(table.jacobi_failures()))

# %% a few brackets by hand
ctx = lie.ctx
s1, s2 = lie.u(ctx.simple_obj(0)), lie.u(ctx.simple_obj(1))
print("[u_S1, u_S2] =", lie.bracket(s1, s2).to_dict(ctx))
print("[u_S1, u_ΣS1] =", lie.bracket(s1, lie.u(ctx.simple_obj(0, 1))).to_dict(ctx))
print("[h_1, u_S2] =", lie.bracket(lie.h_simple(0), s2).to_dict(ctx))
