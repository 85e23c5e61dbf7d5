"""Cartan, Euler, symmetric and Coxeter matrices for the bundled algebras."""

from rootcat.ktheory import form_pack, isometry_check
from rootcat.quiver import load_algebra

# %% the three-vertex algebra with a commutative square of relations
pack = form_pack(load_algebra("ex32"))
print("Cartan\n", pack.cartan)
print("Euler\n", pack.euler)
print("symmetric\n", pack.symmetric)  # off-diagonals -2, 2, -2
print("GIM verdict:", pack.gim["verdict"])

# %% Coxeter orders for Dynkin quivers: 3, 4, 6
for name in ("a2", "dynkin/a3", "dynkin/d4"):
    print(name, form_pack(load_algebra(name)).coxeter_order)

# %% the symmetric form seen through 2-periodic Hom spaces agrees with E + E^T
for name in ("a2", "ex32", "ex33", "ex53-m1n2"):
    print(name, isometry_check(load_algebra(name))["ok"])
