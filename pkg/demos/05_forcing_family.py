"""The interpolating family, its density root, and forcing witnesses.

The family W^(lambda) keeps mean 1/16 while moving a pattern's density from
0 (at lambda = 0, if the pattern has no homomorphism onto an edge) up to
(1/2)^v (1/4)^e (at lambda = 1).  Somewhere in between the density crosses
(1/16)^e: a non-constant graphon with exactly the random-looking count,
which is precisely a certificate against forcing.
"""

from fractions import Fraction

from digraphon import (
    OrientedGraph,
    cut_norm_centered,
    find_lambda0,
    forcing_witness_search,
    necessary_conditions,
    t_step,
    w_lambda,
)

sixteenth = Fraction(1, 16)
cyclic = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
path3 = OrientedGraph(3, [(0, 1), (1, 2)])

print("Mean of W^(lambda) for a few lambda values:")
for num in (0, 1, 2, 3, 4):
    lam = Fraction(num, 4)
    print(f"  lambda = {lam}: mean = {w_lambda(lam).integral()}")

print("\nDensity of the cyclic triangle along the family (= lambda^3/512):")
for num in (0, 1, 2, 4):
    lam = Fraction(num, 4)
    print(f"  lambda = {lam}: t = {t_step(cyclic, w_lambda(lam))}")

profile = find_lambda0(cyclic, Fraction(1, 2**40))
print("\nRoot for the cyclic triangle: lambda0 =", profile.lambda0,
      "(a grid hit, exactly rational)")
print("  achieved density:", t_step(cyclic, w_lambda(profile.lambda0)),
      " target:", profile.target)
print("  separation from the constant:",
      cut_norm_centered(w_lambda(profile.lambda0), sixteenth).value)

profile = find_lambda0(path3, Fraction(1, 2**40))
lam0 = profile.lambda0
print("\nFor the directed path the root is irrational (1/sqrt 2); bisection")
print("  lands at", float(lam0), "with |t - target| =",
      float(abs(t_step(path3, w_lambda(lam0)) - profile.target)))

print("\nNecessary conditions for directed forcing (edge hom, underlying cycle):")
for name, g in (("alternating 4-cycle", OrientedGraph(4, [(0, 1), (2, 1), (2, 3), (0, 3)])),
                ("directed path", path3),
                ("cyclic triangle", cyclic)):
    print(f"  {name}: {tuple(necessary_conditions(g))}")

print("\nThe witness search certifies a counterexample in exact arithmetic:")
tol = Fraction(1, 10**8)
w = forcing_witness_search(cyclic, sixteenth, 4, tol, seed=0)
assert w is not None
print("  |t - (1/16)^3| =", float(abs(t_step(cyclic, w) - sixteenth ** 3)))
print("  mean =", w.integral())
print("  centered cut norm =", float(cut_norm_centered(w, sixteenth).value))
