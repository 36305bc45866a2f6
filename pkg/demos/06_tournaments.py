"""Impartial patterns and tournament anti-Sidorenko behavior, by brute force.

A pattern is impartial when every tournament on n vertices contains exactly
the same number of labeled copies of it.  Anti-Sidorenko patterns sit on
the other extreme: never above the uniformly-random-orientation bound
(1/2)^e in any tournament.
"""

from digraphon import (
    OrientedGraph,
    Tournament,
    anti_sidorenko_check,
    copies_in_tournament,
    impartiality_check,
)

impartial = OrientedGraph(4, [(0, 1), (2, 3), (0, 2)])
cyclic = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
path3 = OrientedGraph(3, [(0, 1), (1, 2)])

print("Copy counts of the cyclic triangle depend heavily on the tournament:")
print("  in the cyclic 3-tournament:   ",
      copies_in_tournament(cyclic, Tournament(3, [(0, 1), (1, 2), (2, 0)])))
print("  in the transitive 3-tournament:",
      copies_in_tournament(cyclic, Tournament(3, [(0, 1), (0, 2), (1, 2)])))

print("\nThe 3-edge pattern {(a,b),(c,d),(a,c)} is impartial:")
for n in (4, 5):
    stats = impartiality_check(impartial, n)
    print(f"  n={n}: constant={stats.constant}, value={stats.min}, "
          f"checked {stats.tournaments_checked} tournaments")

stats = impartiality_check(cyclic, 3)
print("\nThe cyclic triangle is not (counts range "
      f"{stats.min}..{stats.max} over {stats.tournaments_checked} tournaments).")

print("\nAnti-Sidorenko checks (density never above (1/2)^e):")
for name, pattern in (("directed path P3", path3),
                      ("directed path P4", OrientedGraph(4, [(0, 1), (1, 2), (2, 3)])),
                      ("cyclic triangle", cyclic)):
    for n in (4, 5):
        report = anti_sidorenko_check(pattern, n)
        wit = report.witness
        print(f"  {name}, n={n}: {report.verdict}; max density {wit.lhs}"
              f" <= bound {wit.rhs}")
