"""Count alcoves in the dilated region and compare with the cell classes.

For each system the script prints the number of alcoves, how many classes
of the cell relation are fully visible in a length ball, and the character
data of the finite permutation module of the same size.
"""

from gkm_cherednik.combinat import (
    alcove_ideal,
    bruhat_cover_violations,
    equivalence_classes,
    perm_module_character,
)
from gkm_cherednik.rootsys import build_root_system

CASES = [("A", 1, 10), ("A", 2, 8), ("B", 2, 8), ("G", 2, 10)]

print(f"{'system':<7}{'d':>2}{'alcoves':>9}{'visible':>9}{'bound':>7}{'W-inv':>7}{'sign':>6}")
for t, r, radius in CASES:
    rs = build_root_system(t, r)
    for d in (1, 2) if r == 1 or t == "A" else (1,):
        ideal = alcove_ideal(rs, d)
        cls = equivalence_classes(rs, d, radius)
        ch = perm_module_character(rs, d)
        print(f"{rs.label():<7}{d:>2}{ideal.count:>9}{cls.visible_count:>9}{cls.bound:>7}"
              f"{int(ch.invariants):>7}{int(ch.sign_multiplicity):>6}")
        assert not cls.failures

# the region is closed under right descents but not under Bruhat covers
a2 = build_root_system("A", 2)
bad = bruhat_cover_violations(alcove_ideal(a2, 1))
print(f"\nA2, d=1: {len(bad)} Bruhat covers leave the region, e.g. {bad[0][0]} > {bad[0][1]}")
