"""A family of Gorenstein curves whose tangent cone is not CM yet has a
non-decreasing Hilbert function."""

from tangentcone.families import FamilySpec, instantiate, verify_member

for m in range(4, 9):
    fm = instantiate(FamilySpec("e43", m))
    check = verify_member(FamilySpec("e43", m))
    claims = {c[0]: c[2] for c in check.claims}
    print(f"m = {m}: {fm.raw}")
    print(f"  CM: {claims['cohen-macaulay']}   h(t) = {claims['reduced numerator']}")
    print(f"  leading ideal {claims['leading ideal']}")
    print(f"  all claims verified: {check.ok}")
