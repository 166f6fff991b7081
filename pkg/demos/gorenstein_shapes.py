"""Classify three five-generator Gorenstein curves and decide CM both ways."""

from tangentcone.analysis import analyze

for gens in [(1199, 2051, 2352, 3032), (627, 1546, 1662, 3377), (813, 1032, 1240, 1835)]:
    rep = analyze(gens, horizon=10)
    print(f"{tuple(gens)}: case {rep.case_label}, shape {rep.gorenstein['perm_case']}")
    for text in rep.gorenstein["generators_text"]:
        print(f"    {text}")
    for c in rep.cm["checks"]:
        print(f"  {c['method']}: {'CM' if c['is_cm'] else 'not CM'}")
    print(f"  oracle: {'CM' if rep.cm['is_cm'] else 'not CM'} "
          f"({rep.timings['cm']:.1f} s)")
    print(f"  h(t) = {rep.tangent_cone['reduced_numerator_text']}")
    print()
