"""Rigidity verdicts for the bundled homogeneous-variety scenarios.

A scenario fixes G/P in P(V_lambda) and a system index p >= -1; the variety
is reported RIGID when every H^1(g_-, g-perp) class sits in degree < p + 2,
and INCONCLUSIVE otherwise (non-vanishing is never read as flexibility).
The sweep below shows where each classical fixture first becomes rigid.
"""

from liecoh.cli import fixtures, load_fixture
from liecoh.driver import run_scenario, scenario_from_json, scenario_to_json

print("bundled fixtures:", ", ".join(fixtures()))
print()

for name in fixtures():
    spec = load_fixture(name)
    verdict = run_scenario(spec)
    rep = verdict.report
    print(f"{name}  (p = {spec.p}): {verdict.verdict}")
    print(f"    H^1 by degree: { {str(k): v for k, v in rep.aggregate.items()} }")
    if rep.oracle_ran:
        print("    cross-checked against the direct matrix oracle")
    first_rigid = None
    for p in range(-1, 5):
        probe = scenario_from_json({**scenario_to_json(spec), "p": p,
                                    "oracle": False})
        if run_scenario(probe).verdict == "RIGID":
            first_rigid = p
            break
    print(f"    first RIGID at p = {first_rigid}")
    print()
