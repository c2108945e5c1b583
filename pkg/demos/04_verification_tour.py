"""Run a few verification suites from the library API.

Run:  python demos/04_verification_tour.py
"""

from quadchow.suites import run_suite, suite_names

print("available suites:", ", ".join(suite_names()))

for name, n in [("lemma24", 5), ("lemma42", 6), ("degrees-gd", 4), ("cross-model", 4)]:
    results = run_suite(name, n)
    passed = sum(c.ok for c in results)
    print(f"{name} at n = {n}: {passed}/{len(results)} cases pass")
    # every case records the instantiated parameters and both sides
    sample = results[0]
    print("   e.g.", sample.id, sample.params, "->", sample.status)

# Suites are exact: a single flipped coefficient anywhere would fail loudly.
bad = [c for c in run_suite("prop316", 5) if not c.ok]
print("prop316 failures at n = 5:", bad)
