"""Smoke test for the pybbgroup extension.

Build and install first:
    pip install --no-build-isolation -e crates/python
"""

import pybbgroup


def params(line):
    return dict(pybbgroup.parse_report(line)[1])


def main():
    assert pybbgroup.miller_rabin(561) == "composite"
    assert pybbgroup.miller_rabin(97) == "probably-prime"

    line = pybbgroup.involution(16, trials=100, seed=7)
    name, _, seed, trials, failures = pybbgroup.parse_report(line)
    assert (name, seed, trials, failures) == ("involution", 7, 100, 0), line

    law, control = pybbgroup.frobenius("psl2", 5, 2, trials=200, seed=1)
    assert pybbgroup.parse_report(law)[4] == 0, law
    assert pybbgroup.parse_report(control)[4] > 0, control

    su = pybbgroup.su_embed(5, samples=50, seed=2)
    assert params(su)["form"] == "found", su

    a = pybbgroup.run(["mr", "--n", "1000003", "--seed", "3", "--reproducible"])
    b = pybbgroup.run(["mr", "--n", "1000003", "--seed", "3", "--reproducible"])
    assert a == b and params(a[0])["verdict"] == "probably-prime"

    try:
        pybbgroup.run(["mr", "--bogus"])
    except ValueError:
        pass
    else:
        raise AssertionError("unknown flag accepted")

    print("pybbgroup smoke test passed")


if __name__ == "__main__":
    main()
