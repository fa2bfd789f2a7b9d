from fractions import Fraction as Q

from hypothesis import settings, strategies as st

from yangtwist.twist import TwistParams

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

# finite weights kept small so full-space matrices stay cheap
finite_lams = st.sampled_from([Q(0), Q(1, 2), Q(1), Q(3, 2)])
shifts = st.builds(Q, st.integers(-12, 12), st.integers(1, 4))
etas = st.builds(Q, st.integers(1, 5), st.integers(1, 3)).flatmap(
    lambda x: st.sampled_from([x, -x]))


@st.composite
def generic_params(draw, lams=finite_lams):
    """Two finite factors with (delta1 - delta2)/eta off the half-integers."""
    eta = draw(etas)
    d2 = draw(shifts)
    z = Q(draw(st.integers(-30, 30)), draw(st.sampled_from([3, 5, 7])))
    if (2 * z).denominator == 1:
        z += Q(1, 3)
    return TwistParams.make(draw(lams), draw(lams), d2 + eta * z, d2, eta)


def half_params(**kw):
    """The fundamental pair lam1 = lam2 = 1/2 at delta1 = 2, delta2 = 0, eta = 1."""
    args = dict(lam1=Q(1, 2), lam2=Q(1, 2), delta1=2, delta2=0, eta=1)
    args.update(kw)
    return TwistParams.make(**args)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        title, ok, note = mod.RESULTS[number]
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({note})")
