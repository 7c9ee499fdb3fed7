"""Fraction of nonmonogamous states against the monogamy power.

Reproduces the criticality story at demo scale: for W-class states and
concurrence the fraction f is pinned at 1 below alpha = 2 and drops to 0
exactly there, while Haar (GHZ-class) states lose their plateau much earlier
and their last stragglers cross before alpha = 2.
"""

import numpy as np

from qmono import (
    EnsembleSpec,
    Measure,
    build_f_curve,
    estimate_alpha_c,
    estimate_alpha_p,
    integrate_m,
    run_ensemble,
)

SAMPLES = 3000
SEED = 11


def sweep(state_class, measure):
    spec = EnsembleSpec(state_class, 3, SAMPLES, measure, SEED, workers=2)
    records = run_ensemble(spec)
    curve = build_f_curve(records)
    alpha_p = estimate_alpha_p(records)
    alpha_c = estimate_alpha_c(records)
    m_q = integrate_m(curve, alpha_c) if np.isfinite(alpha_c) else None
    return curve, alpha_p, alpha_c, m_q


def main():
    for cls, measure in (("w-class", Measure.CONCURRENCE),
                         ("haar", Measure.CONCURRENCE),
                         ("haar", Measure.NEGATIVITY)):
        curve, alpha_p, alpha_c, m_q = sweep(cls, measure)
        print(f"{cls} / {measure.value}  ({SAMPLES} samples)")
        print(f"  alpha_p = {alpha_p:.4f}   alpha_c = {alpha_c:.4f}   "
              f"M = {m_q:.4f}")
        print("  alpha:    " + "  ".join(f"{a:5.2f}" for a in (0.05, 0.5, 1.0, 1.5, 1.9, 2.0)))
        fs = [float(curve[np.argmin(np.abs(curve[:, 0] - a)), 1])
              for a in (0.05, 0.5, 1.0, 1.5, 1.9, 2.0)]
        print("  f(alpha): " + "  ".join(f"{f:5.3f}" for f in fs))
        print()


if __name__ == "__main__":
    main()
