#!/usr/bin/env python3
"""Moment -> recurrence -> quadrature pipeline over a (d, q) grid: Hankel
verdicts, recurrence coefficients and node/weight tables as JSON lines."""

import argparse
import json
from fractions import Fraction

from meanderq.spectra import (
    hankel_psd_check,
    jacobi_from_moments,
    quadrature_from_jacobi,
    semi_meander_moments,
    semi_meander_norm_bounds,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-values", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--q-values", type=str, nargs="+", default=["-1/2", "0", "1/2"])
    ap.add_argument("--n-moments", type=int, default=10)
    args = ap.parse_args()

    for d in args.d_values:
        lower, upper = semi_meander_norm_bounds(d)
        for q_text in args.q_values:
            q = Fraction(q_text)
            ms = semi_meander_moments(d, q, args.n_moments)
            size = (len(ms) - 1) // 2 + 1
            psd, min_eig = hankel_psd_check(ms, size)
            rec = jacobi_from_moments(ms)
            quad = quadrature_from_jacobi(rec, rec.depth)
            print(
                json.dumps(
                    {
                        "d": d,
                        "q": str(q),
                        "hankel_psd": psd,
                        "hankel_min_eig": min_eig,
                        "recurrence_depth": rec.depth,
                        "breakdown": rec.breakdown,
                        "nodes": [round(x, 12) for x in quad.nodes],
                        "weights": [round(w, 12) for w in quad.weights],
                        "norm_window_q0": [lower, upper],
                    },
                    separators=(",", ":"),
                )
            )


if __name__ == "__main__":
    main()
