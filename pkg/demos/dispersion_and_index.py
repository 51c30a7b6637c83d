"""Medium response of the bundled example medium across its band.

Evaluates the permittivity, permeability and refractive index on a fine
frequency grid, prints the resonance landmarks, and (if matplotlib is
available) saves the response curves to demos/output/.
"""

import os

import numpy as np

from magpurcell import example_medium, sample


def main():
    model = example_medium()
    grid = np.linspace(0.05, 1.5, 600)
    samples = [sample(model, float(w)) for w in grid]

    eps = np.array([s.eps for s in samples])
    mu = np.array([s.mu for s in samples])
    n = np.array([s.n for s in samples])

    print("example medium response (frequencies in reference units)")
    print(f"  electric resonance: Im(eps) peaks at {grid[eps.imag.argmax()]:.3f}")
    print(f"  magnetic resonance: Im(mu)  peaks at {grid[mu.imag.argmax()]:.3f}")
    ref = sample(model, 1.0)
    print(f"  eps(1) = {ref.eps:.6g}")
    print(f"  mu(1)  = {ref.mu:.6g}")
    print(f"  n(1)   = {ref.n:.6g}  (|n| = {abs(ref.n):.6g})")
    print(f"  passivity: min Im(eps) = {eps.imag.min():.3g}, "
          f"min Im(n) = {n.imag.min():.3g}")

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not available; skipping plots")
        return

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ax1.plot(grid, eps.real, label="Re eps")
    ax1.plot(grid, eps.imag, label="Im eps")
    ax1.plot(grid, mu.real, label="Re mu")
    ax1.plot(grid, mu.imag, label="Im mu")
    ax1.set_xlabel("frequency (reference units)")
    ax1.legend()
    ax2.plot(grid, n.real, label="Re n")
    ax2.plot(grid, n.imag, label="Im n")
    ax2.set_xlabel("frequency (reference units)")
    ax2.legend()
    os.makedirs(os.path.join(os.path.dirname(__file__), "output"), exist_ok=True)
    out = os.path.join(os.path.dirname(__file__), "output", "dispersion.png")
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"saved {out}")


if __name__ == "__main__":
    main()
