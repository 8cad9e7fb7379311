#!/usr/bin/env python3
"""Smoke test for the holoent_py extension module.

Builds nothing itself: run `cargo build -p holoent-py --release` first (or
pass --debug to use the debug artifact). The script stages the cdylib under
an importable name, imports it, and exercises the main surface.

    python3 python/smoke_test.py
"""
import argparse
import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def stage_module(profile: str) -> Path:
    lib = REPO / "target" / profile / "libholoent_py.so"
    if not lib.exists():
        sys.exit(
            f"missing {lib}; build it with `cargo build -p holoent-py --{profile}`"
            if profile == "release"
            else f"missing {lib}; build it with `cargo build -p holoent-py`"
        )
    stage = Path(tempfile.mkdtemp(prefix="holoent-py-"))
    shutil.copy2(lib, stage / "holoent_py.so")
    return stage


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol * max(1.0, abs(a), abs(b)), f"{a} != {b} (tol {tol})"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--debug", action="store_true", help="use target/debug artifact")
    args = ap.parse_args()
    sys.path.insert(0, str(stage_module("debug" if args.debug else "release")))
    import holoent_py as hp

    checks = 0

    def ok(label):
        nonlocal checks
        checks += 1
        print(f"  [pass] {label}")

    # geometry and thermal scales
    g = hp.BulkGeometry.non_rotating(1.0)
    approx(g.thermal_scales().beta, 2 * math.pi, 1e-14)
    approx(g.central_charge(), 3.0, 1e-14)
    ok("non-rotating BTZ thermal scales and central charge")

    rp, rm = hp.btz_from_mass_spin(5.0, 3.0)
    approx(rp * rp + rm * rm, 5.0, 1e-12)
    approx(2 * rp * rm, 3.0, 1e-12)
    ok("mass/spin -> horizons round trip")

    ads = hp.BulkGeometry.pure_ads(uv_cutoff=0.01)
    approx(ads.geodesic_length(0.0, 1.0), 2 * math.log(100.0), 1e-13)
    approx(ads.interval_entropy(0.0, 1.0), math.log(100.0), 1e-13)
    ok("pure AdS geodesic length and entropy")

    # mutual information: piecewise law and the tied-horizon transition
    pair = hp.IntervalPair(0.0, 1.0, 1.0 + 0.118033988749895, 2.0 + 0.118033988749895)
    approx(pair.cross_ratio, 0.8, 1e-12)
    mi = ads.mutual_information(pair)
    approx(mi.value, math.log(4.0), 1e-12)
    assert mi.phase == "connected"
    approx(hp.mi_pure_ads(0.8, 3.0), math.log(4.0), 1e-14)
    assert hp.mi_pure_ads(0.3, 3.0) == 0.0
    ok("pure AdS mutual information (piecewise law)")

    lo, hi = 1e-3, 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        p = hp.IntervalPair(0.0, 1.0, 1.0 + mid, 2.0 + mid)
        if g.mutual_information(p).unclamped > 0:
            lo = mid
        else:
            hi = mid
    x0 = (1.0 / (1.0 + 0.5 * (lo + hi))) ** 2
    assert abs(x0 - 0.536) < 5e-3, x0
    ok(f"tied-horizon BTZ transition at x0 = {x0:.4f}")

    # theta engine
    approx(hp.theta_imag(3, 1.0, 0.0), 1.086434811213308, 1e-12)
    t2 = hp.theta_imag(2, 1.0, 0.0)
    t3 = hp.theta_imag(3, 1.0, 0.0)
    t4 = hp.theta_imag(4, 1.0, 0.0)
    assert abs(t2**4 + t4**4 - t3**4) < 1e-10
    approx(hp.theta1_prime_at_zero(1.0), t2 * t3 * t4, 1e-10)
    ok("theta q-series: closed form and Jacobi identity")

    corr = hp.fermion_correlator_torus(0.0, 0.3, 1.0, 20.0, 3)
    app = math.pi / (4 * math.sinh(math.pi * 0.3))
    approx(corr, app, 1e-6)
    ok("torus fermion correlator matches its large-LT form")

    x0 = hp.transition_point("non-rotating", 50.0, 3, 3.0, 0.125)
    assert abs(x0 - 0.5) < 5e-3
    ok(f"finite-size transition point x0(LT=50) = {x0:.6f}")

    # MERA cones
    net = hp.MeraNetwork(65536, 2)
    assert net.depth == 16
    assert hp.regime_classify(16, 4, 2) == "connected"
    assert hp.regime_classify(4, 16, 2) == "disconnected"
    cut = net.minimal_cut([(21845, 21860), (21864, 21879)])
    assert cut.routing in ("connected", "disconnected")
    assert cut.bond_count == sum(cut.per_level_bonds)
    cone = net.causal_cone(21845, 21860)
    widths = [hi - lo + 1 for lo, hi in cone]
    assert all(w <= 3 for w in widths[6:])
    ok("MERA network: cones, classifier, minimal cut")

    # errors surface as ValueError
    for thunk in (
        lambda: hp.BulkGeometry.rotating(1.0, 2.0),
        lambda: hp.IntervalPair(0.0, 1.0, 0.5, 1.5),
        lambda: hp.theta_imag(7, 1.0, 0.0),
        lambda: hp.mi_pure_ads(1.5, 3.0),
    ):
        try:
            thunk()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    ok("invalid inputs raise ValueError")

    print(f"smoke test: {checks} checks passed")


if __name__ == "__main__":
    main()
