#!/usr/bin/env python3
"""Regenerate tests/reference_values.hpp from arbitrary-precision evaluations.

Everything here is computed with mpmath at 40 significant digits and is
independent of the C++ evaluation paths it is used to check.
"""
import random
import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 40


def theta(t):
    return mp.siegeltheta(t)


def fmt(x):
    return mp.nstr(x, 25, min_fixed=-30, max_fixed=30)


def main(out):
    rng = random.Random(20240611)
    lines = []
    emit = lines.append
    emit("// Generated by tests/oracle/gen_reference.py. Do not edit by hand.")
    emit("#pragma once")
    emit("#include <array>")
    emit("")
    emit("namespace ladderlab::reference {")
    emit("")
    emit(f"inline constexpr double zeta_half = {fmt(mp.zeta(0.5))};")
    g0 = mp.findroot(theta, 17.8)
    emit(f"inline constexpr double gram_g0 = {fmt(g0)};")
    emit("")
    emit("struct ThetaPoint { double t; double theta; };")
    pts = [mp.mpf(x) for x in ("0.5", "3", "9.5", "10", "10.5", "50", "500", "5000", "123456.75", "1000000")]
    emit(f"inline constexpr std::array<ThetaPoint, {len(pts)}> theta_points{{{{")
    for t in pts:
        emit(f"    {{{fmt(t)}, {fmt(theta(t))}}},")
    emit("}};")
    emit("")
    emit("inline constexpr std::array<double, 10> first_zeros{{")
    for n in range(1, 11):
        emit(f"    {fmt(mp.im(mp.zetazero(n)))},")
    emit("}};")
    emit("")
    emit("struct ZPoint { double t; double z; };")
    small = [mp.mpf(i) / 4 for i in range(0, 160, 7)]
    emit(f"inline constexpr std::array<ZPoint, {len(small)}> z_small{{{{")
    for t in small:
        emit(f"    {{{fmt(t)}, {fmt(mp.siegelz(t))}}},")
    emit("}};")
    emit("")
    rand_t = sorted(mp.mpf(rng.uniform(10.0, 1.0e5)) for _ in range(100))
    emit(f"inline constexpr std::array<ZPoint, {len(rand_t)}> z_random{{{{")
    for t in rand_t:
        t = mp.mpf(float(t))
        emit(f"    {{{fmt(t)}, {fmt(mp.siegelz(t))}}},")
    emit("}};")
    emit("")
    big = [mp.mpf(x) for x in ("250000.5", "612345.25", "999999.5")]
    emit(f"inline constexpr std::array<ZPoint, {len(big)}> z_large{{{{")
    for t in big:
        emit(f"    {{{fmt(t)}, {fmt(mp.siegelz(t))}}},")
    emit("}};")
    emit("")
    # I(T) = int_0^T Z^2 on half-unit panels; takes several minutes.
    emit("struct IntegralPoint { double T; double I; };")
    ts = (50, 200)
    emit(f"inline constexpr std::array<IntegralPoint, {len(ts)}> hl_points{{{{")
    with mp.workdps(25):
        for T in ts:
            v = mp.quad(lambda t: mp.siegelz(t) ** 2, [mp.mpf(k) / 2 for k in range(0, 2 * T + 1)])
            emit(f"    {{{T}, {mp.nstr(v, 20)}}},")
    emit("}};")
    emit("")
    emit("}  // namespace ladderlab::reference")
    Path(out).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/reference_values.hpp")
