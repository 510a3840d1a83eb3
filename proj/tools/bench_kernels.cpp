// Timing harness for the hot kernels: the elementwise master-equation
// right-hand side (parallel vs serial reference) and the radial phase-space
// functionals used by the Fock trace.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qslb/coherent.hpp"
#include "qslb/lindblad.hpp"
#include "qslb/phase_space.hpp"
#include "qslb/qsl.hpp"
#include "qslb/specfun.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double bench_rhs(int dim, bool serial, int reps) {
    const qslb::PhysParams p = qslb::make_params(1.0, 10.0, 0.5);
    const qslb::OracleOperators ops(dim);
    qslb::TruncatedState s = qslb::build_initial_coherent(std::sqrt(dim / 12.0), dim);
    qslb::CMatrix out(static_cast<size_t>(dim) * dim);

    // Warm up once so page faults and thread spin-up stay out of the timing.
    if (serial)
        qslb::rhs_serial(p, ops, qslb::Picture::schroedinger, s.rho, out);
    else
        qslb::rhs(p, ops, qslb::Picture::schroedinger, s.rho, out);

    const Clock::time_point t0 = Clock::now();
    for (int r = 0; r < reps; ++r) {
        if (serial)
            qslb::rhs_serial(p, ops, qslb::Picture::schroedinger, s.rho, out);
        else
            qslb::rhs(p, ops, qslb::Picture::schroedinger, s.rho, out);
    }
    return seconds_since(t0) / reps;
}

double bench_radial(int M, int reps) {
    const qslb::PhysParams p = qslb::make_params(1.0, 10.0, 0.5);
    const qslb::DampingClock c0 = qslb::clock(p, 0.0);
    const qslb::DampingClock ct = qslb::clock(p, 0.8);

    auto cf_at = [M](const qslb::DampingClock& c) {
        return [M, c](std::complex<double> lam) { return qslb::fock_cf(M, {lam}, c); };
    };
    auto dcf = [M, &p, ct](std::complex<double> lam) {
        const double x = std::norm(lam);
        const double decay = std::exp(-(0.5 + ct.nbar_T) * x);
        const double inner = p.nbar_R * qslb::laguerre(M, ct.eta * x) +
                             qslb::laguerre_deriv(M, ct.eta * x);
        return std::complex<double>(-p.gamma * ct.eta * x * decay * inner, 0.0);
    };

    volatile double sink = 0.0;
    const Clock::time_point t0 = Clock::now();
    for (int r = 0; r < reps; ++r) {
        const qslb::PhaseSpaceFunctionals f =
            qslb::phase_space_functionals(cf_at(c0), cf_at(ct), dcf);
        sink = sink + f.F + f.P + f.v_tilde_sq;
    }
    (void)sink;
    return seconds_since(t0) / reps;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available, parallel kernel falls back to serial\n\n");
#endif

    std::printf("master-equation right-hand side, one evaluation\n");
    std::printf("%6s %12s %12s %8s\n", "dim", "serial [ms]", "parallel [ms]", "speedup");
    for (int dim : {40, 64, 80}) {
        const int reps = dim >= 80 ? 200 : 500;
        const double ts = bench_rhs(dim, true, reps);
        const double tp = bench_rhs(dim, false, reps);
        std::printf("%6d %12.4f %12.4f %8.2f\n", dim, 1e3 * ts, 1e3 * tp, ts / tp);
    }

    std::printf("\nradial phase-space functionals (F, P, speed), one clock point\n");
    std::printf("%6s %12s\n", "M", "time [ms]");
    for (int M : {1, 3, 5}) {
        const double t = bench_radial(M, 50);
        std::printf("%6d %12.4f\n", M, 1e3 * t);
    }
    return 0;
}
