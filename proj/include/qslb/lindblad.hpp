#pragma once

// Brute-force oracle: the quantum optical master equation integrated in a
// truncated Fock basis with classical RK4, plus the numerical extraction of
// every figure of merit the closed forms predict.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qslb/qsl.hpp"

namespace qslb {

using cplx = std::complex<double>;

// Dense row-major N x N complex matrix, sized for truncated Fock operators.
struct CMatrix {
    int dim = 0;
    std::vector<cplx> a;

    CMatrix() = default;
    explicit CMatrix(int n) : dim(n), a(static_cast<size_t>(n) * n) {}
    cplx& operator()(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
    const cplx& operator()(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }
};

// Density matrix in the truncated basis.
struct TruncatedState {
    int dim = 0;
    CMatrix rho;
};

// Thrown when the populations leak into the last rows of the basis.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Picture { schroedinger, interaction };

// Integration controls; step is the dimensionless gamma * dt.
struct OracleConfig {
    int dim = 32;
    double step = 1e-3;
    double tol = 1e-6;
    Picture picture = Picture::interaction;
    bool richardson_check = false; // rerun at half step and compare stored states
};

// Ladder and Lindblad operators prebuilt for one basis size.
struct OracleOperators {
    int dim = 0;
    std::vector<double> sq; // sq[n] = sqrt(n), n = 0..dim
    explicit OracleOperators(int n);
};

// Initial states.  Coherent amplitudes are renormalized after truncation;
// the preconditions |alpha|^2 + 6|alpha| + 10 <= dim resp. M + 10 <= dim
// keep the discarded tail negligible.
TruncatedState build_initial_coherent(cplx alpha, int dim);
TruncatedState build_initial_fock(int M, int dim);

// Right-hand side of the master equation applied to state.rho.  The
// interaction picture drops the -i omega [n, rho] term; the dissipator is
// evaluated elementwise in O(dim^2).  A serial reference implementation is
// kept alongside the row-parallel one; both produce bitwise equal results.
void rhs(const PhysParams& p, const OracleOperators& ops, Picture picture,
         const CMatrix& rho, CMatrix& out);
void rhs_serial(const PhysParams& p, const OracleOperators& ops, Picture picture,
                const CMatrix& rho, CMatrix& out);

// Diagnostics of a stored state.
double trace_real(const CMatrix& m);
double hermiticity_defect(const CMatrix& m);    // max |m - m^dag| entry
double tail_mass(const CMatrix& m);             // sum of the last 3 populations

// Classical RK4 with fixed step, states stored at the requested grid times.
// The input state sits at grid.front(); the generator carries no explicit
// time dependence, so any start time works.  Each grid interval is subdivided
// into an even number of steps no larger than cfg.step.  Throws
// TruncationError when the tail mass grows past 1e-8.  With
// cfg.richardson_check set, the propagation is repeated at half step and
// every stored entry must agree to 1e-9.
std::vector<TruncatedState> propagate(const TruncatedState& state, const PhysParams& p,
                                      const std::vector<double>& grid,
                                      const OracleConfig& cfg);

// Figures of merit between the initial and an evolved state.  v_tilde applies
// the full generator (commutator included) to rhot: the Hilbert-Schmidt norm
// of the generator action is picture-invariant, so this matches the
// Schroedinger-picture speed even along interaction-picture trajectories.
struct OracleObservables {
    double F = 1.0;
    double P = 1.0;
    double G = 0.0;
    double v_tilde = 0.0;
};
OracleObservables observables(const TruncatedState& rho0, const TruncatedState& rhot,
                              const PhysParams& p);

// || L^dag rho(0) ||_2 with the adjoint generator; the static bound.
double static_qsl_numeric(const TruncatedState& rho0, const PhysParams& p);

// First moments of a truncated state, for the addition-rule checks.
struct StateMoments {
    cplx mean_a;
    double mean_n = 0.0;
    cplx mean_a2;
};
StateMoments state_moments(const TruncatedState& s);

// Basis-size heuristic covering coherent Poisson tails and thermal
// geometric tails at once.
int suggest_dim(double alpha_abs, int M, double nbar_R);

} // namespace qslb
