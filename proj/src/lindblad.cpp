#include "qslb/lindblad.hpp"

#include <cmath>

namespace qslb {

namespace {

// One row of the elementwise master-equation action; shared by the serial
// and parallel drivers so the two stay bitwise identical.
inline void rhs_row(const PhysParams& p, const OracleOperators& ops, Picture picture,
                    const CMatrix& rho, CMatrix& out, int m) {
    const int dim = ops.dim;
    const double g = p.gamma, nR = p.nbar_R, w = p.omega;
    for (int n = 0; n < dim; ++n) {
        cplx v = rho(m, n) * (-g * (nR * (0.5 * (m + n) + 1.0) + (nR + 1.0) * 0.5 * (m + n)));
        if (m > 0 && n > 0) v += rho(m - 1, n - 1) * (g * nR * ops.sq[m] * ops.sq[n]);
        if (m + 1 < dim && n + 1 < dim)
            v += rho(m + 1, n + 1) * (g * (nR + 1.0) * ops.sq[m + 1] * ops.sq[n + 1]);
        if (picture == Picture::schroedinger)
            v += cplx(0.0, -w * (m - n)) * rho(m, n);
        out(m, n) = v;
    }
}

void add_scaled(CMatrix& out, const CMatrix& base, double h, const CMatrix& k) {
    const size_t sz = base.a.size();
    for (size_t i = 0; i < sz; ++i) out.a[i] = base.a[i] + h * k.a[i];
}

void rk4_step(const PhysParams& p, const OracleOperators& ops, Picture pic, CMatrix& rho,
              double h, CMatrix& k1, CMatrix& k2, CMatrix& k3, CMatrix& k4, CMatrix& tmp) {
    rhs(p, ops, pic, rho, k1);
    add_scaled(tmp, rho, 0.5 * h, k1);
    rhs(p, ops, pic, tmp, k2);
    add_scaled(tmp, rho, 0.5 * h, k2);
    rhs(p, ops, pic, tmp, k3);
    add_scaled(tmp, rho, h, k3);
    rhs(p, ops, pic, tmp, k4);
    const double h6 = h / 6.0;
    const size_t sz = rho.a.size();
    for (size_t i = 0; i < sz; ++i)
        rho.a[i] += h6 * (k1.a[i] + 2.0 * k2.a[i] + 2.0 * k3.a[i] + k4.a[i]);
}

// Adjoint generator action, i[H,X] plus the Heisenberg-picture dissipator;
// raising and lowering swap roles relative to the forward direction.
void adjoint_generator(const PhysParams& p, const OracleOperators& ops, const CMatrix& x,
                       CMatrix& out) {
    const int dim = ops.dim;
    const double g = p.gamma, nR = p.nbar_R, w = p.omega;
    for (int m = 0; m < dim; ++m) {
        for (int n = 0; n < dim; ++n) {
            cplx v = x(m, n) * (-g * (nR * (0.5 * (m + n) + 1.0) + (nR + 1.0) * 0.5 * (m + n)));
            v += cplx(0.0, w * (m - n)) * x(m, n);
            if (m + 1 < dim && n + 1 < dim)
                v += x(m + 1, n + 1) * (g * nR * ops.sq[m + 1] * ops.sq[n + 1]);
            if (m > 0 && n > 0) v += x(m - 1, n - 1) * (g * (nR + 1.0) * ops.sq[m] * ops.sq[n]);
            out(m, n) = v;
        }
    }
}

double frobenius(const CMatrix& m) {
    double s = 0.0;
    for (const cplx& z : m.a) s += std::norm(z);
    return std::sqrt(s);
}

} // namespace

OracleOperators::OracleOperators(int n) : dim(n) {
    if (n <= 0) throw std::invalid_argument("OracleOperators: dimension must be positive");
    sq.resize(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) sq[k] = std::sqrt(static_cast<double>(k));
}

TruncatedState build_initial_coherent(cplx alpha, int dim) {
    const double a2 = std::norm(alpha);
    const double aAbs = std::sqrt(a2);
    if (a2 + 6.0 * aAbs + 10.0 > dim)
        throw std::invalid_argument("build_initial_coherent: basis too small for this amplitude");
    std::vector<cplx> psi(dim);
    psi[0] = std::exp(-0.5 * a2);
    for (int n = 1; n < dim; ++n) psi[n] = psi[n - 1] * alpha / std::sqrt(double(n));
    double norm2 = 0.0;
    for (const cplx& c : psi) norm2 += std::norm(c);
    const double scale = 1.0 / std::sqrt(norm2);
    TruncatedState s;
    s.dim = dim;
    s.rho = CMatrix(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            s.rho(i, j) = psi[i] * std::conj(psi[j]) * (scale * scale);
    return s;
}

TruncatedState build_initial_fock(int M, int dim) {
    if (M < 0) throw std::invalid_argument("build_initial_fock: negative photon number");
    if (M + 10 > dim)
        throw std::invalid_argument("build_initial_fock: basis too small for this level");
    TruncatedState s;
    s.dim = dim;
    s.rho = CMatrix(dim);
    s.rho(M, M) = 1.0;
    return s;
}

void rhs(const PhysParams& p, const OracleOperators& ops, Picture picture,
         const CMatrix& rho, CMatrix& out) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int m = 0; m < ops.dim; ++m) rhs_row(p, ops, picture, rho, out, m);
}

void rhs_serial(const PhysParams& p, const OracleOperators& ops, Picture picture,
                const CMatrix& rho, CMatrix& out) {
    for (int m = 0; m < ops.dim; ++m) rhs_row(p, ops, picture, rho, out, m);
}

double trace_real(const CMatrix& m) {
    double t = 0.0;
    for (int i = 0; i < m.dim; ++i) t += m(i, i).real();
    return t;
}

double hermiticity_defect(const CMatrix& m) {
    double d = 0.0;
    for (int i = 0; i < m.dim; ++i)
        for (int j = i; j < m.dim; ++j)
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

double tail_mass(const CMatrix& m) {
    double s = 0.0;
    for (int i = std::max(0, m.dim - 3); i < m.dim; ++i) s += m(i, i).real();
    return s;
}

std::vector<TruncatedState> propagate(const TruncatedState& state, const PhysParams& p,
                                      const std::vector<double>& grid,
                                      const OracleConfig& cfg) {
    if (state.dim != state.rho.dim)
        throw std::invalid_argument("propagate: inconsistent state dimensions");
    if (grid.empty()) throw std::invalid_argument("propagate: grid must not be empty");
    for (size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1])
            throw std::invalid_argument("propagate: grid must be strictly increasing");
    if (!(cfg.step > 0.0)) throw std::invalid_argument("propagate: step must be positive");

    if (cfg.richardson_check) {
        OracleConfig base = cfg;
        base.richardson_check = false;
        OracleConfig half = base;
        half.step *= 0.5;
        const std::vector<TruncatedState> coarse = propagate(state, p, grid, base);
        const std::vector<TruncatedState> fine = propagate(state, p, grid, half);
        double worst = 0.0;
        for (size_t i = 0; i < grid.size(); ++i)
            for (size_t j = 0; j < coarse[i].rho.a.size(); ++j)
                worst = std::max(worst, std::abs(coarse[i].rho.a[j] - fine[i].rho.a[j]));
        if (worst > 1e-9)
            throw std::runtime_error("propagate: half-step check failed, defect " +
                                     std::to_string(worst));
        return fine;
    }

    const OracleOperators ops(state.dim);
    const double dtMax = cfg.step / p.gamma;
    CMatrix k1(state.dim), k2(state.dim), k3(state.dim), k4(state.dim), tmp(state.dim);

    std::vector<TruncatedState> out;
    out.reserve(grid.size());
    TruncatedState cur = state;
    out.push_back(cur);
    for (size_t i = 1; i < grid.size(); ++i) {
        const double span = grid[i] - grid[i - 1];
        int nsub = static_cast<int>(std::ceil(span / dtMax));
        if (nsub < 2) nsub = 2;
        if (nsub % 2 != 0) ++nsub;
        const double h = span / nsub;
        for (int s = 0; s < nsub; ++s)
            rk4_step(p, ops, cfg.picture, cur.rho, h, k1, k2, k3, k4, tmp);
        if (tail_mass(cur.rho) > 1e-8)
            throw TruncationError("propagate: population reached the truncation edge at t = " +
                                  std::to_string(grid[i]));
        out.push_back(cur);
    }
    return out;
}

OracleObservables observables(const TruncatedState& rho0, const TruncatedState& rhot,
                              const PhysParams& p) {
    if (rho0.dim != rhot.dim)
        throw std::invalid_argument("observables: dimension mismatch");
    const int dim = rho0.dim;
    OracleObservables o;
    double f = 0.0, pur = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            f += (rho0.rho(i, j) * rhot.rho(j, i)).real();
            pur += (rhot.rho(i, j) * rhot.rho(j, i)).real();
        }
    }
    o.F = f;
    o.P = pur;
    o.G = std::sqrt(std::max(0.0, 1.0 + pur - 2.0 * f));
    const OracleOperators ops(dim);
    CMatrix gen(dim);
    rhs_serial(p, ops, Picture::schroedinger, rhot.rho, gen);
    o.v_tilde = frobenius(gen);
    return o;
}

double static_qsl_numeric(const TruncatedState& rho0, const PhysParams& p) {
    const OracleOperators ops(rho0.dim);
    CMatrix out(rho0.dim);
    adjoint_generator(p, ops, rho0.rho, out);
    return frobenius(out);
}

StateMoments state_moments(const TruncatedState& s) {
    StateMoments m;
    const int dim = s.dim;
    for (int n = 0; n < dim; ++n) {
        m.mean_n += n * s.rho(n, n).real();
        if (n >= 1) m.mean_a += s.rho(n, n - 1) * std::sqrt(double(n));
        if (n >= 2) m.mean_a2 += s.rho(n, n - 2) * std::sqrt(double(n) * (n - 1));
    }
    return m;
}

int suggest_dim(double alpha_abs, int M, double nbar_R) {
    const double big = std::max(alpha_abs * alpha_abs, static_cast<double>(M));
    return static_cast<int>(std::ceil(big) + std::ceil(8.0 * std::sqrt(big + 1.0)) +
                            std::ceil(12.0 * (nbar_R + 1.0)));
}

} // namespace qslb
