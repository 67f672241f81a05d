#include "srf/geometry.hpp"
#include "srf/errors.hpp"
#include "srf/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace srf {

PotentialProfile make_potential(const Background& bg, Profile values) {
    PotentialProfile p;
    p.values = std::move(values);
    p.ds = bg.deriv_s(p.values);
    p.dss = bg.deriv_s(p.ds); // = x(1-x) * L(phi)
    return p;
}

Profile density_ratio(const Background& bg, const Profile& phi) {
    Profile rho = bg.lop(phi);
    for (int i = 0; i < bg.N; ++i) rho[i] += bg.rho0;
    return rho;
}

namespace {

void check_positive(const Profile& rho) {
    for (int i = 0; i < static_cast<int>(rho.size()); ++i)
        if (!(rho[i] > 0.0)) throw PositivityViolation(i, rho[i]);
}

} // namespace

Profile scalar_curvature(const Background& bg, const Profile& ratio) {
    check_positive(ratio);
    Profile lg(bg.N);
    for (int i = 0; i < bg.N; ++i) lg[i] = std::log(ratio[i]);
    Profile R = bg.lop(lg);
    for (int i = 0; i < bg.N; ++i) R[i] = (2.0 - R[i]) / ratio[i];
    return R;
}

Profile laplacian(const Background& bg, const Profile& ratio, const Profile& f) {
    Profile y = bg.lop(f);
    for (int i = 0; i < bg.N; ++i) y[i] /= ratio[i];
    return y;
}

namespace {

/// 4th-order cumulative integral on the uniform grid, G[0] = 0.
Profile cumulative(const Background& bg, const Profile& f) {
    const int N = bg.N;
    const double dx = bg.dx;
    Profile G(N, 0.0);
    for (int i = 1; i < N; ++i) {
        double inc;
        if (i == 1)
            inc = dx / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
        else if (i == N - 1)
            inc = dx / 24.0 * (f[i - 3] - 5.0 * f[i - 2] + 19.0 * f[i - 1] + 9.0 * f[i]);
        else
            inc = dx / 24.0 * (-f[i - 2] + 13.0 * f[i - 1] + 13.0 * f[i] - f[i + 1]);
        G[i] = G[i - 1] + inc;
    }
    return G;
}

} // namespace

RicciPotential transverse_ricci_potential(const Background& bg, const Profile& ratio) {
    check_positive(ratio);
    const int N = bg.N;
    Profile lg(N);
    for (int i = 0; i < N; ++i) lg[i] = std::log(ratio[i] / bg.rho0);
    // RHS of (X h_x)_x = q: q = L log(rho/rho0) + kappa (rho - rho0).
    Profile q = bg.lop(lg);
    for (int i = 0; i < N; ++i) q[i] += bg.kappa * (ratio[i] - bg.rho0);

    RicciPotential out;
    out.solvability = bg.quad(q);
    if (std::abs(out.solvability) > 1e-6)
        throw SolvabilityResidualExceeded(out.solvability);

    Profile G = cumulative(bg, q); // X h_x, with the decaying left flux built in
    Profile r(N);
    for (int i = 1; i < N - 1; ++i) r[i] = G[i] / bg.X[i];
    r[0] = q[0];       // limit of G/X at x=0 (l'Hopital)
    r[N - 1] = -q[N - 1];
    out.h = cumulative(bg, r);
    // normalize int e^h d(mu) = V
    Profile eh(N);
    for (int i = 0; i < N; ++i) eh[i] = std::exp(out.h[i]);
    const double c = std::log(integrate(bg, ratio, eh));
    for (int i = 0; i < N; ++i) out.h[i] -= c;
    return out;
}

MetricData metric_density(const Background& bg, const PotentialProfile& phi) {
    MetricData m;
    m.ratio = density_ratio(bg, phi.values);
    check_positive(m.ratio);
    m.W.resize(bg.N);
    for (int i = 0; i < bg.N; ++i) m.W[i] = bg.X[i] * m.ratio[i];
    m.R = scalar_curvature(bg, m.ratio);
    m.h = transverse_ricci_potential(bg, m.ratio).h;
    return m;
}

double integrate(const Background& bg, const Profile& ratio, const Profile& f) {
    double s = 0.0;
    for (int i = 0; i < bg.N; ++i) s += bg.Hw[i] * ratio[i] * f[i];
    return s / bg.V;
}

double grad_norm_sq(const Background& bg, const Profile& f) {
    Profile g = bg.deriv(f);
    double s = 0.0;
    for (int i = 0; i < bg.N; ++i) s += bg.Hw[i] * bg.X[i] * g[i] * g[i];
    return s / bg.V;
}

Profile legendre_profile(const Background& bg, int k) {
    Profile p(bg.N);
    for (int i = 0; i < bg.N; ++i) {
        const double t = 2.0 * bg.x[i] - 1.0;
        if (k == 0) { p[i] = 1.0; continue; }
        double pm = 1.0, pc = t;
        for (int n = 1; n < k; ++n) {
            const double pn = ((2.0 * n + 1.0) * t * pc - n * pm) / (n + 1.0);
            pm = pc;
            pc = pn;
        }
        p[i] = pc;
    }
    return p;
}

PotentialProfile sample_potential(const Background& bg, const SampleSpec& spec,
                                  std::uint64_t seed) {
    Rng rng(seed);
    Profile phi(bg.N, 0.0);
    for (int j = 0; j < spec.mode_count; ++j) {
        const int k = spec.sector == Sector::Even ? 2 * (j + 1) : j + 1;
        const double c = spec.amplitude * rng.symmetric() / (1.0 + 0.5 * k * (k + 1));
        const Profile pk = legendre_profile(bg, k);
        for (int i = 0; i < bg.N; ++i) phi[i] += c * pk[i];
    }
    const double target = 0.1 * bg.rho0;
    auto margin_ok = [&](double s) {
        Profile rho = bg.lop(phi);
        double mn = bg.rho0 + s * rho[0];
        for (int i = 0; i < bg.N; ++i) mn = std::min(mn, bg.rho0 + s * rho[i]);
        return mn >= target;
    };
    double scale = 1.0;
    if (!margin_ok(scale)) {
        int attempts = 0;
        while (!margin_ok(scale)) {
            scale *= 0.5;
            if (++attempts > 100) throw SamplingFailed();
        }
        // largest admissible scale in [scale, 2*scale]
        double lo = scale, hi = 2.0 * scale;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (margin_ok(mid) ? lo : hi) = mid;
        }
        scale = lo;
    }
    for (double& v : phi) v *= scale;
    return make_potential(bg, phi);
}

std::vector<double> linearized_spectrum(const Background& bg, const Profile& ratio,
                                        Sector sector, int count) {
    check_positive(ratio);
    const int N = bg.N;
    // basis: mean-zero Legendre polynomials of the sector
    const int kmax = std::min(64, (N - 1) / 4);
    std::vector<Profile> basis, dbasis;
    const double vol = [&] {
        double s = 0.0;
        for (int i = 0; i < N; ++i) s += bg.Hw[i] * ratio[i];
        return s;
    }();
    for (int k = sector == Sector::Even ? 2 : 1; k <= kmax;
         k += sector == Sector::Even ? 2 : 1) {
        Profile p = legendre_profile(bg, k);
        double mean = 0.0;
        for (int i = 0; i < N; ++i) mean += bg.Hw[i] * ratio[i] * p[i];
        mean /= vol;
        for (int i = 0; i < N; ++i) p[i] -= mean;
        dbasis.push_back(bg.deriv(p));
        basis.push_back(std::move(p));
    }
    const int K = static_cast<int>(basis.size());
    Eigen::MatrixXd A(K, K), M(K, K);
    for (int a = 0; a < K; ++a)
        for (int b = a; b < K; ++b) {
            double e = 0.0, m = 0.0;
            for (int i = 0; i < N; ++i) {
                e += bg.Hw[i] * bg.X[i] * dbasis[a][i] * dbasis[b][i];
                m += bg.Hw[i] * ratio[i] * basis[a][i] * basis[b][i];
            }
            A(a, b) = A(b, a) = e - bg.kappa * m;
            M(a, b) = M(b, a) = m;
        }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, M);
    std::vector<double> eigs(es.eigenvalues().data(),
                             es.eigenvalues().data() + K);
    std::sort(eigs.begin(), eigs.end());
    if (static_cast<int>(eigs.size()) > count) eigs.resize(count);
    return eigs;
}

double spectral_gap(const Background& bg, const Profile& ratio, Sector sector) {
    return linearized_spectrum(bg, ratio, sector, 1).at(0);
}

} // namespace srf
