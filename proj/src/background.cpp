#include "srf/background.hpp"
#include "srf/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace srf {

namespace {

// SBP(4,2) boundary closure: 4 rows, antimirrored on the right.
constexpr double kBoundaryRows[4][6] = {
    {-24.0 / 17.0, 59.0 / 34.0, -4.0 / 17.0, -3.0 / 34.0, 0.0, 0.0},
    {-1.0 / 2.0, 0.0, 1.0 / 2.0, 0.0, 0.0, 0.0},
    {4.0 / 43.0, -59.0 / 86.0, 0.0, 59.0 / 86.0, -4.0 / 43.0, 0.0},
    {3.0 / 98.0, 0.0, -59.0 / 98.0, 0.0, 32.0 / 49.0, -4.0 / 49.0},
};
constexpr double kNormWeights[4] = {17.0 / 48.0, 59.0 / 48.0, 43.0 / 48.0, 49.0 / 48.0};
constexpr double kInterior[5] = {1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0};

} // namespace

void Background::deriv(const Profile& f, Profile& y) const {
    y.resize(N);
    const double inv = 1.0 / dx;
    for (int r = 0; r < 4; ++r) {
        double a = 0.0, b = 0.0;
        for (int j = 0; j < 6; ++j) {
            a += kBoundaryRows[r][j] * f[j];
            b -= kBoundaryRows[r][j] * f[N - 1 - j];
        }
        y[r] = a * inv;
        y[N - 1 - r] = b * inv;
    }
    for (int i = 4; i < N - 4; ++i) {
        y[i] = (kInterior[0] * f[i - 2] + kInterior[1] * f[i - 1] +
                kInterior[3] * f[i + 1] + kInterior[4] * f[i + 2]) * inv;
    }
}

Profile Background::deriv(const Profile& f) const {
    Profile y;
    deriv(f, y);
    return y;
}

Profile Background::deriv_s(const Profile& f) const {
    Profile y = deriv(f);
    for (int i = 0; i < N; ++i) y[i] *= X[i];
    return y;
}

void Background::lop(const Profile& f, Profile& y, Profile& work) const {
    deriv(f, work);
    for (int i = 0; i < N; ++i) work[i] *= X[i];
    deriv(work, y);
}

Profile Background::lop(const Profile& f) const {
    Profile y, work;
    lop(f, y, work);
    return y;
}

double Background::quad(const Profile& f) const {
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += Hw[i] * f[i];
    return s;
}

double Background::mean0(const Profile& f) const {
    return quad(f) * rho0 / V;
}

void Background::project_gauge(Profile& f) const {
    for (const Profile& b : gauge_basis_) {
        double c = 0.0;
        for (int i = 0; i < N; ++i) c += Hw[i] * rho0 * b[i] * f[i];
        for (int i = 0; i < N; ++i) f[i] -= c * b[i];
    }
}

Background build_background(const GeometryConfig& config) {
    std::vector<std::string> violations;
    if (config.n != 1)
        violations.push_back("geometry.n must be 1 (got " + std::to_string(config.n) + ")");
    if (config.grid_nodes < 65)
        violations.push_back("geometry.grid_nodes must be >= 65 (got " +
                             std::to_string(config.grid_nodes) + ")");
    if (config.grid_nodes % 2 == 0)
        violations.push_back("geometry.grid_nodes must be odd (got " +
                             std::to_string(config.grid_nodes) + ")");
    if (config.quadrature != "sbp4")
        violations.push_back("geometry.quadrature must be \"sbp4\" (got \"" +
                             config.quadrature + "\")");
    if (!violations.empty()) throw ValidationError(violations);

    Background bg;
    bg.config = config;
    bg.N = config.grid_nodes;
    bg.dx = 1.0 / (bg.N - 1);
    const bool unit = config.normalization == Normalization::Unit;
    bg.kappa = unit ? 1.0 : 2.0 * config.n + 2.0;
    bg.rho0 = unit ? 2.0 : 0.5;

    bg.x.resize(bg.N);
    bg.X.resize(bg.N);
    bg.Hw.assign(bg.N, bg.dx);
    for (int i = 0; i < bg.N; ++i) {
        bg.x[i] = static_cast<double>(i) * bg.dx;
        bg.X[i] = bg.x[i] * (1.0 - bg.x[i]);
    }
    for (int r = 0; r < 4; ++r) {
        bg.Hw[r] = kNormWeights[r] * bg.dx;
        bg.Hw[bg.N - 1 - r] = kNormWeights[r] * bg.dx;
    }
    bg.V = bg.quad(Profile(bg.N, 1.0)) * bg.rho0;
    bg.h0.assign(bg.N, 0.0); // Einstein background

    // Gauge basis: null space of the interior rows of D (vectors with
    // X * Df = 0), which contains the constants plus the endpoint kernel
    // mode; orthonormalized in the d(mu0) inner product.
    const int N = bg.N;
    Eigen::MatrixXd Dint(N - 2, N);
    Dint.setZero();
    const double inv = 1.0 / bg.dx;
    for (int r = 1; r < 4; ++r)
        for (int j = 0; j < 6; ++j) {
            Dint(r - 1, j) = kBoundaryRows[r][j] * inv;
            Dint(N - 2 - r, N - 1 - j) = -kBoundaryRows[r][j] * inv;
        }
    for (int i = 4; i < N - 4; ++i)
        for (int j = 0; j < 5; ++j) Dint(i - 1, i - 2 + j) = kInterior[j] * inv;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(Dint);
    lu.setThreshold(1e-10);
    Eigen::MatrixXd ker = lu.kernel();

    auto dot0 = [&](const Profile& a, const Profile& b) {
        double s = 0.0;
        for (int i = 0; i < N; ++i) s += bg.Hw[i] * bg.rho0 * a[i] * b[i];
        return s;
    };
    std::vector<Profile> basis;
    auto add = [&](Profile v) {
        for (int pass = 0; pass < 2; ++pass)
            for (const Profile& b : basis) {
                double c = dot0(v, b);
                for (int i = 0; i < N; ++i) v[i] -= c * b[i];
            }
        double nrm = std::sqrt(dot0(v, v));
        if (nrm > 1e-8) {
            for (int i = 0; i < N; ++i) v[i] /= nrm;
            basis.push_back(std::move(v));
        }
    };
    add(Profile(N, 1.0));
    for (int c = 0; c < ker.cols(); ++c) {
        Profile v(N);
        for (int i = 0; i < N; ++i) v[i] = ker(i, c);
        add(std::move(v));
    }
    bg.gauge_basis_ = std::move(basis);
    return bg;
}

} // namespace srf
