#include "fracpde/grid.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace fracpde {

Grid::Grid(int M_, int N_, double L_, double T_) : M(M_), N(N_), L(L_), T(T_) {
    if (M < 2) throw std::invalid_argument("grid needs at least 2 spatial intervals, got " + std::to_string(M));
    if (N < 1) throw std::invalid_argument("grid needs at least 1 time step, got " + std::to_string(N));
    if (!(L > 0.0)) throw std::invalid_argument("domain length must be positive");
    if (!(T > 0.0)) throw std::invalid_argument("final time must be positive");
}

Field apply_compact(const Field& u) {
    const size_t m = u.size();
    if (m < 3) throw std::invalid_argument("compact average needs at least 3 nodes");
    Field out(m);
    out[0] = u[0];
    out[m - 1] = u[m - 1];
    for (size_t i = 1; i + 1 < m; ++i) out[i] = (u[i - 1] + 10.0 * u[i] + u[i + 1]) / 12.0;
    return out;
}

Field second_diff(const Field& u, double h) {
    const size_t m = u.size();
    if (m < 3) throw std::invalid_argument("second difference needs at least 3 nodes");
    if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
    Field out(m, 0.0);
    const double inv_h2 = 1.0 / (h * h);
    for (size_t i = 1; i + 1 < m; ++i) out[i] = (u[i - 1] - 2.0 * u[i] + u[i + 1]) * inv_h2;
    return out;
}

double discrete_l2_norm(const Field& u, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
    double s = 0.0;
    for (size_t i = 1; i + 1 < u.size(); ++i) s += u[i] * u[i];
    return std::sqrt(h * s);
}

double max_norm(const Field& u) {
    double m = 0.0;
    for (double v : u) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> thomas_solve(const Tridiagonal& sys, const std::vector<double>& rhs) {
    const size_t n = sys.diag.size();
    if (n == 0) throw std::invalid_argument("empty tridiagonal system");
    if (sys.lower.size() != n - 1 || sys.upper.size() != n - 1)
        throw std::invalid_argument("tridiagonal band sizes must be diag-1");
    if (rhs.size() != n) throw std::invalid_argument("rhs size does not match system");

    constexpr double slack = 1e-14;
    for (size_t i = 0; i < n; ++i) {
        const double off = (i > 0 ? std::abs(sys.lower[i - 1]) : 0.0) +
                           (i + 1 < n ? std::abs(sys.upper[i]) : 0.0);
        if (std::abs(sys.diag[i]) - off < -slack || sys.diag[i] == 0.0)
            throw NumericalError("tridiagonal row " + std::to_string(i) +
                                 " lost strict diagonal dominance");
    }

    std::vector<double> d(n), x(n);
    d[0] = sys.diag[0];
    x[0] = rhs[0];
    for (size_t i = 1; i < n; ++i) {
        const double m = sys.lower[i - 1] / d[i - 1];
        d[i] = sys.diag[i] - m * sys.upper[i - 1];
        x[i] = rhs[i] - m * x[i - 1];
    }
    x[n - 1] /= d[n - 1];
    for (size_t i = n - 1; i-- > 0;) x[i] = (x[i] - sys.upper[i] * x[i + 1]) / d[i];
    return x;
}

}  // namespace fracpde
