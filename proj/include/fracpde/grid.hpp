#pragma once

#include <stdexcept>
#include <vector>

namespace fracpde {

using Field = std::vector<double>;  // one value per spatial node, length M+1

/// Thrown when a linear solve meets a system that lost strict diagonal
/// dominance; the schemes guarantee dominance, so this signals mis-assembly.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Uniform space-time mesh: M spatial intervals on [0, L], N time steps on [0, T].
struct Grid {
    int M;
    int N;
    double L;
    double T;

    Grid(int M_, int N_, double L_, double T_);

    double h() const { return L / M; }
    double tau() const { return T / N; }
    double x(int i) const { return i * h(); }
    double t(int k) const { return k * tau(); }
};

/// Compact average (u_{i-1} + 10 u_i + u_{i+1}) / 12 at interior nodes;
/// boundary nodes pass through unchanged.
Field apply_compact(const Field& u);

/// Centered second difference (u_{i-1} - 2 u_i + u_{i+1}) / h^2 at interior
/// nodes; boundary entries are zero.
Field second_diff(const Field& u, double h);

/// sqrt(h * sum_{i=1}^{M-1} u_i^2); boundary nodes excluded.
double discrete_l2_norm(const Field& u, double h);

/// max_{0<=i<=M} |u_i|; boundary nodes included.
double max_norm(const Field& u);

/// Interior-system matrix: diag has size n, lower/upper have size n-1.
struct Tridiagonal {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
};

/// Elimination without pivoting. Requires strict diagonal dominance per row
/// (1e-14 absolute slack); violations raise NumericalError.
std::vector<double> thomas_solve(const Tridiagonal& sys, const std::vector<double>& rhs);

}  // namespace fracpde
