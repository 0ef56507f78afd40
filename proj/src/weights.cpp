#include "fracpde/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracpde {

namespace {

void check_count(int n) {
    if (n < 0) throw std::invalid_argument("weight count must be nonnegative, got " + std::to_string(n));
}

}  // namespace

FracOrder::FracOrder(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0))
        throw std::invalid_argument("fractional order must lie in (0,1), got " + std::to_string(value));
}

FracOrder FracOrder::probe(double value) {
    if (!(value > 0.0 && value <= 1.0))
        throw std::invalid_argument("probe order must lie in (0,1], got " + std::to_string(value));
    return FracOrder(value, Widened{});
}

ShiftPair::ShiftPair(int p_, int q_) : p(p_), q(q_) {
    if (p == q) throw std::invalid_argument("shift pair requires p != q, got p = q = " + std::to_string(p));
}

WeightSequence grunwald_derivative_weights(FracOrder order, int n) {
    check_count(n);
    const double a = order.value();
    std::vector<double> g(static_cast<size_t>(n) + 1);
    g[0] = 1.0;
    for (int k = 1; k <= n; ++k) g[k] = (1.0 - (a + 1.0) / k) * g[k - 1];
    return {order, WeightKind::GrunwaldDerivative, std::move(g)};
}

WeightSequence grunwald_integral_weights(FracOrder order, int n) {
    check_count(n);
    const double a = order.value();
    std::vector<double> w(static_cast<size_t>(n) + 1);
    w[0] = 1.0;
    for (int k = 1; k <= n; ++k) w[k] = (1.0 + (a - 1.0) / k) * w[k - 1];
    return {order, WeightKind::GrunwaldIntegral, std::move(w)};
}

WeightSequence lambda_subdiffusion(FracOrder order, int n) {
    check_count(n);
    const double a = order.value();
    const double c0 = (2.0 + a) / 2.0;
    const double c1 = a / 2.0;
    const WeightSequence g = grunwald_derivative_weights(order, n);
    std::vector<double> lam(static_cast<size_t>(n) + 1);
    lam[0] = c0 * g.values[0];
    for (int k = 1; k <= n; ++k) lam[k] = c0 * g.values[k] - c1 * g.values[k - 1];
    return {order, WeightKind::LambdaSubdiffusion, std::move(lam)};
}

WeightSequence lambda_wave(FracOrder order, int n) {
    check_count(n);
    const double a = order.value();
    const double c0 = 1.0 - a / 2.0;
    const double c1 = a / 2.0;
    const WeightSequence w = grunwald_integral_weights(order, n);
    std::vector<double> lam(static_cast<size_t>(n) + 1);
    lam[0] = c0 * w.values[0];
    for (int k = 1; k <= n; ++k) lam[k] = c0 * w.values[k] + c1 * w.values[k - 1];
    return {order, WeightKind::LambdaWave, std::move(lam)};
}

std::pair<double, double> weighted_shift_coefficients_derivative(FracOrder order, ShiftPair shifts) {
    const double a = order.value();
    const double p = shifts.p, q = shifts.q;
    return {(a - 2.0 * q) / (2.0 * (p - q)), (2.0 * p - a) / (2.0 * (p - q))};
}

std::pair<double, double> weighted_shift_coefficients_integral(FracOrder order, ShiftPair shifts) {
    const double a = order.value();
    const double p = shifts.p, q = shifts.q;
    return {(2.0 * q + a) / (2.0 * (q - p)), (2.0 * p + a) / (2.0 * (p - q))};
}

double gen_fn_subdiffusion(FracOrder order, double x) {
    if (!(x >= 0.0 && x <= M_PI))
        throw std::invalid_argument("generating-function argument must lie in [0,pi]");
    const double a = order.value();
    const double phase = (a / 2.0) * (M_PI - x);
    const double envelope = std::pow(2.0 * std::sin(x / 2.0), a);
    return envelope * (((2.0 + a) / 2.0) * std::cos(phase) - (a / 2.0) * std::cos(phase - x));
}

double gen_fn_wave(FracOrder order, double x) {
    if (!(x > 0.0 && x <= M_PI))
        throw std::invalid_argument("generating-function argument must lie in (0,pi]");
    const double a = order.value();
    const double phase = (a / 2.0) * (M_PI - x);
    const double envelope = std::pow(2.0 * std::sin(x / 2.0), -a);
    return envelope * ((1.0 - a / 2.0) * std::cos(phase) + (a / 2.0) * std::cos(x + phase));
}

}  // namespace fracpde
