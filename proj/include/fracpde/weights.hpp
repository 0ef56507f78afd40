#pragma once

#include <utility>
#include <vector>

namespace fracpde {

/// A fractional order restricted to (0,1), the range on which every weight
/// recurrence below is well defined and sign-stable.
class FracOrder {
public:
    explicit FracOrder(double value);

    double value() const noexcept { return value_; }

    /// Widened constructor admitting the endpoint 1.0, where the binomial
    /// expansions collapse to finite polynomials. Intended for boundary
    /// checks only; solvers always go through the public constructor.
    static FracOrder probe(double value);

private:
    struct Widened {};
    FracOrder(double value, Widened) : value_(value) {}

    double value_;
};

enum class WeightKind {
    GrunwaldDerivative,
    GrunwaldIntegral,
    LambdaSubdiffusion,
    LambdaWave,
};

/// Shift offsets (p, q) of the two superposed difference operators; p != q.
struct ShiftPair {
    int p;
    int q;
    ShiftPair(int p_, int q_);
};

struct WeightSequence {
    FracOrder order;
    WeightKind kind;
    std::vector<double> values;  // index k = 0..n
};

/// Binomial weights of (1-z)^alpha: g_0 = 1, g_k = (1 - (alpha+1)/k) g_{k-1}.
/// g_0 > 0 and g_k < 0 for k >= 1 when alpha is in (0,1).
WeightSequence grunwald_derivative_weights(FracOrder order, int n);

/// Binomial weights of (1-z)^{-alpha}: w_0 = 1, w_k = (1 + (alpha-1)/k) w_{k-1};
/// all positive for alpha in (0,1).
WeightSequence grunwald_integral_weights(FracOrder order, int n);

/// Averaged derivative weights lambda_0 = (2+alpha)/2, and for k >= 1
/// lambda_k = ((2+alpha)/2) g_k - (alpha/2) g_{k-1}.
WeightSequence lambda_subdiffusion(FracOrder order, int n);

/// Averaged integral weights lambda_0 = 1 - alpha/2, and for k >= 1
/// lambda_k = (1 - alpha/2) w_k + (alpha/2) w_{k-1}.
WeightSequence lambda_wave(FracOrder order, int n);

/// Coefficients of the two shifted operators combined so the O(tau) error
/// terms cancel: ((alpha-2q)/(2(p-q)), (2p-alpha)/(2(p-q))). Sum is 1.
std::pair<double, double> weighted_shift_coefficients_derivative(FracOrder order, ShiftPair shifts);

/// Integral-operator analogue: ((2q+alpha)/(2(q-p)), (2p+alpha)/(2(p-q))). Sum is 1.
std::pair<double, double> weighted_shift_coefficients_integral(FracOrder order, ShiftPair shifts);

/// Generating function of the subdiffusion lambda weights on [0, pi];
/// nonnegativity over the interval certifies positive semi-definiteness of
/// the associated Toeplitz quadratic form.
double gen_fn_subdiffusion(FracOrder order, double x);

/// Generating function of the wave lambda weights on (0, pi]; x = 0 is
/// outside the domain (the negative power diverges there).
double gen_fn_wave(FracOrder order, double x);

}  // namespace fracpde
