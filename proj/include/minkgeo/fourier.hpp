#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace minkgeo {

/// Truncated Fourier series on S^1 holding only antipodally even modes:
///   g(theta) = a_0 + sum_{k=1..K} a_{2k} cos(2k theta) + b_{2k} sin(2k theta).
/// Represents pi-periodic functions (norm restrictions, Crofton densities).
class EvenFourierSeries {
public:
    EvenFourierSeries();
    /// a has K+1 entries (a[0] is the constant term), b has K+1 with b[0] ignored.
    EvenFourierSeries(std::vector<double> a, std::vector<double> b);

    int order() const { return static_cast<int>(a_.size()) - 1; }
    const std::vector<double>& cos_coeffs() const { return a_; }
    const std::vector<double>& sin_coeffs() const { return b_; }

    double operator()(double theta) const;
    void eval_batch(const double* theta, size_t n, double* out) const;

    /// d/dtheta and d^2/dtheta^2 of the series.
    double derivative(double theta) const;
    double second_derivative(double theta) const;

    double min_on_grid(int n = 4096) const;
    double max_abs_on_grid(int n = 4096) const;

    /// Fraction of coefficient energy in the top quarter of the spectrum;
    /// the truncation-tail warning threshold compares against this.
    double tail_energy_fraction() const;

    /// Trapezoid-rule fit from samples on the uniform grid theta_j = 2 pi j / n
    /// over [0, 2 pi). Requires n >= 4*order+1. Odd modes must vanish below
    /// `even_tol` (relative to the largest even coefficient) and are dropped.
    static EvenFourierSeries fit(const std::vector<double>& samples, int order,
                                 double even_tol = 1e-8);
    static EvenFourierSeries fit(const std::function<double(double)>& f, int order,
                                 int n_nodes = 0, double even_tol = 1e-8);

    std::string to_json() const;
    static EvenFourierSeries from_json(const std::string& text);

private:
    std::vector<double> a_;
    std::vector<double> b_;
};

}  // namespace minkgeo
