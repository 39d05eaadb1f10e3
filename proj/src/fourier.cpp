#include "minkgeo/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "minkgeo/jsonio.hpp"
#include "minkgeo/kernels.hpp"

namespace minkgeo {

EvenFourierSeries::EvenFourierSeries() : a_(1, 0.0), b_(1, 0.0) {}

EvenFourierSeries::EvenFourierSeries(std::vector<double> a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty() || a_.size() != b_.size())
        throw std::invalid_argument("EvenFourierSeries: coefficient arrays must match and be nonempty");
    b_[0] = 0.0;
}

double EvenFourierSeries::operator()(double theta) const {
    double out;
    eval_batch(&theta, 1, &out);
    return out;
}

void EvenFourierSeries::eval_batch(const double* theta, size_t n, double* out) const {
    kernels::active_kernels().even_fourier_eval(a_.data(), b_.data(),
                                                static_cast<size_t>(order()), theta, n, out);
}

double EvenFourierSeries::derivative(double theta) const {
    double s = 0.0;
    for (int k = 1; k <= order(); ++k) {
        const double m = 2.0 * k;
        s += m * (-a_[static_cast<size_t>(k)] * std::sin(m * theta) +
                  b_[static_cast<size_t>(k)] * std::cos(m * theta));
    }
    return s;
}

double EvenFourierSeries::second_derivative(double theta) const {
    double s = 0.0;
    for (int k = 1; k <= order(); ++k) {
        const double m = 2.0 * k;
        s -= m * m * (a_[static_cast<size_t>(k)] * std::cos(m * theta) +
                      b_[static_cast<size_t>(k)] * std::sin(m * theta));
    }
    return s;
}

double EvenFourierSeries::min_on_grid(int n) const {
    double mn = (*this)(0.0);
    for (int i = 1; i < n; ++i) mn = std::min(mn, (*this)(2.0 * M_PI * i / n));
    return mn;
}

double EvenFourierSeries::max_abs_on_grid(int n) const {
    double mx = 0.0;
    for (int i = 0; i < n; ++i) mx = std::max(mx, std::abs((*this)(2.0 * M_PI * i / n)));
    return mx;
}

double EvenFourierSeries::tail_energy_fraction() const {
    const int K = order();
    if (K == 0) return 0.0;
    double total = 0.0, tail = 0.0;
    const int cut = K - K / 4;
    for (int k = 1; k <= K; ++k) {
        const double e = a_[static_cast<size_t>(k)] * a_[static_cast<size_t>(k)] +
                         b_[static_cast<size_t>(k)] * b_[static_cast<size_t>(k)];
        total += e;
        if (k > cut) tail += e;
    }
    total += a_[0] * a_[0];
    return total > 0.0 ? tail / total : 0.0;
}

EvenFourierSeries EvenFourierSeries::fit(const std::vector<double>& samples, int order,
                                         double even_tol) {
    if (order < 0) throw std::invalid_argument("fit: order must be >= 0");
    const size_t n = samples.size();
    if (n < static_cast<size_t>(4 * order + 1))
        throw std::invalid_argument("fit: need at least 4*order+1 uniform nodes on [0,2pi)");

    // Trapezoid rule == plain average on a periodic uniform grid.
    const int mmax = 2 * order + 1;
    std::vector<double> ca(static_cast<size_t>(mmax) + 1, 0.0);
    std::vector<double> cb(static_cast<size_t>(mmax) + 1, 0.0);
    for (size_t j = 0; j < n; ++j) {
        const double th = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
        const double f = samples[j];
        ca[0] += f;
        for (int m = 1; m <= mmax; ++m) {
            ca[static_cast<size_t>(m)] += f * std::cos(m * th);
            cb[static_cast<size_t>(m)] += f * std::sin(m * th);
        }
    }
    ca[0] /= static_cast<double>(n);
    for (int m = 1; m <= mmax; ++m) {
        ca[static_cast<size_t>(m)] *= 2.0 / static_cast<double>(n);
        cb[static_cast<size_t>(m)] *= 2.0 / static_cast<double>(n);
    }

    double even_max = std::abs(ca[0]);
    for (int k = 1; k <= order; ++k) {
        even_max = std::max({even_max, std::abs(ca[static_cast<size_t>(2 * k)]),
                             std::abs(cb[static_cast<size_t>(2 * k)])});
    }
    double odd_max = 0.0;
    for (int m = 1; m <= mmax; m += 2)
        odd_max = std::max({odd_max, std::abs(ca[static_cast<size_t>(m)]),
                            std::abs(cb[static_cast<size_t>(m)])});
    if (odd_max > even_tol * std::max(1.0, even_max))
        throw std::invalid_argument("fit: input is not antipodally even (odd modes " +
                                    std::to_string(odd_max) + " above tolerance)");

    std::vector<double> a(static_cast<size_t>(order) + 1), b(static_cast<size_t>(order) + 1, 0.0);
    a[0] = ca[0];
    for (int k = 1; k <= order; ++k) {
        a[static_cast<size_t>(k)] = ca[static_cast<size_t>(2 * k)];
        b[static_cast<size_t>(k)] = cb[static_cast<size_t>(2 * k)];
    }
    return EvenFourierSeries(std::move(a), std::move(b));
}

EvenFourierSeries EvenFourierSeries::fit(const std::function<double(double)>& f, int order,
                                         int n_nodes, double even_tol) {
    if (n_nodes <= 0) n_nodes = std::max(4 * order + 2, 4096);
    std::vector<double> samples(static_cast<size_t>(n_nodes));
    for (int j = 0; j < n_nodes; ++j)
        samples[static_cast<size_t>(j)] = f(2.0 * M_PI * j / n_nodes);
    return fit(samples, order, even_tol);
}

std::string EvenFourierSeries::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.field("space", "S1");
    w.field("order", order());
    w.key("coefficients").begin_array();
    w.value(a_[0]);
    for (int k = 1; k <= order(); ++k) {
        w.value(a_[static_cast<size_t>(k)]);
        w.value(b_[static_cast<size_t>(k)]);
    }
    w.end_array();
    w.end_object();
    return w.str();
}

EvenFourierSeries EvenFourierSeries::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (j.at("space").get<std::string>() != "S1")
        throw std::invalid_argument("from_json: expected space S1");
    const int K = j.at("order").get<int>();
    const auto& c = j.at("coefficients");
    if (static_cast<int>(c.size()) != 1 + 2 * K)
        throw std::invalid_argument("from_json: coefficient count does not match order");
    std::vector<double> a(static_cast<size_t>(K) + 1), b(static_cast<size_t>(K) + 1, 0.0);
    a[0] = c.at(0).get<double>();
    for (int k = 1; k <= K; ++k) {
        a[static_cast<size_t>(k)] = c.at(static_cast<size_t>(2 * k - 1)).get<double>();
        b[static_cast<size_t>(k)] = c.at(static_cast<size_t>(2 * k)).get<double>();
    }
    return EvenFourierSeries(std::move(a), std::move(b));
}

}  // namespace minkgeo
