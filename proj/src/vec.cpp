#include "minkgeo/vec.hpp"

#include <algorithm>
#include <cmath>

namespace minkgeo {

std::array<double, 3> sym_eigenvalues(const SymMat& m) {
    const int n = m.n;
    if (n < 1 || n > 3) throw std::invalid_argument("sym_eigenvalues: dimension must be 1..3");
    double a[3][3] = {};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = 0.5 * (m.at(i, j) + m.at(j, i));

    // cyclic Jacobi
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-300) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::array<double, 3> ev{a[0][0], n > 1 ? a[1][1] : a[0][0], n > 2 ? a[2][2] : a[0][0]};
    std::sort(ev.begin(), ev.begin() + n);
    for (int i = n; i < 3; ++i) ev[static_cast<size_t>(i)] = ev[static_cast<size_t>(n - 1)];
    return ev;
}

}  // namespace minkgeo
