#pragma once

#include "minkgeo/cosine.hpp"
#include "minkgeo/lines.hpp"
#include "minkgeo/mc.hpp"
#include "minkgeo/norms.hpp"

namespace minkgeo {

/// Crofton measure c_len * g(theta) dtheta dr on the unoriented line chart
/// theta in [0,pi), r in R. The classical factor 1/4 belongs to oriented
/// lines; on the unoriented chart it becomes c_len = 1/2, pinned by the
/// Euclidean baseline (g == 1 reproduces Euclidean length).
class CroftonMeasure2D {
public:
    static constexpr double c_len = 0.5;

    static CroftonMeasure2D from_norm(const MinkowskiNorm& norm, int order = 128);
    static CroftonMeasure2D from_density(EvenFourierSeries g);

    const EvenFourierSeries& density() const { return g_; }
    const InversionReport& inversion_report() const { return report_; }

private:
    EvenFourierSeries g_;
    InversionReport report_;
};

/// c_len * int_0^pi |<xi_theta, b-a>| g(theta) dtheta: the exact line measure
/// of the segment's crossing set. Matches evaluate(norm, b-a) up to the
/// density's truncation error.
double crofton_length_segment(const CroftonMeasure2D& measure, Vec2 a, Vec2 b);

/// Monte Carlo crossing estimator over uniform (theta, r) in [0,pi) x [-R,R],
/// R covering every vertex with a relative margin. Deterministic per seed for
/// any worker count.
MCEstimate crofton_length_mc(const CroftonMeasure2D& measure, const Polyline& poly, uint64_t n,
                             uint64_t seed, int workers = 1);

struct GelfandReport {
    double pushforward_side = 0.0;  // int over the segment of the Gelfand pushforward density
    double crossing_side = 0.0;     // crossing-measure integral over oriented lines
    double rel_diff = 0.0;
    double normalized_length = 0.0;  // either side divided by 4 = F(b-a)
    bool pass = false;
};

/// Both sides of the Gelfand identity, computed along separate routes with
/// distinct quadratures; passes when they agree to 1e-8 relative.
GelfandReport gelfand_identity_check(const CroftonMeasure2D& measure, Vec2 a, Vec2 b);

}  // namespace minkgeo
