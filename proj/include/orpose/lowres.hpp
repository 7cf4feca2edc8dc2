#pragma once

#include "orpose/image.hpp"
#include "orpose/rng.hpp"

namespace orpose {

/// Downsampling-scale policy for training. `fixed` always returns the same
/// factor; `mixed` draws 1 (no downsampling) with probability p_none, a
/// factor in mid_range with p_mid and one in low_range with p_low.
struct ScalePolicy {
    enum class Kind { Fixed, Mixed };

    Kind kind = Kind::Fixed;
    double fixed_scale = 1.0;

    double p_none = 0.30;
    double p_mid = 0.35;
    double p_low = 0.35;
    double mid_lo = 2.0, mid_hi = 8.0;
    double low_lo = 8.0, low_hi = 12.0;

    static ScalePolicy fixed(double s) {
        ScalePolicy p;
        p.kind = Kind::Fixed;
        p.fixed_scale = s;
        return p;
    }
    static ScalePolicy mixed() {
        ScalePolicy p;
        p.kind = Kind::Mixed;
        return p;
    }

    /// Throws std::invalid_argument on inconsistent parameters.
    void validate() const;
};

/// Bilinear-downsample to (round(W/s), round(H/s)) and bilinear-upsample
/// back to W x H. s = 1 returns the input bit-identically.
ImageF degrade(const ImageF& image, double scale);

double sample_scale(const ScalePolicy& policy, Rng& rng);

}  // namespace orpose
