#pragma once

#include "localcap/errors.hpp"

namespace localcap {

/// SIR threshold and path-loss exponent. Noise is kept in the struct so
/// the success condition reads like the link budget, but the model fixes
/// it at zero; validate() rejects anything else.
struct ChannelParams {
    double beta = 10.0;   // linear SIR threshold, > 0
    double alpha = 4.0;   // attenuation coefficient, > 2
    double noise = 0.0;   // background noise power, fixed 0

    void validate() const {
        if (!(beta > 0.0)) throw ValidationError("beta must be > 0");
        if (!(alpha > 2.0)) throw ValidationError("alpha must be > 2");
        if (noise != 0.0) throw ValidationError("noise must be 0");
    }
};

}  // namespace localcap
