#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "qxcorr/xmodel.hpp"

namespace qxtest {

inline const qxcorr::XStateParams kPlateauState{-1.0, 0.5, 1.0, -0.4, 0.7, 1.0};
inline const qxcorr::XStateParams kFieldFreeState{1.0, 3.4, 3.2, 0.0, 0.0, 1.0};
inline const qxcorr::XStateParams kSingleCrossingState{1.0, 3.4, 3.2, -1.3, 1.7, 1.0};
inline const qxcorr::XStateParams kDoubleCrossingState{-1.0, 1.0, 0.5, -0.6, 0.8, 1.0};
inline const qxcorr::XStateParams kFieldSweepState{1.0, 3.0, 5.0, 0.0, -0.7, 4.0};

inline qxcorr::XStateParams with_T(qxcorr::XStateParams p, double T) {
  p.T = T;
  return p;
}

/// Reduced parameters with |Jz|, |B| <= scale and r in [0, scale].
inline qxcorr::XStateParams random_params(std::mt19937_64& rng, double scale = 5.0,
                                          double T = 1.0) {
  std::uniform_real_distribution<double> sym(-scale, scale);
  std::uniform_real_distribution<double> pos(0.0, scale);
  return {sym(rng), pos(rng), pos(rng), sym(rng), sym(rng), T};
}

inline qxcorr::HamiltonianParams random_hamiltonian(std::mt19937_64& rng,
                                                    double scale = 3.0) {
  std::uniform_real_distribution<double> sym(-scale, scale);
  return {sym(rng), sym(rng), sym(rng), sym(rng), sym(rng), sym(rng), sym(rng)};
}

/// Log-uniform temperature in [lo, hi].
inline double random_temperature(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> t(std::log(lo), std::log(hi));
  return std::exp(t(rng));
}

}  // namespace qxtest
