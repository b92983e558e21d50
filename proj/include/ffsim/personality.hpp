#pragma once

#include <optional>
#include <vector>

#include "ffsim/rng.hpp"
#include "ffsim/scenario.hpp"

namespace ffsim {

/// Per-agent behaviors derived from an OCEAN vector.
struct Behaviors {
    double walking_speed = 1.0; // psi, in [1, 2]
    double leadership = 0.0;    // omega, in [0, 1]
    double impatience = 0.0;    // beta, in [0, 1]
};

/// Group-level features derived from member behaviors.
struct GroupProfile {
    double cohesion = 0.0;      // zeta_g, in [0, 3]
    double desired_speed = 0.0; // Psi_g, m/s in [0, 1.2]
    std::optional<int> leader;  // index into the member list
    // The behaviors the group adopts (leader's, or the member mean).
    Behaviors adopted;
};

/// psi = E + 1.
double walking_speed(const OceanVector& ocean);

/// omega = W*E + (1-W)*(1-N) with W fixed at 0.5.
double leadership(const OceanVector& ocean);

/// beta = 0.1*f_E + 0.45*(1-A) + 0.45*(1-C), f_E = 2E-1 when E >= 0.5 else 0.
double impatience(const OceanVector& ocean);

Behaviors derive_behaviors(const OceanVector& ocean);

/// Elect a leader (omega >= 0.9, uniformly random among qualifiers) and fold
/// member behaviors into group features. With a leader the group adopts the
/// leader's behaviors; otherwise the member mean.
GroupProfile group_features(const std::vector<Behaviors>& members, Rng& rng);

/// Engine coupling: max_speed := Psi_g, personal_radius := 0.4 + 0.2 * zeta_g.
double cohesion_radius(double cohesion);

inline constexpr double kLeaderThreshold = 0.9;

} // namespace ffsim
