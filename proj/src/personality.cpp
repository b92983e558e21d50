#include "ffsim/personality.hpp"

#include "ffsim/error.hpp"

namespace ffsim {

double walking_speed(const OceanVector& ocean) { return ocean.e + 1.0; }

double leadership(const OceanVector& ocean) {
    constexpr double w = 0.5;
    return w * ocean.e + (1.0 - w) * (1.0 - ocean.n);
}

double impatience(const OceanVector& ocean) {
    constexpr double w_e = 0.1;
    constexpr double w_ac = 0.45;
    const double f_e = ocean.e >= 0.5 ? 2.0 * ocean.e - 1.0 : 0.0;
    return w_e * f_e + w_ac * (1.0 - ocean.a) + w_ac * (1.0 - ocean.c);
}

Behaviors derive_behaviors(const OceanVector& ocean) {
    return {walking_speed(ocean), leadership(ocean), impatience(ocean)};
}

double cohesion_radius(double cohesion) { return 0.4 + 0.2 * cohesion; }

GroupProfile group_features(const std::vector<Behaviors>& members, Rng& rng) {
    if (members.empty()) {
        throw SimError(Errc::semantic, "group_features: empty group");
    }
    GroupProfile profile;

    std::vector<int> qualifiers;
    for (size_t i = 0; i < members.size(); ++i) {
        if (members[i].leadership >= kLeaderThreshold) {
            qualifiers.push_back(static_cast<int>(i));
        }
    }
    if (!qualifiers.empty()) {
        profile.leader = qualifiers[rng.uniform_index(qualifiers.size())];
        profile.adopted = members[*profile.leader];
    } else {
        Behaviors mean;
        mean.walking_speed = 0.0;
        for (const auto& m : members) {
            mean.walking_speed += m.walking_speed;
            mean.leadership += m.leadership;
            mean.impatience += m.impatience;
        }
        const double n = static_cast<double>(members.size());
        mean.walking_speed /= n;
        mean.leadership /= n;
        mean.impatience /= n;
        profile.adopted = mean;
    }

    profile.cohesion = (1.0 - profile.adopted.impatience) * 3.0;
    profile.desired_speed = 1.2 * (profile.adopted.walking_speed - 1.0);
    return profile;
}

} // namespace ffsim
