#pragma once

#include <string>

#include "srk/schwarz_pick.hpp"

namespace srk {

/// Serializes a harness run with a stable field order. Every real number
/// is rendered as a 17-significant-digit string and every quaternion in
/// its text form, so reruns with the same configuration are
/// byte-identical.
std::string report_to_json(const HarnessResult& result);

std::string rigidity_to_json(const RigidityReport& report);

std::string zeros_to_json(const std::vector<ZeroSphere>& zeros);

std::string fixed_points_to_json(const FixedPointSet& fps);

}  // namespace srk
