#pragma once

#include <memory>
#include <string>
#include <vector>

#include "heis/field.hpp"

namespace heis {

struct FamilyMember {
  std::string name;
  std::shared_ptr<const PolyGaussianField> field;
};

// Deterministic catalog of smooth decaying test fields: five fixed anchors
// followed by seeded polynomial-times-Gaussian members.  For a fixed seed the
// catalog is prefix-stable, so builtin_family(d, 20) is the first twenty
// entries of builtin_family(d, 100).
std::vector<FamilyMember> builtin_family(int d, int count,
                                         unsigned long long seed = 2026);

}  // namespace heis
