#pragma once

#include <string>
#include <vector>

#include "pwkit/weyl/signed_permutation.hpp"

namespace pwkit::weyl {

enum class Family { A, B, C, D };

struct RootSystemSpec {
  Family family = Family::B;
  int rank = 2;

  static RootSystemSpec make(Family family, int rank);
  /// Parses "A".."D" (case-insensitive).
  static RootSystemSpec make(const std::string& family, int rank);

  /// Number of coordinates the group permutes: k + 1 for A_k, k otherwise.
  int ambient_dim() const { return family == Family::A ? rank + 1 : rank; }
  /// Below the ranks A >= 1, B >= 2, C >= 3, D >= 4.
  bool degenerate() const;
  /// (k + 1)!, 2^k k! or 2^{k-1} k!.
  double order() const;
  std::string name() const;
};

using Group = std::vector<SignedPermutation>;

/// All elements, sorted. Throws GroupTooLarge above 10^6 elements.
Group weyl_group(const RootSystemSpec& spec);

/// W_n(k): elements preserving the span of the first n coordinates (the
/// first n + 1 ambient ones for A). n = 0 gives the whole group.
Group stabilizer(const RootSystemSpec& spec, int n);

/// Distinct restrictions of stabilizer(spec, n) to the first n (A: n + 1)
/// letters, sorted.
Group restricted_group(const RootSystemSpec& spec, int n);

/// Closure, identity and inverses by enumeration.
bool is_group(const Group& g);

}  // namespace pwkit::weyl
