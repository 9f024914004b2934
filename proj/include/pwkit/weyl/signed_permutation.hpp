#pragma once

#include <string>
#include <vector>

#include "pwkit/weyl/polynomial.hpp"

namespace pwkit::weyl {

/// w(e_i) = signs[i] e_{perm[i]}, indices from 0.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> signs;

  static SignedPermutation identity(int k);

  int size() const { return static_cast<int>(perm.size()); }
  bool is_valid() const;
  int sign_product() const;

  /// (a * b)(v) = a(b(v)).
  SignedPermutation operator*(const SignedPermutation& b) const;
  SignedPermutation inverse() const;
  /// Action on the first m letters; requires perm to map them to themselves.
  SignedPermutation restricted(int m) const;
  /// True when perm maps {0..m-1} onto itself.
  bool stabilizes(int m) const;

  /// (w . p)(x) = p(w^{-1} x).
  Polynomial act(const Polynomial& p) const;

  std::string to_string() const;

  auto operator<=>(const SignedPermutation&) const = default;
};

}  // namespace pwkit::weyl
