#include "pwkit/weyl/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "pwkit/errors.hpp"

namespace pwkit::weyl {

RootSystemSpec RootSystemSpec::make(Family family, int rank) {
  if (rank < 1) throw InvalidArgument("root system rank must be positive");
  return RootSystemSpec{family, rank};
}

RootSystemSpec RootSystemSpec::make(const std::string& family, int rank) {
  if (family.size() != 1) throw InvalidArgument("unknown family: " + family);
  switch (std::toupper(static_cast<unsigned char>(family[0]))) {
    case 'A': return make(Family::A, rank);
    case 'B': return make(Family::B, rank);
    case 'C': return make(Family::C, rank);
    case 'D': return make(Family::D, rank);
    default: throw InvalidArgument("unknown family: " + family);
  }
}

bool RootSystemSpec::degenerate() const {
  switch (family) {
    case Family::A: return rank < 1;
    case Family::B: return rank < 2;
    case Family::C: return rank < 3;
    case Family::D: return rank < 4;
  }
  return true;
}

double RootSystemSpec::order() const {
  double fact = 1.0;
  for (int i = 2; i <= ambient_dim(); ++i) fact *= i;
  switch (family) {
    case Family::A: return fact;
    case Family::B:
    case Family::C: return fact * std::pow(2.0, rank);
    case Family::D: return fact * std::pow(2.0, rank - 1);
  }
  return fact;
}

std::string RootSystemSpec::name() const {
  static const char letters[] = {'A', 'B', 'C', 'D'};
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

Group weyl_group(const RootSystemSpec& spec) {
  if (spec.order() > 1e6) throw GroupTooLarge(spec.name() + " has more than 10^6 elements");
  const int m = spec.ambient_dim();
  Group out;
  out.reserve(static_cast<size_t>(spec.order()));
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  const int sign_bits = spec.family == Family::A ? 0 : m;
  do {
    for (long mask = 0; mask < (1L << sign_bits); ++mask) {
      SignedPermutation w{perm, std::vector<int>(m, 1)};
      for (int i = 0; i < sign_bits; ++i)
        if (mask >> i & 1) w.signs[i] = -1;
      if (spec.family == Family::D && w.sign_product() < 0) continue;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int kept_letters(const RootSystemSpec& spec, int n) {
  if (n < 0 || n > spec.rank) throw InvalidArgument("need 0 <= n <= k");
  if (n == 0) return 0;
  return spec.family == Family::A ? n + 1 : n;
}

}  // namespace

Group stabilizer(const RootSystemSpec& spec, int n) {
  const int m = kept_letters(spec, n);
  Group all = weyl_group(spec);
  if (m == 0) return all;
  Group out;
  for (auto& w : all)
    if (w.stabilizes(m)) out.push_back(std::move(w));
  return out;
}

Group restricted_group(const RootSystemSpec& spec, int n) {
  const int m = kept_letters(spec, n);
  std::set<SignedPermutation> image;
  for (const auto& w : stabilizer(spec, n)) image.insert(w.restricted(m));
  return Group(image.begin(), image.end());
}

bool is_group(const Group& g) {
  if (g.empty()) return false;
  const std::set<SignedPermutation> members(g.begin(), g.end());
  if (!members.count(SignedPermutation::identity(g.front().size()))) return false;
  for (const auto& a : g) {
    if (!members.count(a.inverse())) return false;
    for (const auto& b : g)
      if (!members.count(a * b)) return false;
  }
  return true;
}

}  // namespace pwkit::weyl
