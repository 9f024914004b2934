#include "pwkit/weyl/signed_permutation.hpp"

#include <sstream>

#include "pwkit/errors.hpp"

namespace pwkit::weyl {

SignedPermutation SignedPermutation::identity(int k) {
  SignedPermutation w{std::vector<int>(k), std::vector<int>(k, 1)};
  for (int i = 0; i < k; ++i) w.perm[i] = i;
  return w;
}

bool SignedPermutation::is_valid() const {
  if (signs.size() != perm.size()) return false;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] < 0 || perm[i] >= size() || seen[perm[i]]) return false;
    if (signs[i] != 1 && signs[i] != -1) return false;
    seen[perm[i]] = true;
  }
  return true;
}

int SignedPermutation::sign_product() const {
  int s = 1;
  for (int e : signs) s *= e;
  return s;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& b) const {
  if (b.size() != size()) throw InvalidArgument("composing permutations of different sizes");
  SignedPermutation out{std::vector<int>(size()), std::vector<int>(size())};
  for (int i = 0; i < size(); ++i) {
    out.perm[i] = perm[b.perm[i]];
    out.signs[i] = b.signs[i] * signs[b.perm[i]];
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out{std::vector<int>(size()), std::vector<int>(size())};
  for (int i = 0; i < size(); ++i) {
    out.perm[perm[i]] = i;
    out.signs[perm[i]] = signs[i];
  }
  return out;
}

bool SignedPermutation::stabilizes(int m) const {
  for (int i = 0; i < m; ++i)
    if (perm[i] >= m) return false;
  return true;
}

SignedPermutation SignedPermutation::restricted(int m) const {
  if (m < 0 || m > size() || !stabilizes(m))
    throw InvalidArgument("permutation does not preserve the leading letters");
  return SignedPermutation{std::vector<int>(perm.begin(), perm.begin() + m),
                           std::vector<int>(signs.begin(), signs.begin() + m)};
}

Polynomial SignedPermutation::act(const Polynomial& p) const {
  if (p.vars() != size()) throw InvalidArgument("group and polynomial ring sizes differ");
  Polynomial out(size());
  Exponent f(size());
  for (const auto& [e, c] : p.terms()) {
    int sign = 1;
    for (int i = 0; i < size(); ++i) {
      f[perm[i]] = e[i];
      if (signs[i] < 0 && e[i] % 2 == 1) sign = -sign;
    }
    out.add_term(f, sign > 0 ? c : mpq_class(-c));
  }
  return out;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size(); ++i) {
    if (i) os << ' ';
    os << (signs[i] < 0 ? "-" : "") << perm[i] + 1;
  }
  os << ']';
  return os.str();
}

}  // namespace pwkit::weyl
