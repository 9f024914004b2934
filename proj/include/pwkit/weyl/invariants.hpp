#pragma once

#include <optional>
#include <vector>

#include "pwkit/errors.hpp"
#include "pwkit/weyl/groups.hpp"
#include "pwkit/weyl/polynomial.hpp"

namespace pwkit::weyl {

/// (1 / |g|) sum over w in g of w . p.
Polynomial reynolds(const Polynomial& p, const Group& g);
bool is_invariant(const Polynomial& p, const Group& g);

/// Generators of the invariant algebra in the ambient coordinates.
/// B/C: e_j(x_1^2..x_k^2), j = 1..k. D: e_j(x^2) for j < k and x_1...x_k.
/// A: e_2..e_{k+1} of the k + 1 ambient coordinates; with `with_e1` also e_1.
std::vector<Polynomial> chevalley_generators(const RootSystemSpec& spec, bool with_e1 = false);

/// Products of generators of total degree <= d, one exponent vector per
/// basis element (powers of chevalley_generators(spec) in order).
std::vector<std::vector<int>> invariant_monomials(const RootSystemSpec& spec, int d,
                                                  bool with_e1 = false);

/// Basis of the invariants of degree <= d. Throws DegreeTooLarge for d > 12.
std::vector<Polynomial> invariant_basis(const RootSystemSpec& spec, int d);

/// Coefficients c with sum c_i columns_i = target, or nothing. Homogeneous
/// columns are handled one degree at a time.
std::optional<std::vector<mpq_class>> express(const std::vector<Polynomial>& columns,
                                              const Polynomial& target);
/// Dimension of the span.
int span_rank(const std::vector<Polynomial>& polys);

struct SurjectivityCertificate {
  RootSystemSpec upstairs;
  RootSystemSpec downstairs;
  int degree = 0;
  std::vector<Polynomial> upstairs_basis;
  std::vector<Polynomial> restricted_basis;  // restrict_poly of upstairs_basis
  std::vector<Polynomial> targets;           // invariant_basis(downstairs, degree)
  /// Per target: coefficients on upstairs_basis, or nothing if unreachable.
  std::vector<std::optional<std::vector<mpq_class>>> witness;
  std::vector<int> unreachable;
  int image_rank = 0;
  int target_rank = 0;

  bool surjective() const { return unreachable.empty(); }
  /// sum_b c_b B_b for a reachable target.
  Polynomial preimage(size_t target) const;
};

/// Restriction from the W(k)- to the W(n)-invariants of degree <= d. Both
/// specs must share a family. Throws UnsupportedPair or DegreeTooLarge
/// (d > 10).
SurjectivityCertificate surjectivity_certificate(const RootSystemSpec& spec_k,
                                                 const RootSystemSpec& spec_n, int d);

struct RaisDecomposition {
  mpq_class constant;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> coefficients;
  int degree = 0;

  /// constant + sum_j coefficients_j generators_j.
  Polynomial recombine() const;
};

/// G = constant + sum_j p_j G_j over the generators of W(k) (ambient ones,
/// e_1 included, for A), with each p_j averaged over W_n(k). Requires G
/// invariant under stabilizer(spec_k, n) (NotInvariant) and deg G <= d <= 8.
/// Throws NoSolutionAtDegree when no decomposition exists.
RaisDecomposition rais_decompose(const Polynomial& G, const RootSystemSpec& spec_k, int n, int d);

/// W(k)-invariant H with restrict_poly(H, ...) = F_target, built along the
/// averaging / decomposition / lifting steps. Throws ObstructionHit when
/// F_target is outside the image of the restriction and NotInvariant when it
/// is not W(n)-invariant.
Polynomial ow1_lift(const Polynomial& F_target, const RootSystemSpec& spec_k,
                    const RootSystemSpec& spec_n, int d);

}  // namespace pwkit::weyl
