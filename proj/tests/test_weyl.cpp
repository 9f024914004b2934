#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pwkit/weyl/invariants.hpp"
#include "pwkit/weyl/rational_matrix.hpp"

using namespace pwkit;
using namespace pwkit::weyl;

namespace {

// Coefficients of the Molien series (1/|W|) sum_w 1/det(1 - t w) up to t^d.
// det(1 - t w) is the product over cycles of length L with sign product s of
// (1 - s t^L).
std::vector<mpq_class> molien(const Group& g, int d) {
  std::vector<mpq_class> total(d + 1, 0);
  for (const auto& w : g) {
    std::vector<mpq_class> series(d + 1, 0);
    series[0] = 1;
    std::vector<bool> seen(w.size(), false);
    for (int start = 0; start < w.size(); ++start) {
      if (seen[start]) continue;
      int length = 0, sign = 1;
      for (int i = start; !seen[i]; i = w.perm[i]) {
        seen[i] = true;
        sign *= w.signs[i];
        ++length;
      }
      for (int e = length; e <= d; ++e) series[e] += sign * series[e - length];
    }
    for (int e = 0; e <= d; ++e) total[e] += series[e];
  }
  for (auto& c : total) c /= static_cast<long>(g.size());
  return total;
}

std::vector<int> graded_counts(const RootSystemSpec& spec, int d) {
  std::vector<int> out(d + 1, 0);
  for (const auto& p : invariant_basis(spec, d)) ++out[p.degree()];
  return out;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

Polynomial random_poly(std::mt19937_64& rng, int vars, int degree) {
  Polynomial p(vars);
  for (int d = 0; d <= degree; ++d)
    for (const auto& e : monomials_of_degree(vars, d))
      if (rng() % 3 == 0) p.add_term(e, mpq_class(static_cast<int>(rng() % 9) - 4, 1 + rng() % 3));
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Polynomial a = random_poly(rng, 3, 3), b = random_poly(rng, 3, 2), c = random_poly(rng, 3, 2);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(Polynomial::parse(a.to_string(), 3) == a);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
  const Polynomial p = Polynomial::parse("3/2 * x1^2 x3; -1 * x2; 2", 3);
  CHECK(p.coefficient({2, 0, 1}) == mpq_class(3, 2));
  CHECK(p.constant_term() == 2);
  CHECK(p.degree() == 3);
  CHECK_FALSE(p.is_homogeneous());
  CHECK(restrict_poly(p, 2) == Polynomial::parse("-1 * x2; 2", 2));
  CHECK(monomials_of_degree(3, 4).size() == 15);
  CHECK_THROWS_AS(Polynomial::parse("1 * y2", 3), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("1 * x4", 3), ParseError);
  CHECK_THROWS_AS(Polynomial(2) + Polynomial(3), InvalidArgument);
}

TEST_CASE("elementary symmetric polynomials") {
  std::vector<Polynomial> x;
  for (int i = 0; i < 3; ++i) x.push_back(Polynomial::variable(3, i));
  CHECK(elementary_symmetric(x, 2) == Polynomial::parse("1 * x1 x2; 1 * x1 x3; 1 * x2 x3", 3));
  CHECK(elementary_symmetric(x, 3) == Polynomial::parse("1 * x1 x2 x3", 3));
}

TEST_CASE("rational linear algebra") {
  RationalMatrix a(3, 3);
  const int entries[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = entries[r][c];
  CHECK(a.rank() == 2);
  const auto x = a.solve({mpq_class(6), mpq_class(12), mpq_class(2)});
  REQUIRE(x);
  for (int r = 0; r < 3; ++r) {
    mpq_class acc = 0;
    for (int c = 0; c < 3; ++c) acc += a(r, c) * (*x)[c];
    CHECK(acc == (r == 0 ? 6 : r == 1 ? 12 : 2));
  }
  CHECK_FALSE(a.solve({mpq_class(1), mpq_class(1), mpq_class(1)}));
}

TEST_CASE("signed permutations") {
  SignedPermutation w{{1, 2, 0}, {-1, 1, 1}};
  CHECK(w.is_valid());
  CHECK(w * w.inverse() == SignedPermutation::identity(3));
  CHECK(w.sign_product() == -1);
  const Polynomial x1 = Polynomial::variable(3, 0);
  CHECK(w.act(x1) * w.act(x1) == w.act(x1 * x1));
  CHECK_FALSE(w.stabilizes(2));
  CHECK(SignedPermutation{{1, 0, 2}, {1, -1, 1}}.stabilizes(2));
}

TEST_CASE("group orders") {
  for (int k = 1; k <= 5; ++k) {
    CHECK(weyl_group(RootSystemSpec::make("A", k)).size() == factorial(k + 1));
    CHECK(weyl_group(RootSystemSpec::make("B", k)).size() == std::pow(2, k) * factorial(k));
    CHECK(weyl_group(RootSystemSpec::make("C", k)).size() == std::pow(2, k) * factorial(k));
  }
  for (int k = 2; k <= 5; ++k)
    CHECK(weyl_group(RootSystemSpec::make("D", k)).size() == std::pow(2, k - 1) * factorial(k));
  CHECK(is_group(weyl_group(RootSystemSpec::make("D", 4))));
  CHECK(is_group(weyl_group(RootSystemSpec::make("A", 3))));
  CHECK_FALSE(is_group(Group{SignedPermutation{{1, 0}, {1, 1}}}));
  CHECK_THROWS_AS(weyl_group(RootSystemSpec::make("B", 10)), GroupTooLarge);
  CHECK_THROWS_AS(RootSystemSpec::make("E", 6), InvalidArgument);
  CHECK(RootSystemSpec::make("d", 4).degenerate() == false);
  CHECK(RootSystemSpec::make("D", 3).degenerate());
}

TEST_CASE("stabilizers and restriction") {
  CHECK(stabilizer(RootSystemSpec::make("B", 3), 1).size() == 16);
  CHECK(stabilizer(RootSystemSpec::make("B", 3), 0).size() == 48);
  for (int k = 1; k <= 5; ++k)
    for (int n = 1; n <= k; ++n) {
      CHECK(restricted_group(RootSystemSpec::make("B", k), n) == weyl_group(RootSystemSpec::make("B", n)));
      CHECK(is_group(stabilizer(RootSystemSpec::make("B", k), n)));
    }
  for (int k = 4; k <= 5; ++k)
    for (int n = 1; n < k; ++n)
      CHECK(restricted_group(RootSystemSpec::make("D", k), n).size() == std::pow(2, n) * factorial(n));
  CHECK(restricted_group(RootSystemSpec::make("A", 3), 2) == weyl_group(RootSystemSpec::make("A", 2)));
}

TEST_CASE("invariant dimensions follow the Molien series") {
  const auto b2 = RootSystemSpec::make("B", 2);
  const auto m = molien(weyl_group(b2), 6);
  const int expected[] = {1, 0, 1, 0, 2, 0, 2};
  for (int d = 0; d <= 6; ++d) CHECK(m[d] == expected[d]);
  for (const char* fam : {"B", "D"})
    for (int k : {3, 4}) {
      const auto spec = RootSystemSpec::make(fam, k);
      if (spec.degenerate()) continue;
      const auto series = molien(weyl_group(spec), 8);
      const auto counts = graded_counts(spec, 8);
      for (int d = 0; d <= 8; ++d) CHECK(series[d] == counts[d]);
    }
  CHECK_THROWS_AS(invariant_basis(b2, 13), DegreeTooLarge);
}

TEST_CASE("reynolds projects onto invariants") {
  std::mt19937_64 rng(2);
  const Group g = weyl_group(RootSystemSpec::make("D", 4));
  for (int t = 0; t < 5; ++t) {
    const Polynomial p = random_poly(rng, 4, 3);
    const Polynomial r = reynolds(p, g);
    CHECK(is_invariant(r, g));
    CHECK(reynolds(r, g) == r);
  }
  for (const auto& gen : chevalley_generators(RootSystemSpec::make("D", 4))) CHECK(is_invariant(gen, g));
  CHECK_THROWS_AS(reynolds(Polynomial(2), Group{}), InvalidArgument);
}

TEST_CASE("surjectivity certificate for B4 to B2") {
  const auto cert = surjectivity_certificate(RootSystemSpec::make("B", 4), RootSystemSpec::make("B", 2), 6);
  CHECK(cert.surjective());
  CHECK(cert.image_rank == 6);
  CHECK(cert.target_rank == 6);
  for (size_t i = 0; i < cert.targets.size(); ++i)
    CHECK((restrict_poly(cert.preimage(i), 2) - cert.targets[i]).is_zero());
}

TEST_CASE("pfaffian obstruction for D5 to D4") {
  const auto cert = surjectivity_certificate(RootSystemSpec::make("D", 5), RootSystemSpec::make("D", 4), 4);
  CHECK_FALSE(cert.surjective());
  CHECK(cert.target_rank - cert.image_rank == 1);
  REQUIRE(cert.unreachable.size() == 1);
  const Polynomial pf = Polynomial::parse("1 * x1 x2 x3 x4", 4);
  std::vector<Polynomial> both{cert.targets[cert.unreachable[0]], pf};
  CHECK(span_rank(both) == 1);
  CHECK_THROWS_AS(ow1_lift(pf, RootSystemSpec::make("D", 5), RootSystemSpec::make("D", 4), 4), ObstructionHit);
  CHECK_THROWS_AS(surjectivity_certificate(RootSystemSpec::make("B", 4), RootSystemSpec::make("D", 4), 4),
                  UnsupportedPair);
  CHECK_THROWS_AS(surjectivity_certificate(RootSystemSpec::make("B", 4), RootSystemSpec::make("B", 2), 11),
                  DegreeTooLarge);
}

TEST_CASE("rais decomposition") {
  const auto b3 = RootSystemSpec::make("B", 3);
  const Group stab = stabilizer(b3, 2);
  const auto gens = chevalley_generators(b3);
  const Polynomial G = Polynomial::constant(3, 5) +
                       reynolds(Polynomial::parse("1 * x1^2; 3 * x3^2", 3), stab) * gens[0] +
                       reynolds(Polynomial::parse("1 * x1^2 x2^2", 3), stab) * gens[1];
  const auto dec = rais_decompose(G, b3, 2, 8);
  CHECK(dec.recombine() == G);
  CHECK(dec.constant == 5);
  for (const auto& p : dec.coefficients) CHECK(is_invariant(p, stab));
  CHECK(rais_decompose(reynolds(Polynomial::parse("1 * x1^4 x3^2", 3), stab), b3, 2, 6).recombine() ==
        reynolds(Polynomial::parse("1 * x1^4 x3^2", 3), stab));
  // x3^2 is W_2(3)-invariant but outside the ideal of the W(B3) generators.
  CHECK_THROWS_AS(rais_decompose(Polynomial::parse("1 * x3^2", 3), b3, 2, 6), NoSolutionAtDegree);
  CHECK_THROWS_AS(rais_decompose(Polynomial::parse("1 * x1", 3), b3, 2, 6), NotInvariant);
  CHECK_THROWS_AS(rais_decompose(G, b3, 2, 9), DegreeTooLarge);
}

TEST_CASE("ow1 lifts random targets") {
  const auto b4 = RootSystemSpec::make("B", 4), b2 = RootSystemSpec::make("B", 2);
  const auto basis = invariant_basis(b2, 6);
  const Group g4 = weyl_group(b4);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    Polynomial F(2);
    for (const auto& b : basis) F += b * mpq_class(static_cast<int>(rng() % 11) - 5, 1 + rng() % 4);
    const Polynomial H = ow1_lift(F, b4, b2, 6);
    CHECK((restrict_poly(H, 2) - F).is_zero());
    CHECK(is_invariant(H, g4));
  }
  CHECK_THROWS_AS(ow1_lift(Polynomial::parse("1 * x1", 2), b4, b2, 6), NotInvariant);

  const auto a3 = RootSystemSpec::make("A", 3), a2 = RootSystemSpec::make("A", 2);
  const Polynomial target = invariant_basis(a2, 3).back();
  const Polynomial H = ow1_lift(target, a3, a2, 3);
  CHECK(restrict_poly(H, 3) == target);
}
