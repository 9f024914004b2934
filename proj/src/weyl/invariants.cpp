#include "pwkit/weyl/invariants.hpp"

#include <map>
#include <numeric>
#include <set>

#include "pwkit/errors.hpp"
#include "pwkit/weyl/rational_matrix.hpp"

namespace pwkit::weyl {

Polynomial reynolds(const Polynomial& p, const Group& g) {
  if (g.empty()) throw InvalidArgument("Reynolds operator over an empty group");
  Polynomial acc(p.vars());
  for (const auto& w : g) acc += w.act(p);
  return acc * mpq_class(1, static_cast<unsigned long>(g.size()));
}

bool is_invariant(const Polynomial& p, const Group& g) {
  for (const auto& w : g)
    if (!(w.act(p) == p)) return false;
  return true;
}

std::vector<Polynomial> chevalley_generators(const RootSystemSpec& spec, bool with_e1) {
  const int m = spec.ambient_dim();
  std::vector<Polynomial> x, x2;
  for (int i = 0; i < m; ++i) {
    x.push_back(Polynomial::variable(m, i));
    x2.push_back(x.back() * x.back());
  }
  std::vector<Polynomial> gens;
  switch (spec.family) {
    case Family::A:
      for (int j = with_e1 ? 1 : 2; j <= m; ++j) gens.push_back(elementary_symmetric(x, j));
      break;
    case Family::B:
    case Family::C:
      for (int j = 1; j <= m; ++j) gens.push_back(elementary_symmetric(x2, j));
      break;
    case Family::D: {
      for (int j = 1; j < m; ++j) gens.push_back(elementary_symmetric(x2, j));
      Polynomial pf = Polynomial::constant(m, 1);
      for (const auto& xi : x) pf = pf * xi;
      gens.push_back(pf);
      break;
    }
  }
  return gens;
}

std::vector<std::vector<int>> invariant_monomials(const RootSystemSpec& spec, int d,
                                                  bool with_e1) {
  if (d < 0) throw InvalidArgument("degree must be nonnegative");
  if (d > 12) throw DegreeTooLarge("invariant bases are limited to degree 12");
  const auto gens = chevalley_generators(spec, with_e1);
  std::vector<int> deg;
  for (const auto& g : gens) deg.push_back(g.degree());
  std::vector<std::vector<int>> out;
  std::vector<int> a(gens.size(), 0);
  auto rec = [&](auto&& self, size_t j, int left) -> void {
    if (j == gens.size()) {
      out.push_back(a);
      return;
    }
    for (int p = 0; p * deg[j] <= left; ++p) {
      a[j] = p;
      self(self, j + 1, left - p * deg[j]);
    }
    a[j] = 0;
  };
  rec(rec, 0, d);
  std::stable_sort(out.begin(), out.end(), [&](const auto& u, const auto& v) {
    int du = 0, dv = 0;
    for (size_t j = 0; j < deg.size(); ++j) {
      du += u[j] * deg[j];
      dv += v[j] * deg[j];
    }
    return du < dv;
  });
  return out;
}

namespace {

std::vector<Polynomial> basis_from(const RootSystemSpec& spec, int d, bool with_e1) {
  const auto gens = chevalley_generators(spec, with_e1);
  std::vector<Polynomial> out;
  for (const auto& a : invariant_monomials(spec, d, with_e1)) {
    Polynomial p = Polynomial::constant(spec.ambient_dim(), 1);
    for (size_t j = 0; j < gens.size(); ++j)
      if (a[j] > 0) p = p * gens[j].pow(a[j]);
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<std::vector<mpq_class>> solve_block(const std::vector<Polynomial>& columns,
                                                  const std::vector<int>& idx,
                                                  const Polynomial& target) {
  std::map<Exponent, int> rows;
  for (int c : idx)
    for (const auto& [e, v] : columns[c].terms()) rows.emplace(e, 0);
  for (const auto& [e, v] : target.terms())
    if (!rows.count(e)) return std::nullopt;
  int r = 0;
  for (auto& [e, i] : rows) i = r++;
  RationalMatrix a(r, static_cast<int>(idx.size()));
  for (size_t k = 0; k < idx.size(); ++k)
    for (const auto& [e, v] : columns[idx[k]].terms()) a(rows[e], static_cast<int>(k)) = v;
  std::vector<mpq_class> b(r);
  for (const auto& [e, v] : target.terms()) b[rows[e]] = v;
  return a.solve(b);
}

int block_rank(const std::vector<Polynomial>& polys, const std::vector<int>& idx) {
  std::map<Exponent, int> rows;
  for (int c : idx)
    for (const auto& [e, v] : polys[c].terms()) rows.emplace(e, 0);
  int r = 0;
  for (auto& [e, i] : rows) i = r++;
  RationalMatrix a(r, static_cast<int>(idx.size()));
  for (size_t k = 0; k < idx.size(); ++k)
    for (const auto& [e, v] : polys[idx[k]].terms()) a(rows[e], static_cast<int>(k)) = v;
  return a.rank();
}

// Column indices grouped by homogeneous degree; empty when some column is
// not homogeneous.
std::optional<std::map<int, std::vector<int>>> by_degree(const std::vector<Polynomial>& polys) {
  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero()) continue;
    if (!polys[i].is_homogeneous()) return std::nullopt;
    groups[polys[i].degree()].push_back(static_cast<int>(i));
  }
  return groups;
}

}  // namespace

std::vector<Polynomial> invariant_basis(const RootSystemSpec& spec, int d) {
  return basis_from(spec, d, false);
}

std::optional<std::vector<mpq_class>> express(const std::vector<Polynomial>& columns,
                                              const Polynomial& target) {
  std::vector<mpq_class> x(columns.size());
  const auto groups = by_degree(columns);
  if (!groups) {
    std::vector<int> all(columns.size());
    std::iota(all.begin(), all.end(), 0);
    return solve_block(columns, all, target);
  }
  std::set<int> degrees;
  for (const auto& [e, v] : target.terms()) degrees.insert(std::accumulate(e.begin(), e.end(), 0));
  for (int d : degrees) {
    const auto it = groups->find(d);
    if (it == groups->end()) return std::nullopt;
    const auto sol = solve_block(columns, it->second, target.homogeneous_part(d));
    if (!sol) return std::nullopt;
    for (size_t k = 0; k < it->second.size(); ++k) x[it->second[k]] = (*sol)[k];
  }
  return x;
}

int span_rank(const std::vector<Polynomial>& polys) {
  const auto groups = by_degree(polys);
  if (!groups) {
    std::vector<int> all(polys.size());
    std::iota(all.begin(), all.end(), 0);
    return block_rank(polys, all);
  }
  int rank = 0;
  for (const auto& [d, idx] : *groups) rank += block_rank(polys, idx);
  return rank;
}

Polynomial SurjectivityCertificate::preimage(size_t target) const {
  if (target >= witness.size() || !witness[target])
    throw ObstructionHit("target " + std::to_string(target) + " has no preimage");
  Polynomial h(upstairs.ambient_dim());
  for (size_t b = 0; b < upstairs_basis.size(); ++b)
    if ((*witness[target])[b] != 0) h += upstairs_basis[b] * (*witness[target])[b];
  return h;
}

namespace {

void check_pair(const RootSystemSpec& k, const RootSystemSpec& n) {
  if (k.family != n.family) throw UnsupportedPair("restriction needs a common family");
  if (n.rank > k.rank) throw UnsupportedPair("restriction needs n <= k");
}

}  // namespace

SurjectivityCertificate surjectivity_certificate(const RootSystemSpec& spec_k,
                                                 const RootSystemSpec& spec_n, int d) {
  check_pair(spec_k, spec_n);
  if (d > 10) throw DegreeTooLarge("surjectivity certificates are limited to degree 10");
  SurjectivityCertificate cert{spec_k, spec_n, d, {}, {}, {}, {}, {}, 0, 0};
  cert.upstairs_basis = invariant_basis(spec_k, d);
  for (const auto& b : cert.upstairs_basis)
    cert.restricted_basis.push_back(restrict_poly(b, spec_n.ambient_dim()));
  cert.targets = invariant_basis(spec_n, d);
  for (size_t t = 0; t < cert.targets.size(); ++t) {
    cert.witness.push_back(express(cert.restricted_basis, cert.targets[t]));
    if (!cert.witness.back()) cert.unreachable.push_back(static_cast<int>(t));
  }
  cert.image_rank = span_rank(cert.restricted_basis);
  cert.target_rank = span_rank(cert.targets);
  return cert;
}

Polynomial RaisDecomposition::recombine() const {
  const int vars = generators.empty() ? 0 : generators.front().vars();
  Polynomial h = Polynomial::constant(vars, constant);
  for (size_t j = 0; j < generators.size(); ++j) h += coefficients[j] * generators[j];
  return h;
}

RaisDecomposition rais_decompose(const Polynomial& G, const RootSystemSpec& spec_k, int n,
                                 int d) {
  const int vars = spec_k.ambient_dim();
  if (G.vars() != vars) throw InvalidArgument("polynomial lives in the wrong ring");
  if (d > 8) throw DegreeTooLarge("Rais decompositions are limited to degree 8");
  const Group stab = stabilizer(spec_k, n);
  if (!is_invariant(G, stab)) throw NotInvariant("G is not invariant under W_n(k)");
  int cap = d;
  while (G.degree() > cap && cap + 2 <= 12) cap += 2;
  if (G.degree() > cap) throw NoSolutionAtDegree("deg G exceeds the degree cap");

  RaisDecomposition out;
  out.degree = cap;
  out.constant = G.constant_term();
  out.generators = chevalley_generators(spec_k, true);
  const Polynomial rest = G - Polynomial::constant(vars, out.constant);

  std::set<int> degrees;
  for (const auto& [e, v] : rest.terms()) degrees.insert(std::accumulate(e.begin(), e.end(), 0));
  std::vector<Polynomial> columns;
  std::vector<std::pair<size_t, Exponent>> origin;
  for (int delta : degrees)
    for (size_t j = 0; j < out.generators.size(); ++j) {
      const int g = out.generators[j].degree();
      if (g > delta) continue;
      for (const auto& e : monomials_of_degree(vars, delta - g)) {
        columns.push_back(Polynomial::monomial(e) * out.generators[j]);
        origin.emplace_back(j, e);
      }
    }
  const auto sol = express(columns, rest);
  if (!sol) throw NoSolutionAtDegree("G - G(0) is not in the ideal of the generators");

  out.coefficients.assign(out.generators.size(), Polynomial(vars));
  for (size_t c = 0; c < columns.size(); ++c)
    if ((*sol)[c] != 0) out.coefficients[origin[c].first].add_term(origin[c].second, (*sol)[c]);
  for (auto& p : out.coefficients) p = reynolds(p, stab);
  if (!(out.recombine() == G)) throw Error("Rais decomposition failed its exact check");
  return out;
}

Polynomial ow1_lift(const Polynomial& F_target, const RootSystemSpec& spec_k,
                    const RootSystemSpec& spec_n, int d) {
  check_pair(spec_k, spec_n);
  const int m = spec_n.ambient_dim();
  const int vars = spec_k.ambient_dim();
  if (F_target.vars() != m) throw InvalidArgument("target lives in the wrong ring");
  if (F_target.degree() > d) throw DegreeTooLarge("target degree exceeds d");
  if (!is_invariant(F_target, weyl_group(spec_n)))
    throw NotInvariant("target is not W(n)-invariant");

  const bool with_e1 = spec_k.family == Family::A;
  const std::vector<Polynomial> up = basis_from(spec_k, d, with_e1);
  std::vector<Polynomial> up_restricted;
  for (const auto& b : up) up_restricted.push_back(restrict_poly(b, m));
  if (!express(up_restricted, F_target))
    throw ObstructionHit("target is outside the image of the restriction");

  // A preimage of the form constant + (ideal element): F extended by terms
  // that vanish on the subspace.
  const mpq_class c = F_target.constant_term();
  const Polynomial rest = F_target.extended(vars) - Polynomial::constant(vars, c);
  const auto gens = chevalley_generators(spec_k, true);
  std::set<int> degrees;
  for (const auto& [e, v] : rest.terms()) degrees.insert(std::accumulate(e.begin(), e.end(), 0));
  std::vector<Polynomial> columns;
  std::vector<std::optional<Exponent>> correction;
  for (int delta : degrees) {
    for (const auto& g : gens)
      if (g.degree() <= delta)
        for (const auto& e : monomials_of_degree(vars, delta - g.degree())) {
          columns.push_back(Polynomial::monomial(e) * g);
          correction.emplace_back();
        }
    for (const auto& e : monomials_of_degree(vars, delta)) {
      bool vanishes = false;
      for (int i = m; i < vars; ++i) vanishes = vanishes || e[i] > 0;
      if (!vanishes) continue;
      columns.push_back(Polynomial::monomial(e, -1));
      correction.emplace_back(e);
    }
  }
  const auto sol = express(columns, rest);
  if (!sol) throw ObstructionHit("no preimage in the ideal of the generators");
  Polynomial G = F_target.extended(vars);
  for (size_t i = 0; i < columns.size(); ++i)
    if (correction[i] && (*sol)[i] != 0) G.add_term(*correction[i], (*sol)[i]);

  const Polynomial G_avg = reynolds(G, stabilizer(spec_k, spec_n.rank));
  const RaisDecomposition dec = rais_decompose(G_avg, spec_k, spec_n.rank, std::min(d, 8));

  Polynomial H = Polynomial::constant(vars, dec.constant);
  for (size_t j = 0; j < dec.generators.size(); ++j) {
    if (dec.coefficients[j].is_zero()) continue;
    const Polynomial p = restrict_poly(dec.coefficients[j], m);
    const auto lift = express(up_restricted, p);
    if (!lift) throw ObstructionHit("a Rais coefficient does not lift");
    Polynomial q(vars);
    for (size_t b = 0; b < up.size(); ++b)
      if ((*lift)[b] != 0) q += up[b] * (*lift)[b];
    H += q * dec.generators[j];
  }
  if (!(restrict_poly(H, m) == F_target)) throw Error("lifted polynomial does not restrict to F");
  if (!is_invariant(H, weyl_group(spec_k))) throw Error("lifted polynomial is not W(k)-invariant");
  return H;
}

}  // namespace pwkit::weyl
