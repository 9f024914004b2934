#include "pwkit/weyl/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "pwkit/errors.hpp"

namespace pwkit::weyl {

Polynomial Polynomial::constant(int vars, const mpq_class& c) {
  Polynomial p(vars);
  p.add_term(Exponent(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int vars, int i) {
  if (i < 0 || i >= vars) throw InvalidArgument("variable index out of range");
  Exponent e(vars, 0);
  e[i] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const mpq_class& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    const int t = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && t != d) return false;
    d = t;
  }
  return true;
}

mpq_class Polynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

mpq_class Polynomial::constant_term() const { return coefficient(Exponent(vars_, 0)); }

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == degree) out.terms_.emplace(e, c);
  return out;
}

void Polynomial::add_term(const Exponent& e, const mpq_class& c) {
  if (static_cast<int>(e.size()) != vars_) throw InvalidArgument("exponent length mismatch");
  mpq_class v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.vars_ != vars_) throw InvalidArgument("polynomials live in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.vars_ != vars_) throw InvalidArgument("polynomials live in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  mpq_class f = c;
  f.canonicalize();
  if (f == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= f;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw InvalidArgument("polynomials live in different rings");
  Polynomial out(a.vars_);
  Exponent e(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InvalidArgument("negative polynomial power");
  Polynomial out = constant(vars_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::extended(int vars) const {
  if (vars < vars_) throw InvalidArgument("cannot drop variables by extension");
  Polynomial out(vars);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(vars, 0);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << '\n';
    first = false;
    os << it->second.get_str();
    bool star = false;
    for (int i = 0; i < vars_; ++i) {
      if (it->first[i] == 0) continue;
      os << (star ? " " : " * ") << 'x' << (i + 1);
      if (it->first[i] > 1) os << '^' << it->first[i];
      star = true;
    }
  }
  return os.str();
}

Polynomial Polynomial::parse(const std::string& text, int vars) {
  Polynomial p(vars);
  std::string normalized = text;
  for (char& ch : normalized)
    if (ch == ';') ch = '\n';
  std::istringstream lines(normalized);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line == "0") continue;
    const auto star = line.find('*');
    std::string coeff = line.substr(0, star);
    coeff.erase(coeff.find_last_not_of(" \t\r") + 1);
    mpq_class c;
    if (c.set_str(coeff, 10) != 0) throw ParseError("bad coefficient: " + coeff);
    c.canonicalize();
    Exponent e(vars, 0);
    if (star != std::string::npos) {
      std::istringstream factors(line.substr(star + 1));
      std::string f;
      while (factors >> f) {
        int index = 0, power = 1;
        char x = 0, caret = 0;
        std::istringstream fs(f);
        if (!(fs >> x >> index) || x != 'x') throw ParseError("bad factor: " + f);
        if (fs >> caret) {
          if (caret != '^' || !(fs >> power)) throw ParseError("bad factor: " + f);
        }
        if (index < 1 || index > vars || power < 0) throw ParseError("bad factor: " + f);
        e[index - 1] += power;
      }
    }
    p.add_term(e, c);
  }
  return p;
}

std::vector<Exponent> monomials_of_degree(int vars, int degree) {
  std::vector<Exponent> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(vars, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == vars - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Polynomial restrict_poly(const Polynomial& p, int n) {
  if (n < 0 || n > p.vars()) throw InvalidArgument("restriction needs 0 <= n <= k");
  Polynomial out(n);
  for (const auto& [e, c] : p.terms()) {
    bool survives = true;
    for (int i = n; i < p.vars(); ++i) survives = survives && e[i] == 0;
    if (survives) out.add_term(Exponent(e.begin(), e.begin() + n), c);
  }
  return out;
}

Polynomial elementary_symmetric(const std::vector<Polynomial>& values, int j) {
  if (values.empty()) throw InvalidArgument("elementary symmetric polynomial of nothing");
  const int vars = values.front().vars();
  // e[i] after processing a prefix of values.
  std::vector<Polynomial> e(j + 1, Polynomial(vars));
  e[0] = Polynomial::constant(vars, 1);
  for (const auto& v : values)
    for (int i = j; i >= 1; --i) e[i] += e[i - 1] * v;
  return e[j];
}

}  // namespace pwkit::weyl
