#include "hocbf/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace hocbf {

VarSpace::VarSpace(std::vector<std::string> names) : names_(std::move(names)) {}

std::shared_ptr<const VarSpace> VarSpace::create(std::vector<std::string> names) {
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("VarSpace: duplicate variable name '" + names[i] + "'");
  return std::shared_ptr<const VarSpace>(new VarSpace(std::move(names)));
}

int VarSpace::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Monomial::Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {
  total_degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

Monomial Monomial::unit(int nvars, int var, unsigned power) {
  std::vector<unsigned> e(nvars, 0);
  e[var] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) throw std::invalid_argument("Monomial: dimension mismatch");
  std::vector<unsigned> e(exponents_);
  for (int i = 0; i < nvars(); ++i) {
    e[i] += other.exponents_[i];
    if (e[i] > kMaxDegreePerVar)
      throw std::domain_error("Monomial: per-variable degree cap exceeded");
  }
  return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& other) const {
  if (total_degree_ != other.total_degree_) return total_degree_ < other.total_degree_;
  // Same degree: the monomial with the larger exponent on the earliest
  // differing variable is the larger one.
  for (size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != other.exponents_[i]) return exponents_[i] < other.exponents_[i];
  return false;
}

std::string Monomial::to_string(const VarSpace& vars) const {
  if (is_constant()) return "1";
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out;
}

Poly::Poly(VarSpacePtr vars, double constant) : vars_(std::move(vars)) {
  if (constant != 0.0) terms_[Monomial::one(vars_->size())] = constant;
}

Poly Poly::variable(VarSpacePtr vars, int index) {
  if (index < 0 || index >= vars->size()) throw std::invalid_argument("Poly: variable index out of range");
  Poly p(vars);
  p.terms_[Monomial::unit(vars->size(), index)] = 1.0;
  return p;
}

Poly Poly::variable(VarSpacePtr vars, const std::string& name) {
  const int idx = vars->index_of(name);
  if (idx < 0) throw std::invalid_argument("Poly: unknown variable '" + name + "'");
  return variable(std::move(vars), idx);
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

double Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

double Poly::constant_term() const { return coeff(Monomial::one(vars_->size())); }

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void Poly::add_term(const Monomial& m, double coeff) {
  if (m.nvars() != vars_->size()) throw std::invalid_argument("Poly: monomial dimension mismatch");
  double& slot = terms_[m];
  slot += coeff;
  if (slot == 0.0) terms_.erase(m);
}

void Poly::check_same_space(const Poly& other) const {
  if (!vars_ || !other.vars_ || !vars_->same_as(*other.vars_))
    throw std::invalid_argument("Poly: mismatched VarSpace");
}

void Poly::normalize() {
  const double tol = kDropTolerance * max_abs_coeff();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol || it->second == 0.0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Poly Poly::operator+(const Poly& other) const {
  check_same_space(other);
  Poly out(*this);
  for (const auto& [m, c] : other.terms_) {
    double& slot = out.terms_[m];
    slot += c;
    if (slot == 0.0) out.terms_.erase(m);
  }
  out.normalize();
  return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::operator*(const Poly& other) const {
  check_same_space(other);
  Poly out(vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      const Monomial m = ma * mb;
      double& slot = out.terms_[m];
      slot += ca * cb;
      if (slot == 0.0) out.terms_.erase(m);
    }
  out.normalize();
  return out;
}

Poly Poly::operator*(double scalar) const {
  if (scalar == 0.0) return Poly(vars_);
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c *= scalar;
  return out;
}

Poly Poly::operator+(double constant) const { return *this + Poly(vars_, constant); }
Poly Poly::operator-(double constant) const { return *this + Poly(vars_, -constant); }

Poly Poly::pow(unsigned n) const {
  Poly out(vars_, 1.0);
  for (unsigned i = 0; i < n; ++i) out = out * (*this);
  return out;
}

Poly Poly::partial(int var) const {
  if (var < 0 || var >= vars_->size()) throw std::invalid_argument("Poly::partial: unknown variable");
  Poly out(vars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    if (e == 0) continue;
    std::vector<unsigned> exps = m.exponents();
    exps[var] = e - 1;
    out.add_term(Monomial(std::move(exps)), c * static_cast<double>(e));
  }
  return out;
}

Poly Poly::partial(const std::string& name) const {
  const int idx = vars_->index_of(name);
  if (idx < 0) throw std::invalid_argument("Poly::partial: unknown variable '" + name + "'");
  return partial(idx);
}

namespace {
double powi(double base, unsigned n) {
  double out = 1.0;
  for (unsigned i = 0; i < n; ++i) out *= base;
  return out;
}
}  // namespace

double Poly::eval(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != vars_->size())
    throw std::invalid_argument("Poly::eval: point length mismatch");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c;
    for (int i = 0; i < m.nvars(); ++i)
      if (m.exponent(i) > 0) term *= powi(point[i], m.exponent(i));
    sum += term;
  }
  return sum;
}

Poly Poly::subst(const std::vector<Poly>& replacement) const {
  if (static_cast<int>(replacement.size()) != vars_->size())
    throw std::invalid_argument("Poly::subst: replacement length mismatch");
  if (replacement.empty()) throw std::invalid_argument("Poly::subst: empty replacement");
  const VarSpacePtr target = replacement[0].vars();
  Poly out(target);
  for (const auto& [m, c] : terms_) {
    Poly term(target, c);
    for (int i = 0; i < m.nvars(); ++i)
      for (unsigned k = 0; k < m.exponent(i); ++k) term = term * replacement[i];
    out = out + term;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest-degree terms first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", std::abs(it->second));
    if (out.empty())
      out += (it->second < 0 ? "-" : "");
    else
      out += (it->second < 0 ? " - " : " + ");
    const bool unit_coeff = std::abs(std::abs(it->second) - 1.0) == 0.0 && !it->first.is_constant();
    if (!unit_coeff) out += buf;
    if (!it->first.is_constant()) {
      if (!unit_coeff) out += "*";
      out += it->first.to_string(*vars_);
    }
  }
  return out;
}

PolyVec::PolyVec(VarSpacePtr vars, int n) : vars_(std::move(vars)) {
  entries_.assign(n, Poly(vars_));
}

PolyVec::PolyVec(std::vector<Poly> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("PolyVec: empty");
  vars_ = entries_[0].vars();
  for (const auto& p : entries_)
    if (!p.vars()->same_as(*vars_)) throw std::invalid_argument("PolyVec: mismatched VarSpace");
}

PolyMat::PolyMat(VarSpacePtr vars, int rows, int cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols) {
  entries_.assign(rows * cols, Poly(vars_));
}

PolyVec grad(const Poly& p) {
  PolyVec out(p.vars(), p.vars()->size());
  for (int i = 0; i < p.vars()->size(); ++i) out[i] = p.partial(i);
  return out;
}

Poly lie(const Poly& p, const PolyVec& field) {
  if (field.size() != p.vars()->size())
    throw std::invalid_argument("lie: field length must match VarSpace dimension");
  Poly out(p.vars());
  for (int i = 0; i < field.size(); ++i) out = out + p.partial(i) * field[i];
  return out;
}

std::vector<Poly> lie_mat(const Poly& p, const PolyMat& g) {
  if (g.rows() != p.vars()->size())
    throw std::invalid_argument("lie_mat: row count must match VarSpace dimension");
  std::vector<Poly> out;
  out.reserve(g.cols());
  for (int j = 0; j < g.cols(); ++j) {
    Poly col(p.vars());
    for (int i = 0; i < g.rows(); ++i) col = col + p.partial(i) * g(i, j);
    out.push_back(col);
  }
  return out;
}

double eval(const Poly& p, std::span<const double> point) { return p.eval(point); }

Poly compose_univariate(std::span<const double> coeffs_by_power, const Poly& inner) {
  Poly out(inner.vars());
  Poly power(inner.vars(), 1.0);
  for (size_t k = 0; k < coeffs_by_power.size(); ++k) {
    if (k > 0) power = power * inner;
    if (coeffs_by_power[k] != 0.0) out = out + power * coeffs_by_power[k];
  }
  return out;
}

namespace {
void basis_rec(const std::vector<int>& subset, size_t pos, unsigned remaining,
               std::vector<unsigned>& exps, std::vector<Monomial>& out) {
  if (pos == subset.size()) {
    out.emplace_back(exps);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    exps[subset[pos]] = e;
    basis_rec(subset, pos + 1, remaining - e, exps, out);
  }
  exps[subset[pos]] = 0;
}
}  // namespace

std::vector<Monomial> monomial_basis(const VarSpace& vars, std::span<const int> subset,
                                     unsigned max_degree) {
  std::vector<int> active(subset.begin(), subset.end());
  if (active.empty()) {
    active.resize(vars.size());
    for (int i = 0; i < vars.size(); ++i) active[i] = i;
  }
  std::vector<Monomial> out;
  std::vector<unsigned> exps(vars.size(), 0);
  basis_rec(active, 0, max_degree, exps, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hocbf
