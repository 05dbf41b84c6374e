#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hocbf {

// Ordered set of scalar variable names. All polynomials of one problem share
// a single VarSpace; the declaration order fixes the monomial term order.
class VarSpace {
 public:
  static std::shared_ptr<const VarSpace> create(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // Returns -1 when the identifier is not declared.
  int index_of(const std::string& name) const;

  bool same_as(const VarSpace& other) const { return names_ == other.names_; }

 private:
  explicit VarSpace(std::vector<std::string> names);
  std::vector<std::string> names_;
};

using VarSpacePtr = std::shared_ptr<const VarSpace>;

// Exponent vector over a VarSpace, compared in graded-lexicographic order
// (total degree first, then earlier variables weigh more).
class Monomial {
 public:
  Monomial() : total_degree_(0) {}
  explicit Monomial(std::vector<unsigned> exponents);

  static Monomial one(int nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial unit(int nvars, int var, unsigned power = 1);

  int nvars() const { return static_cast<int>(exponents_.size()); }
  unsigned exponent(int i) const { return exponents_[i]; }
  const std::vector<unsigned>& exponents() const { return exponents_; }
  unsigned total_degree() const { return total_degree_; }
  bool is_constant() const { return total_degree_ == 0; }

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }
  // Graded-lex "less than".
  bool operator<(const Monomial& other) const;

  std::string to_string(const VarSpace& vars) const;

 private:
  std::vector<unsigned> exponents_;
  unsigned total_degree_;
};

// Per-variable degree cap; compositions that exceed it are a hard error.
inline constexpr unsigned kMaxDegreePerVar = 64;
// Relative drop tolerance applied after arithmetic.
inline constexpr double kDropTolerance = 1e-14;

// Sparse multivariate polynomial with double coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarSpacePtr vars) : vars_(std::move(vars)) {}
  Poly(VarSpacePtr vars, double constant);

  static Poly variable(VarSpacePtr vars, int index);
  static Poly variable(VarSpacePtr vars, const std::string& name);

  const VarSpacePtr& vars() const { return vars_; }
  const std::map<Monomial, double>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  unsigned degree() const;
  double coeff(const Monomial& m) const;
  double constant_term() const;
  double max_abs_coeff() const;

  void add_term(const Monomial& m, double coeff);

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly operator*(double scalar) const;
  Poly operator+(double constant) const;
  Poly operator-(double constant) const;

  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }

  Poly pow(unsigned n) const;

  // Formal partial derivative with respect to one variable.
  Poly partial(int var) const;
  Poly partial(const std::string& name) const;

  double eval(std::span<const double> point) const;

  // Substitutes replacement[i] for variable i; replacements live in a
  // (possibly different) target VarSpace.
  Poly subst(const std::vector<Poly>& replacement) const;

  std::string to_string() const;

  // Removes terms with |coeff| < kDropTolerance * max|coeff|.
  void normalize();

 private:
  void check_same_space(const Poly& other) const;
  VarSpacePtr vars_;
  std::map<Monomial, double> terms_;
};

inline Poly operator*(double scalar, const Poly& p) { return p * scalar; }

// Dense vector / matrix of polynomials over a shared VarSpace.
class PolyVec {
 public:
  PolyVec() = default;
  PolyVec(VarSpacePtr vars, int n);
  explicit PolyVec(std::vector<Poly> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const Poly& operator[](int i) const { return entries_[i]; }
  Poly& operator[](int i) { return entries_[i]; }
  const VarSpacePtr& vars() const { return vars_; }

 private:
  VarSpacePtr vars_;
  std::vector<Poly> entries_;
};

class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(VarSpacePtr vars, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Poly& operator()(int i, int j) const { return entries_[i * cols_ + j]; }
  Poly& operator()(int i, int j) { return entries_[i * cols_ + j]; }
  const VarSpacePtr& vars() const { return vars_; }

 private:
  VarSpacePtr vars_;
  int rows_ = 0, cols_ = 0;
  std::vector<Poly> entries_;
};

Poly grad_dot(const Poly& p, const PolyVec& field);

// Gradient as a vector of formal partials.
PolyVec grad(const Poly& p);

// Lie derivative of p along the vector field (length must equal the VarSpace
// dimension).
Poly lie(const Poly& p, const PolyVec& field);

// Row of Lie derivatives along the columns of g.
std::vector<Poly> lie_mat(const Poly& p, const PolyMat& g);

double eval(const Poly& p, std::span<const double> point);

// Sum_k c[k] * inner^k for k = 0..c.size()-1 (class-K templates pass c[0]=0).
Poly compose_univariate(std::span<const double> coeffs_by_power, const Poly& inner);

// All monomials over the given variable subset with total degree <= max_degree,
// in graded-lex order. An empty subset means "all variables".
std::vector<Monomial> monomial_basis(const VarSpace& vars, std::span<const int> subset,
                                     unsigned max_degree);

}  // namespace hocbf
