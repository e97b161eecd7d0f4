#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "grcyc/common.hpp"

namespace grcyc {

/// Finite sum of complex multiples of Laurent monomials in named variables.
/// Like terms are merged on insertion and zero coefficients dropped.
class LaurentPolynomial {
public:
  using Exponents = std::vector<int>;

  explicit LaurentPolynomial(std::vector<std::string> variables);

  void add_term(Complex coeff, Exponents exponents);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t num_variables() const noexcept { return variables_.size(); }
  const std::map<Exponents, Complex>& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  /// Throws InvalidArgument when a zero value meets a negative exponent.
  Complex evaluate(std::span<const Complex> values) const;

  /// Exact partial derivative with respect to variable `var`.
  LaurentPolynomial derivative(std::size_t var) const;

  std::string to_string() const;

private:
  std::vector<std::string> variables_;
  std::map<Exponents, Complex> terms_;
};

}  // namespace grcyc
