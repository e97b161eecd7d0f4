#include "grcyc/laurent.hpp"

#include <sstream>

namespace grcyc {

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

void LaurentPolynomial::add_term(Complex coeff, Exponents exponents) {
  if (exponents.size() != variables_.size()) fail(ErrorCode::ShapeMismatch, "exponent vector has wrong length");
  require_finite(coeff, "Laurent coefficient");
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), coeff);
  if (!inserted) it->second += coeff;
  if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
}

Complex LaurentPolynomial::evaluate(std::span<const Complex> values) const {
  if (values.size() != variables_.size()) fail(ErrorCode::ShapeMismatch, "wrong number of values");
  Complex total(0.0, 0.0);
  for (const auto& [ex, c] : terms_) {
    Complex term = c;
    for (std::size_t v = 0; v < ex.size(); ++v) {
      if (ex[v] == 0) continue;
      if (ex[v] < 0 && values[v] == Complex(0.0, 0.0)) {
        fail(ErrorCode::InvalidArgument, "variable " + variables_[v] + " is zero in a negative power");
      }
      term *= std::pow(values[v], ex[v]);
    }
    total += term;
  }
  return total;
}

LaurentPolynomial LaurentPolynomial::derivative(std::size_t var) const {
  if (var >= variables_.size()) fail(ErrorCode::InvalidArgument, "no such variable");
  LaurentPolynomial out(variables_);
  for (const auto& [ex, c] : terms_) {
    if (ex[var] == 0) continue;
    Exponents e = ex;
    const int power = e[var]--;
    out.add_term(c * static_cast<double>(power), std::move(e));
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [ex, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != Complex(1.0, 0.0)) os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    bool any = false;
    for (std::size_t v = 0; v < ex.size(); ++v) {
      if (ex[v] == 0) continue;
      if (any || c != Complex(1.0, 0.0)) os << "*";
      os << variables_[v];
      if (ex[v] != 1) os << "^" << ex[v];
      any = true;
    }
    if (!any && c == Complex(1.0, 0.0)) os << "1";
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace grcyc
