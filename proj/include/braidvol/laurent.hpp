#pragma once

#include <map>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidvol {

using BigInt = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one variable; zero coefficients are never stored.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(int degree, BigInt coeff = 1) {
    LaurentPolynomial p;
    p.add(degree, std::move(coeff));
    return p;
  }

  void add(int degree, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }
  const std::map<int, BigInt>& terms() const noexcept { return terms_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) r.add(da + db, ca * cb);
    return r;
  }

  friend LaurentPolynomial operator*(const BigInt& s, const LaurentPolynomial& a) {
    LaurentPolynomial r;
    for (const auto& [d, c] : a.terms_) r.add(d, s * c);
    return r;
  }

  LaurentPolynomial shifted(int by) const {
    LaurentPolynomial r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d + by, c);
    return r;
  }

  // A -> A^-1
  LaurentPolynomial mirrored() const {
    LaurentPolynomial r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(-d, c);
    return r;
  }

  bool operator==(const LaurentPolynomial&) const = default;

  // "degree:coefficient" pairs in ascending degree.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
      if (!first) os << ' ';
      os << d << ':' << c;
      first = false;
    }
    return os.str();
  }

private:
  std::map<int, BigInt> terms_;
};

}  // namespace braidvol
