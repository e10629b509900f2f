#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mzv/algebra.hpp"
#include "mzv/series.hpp"

namespace mzv {

namespace detail {
inline bool is_zero(double v) { return v == 0.0; }
template <class K>
bool is_zero(const LinearCombination<K>& v) { return v.zero(); }
}  // namespace detail

/// Polynomial in T stored in divided powers: coefficient j multiplies T^j/j!.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
template <class Coeff>
class DividedPowerPolynomial {
 public:
  DividedPowerPolynomial() = default;
  explicit DividedPowerPolynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  static DividedPowerPolynomial constant(Coeff c) { return DividedPowerPolynomial(std::vector<Coeff>{std::move(c)}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  Coeff coeff(int j) const { return j >= 0 && j <= degree() ? c_[static_cast<std::size_t>(j)] : Coeff{}; }

  /// Multiplication by T: T * T^j/j! = (j+1) T^{j+1}/(j+1)!.
  DividedPowerPolynomial times_t() const {
    std::vector<Coeff> out(c_.size() + 1);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      out[j + 1] = c_[j];
      out[j + 1] *= static_cast<int>(j + 1);
    }
    return DividedPowerPolynomial(std::move(out));
  }

  DividedPowerPolynomial& operator+=(const DividedPowerPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
  }
  DividedPowerPolynomial& operator-=(const DividedPowerPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
  }
  template <class Scalar>
  DividedPowerPolynomial& scale(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend bool operator==(const DividedPowerPolynomial&, const DividedPowerPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && detail::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

/// Z-type polynomials with admissible-index coefficients. The same object is
/// evaluated classically or in the Hurwitz setting; only the context differs.
using RegPolynomial = DividedPowerPolynomial<FormalSum>;
/// Shuffle-regularized polynomials with convergent-word coefficients.
using WordRegPolynomial = DividedPowerPolynomial<WordSum>;
/// Numeric image of a RegPolynomial, or any real polynomial in T.
using TPolynomial = DividedPowerPolynomial<double>;

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
TPolynomial operator+(TPolynomial a, const TPolynomial& b);
TPolynomial operator-(TPolynomial a, const TPolynomial& b);
double evaluate(const TPolynomial& p, double t);

/// Stuffle-regularized polynomial Z_*(k;T): substituting T -> [1] and
/// expanding with the stuffle gives back [k]. Memoized, thread-safe.
RegPolynomial stuffle_reduce(const Index& k);
/// Z_*^star(k;T) = Z_*(k^star;T); the empty index gives 1.
RegPolynomial z_star_star(const Index& k);
/// Linear extension of stuffle_reduce.
RegPolynomial stuffle_reduce(const FormalSum& s);

/// Shuffle-regularized polynomial; T is the image of the word "B".
WordRegPolynomial shuffle_reduce(const Word& w);

/// Constant term of the shuffle regularization of (convergent word) B^m,
/// in closed form: for convergent = U A it is (-1)^m (U sh B^m) A.
WordSum shuffle_regularized_constant(const Word& convergent, int m);

/// sum_j c_j * [1]^{*j} / j! in the stuffle algebra.
FormalSum expand_stuffle(const RegPolynomial& p);
/// sum_j c_j sh [B]^{sh j} / j! in the shuffle algebra.
WordSum expand_shuffle(const WordRegPolynomial& p);

/// rho(T^j/j!) = sum_{i<=j} a_i T^{j-i}/(j-i)!, with a = A(y) or, when
/// invert is set, its reciprocal. Throws TruncationError if a is too short.
TPolynomial rho_transform(const TPolynomial& p, const PowerSeries& a, bool invert);

/// p(T + shift).
TPolynomial t_substitute(const TPolynomial& p, double shift);
RegPolynomial t_substitute(const RegPolynomial& p, const Rational& shift);

/// Numeric image of a RegPolynomial under an evaluation of its coefficients.
TPolynomial evaluate_coefficients(const RegPolynomial& p, const std::function<double(const FormalSum&)>& value);

/// sum_{j=0}^r (-1)^{r-j} Z_*^star(k_1..k_j;T) Z_*(k_r..k_{j+1};T) with
/// classical coefficient values; 1 for the empty index, 0 otherwise.
TPolynomial andipode_check(const Index& k, const std::function<double(const FormalSum&)>& classical_value);

/// "[<FormalSum>] T^j/j!" per line, lowest degree first.
std::string debug_dump(const RegPolynomial& p);
std::string debug_dump(const WordRegPolynomial& p);
/// Compact human form, e.g. "T²/2 − 1/2·(2)".
std::string pretty(const RegPolynomial& p);

}  // namespace mzv
