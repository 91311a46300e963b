#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lscat {

namespace detail {
constexpr bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace detail

/// Element of the prime field Z/P, held as its canonical representative in [0, P).
///
/// Usable as an Eigen scalar: `Eigen::Matrix<Zp<2>, Eigen::Dynamic, 1>` is a mod-2
/// cochain.  Only the ring operations and exact division are provided; anything
/// that needs an ordering or a norm is deliberately absent.
template <unsigned P>
class Zp {
  static_assert(detail::is_prime(P), "Zp requires a prime modulus");
  static_assert(P < (1u << 15), "modulus too large for the 32-bit product");

 public:
  static constexpr unsigned characteristic = P;

  constexpr Zp() = default;
  constexpr Zp(long long v)  // NOLINT: Eigen builds scalars from integer literals
      : value_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  constexpr Zp& operator+=(Zp o) {
    value_ += o.value_;
    if (value_ >= P) value_ -= P;
    return *this;
  }
  constexpr Zp& operator-=(Zp o) {
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + P - o.value_;
    return *this;
  }
  constexpr Zp& operator*=(Zp o) {
    value_ = (value_ * o.value_) % P;
    return *this;
  }
  constexpr Zp& operator/=(Zp o) { return *this *= o.inverse(); }

  friend constexpr Zp operator+(Zp a, Zp b) { return a += b; }
  friend constexpr Zp operator-(Zp a, Zp b) { return a -= b; }
  friend constexpr Zp operator*(Zp a, Zp b) { return a *= b; }
  friend constexpr Zp operator/(Zp a, Zp b) { return a /= b; }
  constexpr Zp operator-() const { return Zp() - *this; }

  friend constexpr bool operator==(Zp a, Zp b) { return a.value_ == b.value_; }
  friend constexpr bool operator!=(Zp a, Zp b) { return a.value_ != b.value_; }

  /// Multiplicative inverse by Fermat; throws on zero.
  constexpr Zp inverse() const {
    if (value_ == 0) throw std::domain_error("division by zero in Z/" + std::to_string(P));
    Zp base = *this, acc = 1;
    for (unsigned e = P - 2; e > 0; e >>= 1) {
      if (e & 1u) acc *= base;
      base *= base;
    }
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.value_; }

 private:
  std::uint32_t value_ = 0;
};

using GF2 = Zp<2>;
using GF3 = Zp<3>;

template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;
template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;

template <class F>
std::string field_name() {
  return "GF(" + std::to_string(F::characteristic) + ")";
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Gauss-Jordan elimination in place; returns the pivot column of each nonzero row.
/// Pivots are taken in the first available row, scanning columns left to right.
template <class Derived>
std::vector<Eigen::Index> row_reduce(Eigen::MatrixBase<Derived>& m) {
  using F = typename Derived::Scalar;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    m.row(sel).swap(m.row(row));
    const F inv = m(row, col).inverse();
    m.row(row) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != row && !m(i, col).is_zero()) {
        const F c = m(i, col);
        m.row(i) -= c * m.row(row);
      }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  typename Derived::PlainObject copy = m;
  return static_cast<Eigen::Index>(row_reduce(copy).size());
}

}  // namespace lscat

namespace Eigen {
template <unsigned P>
struct NumTraits<lscat::Zp<P>> : GenericNumTraits<lscat::Zp<P>> {
  using Real = lscat::Zp<P>;
  using NonInteger = lscat::Zp<P>;
  using Literal = lscat::Zp<P>;
  using Nested = lscat::Zp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(P - 1); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
