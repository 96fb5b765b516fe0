/**
 * @file modp.hpp
 * @brief Prime-field arithmetic and specialization of parameters.
 *
 * Used only to select candidate rows and to certify ranks; every value the
 * engine returns is computed over Q(t).
 */
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

/// Element of Z/pZ with p = 2^61 - 1.
class ModP {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  constexpr ModP() = default;
  constexpr ModP(long v) : v_(reduce_signed(v)) {}  // NOLINT: implicit embedding
  static constexpr ModP raw(std::uint64_t v) {
    ModP m;
    m.v_ = v % kPrime;
    return m;
  }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator+(ModP o) const { return raw(v_ + o.v_); }
  ModP operator-(ModP o) const { return raw(v_ + kPrime - o.v_); }
  ModP operator-() const { return raw(kPrime - v_); }
  ModP operator*(ModP o) const {
    __extension__ using u128 = unsigned __int128;
    u128 prod = static_cast<u128>(v_) * o.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(prod & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    return raw(lo + hi);
  }
  ModP inverse() const;
  ModP pow(long e) const;
  ModP operator/(ModP o) const { return *this * o.inverse(); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  friend bool operator==(ModP, ModP) = default;

 private:
  static constexpr std::uint64_t reduce_signed(long v) {
    long r = v % static_cast<long>(kPrime);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(kPrime) : r);
  }
  std::uint64_t v_ = 0;
};

inline bool is_zero(ModP m) { return m.is_zero(); }

/// A ring map Z[t, t^-1] -> Z/pZ at a random nonzero point; extended to
/// Scalars whose denominators do not vanish there.
class Specialization {
 public:
  explicit Specialization(std::uint64_t seed);

  ModP operator()(const Scalar& s) const;
  ModP operator()(const UnitScalar& u) const;

 private:
  std::vector<std::uint64_t> point_;
};

}  // namespace hopfkit
