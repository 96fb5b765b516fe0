#include "hopfkit/modp.hpp"

#include "hopfkit/errors.hpp"

namespace hopfkit {

ModP ModP::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ModP result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw DivisionByZero("inverse of zero modulo p");
  return pow(static_cast<long>(kPrime - 2));
}

Specialization::Specialization(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(2, ModP::kPrime - 1);
  for (std::size_t k = 0; k < kMaxParameters; ++k) point_.push_back(dist(rng));
}

ModP Specialization::operator()(const Scalar& s) const {
  std::uint64_t den = s.denominator().evaluate_mod(point_, ModP::kPrime);
  if (den == 0) throw SpecializationFailure("denominator vanishes at the specialization point");
  std::uint64_t num = s.numerator().evaluate_mod(point_, ModP::kPrime);
  return ModP::raw(num) / ModP::raw(den);
}

ModP Specialization::operator()(const UnitScalar& u) const {
  ModP r(u.sign());
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    if (u.exponents()[k] != 0) r *= ModP::raw(point_[k]).pow(u.exponents()[k]);
  }
  return r;
}

}  // namespace hopfkit
