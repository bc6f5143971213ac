#include "moduli_atlas/mukai_lattice.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace moduli_atlas {

Surface::Surface(Int h_squared) : h_squared_(h_squared) {
  if (h_squared < 2 || h_squared % 2 != 0) throw DomainError("h2 must be even and >= 2");
}

std::string MukaiVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

MukaiVector operator+(const MukaiVector& v, const MukaiVector& w) {
  return {ck::add(v.rank, w.rank), ck::add(v.deg, w.deg), ck::add(v.a, w.a)};
}

MukaiVector operator-(const MukaiVector& v, const MukaiVector& w) {
  return {ck::sub(v.rank, w.rank), ck::sub(v.deg, w.deg), ck::sub(v.a, w.a)};
}

MukaiVector operator*(Int k, const MukaiVector& v) {
  return {ck::mul(k, v.rank), ck::mul(k, v.deg), ck::mul(k, v.a)};
}

std::ostream& operator<<(std::ostream& os, const MukaiVector& v) {
  return os << '(' << v.rank << ", " << v.deg << ", " << v.a << ')';
}

Int mukai_pairing(const Surface& s, const MukaiVector& v, const MukaiVector& w) {
  const Int divisor_part = ck::mul(v.deg, w.deg, s.h_squared());
  return ck::sub(ck::sub(divisor_part, ck::mul(v.rank, w.a)), ck::mul(v.a, w.rank));
}

Int euler_characteristic(const MukaiVector& v) { return ck::add(v.rank, v.a); }

Int divisibility(const MukaiVector& v) {
  if (v.is_zero()) throw DomainError("zero vector has no primitive part");
  // std::gcd on INT64_MIN is undefined; ck::abs rejects it first.
  return std::gcd(std::gcd(ck::abs(v.rank), ck::abs(v.deg)), ck::abs(v.a));
}

MukaiVector primitive_part(const MukaiVector& v) {
  const Int m = divisibility(v);
  return {v.rank / m, v.deg / m, v.a / m};
}

MukaiVector ideal_sheaf_vector(const Surface& s, Int m, Int ell) {
  if (ell < 0) throw DomainError("negative subscheme length");
  const Int a = ck::add(ck::sub(s.half_h_squared_times(ck::mul(m, m)), ell), 1);
  return {1, m, a};
}

Int h0_line_bundle(const Surface& s, Int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  return ck::add(s.half_h_squared_times(ck::mul(n, n)), 2);
}

Int second_chern(const Surface& s, const MukaiVector& v) {
  if (v.rank != 1 && v.rank != 2) throw DomainError("unsupported rank");
  return ck::sub(ck::add(s.half_h_squared_times(ck::mul(v.deg, v.deg)), v.rank), v.a);
}

MukaiVector vector_from_chern_data(const Surface& s, Int rank, Int deg, Int c2) {
  if (rank != 1 && rank != 2) throw DomainError("unsupported rank");
  return {rank, deg, ck::add(ck::sub(s.half_h_squared_times(ck::mul(deg, deg)), c2), rank)};
}

}  // namespace moduli_atlas
