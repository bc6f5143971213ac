#include "moduli_atlas/brill_noether.hpp"

#include <algorithm>

namespace moduli_atlas {

BnInput::BnInput(Surface surface, Int degree, Int length)
    : surface_(surface), degree_(degree), length_(length) {
  if (degree < 0) throw DomainError("divisor multiple n must be >= 0");
  if (length < 0) throw DomainError("subscheme length N must be >= 0");
}

const char* to_string(BnVerdict v) noexcept {
  switch (v) {
    case BnVerdict::WholeHilbertScheme: return "whole";
    case BnVerdict::Components: return "components";
    case BnVerdict::Empty: return "empty";
  }
  return "?";
}

std::size_t BnReport::alpha_count() const {
  return static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(), [](const auto& c) { return c.is_alpha(); }));
}

bool BnReport::has_beta() const {
  return std::any_of(components.begin(), components.end(), [](const auto& c) { return c.is_beta(); });
}

MukaiVector bn_mukai_vector(const BnInput& inp) {
  return vector_from_chern_data(inp.surface(), 2, inp.degree(), inp.length());
}

bool exceptional(const Surface& s, const MukaiVector& v) {
  return s.h_squared() == 2 && v == MukaiVector{2, 3, 5};
}

Int bn_window(const BnInput& inp) {
  const Int n = inp.degree();
  return std::max<Int>(ck::ceil_div(n, 2), n - 1);
}

namespace {

// H^1(E) = H^2(E) = 0 and a section with torsion-free cokernel, for the
// general member of the HN stratum t.
bool alpha_conditions(const HNType& t, Int chi) {
  const Int n = t.total().deg;
  const Int m = t.m();
  const bool positive_slopes = n > m && m > 0 && ck::mul(2, m) >= n;
  const bool quotient_generic = t.quotient().a > -1;  // h^0(O((n-m)H)) > ell2
  return positive_slopes && quotient_generic && chi > 0;
}

// Semistable general member: chi > 0, positive slope (so H^2(E) vanishes by
// semistability against O_X), and not the exceptional vector.
bool beta_conditions(const Surface& s, const MukaiVector& v, Int chi) {
  return v.deg > 0 && chi > 0 && mss_nonempty(s, v) && !exceptional(s, v);
}

}  // namespace

BnReport classify_bn(const BnInput& inp, Int threshold) {
  const Surface& s = inp.surface();
  const Int hilb_dim = ck::mul(2, inp.length());
  const MukaiVector v = bn_mukai_vector(inp);
  BnReport report{inp, BnVerdict::Empty, {}, hilb_dim, v, threshold, bn_window(inp)};

  if (inp.length() > h0_line_bundle(s, inp.degree())) {
    report.verdict = BnVerdict::WholeHilbertScheme;
    return report;
  }

  const Int chi = euler_characteristic(v);
  if (beta_conditions(s, v, chi)) {
    const Int dim = ck::add(dim_mss(s, v), chi);
    report.components.push_back({std::nullopt, dim, ck::sub(hilb_dim, dim), v, std::nullopt, false});
  }

  for (HNType& t : enumerate_hn_types(s, v, report.window)) {
    if (!alpha_conditions(t, chi)) continue;
    const Int pairing = t.sub_quotient_pairing();
    if (pairing > threshold) continue;
    const Int dim = ck::add(dim_hn_stratum(t), chi);
    const bool sensitive = pairing == 0 || pairing == 1;
    report.components.push_back({std::move(t), dim, ck::sub(hilb_dim, dim), v, pairing, sensitive});
  }

  report.verdict = report.components.empty() ? BnVerdict::Empty : BnVerdict::Components;
  return report;
}

std::vector<DimensionIdentity> bn_component_dimension_identities(const BnInput& inp,
                                                                 Int threshold) {
  const BnReport report = classify_bn(inp, threshold);
  if (report.verdict != BnVerdict::Components) {
    throw DomainError("dimension identities need a Components verdict");
  }
  const Surface& s = inp.surface();
  const Int n = inp.degree();
  const Int big_n = inp.length();
  const Int hilb_dim = report.hilb_dimension;

  std::vector<DimensionIdentity> out;
  for (const BnComponent& c : report.components) {
    DimensionIdentity id{c.type, c.dimension, std::nullopt, std::nullopt};
    if (c.type) {
      const Int cross = ck::mul(c.type->m(), n - c.type->m(), s.h_squared());
      id.predicted_dimension = ck::sub(hilb_dim, cross);
      id.predicted_codimension = cross;
    } else if (mukai_pairing(s, c.mukai_vector, c.mukai_vector) > 0) {
      id.predicted_dimension =
          ck::sub(ck::sub(ck::mul(3, big_n), 3), s.half_h_squared_times(ck::mul(n, n)));
      id.predicted_codimension = ck::add(ck::sub(h0_line_bundle(s, n), big_n), 1);
    }
    out.push_back(std::move(id));
  }
  return out;
}

}  // namespace moduli_atlas
