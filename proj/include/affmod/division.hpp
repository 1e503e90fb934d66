#pragma once

#include <optional>
#include <vector>

#include "affmod/poly.hpp"

namespace affmod {

template <class Field>
struct DivisionResult {
  std::vector<Poly<Field>> quotients;
  Poly<Field> remainder;
};

namespace detail {

template <class Field>
struct Divisor {
  const Poly<Field>* poly;
  Monomial lead;
  typename Field::Element lead_coeff;
};

template <class Field>
std::vector<Divisor<Field>> prepare_divisors(const std::vector<Poly<Field>>& divisors, const MonomialOrder& ord) {
  std::vector<Divisor<Field>> out;
  out.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    auto [m, c] = leading_term(g, ord);
    out.push_back({&g, m, c});
  }
  return out;
}

}  // namespace detail

/// Multivariate division: p = sum(q_i * g_i) + r, where no monomial of r is
/// divisible by a leading monomial of any g_i. Divisors are tried in the
/// given order. Requires a well-order so the loop terminates.
template <class Field>
DivisionResult<Field> divide_multi(const Poly<Field>& p, const std::vector<Poly<Field>>& divisors,
                                   const MonomialOrder& ord) {
  if (!ord.is_well_order()) throw std::invalid_argument("division needs a well-ordering");
  for (const auto& g : divisors) require_same_ring(p, g);
  const auto& f = p.field();
  auto prepared = detail::prepare_divisors(divisors, ord);

  DivisionResult<Field> result{std::vector<Poly<Field>>(divisors.size(), Poly<Field>(p.ring())),
                               Poly<Field>(p.ring())};
  Poly<Field> rest = p;
  while (!rest.is_zero()) {
    auto [m, c] = leading_term(rest, ord);
    bool reduced = false;
    for (std::size_t i = 0; i < prepared.size(); ++i) {
      const auto& d = prepared[i];
      if (!d.lead.divides(m)) continue;
      auto factor_m = m / d.lead;
      auto factor_c = f.div(c, d.lead_coeff);
      result.quotients[i].add_term(factor_m, factor_c);
      rest -= d.poly->times_monomial(factor_m, factor_c);
      reduced = true;
      break;
    }
    if (!reduced) {
      result.remainder.add_term(m, c);
      rest.add_term(m, f.neg(c));
    }
  }
  return result;
}

/// Remainder of divide_multi without tracking quotients.
template <class Field>
Poly<Field> reduce_fully(const Poly<Field>& p, const std::vector<Poly<Field>>& divisors, const MonomialOrder& ord) {
  if (!ord.is_well_order()) throw std::invalid_argument("division needs a well-ordering");
  const auto& f = p.field();
  auto prepared = detail::prepare_divisors(divisors, ord);
  Poly<Field> remainder(p.ring());
  Poly<Field> rest = p;
  while (!rest.is_zero()) {
    auto [m, c] = leading_term(rest, ord);
    const detail::Divisor<Field>* hit = nullptr;
    for (const auto& d : prepared)
      if (d.lead.divides(m)) {
        hit = &d;
        break;
      }
    if (hit) {
      rest -= hit->poly->times_monomial(m / hit->lead, f.div(c, hit->lead_coeff));
    } else {
      remainder.add_term(m, c);
      rest.add_term(m, f.neg(c));
    }
  }
  return remainder;
}

/// Exact quotient p / q when q divides p (single-divisor division with zero
/// remainder); nullopt otherwise.
template <class Field>
std::optional<Poly<Field>> exact_quotient(const Poly<Field>& p, const Poly<Field>& q,
                                          const MonomialOrder& ord = MonomialOrder::grevlex()) {
  auto d = divide_multi(p, {q}, ord);
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotients.front();
}

}  // namespace affmod
