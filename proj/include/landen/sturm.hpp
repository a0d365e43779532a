#pragma once

#include <cstddef>
#include <vector>

#include "landen/coefficient.hpp"
#include "landen/errors.hpp"
#include "landen/polynomial.hpp"

namespace landen {

/// Sturm chain p0 = a, p1 = a', p_{k+1} = -rem(p_{k-1}, p_k).
inline std::vector<Polynomial<Rational>> sturm_chain(const Polynomial<Rational>& a) {
  std::vector<Polynomial<Rational>> chain{a};
  if (a.degree() == 0) return chain;
  chain.push_back(derivative(a));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

/// Number of distinct real roots of a.
inline std::size_t sturm_real_root_count(const Polynomial<Rational>& a) {
  if (a.is_zero()) throw ZeroPolynomial("real-root count of the zero polynomial");
  auto chain = sturm_chain(a);
  // Signs at +inf are the leading-coefficient signs; at -inf they flip for odd degree.
  auto variations = [&](bool at_minus_infinity) {
    std::size_t count = 0;
    int last = 0;
    for (const auto& p : chain) {
      int s = sign(p.leading());
      if (at_minus_infinity && p.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(true) - variations(false);
}

}  // namespace landen
