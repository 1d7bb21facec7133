#ifndef ORBIDT_POINTS_HPP
#define ORBIDT_POINTS_HPP

#include <random>

#include "orbidt/laurent.hpp"

namespace orbidt {

// Small random rational p/q with 1 <= p, q <= 97.  Uses raw mt19937_64 output
// (not std distributions) so the same seed gives the same draws everywhere.
Rational draw_rational(std::mt19937_64& rng);

// Random point with c = s1 s2 s3 distinct from +-1 (degenerate kappa).
RationalPoint draw_point(std::mt19937_64& rng);

// Run f at freshly drawn points until it stops hitting vanishing brackets;
// at most `retries` draws before the error propagates.
template <class F>
auto with_generic_point(std::mt19937_64& rng, F&& f, int retries = 32) {
  for (int attempt = 1;; ++attempt) {
    const RationalPoint pt = draw_point(rng);
    try {
      return f(pt);
    } catch (const Error& e) {
      if (e.code() != errc::bracket_vanishes || attempt >= retries) throw;
    }
  }
}

}  // namespace orbidt

#endif
