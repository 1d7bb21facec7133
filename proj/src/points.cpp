#include "orbidt/points.hpp"

namespace orbidt {

Rational draw_rational(std::mt19937_64& rng) {
  const long p = 1 + (long)(rng() % 97);
  const long q = 1 + (long)(rng() % 97);
  return make_rational(Int(p), Int(q));
}

RationalPoint draw_point(std::mt19937_64& rng) {
  for (;;) {
    RationalPoint pt{draw_rational(rng), draw_rational(rng), draw_rational(rng)};
    const Rational c = pt.s1 * pt.s2 * pt.s3;
    if (c != 1 && c != -1) return pt;
  }
}

}  // namespace orbidt
