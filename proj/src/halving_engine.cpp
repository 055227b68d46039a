#include "halving/halving_engine.hpp"

namespace halving {

RootTriple<Rational> split_two_division_cubic(const Curve<Rational>& c) {
  require_nonsingular(c);
  Rational d;
  if (!c.a6.is_zero()) {
    const auto roots = rational_roots_cubic(c.a2, c.a4, c.a6);
    if (roots.empty()) {
      throw UnsupportedOverQ("2-division cubic has no rational root");
    }
    d = roots.front();
  }
  auto triple = root_triple_from_d(RationalField{}, c, d);
  if (!triple) throw UnsupportedOverQ("2-division cubic does not split over Q");
  if (!verify_vieta(c, *triple)) throw std::logic_error("root triple violates Vieta identities");
  return *triple;
}

}  // namespace halving
