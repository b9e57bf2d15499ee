// Frames the dilogarithm for a few integer parameters and certifies each
// result as a 2-function.
#include <iostream>

#include "sfn/sfn.hpp"

int main() {
  using namespace sfn;
  const int order = 24;
  const NumberField q = NumberField::rationals();
  std::vector<Rational> c;
  for (int k = 1; k <= order; ++k) c.push_back(Rational(1, k * k));
  const Series li2 = Series::from_rationals(q, order, c);

  for (long f : {-1L, 1L, 2L, 3L}) {
    const Series w = frame_f(li2, f);
    const SReport r = check_sfunction(w, 2);
    std::cout << "f=" << f << "  a_1..a_6 =";
    for (int k = 1; k <= 6; ++k) std::cout << ' ' << (w[k] * Rational(k * k)).to_string();
    std::cout << "  " << (r.pass ? "2-function" : "NOT a 2-function") << '\n';
  }
}
