// Builds a T*-extension, peels it, and checks the rebuilt algebra against the original.
#include <iostream>

#include "quadalg/quadalg.hpp"

using namespace quadalg;

int main() {
  QuadraticAlgebra t = t_star_extension(cubic_I_lambda(Scalar(1)), {"x", "y", "e", "f"});
  std::cout << "T*-extension of x*y*(x* + y*):\n" << serialize_algebra(t);

  NovikovReport rep = symmetric_novikov_suite(t);
  std::cout << "symmetric Novikov suite: " << (rep.all_true() ? "all true" : "failed") << "\n";
  std::cout << "cubic class: " << to_string(classify_binary_cubic(cubic_I_lambda(Scalar(1)))) << "\n";

  PeelResult p = peel_generalized_double_extension(t);
  QuadraticAlgebra rebuilt = generalized_double_extension(p.spec);
  WitnessReport w = verify_witness(p.witness, rebuilt, t);
  std::cout << "peel/rebuild witness: morphism=" << w.is_morphism << " isometry=" << w.is_isometry << "\n";

  TStarExtraction x = extract_t_star(t);
  std::cout << "extracted cubic class: " << to_string(classify_binary_cubic(x.cubic)) << "\n";
  return rep.all_true() && w.is_morphism && w.is_isometry ? 0 : 1;
}
