#include "hsamuel/ideal.hpp"

namespace hsamuel {

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  const TermOrder local = TermOrder::local_degrevlex();
  std::sort(gens.begin(), gens.end(),
            [&](const Monomial& a, const Monomial& b) { return local.compare(a, b) > 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out) {
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

}  // namespace hsamuel
