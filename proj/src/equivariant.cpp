#include "qmirror/equivariant.hpp"

#include <set>
#include <stdexcept>

namespace qmirror {

std::vector<EpsRat> epsilon_ray(const std::vector<Rat>& c) {
  std::set<Rat> seen;
  for (const Rat& v : c) {
    if (v.is_zero())
      throw std::invalid_argument("epsilon_ray: direction entries must be nonzero");
    if (!seen.insert(v).second)
      throw std::invalid_argument("epsilon_ray: direction entries must be distinct");
  }
  std::vector<EpsRat> alpha;
  alpha.reserve(c.size());
  EpsRat eps = EpsRat::variable();
  for (const Rat& v : c) alpha.push_back(eps * EpsRat(v));
  return alpha;
}

std::vector<Cyclo> root_of_unity_ray(int n, const Rat& scale, int shift) {
  if (n < 2) throw std::invalid_argument("root_of_unity_ray: n must be at least 2");
  if (scale.is_zero())
    throw std::invalid_argument("root_of_unity_ray: scale must be nonzero");
  Cyclo zeta = Cyclo::root_of_unity(n);
  std::vector<Cyclo> alpha;
  alpha.reserve(n);
  for (int i = 0; i < n; ++i)
    alpha.push_back(Cyclo(scale) * zeta.pow((i + shift) % n));
  return alpha;
}

Rat ray_limit(const EpsRat& v) {
  if (v.is_zero()) return Rat(0);
  if (v.pole_order_at(Rat(0)) > 0)
    throw std::domain_error("ray_limit: pole at the ray origin");
  return v.eval(Rat(0));
}

Rat ray_limit(const Cyclo& v) { return v.rational_value(); }

}  // namespace qmirror
