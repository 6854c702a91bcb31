#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmirror/rational.hpp"

namespace qmirror {

// Target data: a complete intersection of multidegree a = (a_1..a_l) in
// projective space P^{n-1}, with the Calabi-Yau balance sum(a_k) = n.
struct Model {
  int n = 0;
  std::vector<long> a;

  Model() = default;
  Model(int n_, std::vector<long> a_) : n(n_), a(std::move(a_)) { validate(); }

  void validate() const {
    if (n < 2) throw std::invalid_argument("model: n must be at least 2");
    if (a.empty()) throw std::invalid_argument("model: a must be nonempty");
    long sum = 0;
    for (long ak : a) {
      if (ak < 1) throw std::invalid_argument("model: entries of a must be positive");
      sum += ak;
    }
    if (sum != n)
      throw std::invalid_argument("model: entries of a must sum to n");
  }

  int codim() const { return static_cast<int>(a.size()); }

  // product of a_k^(a_k)
  Rat a_to_a() const {
    Rat out(1);
    for (long ak : a) out *= Rat(ak).pow(ak);
    return out;
  }

  Rat sum_inv_a() const {
    Rat out(0);
    for (long ak : a) out += Rat(1, ak);
    return out;
  }

  std::string str() const {
    std::string s = "n=" + std::to_string(n) + " a=(";
    for (size_t i = 0; i < a.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(a[i]);
    }
    return s + ")";
  }
};

}  // namespace qmirror
