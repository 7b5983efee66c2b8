#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "solvspin/liealg/curvature.hpp"

namespace solvspin::liealg {

/// Splitting of the frame into a nilpotent ideal g and an abelian part a.
/// phi[alpha] is -ad(e_alpha) restricted to g, in the order of `nil`.
template <FieldScalar S>
struct StandardDecomposition {
  std::vector<std::size_t> nil;
  std::vector<std::size_t> abelian;
  std::vector<Matrix<S>> phi;

  std::vector<int> nil_signs(const MetricLieAlgebra<S>& m) const {
    std::vector<int> s;
    for (auto i : nil) s.push_back(m.sign(i));
    return s;
  }
};

class NotStandardDecomposition : public std::invalid_argument {
 public:
  explicit NotStandardDecomposition(const std::string& detail)
      : std::invalid_argument("not a standard decomposition: " + detail) {}
};

/// Builds the decomposition whose abelian part is `abelian` and whose nilpotent
/// part is the complement, in increasing index order. Does not validate.
template <FieldScalar S>
StandardDecomposition<S> make_decomposition(const MetricLieAlgebra<S>& m, std::vector<std::size_t> abelian);

struct StandardReport {
  bool is_standard = false;
  bool is_pseudo_iwasawa = false;
  std::vector<std::string> failures;
};

template <FieldScalar S>
StandardReport check_standard(const MetricLieAlgebra<S>& m, const StandardDecomposition<S>& d);

/// Ricci tensor of the full algebra assembled from the data on g and the maps
/// phi_alpha (closed-form expressions for standard decompositions). Output is
/// indexed like `m`. Throws NotStandardDecomposition when check_standard fails.
template <FieldScalar S>
RicciData<S> ricci_standard(const MetricLieAlgebra<S>& m, const StandardDecomposition<S>& d);

}  // namespace solvspin::liealg
