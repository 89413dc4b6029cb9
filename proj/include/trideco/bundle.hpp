// The bundle a constructor or spec file yields: algebra, triangular data,
// optional anti-involution, Frobenius hint, and CI presentation.
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "trideco/resolutions.hpp"
#include "trideco/triangular.hpp"

namespace trideco {

template <class F>
struct Bundle {
  std::string name;
  std::shared_ptr<const GradedAlgebra<F>> alg;
  bool has_triangular = false;
  TriangularDecomp<F> td;
  std::optional<DenseMatrix<F>> tau;                    // triangular anti-involution
  std::optional<std::pair<int, Vec<F>>> frobenius_hint; // (degree, functional)
  std::optional<CIPresentation> ci_plus;                // A^+ as a complete intersection
};

}  // namespace trideco
