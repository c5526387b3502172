#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsv/conversion.hpp"
#include "gsv/pair.hpp"
#include "gsv/rng.hpp"

namespace gsv {

struct PairGenSpec {
  int m = 0;
  int p = 0;
  int n = 0;
  ScalarKind scalar_kind = ScalarKind::Real;
  double stacked_condition_target = 1.0;
  uint64_t seed = 0;
  // optional prescribed alpha values: (value in (0,1], multiplicity);
  // multiplicities must sum to n
  std::vector<std::pair<double, int>> cluster_spec;
};

struct GeneratedPair {
  MatrixPair pair;
  std::vector<GsvPair> planted;  // alpha non-increasing
};

/// Builds a pair whose GSVs equal the planted targets by construction:
/// [A; B] = [U D_alpha W^H; V D_beta W^H] C with random unitary U, V, W and a
/// right factor C whose singular values hit the stacked conditioning target.
/// Deterministic for a fixed spec (seed included).
GeneratedPair generate_pair(const PairGenSpec& spec);

/// Haar-ish random unitary (QR of a Gaussian matrix, phases fixed).
DenseMatrix random_unitary(int n, ScalarKind kind, Rng& rng);

}  // namespace gsv
