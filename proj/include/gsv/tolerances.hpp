#pragma once

#include <string>

namespace gsv {

/// Central tolerance configuration. Every residual check in the library and
/// the test suites reads from one of these records. The defaults can be
/// overridden by a key=value file whose path is taken from the GSV_TOLERANCES
/// environment variable.
struct Tolerances {
  // factor * eps * max(m,n) * sigma_max bounds the SVD reconstruction error
  double svd_reconstruction_factor = 50.0;
  // factor * eps * order bounds ||Q^H Q - I||_F for unitary factors
  double unitarity_factor = 50.0;
  // |sv_only - svd sv| <= sv_match_rel * sigma_max
  double sv_match_rel = 1e-13;
  // factor * eps * order * (||G||_F + ||S||_F) bounds pencil residuals
  double pencil_residual_factor = 100.0;
  // |alpha^2 + beta^2 - 1| in independent mode
  double pair_sum = 1e-12;
  // sorted conversion pairs vs sorted oracle pairs, per entry
  double oracle_match = 1e-10;
  // sigma_min(beta^2 A^H A - alpha^2 B^H B) <= det_membership * (||G_A||_F + ||G_B||_F)
  double det_membership = 1e-8;
  // slack allowed outside [0,1] before clamping is considered an error
  double clamp_slack = 1e-12;

  static const Tolerances& global();

  /// Parses a key=value file ('#' starts a comment). Unknown keys are errors.
  static Tolerances from_file(const std::string& path);
};

}  // namespace gsv
