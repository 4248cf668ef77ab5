#pragma once

#include "reisner/sigma.hpp"
#include "reisner/surgery.hpp"

namespace reisner {

bool unimodal(const std::vector<long long>& v);

struct MultProfileRow {
  int degree = 0;  // map (M/Sigma)_degree -> (M/Sigma)_{degree+1}
  long long dim_source = 0;
  long long dim_target = 0;
  long long rank = 0;
};

/// Rank table of multiplication by omega on M/Sigma(Theta;M), degrees
/// 0..d-1, computed by lifting the multiplication to the monomial bases
/// and reducing modulo the Sigma spans.
std::vector<MultProfileRow> mult_profile(const RelativeComplex& pair, const Lsop& theta,
                                         const LinearForm& omega);

/// Monte Carlo WLP verdict at the middle degrees floor(d/2) -> floor(d/2)+1.
/// "no-WLP-observed" is deliberately weaker than "no WLP": genericity
/// failure cannot be excluded at a finite prime.
struct WlpReport {
  int degree_lo = 0;
  int degree_hi = 0;
  long long source_dim = 0;
  long long target_dim = 0;
  long long best_rank = 0;
  bool surjective = false;
  bool injective = false;
  int trials = 0;
  std::uint64_t seed = 0;

  bool has_wlp() const { return surjective; }
  std::string verdict() const { return has_wlp() ? "has-WLP" : "no-WLP-observed"; }
};

/// Samples `trials` random (Theta, omega) pairs and keeps the best rank.
WlpReport wlp_check(const SimplicialComplex& k, FieldSpec field, std::uint64_t seed,
                    int trials = 5);

/// Same, but under one fixed Theta (omega resampled per trial).
WlpReport wlp_under_theta(const SimplicialComplex& k, const Lsop& theta, std::uint64_t seed,
                          int trials = 5);

/// Bistellar flips preserve the WLP (p outside the middle exclusion set),
/// checked under a common l.s.o.p. sampled over the union vertex set; the
/// proof-side Hilbert functions of the two joined balls are pinned as well.
Report verify_flip_equiv(const SimplicialComplex& k, const FlipSite& site, FieldSpec field,
                         std::uint64_t seed, int trials = 5);

/// Stellar subdivisions at faces with dim(sigma) > d/2 preserve the WLP;
/// each side uses its own generic data.
Report verify_stellar_equiv(const SimplicialComplex& k, const Face& sigma, FieldSpec field,
                            std::uint64_t seed, int trials = 5);

/// Barycentric subdivision: h'' unimodality plus the injectivity /
/// surjectivity split of the generic multiplication maps.  Positive
/// characteristic runs are flagged as a proxy for the theorem's
/// characteristic-zero hypothesis.
Report verify_bary_unimodality(const SimplicialComplex& k, FieldSpec field, std::uint64_t seed,
                               int trials = 5);

}  // namespace reisner
