#include "reisner/sigma.hpp"

#include <algorithm>
#include <stdexcept>

namespace reisner {

namespace {

struct DegreeRanks {
  std::size_t dim_mj = 0;
  std::size_t rank_theta = 0;
  RowSpan sigma;
};

DegreeRanks sigma_degree(const RelativeComplex& pair, const Lsop& theta, int j) {
  if (!theta.validated) throw std::invalid_argument("sigma: unvalidated l.s.o.p.");
  if (j < 0) throw std::invalid_argument("sigma: degree must be nonnegative");
  const int d = pair.dim() + 1;
  if (static_cast<int>(theta.forms.size()) != d) {
    throw std::invalid_argument("sigma: form count does not match dim(pair)+1");
  }
  const FieldSpec field = theta.field;
  const MonomialBasis basis_j = monomial_basis(pair, j);
  DegreeRanks out{basis_j.size(), 0, RowSpan(field, basis_j.size())};

  if (j > 0) {
    for (const auto& form : theta.forms) {
      const GradedMap gm = mult_matrix(pair, form, j - 1, field);
      out.sigma.insert_all_cols(gm.matrix);
    }
  }
  out.rank_theta = out.sigma.rank();
  if (out.rank_theta == out.dim_mj) return out;  // (Theta M)_j already fills M_j

  std::vector<GradedMap> maps;
  maps.reserve(static_cast<std::size_t>(d));
  for (const auto& form : theta.forms) maps.push_back(mult_matrix(pair, form, j, field));

  const std::size_t mj = basis_j.size();
  for (int k = 0; k < d; ++k) {
    Matrix block = maps[static_cast<std::size_t>(k)].matrix;
    for (int i = 0; i < d; ++i) {
      if (i != k) block = Matrix::hcat(block, maps[static_cast<std::size_t>(i)].matrix);
    }
    const Matrix kern = block.kernel_basis();
    for (std::size_t r = 0; r < kern.rows(); ++r) {
      std::vector<Scalar> x;
      x.reserve(mj);
      for (std::size_t c = 0; c < mj; ++c) x.push_back(kern.at(r, c));
      out.sigma.insert(x);
    }
    if (out.sigma.rank() == out.dim_mj) break;
  }
  return out;
}

Lsop revalidated_for(const Lsop& theta, const SimplicialComplex& k) {
  Lsop t = theta;
  t.validated = is_lsop(k, t.forms, t.field);
  return t;
}

bool componentwise_geq(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

std::string vec_str(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct ARoutes {
  long long algebraic = 0;
  long long hochster = 0;
};

ARoutes a_invariant_routes(const SimplicialComplex& k, const Lsop& theta) {
  const int d = k.dim() + 1;
  const auto qh = quotient_hilbert(k, theta);
  int m = -1;
  for (int j = 0; j <= d; ++j) {
    if (qh[static_cast<std::size_t>(j)] != 0) m = j;
  }
  if (m < 0) throw std::logic_error("a_invariant: quotient vanishes entirely");

  // Hochster route: smallest face whose link carries top homology.
  long long min_card = -1;
  for (const auto& tau : k.all_faces()) {
    const int top = (d - 1) - static_cast<int>(tau.size());
    if (betti(link(k, tau), theta.field).at(top) != 0) {
      if (min_card < 0 || static_cast<long long>(tau.size()) < min_card) {
        min_card = static_cast<long long>(tau.size());
      }
    }
  }
  if (min_card < 0) throw std::logic_error("a_invariant: no face with nonvanishing top link homology");
  return ARoutes{m - d, -min_card};
}

}  // namespace

SigmaPiece sigma_piece(const RelativeComplex& pair, const Lsop& theta, int j) {
  DegreeRanks dr = sigma_degree(pair, theta, j);
  return SigmaPiece{j, dr.sigma.basis(), dr.dim_mj, dr.dim_mj - dr.sigma.rank()};
}

SigmaPiece sigma_piece(const SimplicialComplex& k, const Lsop& theta, int j) {
  return sigma_piece(RelativeComplex::absolute(k), theta, j);
}

std::vector<long long> quotient_hilbert(const RelativeComplex& pair, const Lsop& theta) {
  const int d = pair.dim() + 1;
  std::vector<long long> out;
  for (int j = 0; j <= d; ++j) {
    const DegreeRanks dr = sigma_degree(pair, theta, j);
    out.push_back(static_cast<long long>(dr.dim_mj) - static_cast<long long>(dr.sigma.rank()));
  }
  return out;
}

std::vector<long long> quotient_hilbert(const SimplicialComplex& k, const Lsop& theta) {
  return quotient_hilbert(RelativeComplex::absolute(k), theta);
}

std::vector<long long> quotient_hilbert_extended(const RelativeComplex& pair, const Lsop& theta) {
  const int d = pair.dim() + 1;
  std::vector<long long> out;
  for (int j = 0; j <= d + 1; ++j) {
    const DegreeRanks dr = sigma_degree(pair, theta, j);
    out.push_back(static_cast<long long>(dr.dim_mj) - static_cast<long long>(dr.sigma.rank()));
  }
  return out;
}

std::vector<long long> sigma_layer_dims(const RelativeComplex& pair, const Lsop& theta) {
  const int d = pair.dim() + 1;
  std::vector<long long> out;
  for (int j = 0; j <= d + 1; ++j) {
    const DegreeRanks dr = sigma_degree(pair, theta, j);
    out.push_back(static_cast<long long>(dr.sigma.rank()) - static_cast<long long>(dr.rank_theta));
  }
  return out;
}

std::vector<long long> h_prime(const RelativeComplex& pair, FieldSpec field) {
  const int d = pair.dim() + 1;
  const HVector h = h_vector(pair, d);
  const BettiVector b = betti(pair, field);
  std::vector<long long> out(static_cast<std::size_t>(d + 1), 0);
  for (int j = 0; j <= d; ++j) {
    long long corr = 0;
    for (int i = 1; i <= j - 1; ++i) {
      const long long term = b.at(i - 1);
      corr += ((j - i) % 2 == 0) ? term : -term;
    }
    out[static_cast<std::size_t>(j)] = h.at(j) - binom(d, j) * corr;
  }
  return out;
}

std::vector<long long> h_prime(const SimplicialComplex& k, FieldSpec field) {
  return h_prime(RelativeComplex::absolute(k), field);
}

HppVector h_double_prime(const RelativeComplex& pair, FieldSpec field) {
  const int d = pair.dim() + 1;
  const auto hp = h_prime(pair, field);
  const BettiVector b = betti(pair, field);
  HppVector out;
  out.provenance = HppProvenance::combinatorial;
  out.values.assign(static_cast<std::size_t>(d + 1), 0);
  for (int j = 0; j <= d; ++j) {
    out.values[static_cast<std::size_t>(j)] =
        (j < d) ? hp[static_cast<std::size_t>(j)] - binom(d, j) * b.at(j - 1)
                : hp[static_cast<std::size_t>(j)];
  }
  return out;
}

HppVector h_double_prime(const SimplicialComplex& k, FieldSpec field) {
  return h_double_prime(RelativeComplex::absolute(k), field);
}

Report verify_schenzel(const RelativeComplex& pair, const Lsop& theta) {
  Report r;
  r.command = "verify schenzel";
  r.theorem = "thm3.2";
  r.characteristic = theta.field.characteristic();
  r.seeds = {theta.seed};
  r.inputs["delta"] = complex_digest(pair.delta());
  if (!pair.is_absolute()) r.inputs["gamma"] = complex_digest(pair.gamma());

  if (!is_buchsbaum(pair, theta.field)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "input is not a Buchsbaum (relative) complex over " + theta.field.str();
    return r;
  }
  const int d = pair.dim() + 1;
  const auto ext = artinian_hilbert(pair, theta, d + 1);
  const std::vector<long long> alg(ext.begin(), ext.end() - 1);
  const auto hp = h_prime(pair, theta.field);
  r.vectors["artinian_hilbert"] = alg;
  r.vectors["h_prime"] = hp;
  const bool ok = alg == hp && ext.back() == 0;
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.summary = ok ? "dim(M/Theta M)_j = h'_j for j = 0..d, with vanishing at d+1"
                 : "Artinian Hilbert function " + vec_str(alg) + " differs from h' " + vec_str(hp);
  return r;
}

Report verify_thm_3_3(const RelativeComplex& pair, const Lsop& theta) {
  Report r;
  r.command = "verify thm33";
  r.theorem = "thm3.3";
  r.characteristic = theta.field.characteristic();
  r.seeds = {theta.seed};
  r.inputs["delta"] = complex_digest(pair.delta());
  if (!pair.is_absolute()) r.inputs["gamma"] = complex_digest(pair.gamma());

  if (!is_buchsbaum(pair, theta.field)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "input is not a Buchsbaum (relative) complex over " + theta.field.str();
    return r;
  }
  const auto ext = quotient_hilbert_extended(pair, theta);
  const std::vector<long long> alg(ext.begin(), ext.end() - 1);
  const auto comb = h_double_prime(pair, theta.field);
  r.vectors["quotient_hilbert"] = alg;
  r.vectors["h_double_prime"] = comb.values;
  const bool ok = alg == comb.values && ext.back() == 0;
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.summary = ok ? "dim(M/Sigma)_j = h''_j for j = 0..d, with vanishing at d+1"
                 : "quotient Hilbert function " + vec_str(alg) + " differs from h'' " +
                       vec_str(comb.values);
  return r;
}

Report verify_sigma_layer(const RelativeComplex& pair, const Lsop& theta) {
  Report r;
  r.command = "verify sigma-layer";
  r.theorem = "thm2.3i-linear";
  r.characteristic = theta.field.characteristic();
  r.seeds = {theta.seed};
  r.inputs["delta"] = complex_digest(pair.delta());
  if (!pair.is_absolute()) r.inputs["gamma"] = complex_digest(pair.gamma());

  if (!is_buchsbaum(pair, theta.field)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "input is not a Buchsbaum (relative) complex over " + theta.field.str();
    return r;
  }
  const int d = pair.dim() + 1;
  const auto layers = sigma_layer_dims(pair, theta);
  const BettiVector b = betti(pair, theta.field);
  std::vector<long long> expected(static_cast<std::size_t>(d + 2), 0);
  for (int j = 0; j <= d - 1; ++j) expected[static_cast<std::size_t>(j)] = binom(d, j) * b.at(j - 1);
  r.vectors["layer_dims"] = layers;
  r.vectors["expected"] = expected;
  const bool ok = layers == expected;
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.summary = ok ? "dim(Sigma/Theta M)_j = C(d,j) * beta_{j-1} for all degrees"
                 : "layer dimensions " + vec_str(layers) + " differ from " + vec_str(expected);
  return r;
}

Report verify_ball_duality(const SimplicialComplex& k, const Lsop& theta) {
  Report r;
  r.command = "verify ball-duality";
  r.theorem = "eq1-ball";
  r.characteristic = theta.field.characteristic();
  r.seeds = {theta.seed};
  r.inputs["delta"] = complex_digest(k);

  if (!is_homology_ball(k, theta.field)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "input is not a homology ball over " + theta.field.str();
    return r;
  }
  const int d = k.dim() + 1;
  const auto bd = classify_manifold(k, theta.field).boundary;
  const auto pair_h = artinian_hilbert(RelativeComplex(k, bd), theta);
  const auto abs_h = artinian_hilbert(k, theta);
  r.vectors["pair_artinian"] = pair_h;
  r.vectors["complex_artinian"] = abs_h;
  bool ok = true;
  for (int j = 0; j <= d; ++j) {
    if (pair_h[static_cast<std::size_t>(j)] != abs_h[static_cast<std::size_t>(d - j)]) ok = false;
  }
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.summary = ok ? "dim(F[K,dK]/Theta)_j = dim(F[K]/Theta)_{d-j} for all j"
                 : "ball duality fails: " + vec_str(pair_h) + " vs reversed " + vec_str(abs_h);
  return r;
}

Report verify_manifold_duality(const SimplicialComplex& k, const Lsop& theta_delta,
                               const Lsop& theta_pair, DualityScope scope) {
  Report r;
  r.command = "verify duality";
  r.theorem = scope == DualityScope::sigma_reversal ? "cor1.4" : "thm1.1";
  r.characteristic = theta_delta.field.characteristic();
  r.seeds = {theta_delta.seed, theta_pair.seed};
  r.inputs["delta"] = complex_digest(k);

  if (theta_delta.field != theta_pair.field) {
    throw std::invalid_argument("verify_manifold_duality: mixed fields");
  }
  const FieldSpec field = theta_delta.field;
  const auto v = classify_manifold(k, field);
  if (v.kind != ManifoldKind::with_boundary || !v.connected || !v.orientable) {
    r.verdict = Verdict::precondition_failure;
    std::string why;
    if (v.kind != ManifoldKind::with_boundary) {
      why = "not a homology manifold with non-empty boundary";
    } else if (!v.connected) {
      why = "not connected";
    } else {
      why = "orientability fails: H_top(Delta, dDelta; " + field.str() + ") is not 1-dimensional";
    }
    r.summary = "hypothesis check failed: " + why;
    return r;
  }
  const int d = k.dim() + 1;
  const RelativeComplex pair(k, v.boundary);

  bool ok = true;
  if (scope != DualityScope::sigma_reversal) {
    const auto hpp_pair = h_double_prime(pair, field).values;
    const auto hpp_abs = h_double_prime(k, field).values;
    r.vectors["hpp_pair"] = hpp_pair;
    r.vectors["hpp_complex"] = hpp_abs;
    for (int i = 0; i <= d; ++i) {
      if (hpp_pair[static_cast<std::size_t>(i)] != hpp_abs[static_cast<std::size_t>(d - i)])
        ok = false;
    }
  }
  if (scope != DualityScope::hpp_reversal) {
    const auto qh_pair = quotient_hilbert(pair, theta_pair);
    const auto qh_abs = quotient_hilbert(k, theta_delta);
    r.vectors["sigma_quotient_pair"] = qh_pair;
    r.vectors["sigma_quotient_complex"] = qh_abs;
    for (int i = 0; i <= d; ++i) {
      if (qh_pair[static_cast<std::size_t>(i)] != qh_abs[static_cast<std::size_t>(d - i)])
        ok = false;
    }
  }
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.summary = ok ? "h'' and Sigma-quotient Hilbert functions of (Delta,dDelta) are the reverses of those of Delta"
                 : "duality reversal fails";
  return r;
}

Report verify_gorenstein_symmetry(const SimplicialComplex& k, const Lsop& theta) {
  Report r;
  r.command = "verify gorenstein";
  r.theorem = "remark-gorenstein";
  r.characteristic = theta.field.characteristic();
  r.seeds = {theta.seed};
  r.inputs["delta"] = complex_digest(k);

  const auto v = classify_manifold(k, theta.field);
  const auto qh = quotient_hilbert(k, theta);
  r.vectors["sigma_quotient"] = qh;
  auto reversed = qh;
  std::reverse(reversed.begin(), reversed.end());
  const bool palindrome = qh == reversed;

  if (v.kind != ManifoldKind::closed || !v.connected || !v.orientable) {
    r.verdict = Verdict::precondition_failure;
    std::string why = v.kind != ManifoldKind::closed ? "not a closed homology manifold"
                      : !v.connected                 ? "not connected"
                                                     : "not orientable over " + theta.field.str();
    r.summary = "hypothesis check failed: " + why +
                (palindrome ? "; quotient is nevertheless a palindrome"
                            : "; quotient " + vec_str(qh) + " is not a palindrome, as expected");
    return r;
  }
  r.verdict = palindrome ? Verdict::pass : Verdict::fail;
  r.summary = palindrome
                  ? "Sigma-quotient Hilbert function is a palindrome (Gorenstein symmetry)"
                  : "quotient " + vec_str(qh) + " is not a palindrome";
  return r;
}

long long a_invariant(const SimplicialComplex& k, const Lsop& theta) {
  if (!is_connected(k, theta.field)) {
    throw std::invalid_argument("a_invariant: complex is not connected");
  }
  if (!is_buchsbaum(k, theta.field)) {
    throw std::invalid_argument("a_invariant: complex is not Buchsbaum");
  }
  const ARoutes routes = a_invariant_routes(k, theta);
  if (routes.algebraic != routes.hochster) {
    throw std::logic_error("a_invariant: algebraic route " + std::to_string(routes.algebraic) +
                           " disagrees with Hochster route " + std::to_string(routes.hochster));
  }
  return routes.algebraic;
}

Report verify_a_invariant(const SimplicialComplex& k, const Lsop& theta) {
  Report r;
  r.command = "verify a-invariant";
  r.theorem = "thm-a-invariant";
  r.characteristic = theta.field.characteristic();
  r.seeds = {theta.seed};
  r.inputs["delta"] = complex_digest(k);

  if (!is_connected(k, theta.field) || !is_buchsbaum(k, theta.field)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "input is not a connected Buchsbaum complex over " + theta.field.str();
    return r;
  }
  const ARoutes routes = a_invariant_routes(k, theta);
  r.vectors["a_invariant"] = {routes.algebraic};
  r.vectors["a_hochster"] = {routes.hochster};
  const bool ok = routes.algebraic == routes.hochster;
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.summary = ok ? "max-degree route and Hochster link route agree: a = " +
                       std::to_string(routes.algebraic)
                 : "routes disagree";
  return r;
}

Report verify_monotonicity(const SimplicialComplex& delta, const SimplicialComplex& gamma,
                           FieldSpec field, const std::optional<Lsop>& common_theta) {
  Report r;
  r.command = "verify monotone";
  r.theorem = "thm3.7";
  r.characteristic = field.characteristic();
  r.inputs["delta"] = complex_digest(delta);
  r.inputs["gamma"] = complex_digest(gamma);

  if (!delta.contains_subcomplex(gamma)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "gamma is not a subcomplex of delta";
    return r;
  }
  if (gamma.dim() != delta.dim()) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "gamma does not have the same dimension as delta";
    return r;
  }
  if (!is_buchsbaum(delta, field) || !is_buchsbaum(gamma, field)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "both complexes must be Buchsbaum over " + field.str();
    return r;
  }
  const auto hd = h_double_prime(delta, field).values;
  const auto hg = h_double_prime(gamma, field).values;
  r.vectors["hpp_delta"] = hd;
  r.vectors["hpp_gamma"] = hg;
  bool ok = componentwise_geq(hd, hg);

  if (common_theta) {
    if (common_theta->field != field) {
      throw std::invalid_argument("verify_monotonicity: theta field mismatch");
    }
    const Lsop td = revalidated_for(*common_theta, delta);
    const Lsop tg = revalidated_for(*common_theta, gamma);
    r.seeds = {common_theta->seed};
    if (!td.validated || !tg.validated) {
      r.verdict = Verdict::precondition_failure;
      r.summary = "supplied forms are not a common l.s.o.p. for both complexes";
      return r;
    }
    const auto qd = quotient_hilbert(delta, td);
    const auto qg = quotient_hilbert(gamma, tg);
    r.vectors["sigma_quotient_delta"] = qd;
    r.vectors["sigma_quotient_gamma"] = qg;
    ok = ok && componentwise_geq(qd, qg);
  }
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.summary = ok ? "h''(delta) dominates h''(gamma) componentwise"
                 : "monotonicity fails: " + vec_str(hd) + " vs " + vec_str(hg);
  return r;
}

Report verify_link_bound(const SimplicialComplex& k, const Face& tau, FieldSpec field) {
  Report r;
  r.command = "verify cor42";
  r.theorem = "cor4.2";
  r.characteristic = field.characteristic();
  r.inputs["delta"] = complex_digest(k);
  r.inputs["tau"] = face_str(tau);

  if (tau.empty() || !k.has_face(tau)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "tau must be a nonempty face of the complex";
    return r;
  }
  if (!is_buchsbaum(k, field)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "complex is not Buchsbaum over " + field.str();
    return r;
  }
  const int d = k.dim() + 1;
  const auto hpp = h_double_prime(k, field);
  const auto lk = link(k, tau);
  const HVector lk_h = h_vector(lk, lk.dim() + 1);
  std::vector<long long> lk_padded(static_cast<std::size_t>(d + 1), 0);
  for (int j = 0; j <= d; ++j) lk_padded[static_cast<std::size_t>(j)] = lk_h.at(j);
  r.vectors["hpp_delta"] = hpp.values;
  r.vectors["h_link"] = lk_padded;
  const bool ok = componentwise_geq(hpp.values, lk_padded);
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.summary = ok ? "h''(delta) dominates h(link(tau)) componentwise"
                 : "link bound fails for tau = " + face_str(tau);
  return r;
}

Report verify_lemma_exact(const SimplicialComplex& delta, const SimplicialComplex& gamma,
                          const Lsop& theta) {
  Report r;
  r.command = "verify lemma-exact";
  r.theorem = "lem4.4";
  r.characteristic = theta.field.characteristic();
  r.seeds = {theta.seed};
  r.inputs["delta"] = complex_digest(delta);
  r.inputs["gamma"] = complex_digest(gamma);
  const FieldSpec field = theta.field;

  if (classify_manifold(delta, field).kind != ManifoldKind::closed) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "delta is not a closed homology manifold over " + field.str();
    return r;
  }
  if (!delta.contains_subcomplex(gamma) || gamma.dim() != delta.dim()) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "gamma must be a full-dimensional subcomplex of delta";
    return r;
  }
  if (!is_homology_ball(gamma, field)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "gamma is not a homology ball over " + field.str();
    return r;
  }
  const int d = delta.dim() + 1;
  const auto gamma_bd = classify_manifold(gamma, field).boundary;

  // D = delta minus the interior faces of gamma.
  std::vector<Face> d_faces;
  for (const auto& f : delta.all_faces()) {
    if (gamma.has_face(f) && !gamma_bd.has_face(f)) continue;
    d_faces.push_back(f);
  }
  const auto D = SimplicialComplex::from_facets(d_faces);
  if (D.face_count() != d_faces.size()) {
    r.verdict = Verdict::fail;
    r.summary = "removing interior faces of gamma did not leave a simplicial complex";
    return r;
  }

  const auto vD = classify_manifold(D, field);
  const bool boundary_ok = vD.kind == ManifoldKind::with_boundary && vD.boundary == gamma_bd;

  const Lsop theta_D = revalidated_for(theta, D);
  const Lsop theta_G = revalidated_for(theta, gamma);
  if (!theta_D.validated || !theta_G.validated) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "theta fails the l.s.o.p. criterion on a subcomplex (resample the seed)";
    return r;
  }
  const RelativeComplex pair_D(D, vD.kind == ManifoldKind::with_boundary ? vD.boundary : gamma_bd);

  const auto qh_delta = quotient_hilbert(delta, theta);
  const auto qh_pair = quotient_hilbert(pair_D, theta_D);
  const auto ah_gamma = artinian_hilbert(gamma, theta_G);
  r.vectors["sigma_quotient_delta"] = qh_delta;
  r.vectors["sigma_quotient_pair"] = qh_pair;
  r.vectors["gamma_artinian"] = ah_gamma;
  bool additive = true;
  for (int j = 0; j <= d; ++j) {
    if (qh_delta[static_cast<std::size_t>(j)] !=
        qh_pair[static_cast<std::size_t>(j)] + ah_gamma[static_cast<std::size_t>(j)]) {
      additive = false;
    }
  }

  // h_j(D, dD) = h_j(delta) - h_j(gamma).
  const HVector h_pair = h_vector(pair_D, d);
  const HVector h_delta = h_vector(delta, d);
  const HVector h_gamma = h_vector(gamma, d);
  std::vector<long long> h_pair_v, h_diff_v;
  for (int j = 0; j <= d; ++j) {
    h_pair_v.push_back(h_pair.at(j));
    h_diff_v.push_back(h_delta.at(j) - h_gamma.at(j));
  }
  r.vectors["h_pair"] = h_pair_v;
  r.vectors["h_delta_minus_gamma"] = h_diff_v;
  const bool h_ok = h_pair_v == h_diff_v;

  // Excision at the Betti level.
  const auto b_pair = betti(pair_D, field).as_list();
  const auto b_rel = betti(RelativeComplex(delta, gamma), field).as_list();
  const auto b_delta = betti(delta, field).as_list();
  const bool excision_ok = b_pair == b_rel && b_pair == b_delta;
  r.vectors["beta_pair"] = b_pair;
  r.vectors["beta_delta"] = b_delta;

  const bool ok = boundary_ok && additive && h_ok && excision_ok;
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.summary = ok ? "D is a manifold with boundary dGamma; Sigma-quotients add per degree; "
                   "h and Betti bookkeeping agree"
                 : std::string("checks failed:") + (boundary_ok ? "" : " boundary") +
                       (additive ? "" : " additivity") + (h_ok ? "" : " h-vectors") +
                       (excision_ok ? "" : " excision");
  return r;
}

Report verify_buchsbaum_multiplicity(const SimplicialComplex& k, const Lsop& theta) {
  Report r;
  r.command = "verify multiplicity";
  r.theorem = "lem2.1";
  r.characteristic = theta.field.characteristic();
  r.seeds = {theta.seed};
  r.inputs["delta"] = complex_digest(k);

  if (!is_buchsbaum(k, theta.field)) {
    r.verdict = Verdict::precondition_failure;
    r.summary = "complex is not Buchsbaum over " + theta.field.str();
    return r;
  }
  const int d = k.dim() + 1;
  // One degree beyond d witnesses that the Artinian reduction has no tail.
  const auto ah = artinian_hilbert(k, theta, d + 1);
  const BettiVector b = betti(k, theta.field);
  long long total = 0;
  for (const long long v : ah) total += v;
  const long long facets = static_cast<long long>(k.facets().size());
  long long rhs = 0;
  for (int i = 0; i <= d - 1; ++i) rhs += binom(d - 1, i) * b.at(i - 1);
  r.vectors["artinian_hilbert"] = ah;
  r.vectors["difference"] = {total - facets};
  r.vectors["expected"] = {rhs};
  const bool ok = (total - facets) == rhs && ah.back() == 0;
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.summary = ok ? "dim(M/Theta M) - e_Theta = " + std::to_string(total - facets) +
                       " matches the binomial-weighted Betti sum"
                 : "multiplicity identity fails: " + std::to_string(total - facets) + " vs " +
                       std::to_string(rhs);
  return r;
}

}  // namespace reisner
