#include "reisner/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

#include "reisner/corpus.hpp"
#include "reisner/io.hpp"
#include "reisner/lefschetz.hpp"
#include "reisner/sigma.hpp"

namespace reisner {

namespace {

struct GlobalOpts {
  long long characteristic = 32003;
  bool rational = false;
  std::uint64_t seed = 0;
  int trials = 5;
  std::string out = "text";

  FieldSpec field() const {
    return rational ? FieldSpec::rationals() : FieldSpec::prime(characteristic);
  }
};

Face parse_face(const std::string& csv) {
  Face f;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) f.push_back(std::stoll(tok));
  }
  return make_face(std::move(f));
}

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

NamedComplex resolve_complex(const std::string& spec) {
  if (spec.rfind("corpus:", 0) == 0) {
    const std::string name = spec.substr(7);
    return {name, corpus_complex(name)};
  }
  if (corpus_has(spec)) return {spec, corpus_complex(spec)};
  return {spec, complex_from_json(read_file(spec))};
}

/// gamma specs: "boundary", "star:V", "simplex:v1,v2,...", corpus names,
/// or file paths.
NamedComplex resolve_gamma(const std::string& spec, const SimplicialComplex& delta,
                           FieldSpec field) {
  if (spec == "boundary") {
    const auto v = classify_manifold(delta, field);
    if (v.kind == ManifoldKind::not_manifold) {
      throw std::invalid_argument("gamma \"boundary\": delta does not classify as a manifold");
    }
    return {"boundary", v.boundary};
  }
  if (spec.rfind("star:", 0) == 0) {
    return {spec, star(delta, parse_face(spec.substr(5)))};
  }
  if (spec.rfind("simplex:", 0) == 0) {
    return {spec, SimplicialComplex::simplex(parse_face(spec.substr(8)))};
  }
  return resolve_complex(spec);
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::pass:
    case Verdict::recorded: return 0;
    case Verdict::fail: return 1;
    case Verdict::precondition_failure: return 2;
  }
  return 2;
}

std::string render(const Report& r, const GlobalOpts& g) {
  return (g.out == "json" ? report_to_json(r) : report_to_text(r)) + "\n";
}

Lsop theta_for(const SimplicialComplex& k, const GlobalOpts& g) {
  return random_lsop(k, g.field(), g.seed, 5000);
}

Report with_name(Report r, const std::string& role, const std::string& name) {
  r.inputs[role + "_name"] = name;
  return r;
}

// --- verify-all matrix -------------------------------------------------------

std::vector<Report> verify_all_matrix(const GlobalOpts& g) {
  const FieldSpec f2 = FieldSpec::prime(2);
  const FieldSpec f3 = FieldSpec::prime(3);
  const FieldSpec f5 = FieldSpec::prime(5);
  const FieldSpec f101 = FieldSpec::prime(101);
  const FieldSpec fbig = FieldSpec::prime(32003);
  const FieldSpec qq = FieldSpec::rationals();
  const std::uint64_t seed = g.seed;
  const int trials = g.trials;

  std::vector<Report> out;
  const auto add = [&out](const std::string& name, std::function<Report()> fn) {
    Report r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.verdict = Verdict::fail;
      r.summary = std::string("exception: ") + e.what();
    }
    r.inputs["delta_name"] = name;
    out.push_back(std::move(r));
  };

  const auto pair_abs = [](const std::string& name) {
    return RelativeComplex::absolute(corpus_complex(name));
  };
  const auto pair_bd = [&](const std::string& name, FieldSpec field) {
    const auto& k = corpus_complex(name);
    return RelativeComplex(k, classify_manifold(k, field).boundary);
  };
  const auto lsop_for = [&](const std::string& name, FieldSpec field) {
    return random_lsop(corpus_complex(name), field, seed, 5000);
  };

  // Schenzel's formula and the h'' interpretation over the pinned matrix.
  const std::vector<std::pair<std::string, FieldSpec>> thm33_abs = {
      {"torus7", f101},  {"torus7", qq}, {"rp2-6", f2},    {"rp2-6", f5},
      {"mobius5", f2},   {"mobius5", f3}, {"boundary-simplex-4", fbig}};
  for (const auto& [name, field] : thm33_abs) {
    add(name, [&, n = name, fl = field] {
      return verify_schenzel(pair_abs(n), lsop_for(n, fl));
    });
    add(name, [&, n = name, fl = field] {
      return verify_thm_3_3(pair_abs(n), lsop_for(n, fl));
    });
  }
  for (const FieldSpec fl : {f2, f3}) {
    add("mobius5:boundary", [&, fl] {
      return verify_schenzel(pair_bd("mobius5", fl), lsop_for("mobius5", fl));
    });
    add("mobius5:boundary", [&, fl] {
      return verify_thm_3_3(pair_bd("mobius5", fl), lsop_for("mobius5", fl));
    });
  }

  for (const auto& [name, field] :
       std::vector<std::pair<std::string, FieldSpec>>{{"torus7", f101},
                                                      {"mobius5", f2},
                                                      {"rp2-6", f2},
                                                      {"boundary-simplex-4", fbig},
                                                      {"star-torus7", fbig}}) {
    add(name, [&, n = name, fl = field] {
      return verify_sigma_layer(pair_abs(n), lsop_for(n, fl));
    });
  }

  for (const std::string name : {"simplex-2", "simplex-3", "simplex-4", "star-torus7"}) {
    add(name, [&, n = name] { return verify_ball_duality(corpus_complex(n), lsop_for(n, fbig)); });
  }
  add("star-torus7", [&] {
    return verify_ball_duality(corpus_complex("star-torus7"), lsop_for("star-torus7", qq));
  });

  for (const FieldSpec fl : {f2, f3}) {
    add("mobius5", [&, fl] {
      const auto th = lsop_for("mobius5", fl);
      return verify_manifold_duality(corpus_complex("mobius5"), th, th,
                                     DualityScope::hpp_reversal);
    });
    add("mobius5", [&, fl] {
      const auto th = lsop_for("mobius5", fl);
      return verify_manifold_duality(corpus_complex("mobius5"), th, th,
                                     DualityScope::sigma_reversal);
    });
  }

  for (const auto& [name, field] : std::vector<std::pair<std::string, FieldSpec>>{
           {"torus7", f101}, {"mobius5", f2}, {"boundary-simplex-4", fbig}}) {
    add(name, [&, n = name, fl = field] {
      return verify_buchsbaum_multiplicity(corpus_complex(n), lsop_for(n, fl));
    });
  }

  for (const auto& [name, field] : std::vector<std::pair<std::string, FieldSpec>>{
           {"torus7", f101},
           {"mobius5", f2},
           {"simplex-2", fbig},
           {"rp2-6", f2},
           {"rp2-6", f5},
           {"cycle-5", fbig},
           {"boundary-simplex-5", fbig}}) {
    add(name, [&, n = name, fl = field] {
      return verify_a_invariant(corpus_complex(n), lsop_for(n, fl));
    });
  }

  add("rp2-6", [&] {
    return verify_monotonicity(corpus_complex("rp2-6"), corpus_complex("mobius5-in-rp26"), f2);
  });
  add("torus7", [&] {
    return verify_monotonicity(corpus_complex("torus7"), corpus_complex("star-torus7"), f101);
  });

  add("torus7", [&] { return verify_link_bound(corpus_complex("torus7"), Face{1}, f101); });

  for (const FieldSpec fl : {f2, qq}) {
    add("torus7", [&, fl] {
      return verify_lemma_exact(corpus_complex("torus7"), corpus_complex("star-torus7"),
                                lsop_for("torus7", fl));
    });
  }
  add("boundary-simplex-4", [&] {
    return verify_lemma_exact(corpus_complex("boundary-simplex-4"),
                              SimplicialComplex::simplex({1, 2, 3, 4}),
                              lsop_for("boundary-simplex-4", fbig));
  });

  add("boundary-simplex-4", [&] {
    return verify_flip_equiv(corpus_complex("boundary-simplex-4"),
                             FlipSite{Face{1, 2, 3, 4}, Face{6}}, fbig, seed, trials);
  });

  add("boundary-simplex-4", [&] {
    return verify_stellar_equiv(corpus_complex("boundary-simplex-4"), Face{1, 2, 3, 4}, fbig,
                                seed, trials);
  });
  add("boundary-simplex-5", [&] {
    return verify_stellar_equiv(corpus_complex("boundary-simplex-5"), Face{1, 2, 3, 4}, fbig,
                                seed, trials);
  });

  add("rp2-6", [&] { return verify_bary_unimodality(corpus_complex("rp2-6"), qq, seed, trials); });
  add("rp2-6", [&] { return verify_bary_unimodality(corpus_complex("rp2-6"), f2, seed, trials); });

  for (const auto& [name, field] : std::vector<std::pair<std::string, FieldSpec>>{
           {"torus7", f101}, {"rp2-6", f2}, {"rp2-6", f5}}) {
    add(name, [&, n = name, fl = field] {
      return verify_gorenstein_symmetry(corpus_complex(n), lsop_for(n, fl));
    });
  }

  std::stable_sort(out.begin(), out.end(), [](const Report& a, const Report& b) {
    const auto key = [](const Report& r) {
      const auto it = r.inputs.find("delta_name");
      return std::make_tuple(r.theorem, it == r.inputs.end() ? "" : it->second,
                             r.characteristic);
    };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  GlobalOpts g;
  CLI::App app{"Stanley-Reisner modules, Goto submodules, and face-vector theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--char", g.characteristic, "prime field characteristic (default 32003)");
  app.add_flag("--rational", g.rational, "work over the rationals");
  app.add_option("--seed", g.seed, "RNG seed (default 0)");
  app.add_option("--trials", g.trials, "randomized trial count (default 5)");
  app.add_option("--out", g.out, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string complex_spec, gamma_spec, pair_file, tau_csv, face_csv, a_csv, b_csv;
  std::string check_kind, verify_target;
  int degree = -1, ambient_d = -1, flip_p = -1, site_index = 0;

  auto* cmd_corpus = app.add_subcommand("corpus", "list the embedded complexes");
  auto* cmd_fvec = app.add_subcommand("fvec", "face counts");
  cmd_fvec->add_option("--complex", complex_spec)->required();
  auto* cmd_hvec = app.add_subcommand("hvec", "h-vector");
  cmd_hvec->add_option("--complex", complex_spec)->required();
  cmd_hvec->add_option("--gamma", gamma_spec);
  cmd_hvec->add_option("-d,--ambient", ambient_d, "ambient parameter (default dim+1)");
  auto* cmd_check = app.add_subcommand("check", "homological classification");
  cmd_check->add_option("kind", check_kind)->required()->check(
      CLI::IsMember({"manifold", "buchsbaum", "orientable"}));
  cmd_check->add_option("--complex", complex_spec)->required();
  auto* cmd_hilbert = app.add_subcommand("hilbert", "Artinian reduction Hilbert function");
  cmd_hilbert->add_option("--pair", pair_file);
  cmd_hilbert->add_option("--complex", complex_spec);
  cmd_hilbert->add_option("--gamma", gamma_spec);
  auto* cmd_sigma = app.add_subcommand("sigma", "dim(M/Sigma(Theta;M))_j");
  cmd_sigma->add_option("--pair", pair_file);
  cmd_sigma->add_option("--complex", complex_spec);
  cmd_sigma->add_option("--gamma", gamma_spec);
  cmd_sigma->add_option("--degree", degree);
  auto* cmd_flip = app.add_subcommand("flip", "bistellar flip");
  cmd_flip->add_option("--complex", complex_spec)->required();
  cmd_flip->add_option("--A", a_csv);
  cmd_flip->add_option("--B", b_csv);
  cmd_flip->add_option("--p", flip_p);
  cmd_flip->add_option("--site", site_index);
  auto* cmd_stellar = app.add_subcommand("stellar", "stellar subdivision");
  cmd_stellar->add_option("--complex", complex_spec)->required();
  cmd_stellar->add_option("--face", face_csv)->required();
  auto* cmd_bary = app.add_subcommand("bary", "barycentric subdivision");
  cmd_bary->add_option("--complex", complex_spec)->required();
  auto* cmd_wlp = app.add_subcommand("wlp", "weak Lefschetz check at the middle degrees");
  cmd_wlp->add_option("--complex", complex_spec)->required();
  auto* cmd_verify = app.add_subcommand("verify", "theorem verifiers");
  cmd_verify->add_option("target", verify_target)
      ->required()
      ->check(CLI::IsMember({"thm33", "schenzel", "duality", "duality-sigma", "ball-duality",
                             "gorenstein", "monotone", "cor42", "sigma-layer", "multiplicity",
                             "a-invariant", "lemma-exact", "flip-equiv", "stellar-equiv",
                             "bary-unimodal", "all"}));
  cmd_verify->add_option("--complex", complex_spec);
  cmd_verify->add_option("--gamma", gamma_spec);
  cmd_verify->add_option("--pair", pair_file);
  cmd_verify->add_option("--tau", tau_csv);
  cmd_verify->add_option("--face", face_csv);
  cmd_verify->add_option("--A", a_csv);
  cmd_verify->add_option("--B", b_csv);
  cmd_verify->add_option("--p", flip_p);
  cmd_verify->add_option("--site", site_index);
  cmd_verify->add_flag("--corpus", "run over the embedded corpus (verify all)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    if (e.get_exit_code() == 0) {
      // --help and friends
      os << app.help();
      return CliResult{0, os.str()};
    }
    os << "usage error: " << e.what() << "\n";
    return CliResult{2, os.str()};
  }

  try {
    const FieldSpec field = g.field();

    const auto make_pair_input = [&](std::string def_gamma = "") -> std::pair<RelativeComplex, std::string> {
      if (!pair_file.empty()) {
        return {load_pair(pair_file, field), pair_file};
      }
      if (complex_spec.empty()) {
        throw std::invalid_argument("expected --complex or --pair");
      }
      const auto nc = resolve_complex(complex_spec);
      const std::string gs = gamma_spec.empty() ? def_gamma : gamma_spec;
      if (gs.empty()) {
        return {RelativeComplex::absolute(nc.complex), nc.name};
      }
      const auto g2 = resolve_gamma(gs, nc.complex, field);
      return {RelativeComplex(nc.complex, g2.complex), nc.name + ":" + g2.name};
    };

    if (cmd_corpus->parsed()) {
      std::ostringstream os;
      if (g.out == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& e : corpus()) {
          j.push_back({{"name", e.name},
                       {"f_vector", e.complex.f_vector().counts()},
                       {"provenance", e.provenance},
                       {"classification", e.classification}});
        }
        os << j.dump(2) << "\n";
      } else {
        for (const auto& e : corpus()) {
          const auto f = e.complex.f_vector().counts();
          os << e.name << "  f=(";
          for (std::size_t i = 1; i < f.size(); ++i) os << (i > 1 ? "," : "") << f[i];
          os << ")  " << e.provenance << "\n";
        }
      }
      return CliResult{0, os.str()};
    }

    if (cmd_fvec->parsed()) {
      const auto nc = resolve_complex(complex_spec);
      Report r;
      r.command = "fvec";
      r.characteristic = field.characteristic();
      r.inputs["delta"] = complex_digest(nc.complex);
      r.inputs["delta_name"] = nc.name;
      r.vectors["f"] = nc.complex.f_vector().counts();
      r.verdict = Verdict::recorded;
      r.summary = "face counts f_{-1}..f_{dim}";
      return CliResult{0, render(r, g)};
    }

    if (cmd_hvec->parsed()) {
      const auto [pair, name] = make_pair_input();
      const int d = ambient_d > 0 ? ambient_d : pair.delta().dim() + 1;
      Report r;
      r.command = "hvec";
      r.characteristic = field.characteristic();
      r.inputs["delta_name"] = name;
      r.inputs["delta"] = complex_digest(pair.delta());
      r.vectors["h"] = h_vector(pair, d).entries();
      r.verdict = Verdict::recorded;
      r.summary = "h-vector with ambient d = " + std::to_string(d);
      return CliResult{0, render(r, g)};
    }

    if (cmd_check->parsed()) {
      const auto nc = resolve_complex(complex_spec);
      Report r;
      r.command = "check " + check_kind;
      r.characteristic = field.characteristic();
      r.inputs["delta"] = complex_digest(nc.complex);
      r.inputs["delta_name"] = nc.name;
      r.verdict = Verdict::recorded;
      if (check_kind == "buchsbaum") {
        const bool b = is_buchsbaum(nc.complex, field);
        r.vectors["buchsbaum"] = {b ? 1 : 0};
        r.summary = nc.name + (b ? " is" : " is NOT") + " Buchsbaum over " + field.str();
      } else {
        const auto v = classify_manifold(nc.complex, field);
        r.vectors["orientable"] = {v.orientable ? 1 : 0};
        r.vectors["connected"] = {v.connected ? 1 : 0};
        if (check_kind == "manifold") {
          r.summary = nc.name + ": " + manifold_kind_str(v.kind) +
                      (v.kind == ManifoldKind::with_boundary
                           ? " with boundary of dimension " + std::to_string(v.boundary.dim())
                           : "") +
                      (v.orientable ? ", orientable" : ", not orientable") + " over " +
                      field.str();
        } else {
          r.summary = nc.name + (v.orientable ? " is" : " is NOT") + " orientable over " +
                      field.str();
        }
      }
      return CliResult{0, render(r, g)};
    }

    if (cmd_hilbert->parsed()) {
      const auto [pair, name] = make_pair_input();
      const Lsop theta = theta_for(pair.delta(), g);
      Report r;
      r.command = "hilbert";
      r.characteristic = field.characteristic();
      r.seeds = {g.seed};
      r.inputs["delta_name"] = name;
      r.inputs["delta"] = complex_digest(pair.delta());
      r.vectors["artinian_hilbert"] = artinian_hilbert(pair, theta);
      r.verdict = Verdict::recorded;
      r.summary = "dim(M/Theta M)_j for j = 0..d";
      return CliResult{0, render(r, g)};
    }

    if (cmd_sigma->parsed()) {
      const auto [pair, name] = make_pair_input();
      const Lsop theta = theta_for(pair.delta(), g);
      Report r;
      r.command = "sigma";
      r.characteristic = field.characteristic();
      r.seeds = {g.seed};
      r.inputs["delta_name"] = name;
      r.inputs["delta"] = complex_digest(pair.delta());
      if (degree >= 0) {
        const auto piece = sigma_piece(pair, theta, degree);
        r.vectors["degree"] = {degree};
        r.vectors["dim_mj"] = {static_cast<long long>(piece.dim_mj)};
        r.vectors["sigma_rank"] = {static_cast<long long>(piece.span.rows())};
        r.vectors["codim"] = {static_cast<long long>(piece.codim)};
        r.summary = "Sigma(Theta;M) in degree " + std::to_string(degree);
      } else {
        r.vectors["sigma_quotient"] = quotient_hilbert(pair, theta);
        r.summary = "dim(M/Sigma(Theta;M))_j for j = 0..d";
      }
      r.verdict = Verdict::recorded;
      return CliResult{0, render(r, g)};
    }

    const auto site_from_flags = [&](const SimplicialComplex& k) -> FlipSite {
      if (!a_csv.empty() && !b_csv.empty()) {
        return FlipSite{parse_face(a_csv), parse_face(b_csv)};
      }
      if (flip_p >= 1) {
        const auto sites = find_flips(k, flip_p);
        if (site_index < 0 || site_index >= static_cast<int>(sites.size())) {
          throw std::invalid_argument("flip site index out of range (found " +
                                      std::to_string(sites.size()) + " sites)");
        }
        return sites[static_cast<std::size_t>(site_index)];
      }
      throw std::invalid_argument("expected --A/--B or --p [--site]");
    };

    if (cmd_flip->parsed() || cmd_stellar->parsed() || cmd_bary->parsed()) {
      const auto nc = resolve_complex(complex_spec);
      SimplicialComplex result;
      std::string name;
      if (cmd_flip->parsed()) {
        const FlipSite site = site_from_flags(nc.complex);
        result = bistellar_flip(nc.complex, site);
        name = "flip(" + nc.name + ")";
      } else if (cmd_stellar->parsed()) {
        result = stellar_subdivision(nc.complex, parse_face(face_csv));
        name = "stellar(" + nc.name + ")";
      } else {
        result = barycentric_subdivision(nc.complex);
        name = "bary(" + nc.name + ")";
      }
      return CliResult{0, complex_to_json(result, name) + "\n"};
    }

    if (cmd_wlp->parsed()) {
      const auto nc = resolve_complex(complex_spec);
      const WlpReport w = wlp_check(nc.complex, field, g.seed, g.trials);
      Report r;
      r.command = "wlp";
      r.characteristic = field.characteristic();
      r.seeds = {g.seed};
      r.inputs["delta"] = complex_digest(nc.complex);
      r.inputs["delta_name"] = nc.name;
      r.vectors["degree_pair"] = {w.degree_lo, w.degree_hi};
      r.vectors["dims"] = {w.source_dim, w.target_dim};
      r.vectors["best_rank"] = {w.best_rank};
      r.vectors["trials"] = {w.trials};
      r.verdict = Verdict::recorded;
      r.summary = nc.name + ": " + w.verdict() + " (best rank " + std::to_string(w.best_rank) +
                  " of target " + std::to_string(w.target_dim) + ")";
      return CliResult{0, render(r, g)};
    }

    // verify
    std::vector<Report> reports;
    if (verify_target == "all") {
      reports = verify_all_matrix(g);
    } else if (verify_target == "thm33" || verify_target == "schenzel" ||
               verify_target == "sigma-layer") {
      const auto [pair, name] = make_pair_input();
      const Lsop theta = theta_for(pair.delta(), g);
      Report r = verify_target == "thm33"      ? verify_thm_3_3(pair, theta)
                 : verify_target == "schenzel" ? verify_schenzel(pair, theta)
                                               : verify_sigma_layer(pair, theta);
      reports.push_back(with_name(std::move(r), "delta", name));
    } else if (verify_target == "duality" || verify_target == "duality-sigma") {
      const auto nc = resolve_complex(complex_spec);
      const Lsop theta = theta_for(nc.complex, g);
      const auto scope = verify_target == "duality" ? DualityScope::hpp_reversal
                                                    : DualityScope::sigma_reversal;
      reports.push_back(with_name(verify_manifold_duality(nc.complex, theta, theta, scope),
                                  "delta", nc.name));
    } else if (verify_target == "ball-duality") {
      const auto nc = resolve_complex(complex_spec);
      reports.push_back(with_name(verify_ball_duality(nc.complex, theta_for(nc.complex, g)),
                                  "delta", nc.name));
    } else if (verify_target == "gorenstein") {
      const auto nc = resolve_complex(complex_spec);
      reports.push_back(with_name(
          verify_gorenstein_symmetry(nc.complex, theta_for(nc.complex, g)), "delta", nc.name));
    } else if (verify_target == "monotone") {
      const auto nc = resolve_complex(complex_spec);
      if (gamma_spec.empty()) throw std::invalid_argument("monotone: expected --gamma");
      const auto ng = resolve_gamma(gamma_spec, nc.complex, field);
      // Try to find a common l.s.o.p. for the optional algebraic route.
      std::optional<Lsop> common;
      Rng rng(g.seed);
      for (int attempt = 1; attempt <= 5000; ++attempt) {
        std::vector<LinearForm> forms;
        for (int i = 0; i < nc.complex.dim() + 1; ++i) {
          forms.push_back(random_form(nc.complex.vertices(), field, rng));
        }
        if (is_lsop(nc.complex, forms, field) && is_lsop(ng.complex, forms, field)) {
          common = Lsop{forms, field, g.seed, attempt, true};
          break;
        }
      }
      Report r = verify_monotonicity(nc.complex, ng.complex, field, common);
      r = with_name(std::move(r), "delta", nc.name);
      reports.push_back(with_name(std::move(r), "gamma", ng.name));
    } else if (verify_target == "cor42") {
      const auto nc = resolve_complex(complex_spec);
      if (tau_csv.empty()) throw std::invalid_argument("cor42: expected --tau");
      reports.push_back(
          with_name(verify_link_bound(nc.complex, parse_face(tau_csv), field), "delta", nc.name));
    } else if (verify_target == "multiplicity") {
      const auto nc = resolve_complex(complex_spec);
      reports.push_back(with_name(
          verify_buchsbaum_multiplicity(nc.complex, theta_for(nc.complex, g)), "delta", nc.name));
    } else if (verify_target == "a-invariant") {
      const auto nc = resolve_complex(complex_spec);
      reports.push_back(with_name(verify_a_invariant(nc.complex, theta_for(nc.complex, g)),
                                  "delta", nc.name));
    } else if (verify_target == "lemma-exact") {
      const auto nc = resolve_complex(complex_spec);
      if (gamma_spec.empty()) throw std::invalid_argument("lemma-exact: expected --gamma");
      const auto ng = resolve_gamma(gamma_spec, nc.complex, field);
      Report r = verify_lemma_exact(nc.complex, ng.complex, theta_for(nc.complex, g));
      r = with_name(std::move(r), "delta", nc.name);
      reports.push_back(with_name(std::move(r), "gamma", ng.name));
    } else if (verify_target == "flip-equiv") {
      const auto nc = resolve_complex(complex_spec);
      const FlipSite site = site_from_flags(nc.complex);
      reports.push_back(with_name(verify_flip_equiv(nc.complex, site, field, g.seed, g.trials),
                                  "delta", nc.name));
    } else if (verify_target == "stellar-equiv") {
      const auto nc = resolve_complex(complex_spec);
      if (face_csv.empty()) throw std::invalid_argument("stellar-equiv: expected --face");
      reports.push_back(with_name(
          verify_stellar_equiv(nc.complex, parse_face(face_csv), field, g.seed, g.trials),
          "delta", nc.name));
    } else if (verify_target == "bary-unimodal") {
      const auto nc = resolve_complex(complex_spec);
      reports.push_back(with_name(verify_bary_unimodality(nc.complex, field, g.seed, g.trials),
                                  "delta", nc.name));
    }

    std::ostringstream os;
    if (g.out == "json" && reports.size() > 1) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(nlohmann::json::parse(report_to_json(r)));
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& r : reports) os << render(r, g);
    }
    int code = 0;
    if (reports.size() == 1) {
      code = exit_code_for(reports.front().verdict);
    } else {
      int fails = 0, passes = 0, pre = 0, rec = 0;
      for (const auto& r : reports) {
        switch (r.verdict) {
          case Verdict::fail: ++fails; break;
          case Verdict::pass: ++passes; break;
          case Verdict::precondition_failure: ++pre; break;
          case Verdict::recorded: ++rec; break;
        }
      }
      if (g.out != "json") {
        os << passes << " pass, " << fails << " fail, " << pre << " precondition-failure, " << rec
           << " recorded\n";
      }
      code = fails > 0 ? 1 : 0;
    }
    return CliResult{code, os.str()};
  } catch (const std::exception& e) {
    return CliResult{2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace reisner
