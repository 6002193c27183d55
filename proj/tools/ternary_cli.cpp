// Command-line front end. Results go to stdout as JSON, diagnostics to stderr.
// Exit codes: 0 success, 1 mathematical precondition failure or a failing
// suite, 2 malformed input or unknown suite.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ternary/class22.hpp"
#include "ternary/cubic.hpp"
#include "ternary/elimination.hpp"
#include "ternary/error.hpp"
#include "ternary/gl3.hpp"
#include "ternary/lattice.hpp"
#include "ternary/poly_io.hpp"
#include "ternary/rep22.hpp"
#include "ternary/suites.hpp"
#include "ternary/tuples.hpp"

using namespace ternary;
using Json = nlohmann::json;

namespace {

int emit(const Json& j) {
  std::cout << j.dump(2) << "\n";
  return 0;
}

int emit_error(const std::string& kind, const std::string& message, int code) {
  std::cout << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
  std::cerr << "error: " << message << "\n";
  return code;
}

// Forms from files stay over ZZ/QQ unless --mod asks for a reduction.
MultiPoly load_form(const std::string& path, std::optional<std::uint64_t> p) {
  MultiPoly f = read_poly_file(path);
  if (p) return reduce_mod_p(f, *p);
  return f;
}

Class22 load_class(const std::string& path, std::optional<std::uint64_t> p) {
  const MultiPoly f = read_poly_file(path);
  if (!is_bidegree22(f)) throw Error("wrong_bidegree", "expected a (2,2) form in x1..x3, z1..z3");
  const Class22 c = canonicalize(f);
  return p ? reduce_mod_p(c, *p) : c;
}

Json disc_json(const DiscriminantReport& r) {
  Json j{{"raw", r.raw.to_string()}, {"degree_check", r.degree_check}, {"domain", r.raw.domain().name()}};
  if (r.constant) j["constant"] = r.constant->to_string();
  if (r.normalized) j["normalized"] = r.normalized->to_string();
  return j;
}

Json strings(const std::vector<mpq_class>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

std::vector<mpq_class> parse_rationals(const std::vector<std::string>& items) {
  std::vector<mpq_class> out;
  for (const auto& s : items) out.push_back(Scalar::parse(s, Domain::rationals()).rational_value());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra for ternary forms: discriminants, GL3 actions, V22 covariants, lattice candidates"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string form, gamma_path, which = "x", suite, output, domain_text;
  std::optional<std::uint64_t> mod;
  std::vector<std::uint64_t> s_set, primes;
  std::uint64_t trial_bound = 10000, seed = 1;
  std::size_t trials = 10;
  unsigned jobs = 1;
  long box = 0;
  bool raw_only = false;
  std::vector<std::string> t1, t2;
  std::vector<unsigned> weights{4, 6};

  auto* disc = app.add_subcommand("disc", "Discriminant via the resultant of the partials");
  disc->add_option("--form", form, "form file (text or JSON)")->required();
  disc->add_option("--mod", mod, "reduce modulo a prime first");
  disc->add_flag("--raw", raw_only, "skip normalization");
  disc->callback([&] {
    run = [&] {
      const MultiPoly f = load_form(form, mod);
      return emit(disc_json(discriminant_n(f, !raw_only)));
    };
  });

  auto* good = app.add_subcommand("good-reduction", "Primes outside S dividing the discriminant");
  good->add_option("--form", form)->required();
  good->add_option("--s-set", s_set, "comma-separated primes")->delimiter(',');
  good->add_option("--trial-bound", trial_bound);
  good->add_option("--mod", mod, "also decide smoothness of the reduction at this prime");
  good->callback([&] {
    run = [&] {
      const MultiPoly f = read_poly_file(form);
      const auto n = f.homogeneous_degree();
      if (!n) throw Error("not_homogeneous", "form must be homogeneous and nonzero");
      const BadPrimeReport r = bad_primes(f, static_cast<unsigned>(*n), s_set, trial_bound);
      Json bad = Json::array();
      for (const auto& p : r.primes) bad.push_back(p.get_str());
      Json j{{"bad_primes", bad},
             {"cofactor", r.cofactor.get_str()},
             {"raw", r.raw.get_str()},
             {"good_outside_S", r.primes.empty() && r.cofactor == 1}};
      if (mod) j["smooth_mod_p"] = is_smooth_mod_p(f, static_cast<unsigned>(*n), *mod);
      return emit(j);
    };
  });

  auto* act = app.add_subcommand("act", "Apply gamma to a ternary form or a V22 class");
  act->add_option("--gamma", gamma_path, "row-major 9-array JSON")->required();
  act->add_option("--form", form)->required();
  act->add_option("--mod", mod);
  act->callback([&] {
    run = [&] {
      MultiPoly f = read_poly_file(form);
      Mat3 g = read_mat3_file(gamma_path);
      if (mod) {
        f = reduce_mod_p(f, *mod);
        g = g.to_domain(f.domain());
      } else if (!(f.domain() == g.domain())) {
        f = f.to_domain(Domain::rationals());
        g = g.to_domain(Domain::rationals());
      }
      if (is_bidegree22(f)) {
        const Class22 c = act_v22(g, canonicalize(f));
        return emit({{"kind", "V22"}, {"form", format_poly(c.representative())}});
      }
      return emit({{"kind", "Vn"}, {"form", format_poly(act_vn(g, f))}});
    };
  });

  auto* cub = app.add_subcommand("cubic-invariants", "I, J and (4I^3 - J^2)/27 of a ternary cubic");
  cub->add_option("--form", form)->required();
  cub->callback([&] {
    run = [&] {
      const MultiPoly f = read_poly_file(form);
      const Scalar I = cubic_I(f), J = cubic_J(f);
      const mpq_class lhs = 4 * I.rational_value() * I.rational_value() * I.rational_value() -
                            J.rational_value() * J.rational_value();
      const mpq_class raw = discriminant_n(f, false).raw.rational_value();
      return emit({{"I", I.to_string()},
                   {"J", J.to_string()},
                   {"delta_IJ", delta_from_IJ(I, J).to_string()},
                   {"raw_discriminant", raw.get_str()},
                   {"kappa", kCubicKappa},
                   {"kappa_checked", lhs == kCubicKappa * raw}});
    };
  });

  auto* teq = app.add_subcommand("tuple-equiv", "Weighted equivalence of invariant tuples");
  teq->add_option("--t1", t1)->delimiter(',')->required();
  teq->add_option("--t2", t2)->delimiter(',')->required();
  teq->add_option("--weights", weights)->delimiter(',');
  teq->add_option("--s-set", s_set)->delimiter(',');
  teq->callback([&] {
    run = [&] {
      const InvariantTuple a(parse_rationals(t1), weights), b(parse_rationals(t2), weights);
      const TupleEquivalence r = tuples_equivalent(a, b, s_set);
      Json j{{"equivalent", r.equivalent()},
             {"alpha", strings(r.alpha)},
             {"alpha_d", strings(r.alpha_d)},
             {"d", a.d()},
             {"s_unit", r.s_unit}};
      if (!a.is_zero()) j["t1_in_I_prime"] = tuple_in_I_prime(a, s_set);
      if (!b.is_zero()) j["t2_in_I_prime"] = tuple_in_I_prime(b, s_set);
      return emit(j);
    };
  });

  auto* canon = app.add_subcommand("canonicalize", "Canonical representative modulo sigma");
  canon->add_option("--form", form)->required();
  canon->add_option("--mod", mod);
  canon->callback([&] {
    run = [&] {
      const Class22 c = load_class(form, mod);
      return emit({{"form", format_poly(c.representative())}, {"json", poly_to_json(c.representative())}});
    };
  });

  auto* cov = app.add_subcommand("covariants", "Sextic covariant I_x or I_z of a V22 class");
  cov->add_option("--form", form)->required();
  cov->add_option("--which", which)->check(CLI::IsMember({"x", "z"}));
  cov->add_option("--mod", mod);
  cov->callback([&] {
    run = [&] {
      const Class22 c = load_class(form, mod);
      const MultiPoly s = which == "x" ? covariant_Ix(c) : covariant_Iz(c);
      return emit({{"which", which}, {"form", format_poly(s)}, {"domain", s.domain().name()}});
    };
  });

  auto* branch = app.add_subcommand("branch-check", "Exhaustive tangency scan against the covariants");
  branch->add_option("--form", form)->required();
  branch->add_option("--mod", mod)->required();
  branch->callback([&] {
    run = [&] {
      const BranchLocusReport r = branch_locus_check(load_class(form, mod));
      emit(r.to_json());
      return r.ok() ? 0 : 1;
    };
  });

  auto* gen = app.add_subcommand("generic", "Genericity proxy for the reduction of a class");
  gen->add_option("--form", form)->required();
  gen->add_option("--mod", mod)->required();
  gen->callback([&] {
    run = [&] { return emit(genericity_mod_p(load_class(form, std::nullopt), *mod).to_json()); };
  });

  auto* lat = app.add_subcommand("lattice-enum", "Isometry candidates of the Picard lattice");
  lat->add_option("--box", box, "also brute-force the (1/4)ZZ box [-B, B]");
  lat->callback([&] {
    run = [&] {
      const auto cands = enumerate_tau_candidates();
      Json list = Json::array();
      for (const auto& c : cands) list.push_back(c.to_json());
      Json j{{"count", cands.size()}, {"candidates", list}, {"inverse_closure", inverse_closure(cands).to_json()}};
      if (box > 0) {
        std::vector<QMat2> expected;
        for (const auto& c : cands) {
          if (std::all_of(c.a.begin(), c.a.end(), [&](const mpq_class& q) { return abs(q) <= box; })) {
            expected.push_back(c.a);
          }
        }
        const auto found = brute_force_box(box);
        Json fj = Json::array();
        for (const auto& a : found) fj.push_back(qmat2_json(a));
        j["box"] = {{"bound", box}, {"count", found.size()}, {"matrices", fj}, {"agrees", found == expected}};
      }
      return emit(j);
    };
  });

  auto* ver = app.add_subcommand("verify", "Run a randomized property suite");
  ver->add_option("--suite", suite)->required();
  ver->add_option("--seed", seed);
  ver->add_option("--trials", trials);
  ver->add_option("--domain", domain_text, "ZZ, QQ or GF(p)");
  ver->add_option("--primes", primes)->delimiter(',');
  ver->add_option("--output", output, "also write the report here");
  ver->add_option("--jobs", jobs, "threads over trials; the report does not depend on it");
  ver->callback([&] {
    run = [&] {
      SuiteConfig cfg;
      cfg.name = suite;
      cfg.seed = seed;
      cfg.trials = trials;
      if (!domain_text.empty()) cfg.domain = Domain::parse(domain_text);
      cfg.primes = primes;
      cfg.output_path = output;
      cfg.jobs = jobs;
      const Json report = run_suite(cfg);
      emit(report);
      return report["all_pass"].get<bool>() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("usage_error", e.what(), 2);
  }
  try {
    return run();
  } catch (const ParseError& e) {
    return emit_error(e.kind(), e.what(), 2);
  } catch (const Error& e) {
    return emit_error(e.kind(), e.what(), e.kind() == "unknown_suite" || e.kind() == "invalid_domain" ? 2 : 1);
  } catch (const std::exception& e) {
    return emit_error("internal_error", e.what(), 1);
  }
}
