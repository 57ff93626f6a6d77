#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggp/classes.hpp"
#include "ggp/decomposition.hpp"
#include "ggp/error.hpp"
#include "ggp/multiplicity.hpp"
#include "ggp/qseries.hpp"
#include "ggp/theta.hpp"
#include "ggp/verify.hpp"

namespace ggp::cli {

namespace {

using nlohmann::json;

json to_json(const Partition& p) { return json(std::vector<unsigned>(p.parts().begin(), p.parts().end())); }

json to_json(const ClassType& type) {
  json out = json::object();
  for (const auto& [d, mults] : type.assignment) out[std::to_string(d)] = to_json(mults);
  return out;
}

bool parse_bool(const std::string& text) {
  std::string v = text;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw DomainError("expected a boolean, got '" + text + "'");
}

struct Options {
  std::string lam;
  std::string lamp;
  unsigned target = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> qs;
  std::optional<unsigned> ell;
  std::string regular = "true";
  unsigned k = 0;
  bool allow_one = false;
  bool census_only = false;
  bool json = false;
  unsigned jobs = 1;
  std::optional<unsigned> max_n;
  std::vector<std::string> suites{"all"};
  std::string out_path;
};

int do_mult(const Options& o, std::ostream& out, std::ostream& err) {
  const Partition lambda = Partition::parse(o.lam);
  const Partition mu = Partition::parse(o.lamp);
  if (o.q != 0) require_odd_prime_power(o.q);

  int multiplicity = 0;
  GgpModel model{};
  if (o.ell) {
    const bool regular = parse_bool(o.regular);
    if (mu.size() > lambda.size()) throw DomainError("first group must be the larger");
    multiplicity = extended_multiplicity(lambda, mu, *o.ell, regular);
    const unsigned rank = *o.ell + mu.size();  // the induced representation lives on U_{ell+m}
    model = ggp_model(std::max(lambda.size(), rank), std::min(lambda.size(), rank));
  } else {
    multiplicity = unipotent_multiplicity(lambda, mu);
    model = ggp_model(std::max(lambda.size(), mu.size()), std::min(lambda.size(), mu.size()));
  }
  const bool warn = o.q != 0 && small_field_warning(o.q);
  if (warn) err << "warning: q < 5 lies outside the large-q hypothesis; values are reported unchanged\n";

  if (o.json) {
    json j{{"model", to_string(model)}, {"multiplicity", multiplicity}};
    if (o.q != 0) j["small_field_warning"] = warn;
    out << j.dump() << '\n';
  } else {
    out << "model=" << to_string(model) << " multiplicity=" << multiplicity << '\n';
  }
  return kExitOk;
}

int do_theta(const Options& o, std::ostream& out) {
  const ThetaSet s = theta_set(Partition::parse(o.lam), o.target);
  if (o.json) {
    json members = json::array();
    for (const Partition& mu : s.members) members.push_back(to_json(mu));
    out << json{{"members", members}}.dump() << '\n';
  } else {
    out << "theta lam=" << s.source.to_string() << " target=" << s.target_size
        << " count=" << s.members.size() << '\n';
    for (const Partition& mu : s.members) out << mu.to_string() << '\n';
  }
  return kExitOk;
}

int do_degree(const Options& o, std::ostream& out) {
  require_odd_prime_power(o.q);
  const Partition lambda = Partition::parse(o.lam);
  const ExactInt degree = unipotent_degree(lambda, o.q);
  if (o.json) {
    out << json{{"lambda", to_json(lambda)}, {"q", o.q}, {"degree", to_decimal(degree)}}.dump() << '\n';
  } else {
    out << "degree=" << degree << '\n';
  }
  return kExitOk;
}

int do_classes(const Options& o, std::ostream& out) {
  if (o.census_only) {
    if (!characteristic(o.q)) throw DomainError("q must be a prime power");
  } else {
    require_odd_prime_power(o.q);
  }

  if (o.census_only) {
    const unsigned d_max = std::max(o.k, 1U);
    std::optional<std::map<unsigned, ExactInt>> census;
    if (ipow(o.q, 2 * std::uint64_t{d_max}) <= oracle_limit())
      census = brute_force_orbit_census(d_max, o.q);
    json rows = json::array();
    for (unsigned d = 1; d <= d_max; ++d) {
      const ExactInt formula = orbit_count(d, o.q);
      const std::string brute = census ? to_decimal(census->at(d)) : "-";
      if (o.json) {
        json row{{"d", d}, {"orbits", to_decimal(formula)}};
        if (census) row["census"] = brute;
        rows.push_back(row);
      } else {
        out << "d=" << d << " orbits=" << formula << " census=" << brute << '\n';
      }
    }
    if (o.json) out << json{{"q", o.q}, {"orbit_counts", rows}}.dump() << '\n';
    return kExitOk;
  }

  const auto families = enumerate_class_types(o.k, o.q, !o.allow_one);
  ExactInt total = 0;
  json rows = json::array();
  for (const ClassFamily& f : families) {
    total += f.count;
    const ExactInt order = centralizer_order(f.class_type, o.q).total();
    if (o.json) {
      rows.push_back({{"class_type", to_json(f.class_type)},
                      {"centralizer_order", to_decimal(order)},
                      {"class_count", to_decimal(f.count)}});
    } else {
      out << f.class_type.to_string() << '\t' << order << '\t' << f.count << '\n';
    }
  }
  if (o.json) {
    out << json{{"k", o.k}, {"q", o.q}, {"exclude_one", !o.allow_one}, {"families", rows},
                {"total_classes", to_decimal(total)}}
               .dump()
        << '\n';
  } else {
    out << "total classes " << total << '\n';
  }
  return kExitOk;
}

int do_decomposition(const Options& o, DecompositionKind kind, std::ostream& out) {
  require_odd_prime_power(o.q);
  const Partition lambda = Partition::parse(o.lam);
  const Decomposition d = kind == DecompositionKind::Restriction
                              ? restriction_decomposition(lambda, o.q)
                              : weil_decomposition(lambda, o.q);
  const DimensionReport report = verify_dimension_identity(d);
  if (o.json) {
    json terms = json::array();
    for (const DecompositionTerm& t : d.terms) {
      terms.push_back({{"lambda_prime", to_json(t.target_partition)},
                       {"s_rank", t.rank_of_s},
                       {"class_type", to_json(t.family.class_type)},
                       {"class_count", to_decimal(t.family.count)},
                       {"degree", to_decimal(t.per_class_degree)}});
    }
    out << json{{"source", to_json(lambda)}, {"q", o.q}, {"kind", to_string(kind)},
                {"terms", terms}, {"total", to_decimal(report.total)},
                {"expected", to_decimal(report.expected)}}
               .dump()
        << '\n';
  } else {
    for (const std::string& line : report.lines) out << line << '\n';
  }
  return report.holds ? kExitOk : kExitVerifyFailed;
}

int do_verify(const Options& o, std::ostream& out) {
  VerifyBounds bounds{o.max_n, o.qs, std::max(o.jobs, 1U)};
  const std::vector<VerifyReport> reports = run_suites(o.suites, bounds);

  std::ostringstream buffer;
  bool all_passed = true;
  if (o.json) {
    json j = json::array();
    for (const VerifyReport& r : reports) {
      json failures = json::array();
      for (const VerifyFailure& f : r.failures)
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
      j.push_back({{"suite", r.suite}, {"cases_run", r.cases_run}, {"passed", r.passed()},
                   {"failures", failures}, {"error", r.error ? json(*r.error) : json(nullptr)}});
      all_passed = all_passed && r.passed();
    }
    buffer << j.dump(2) << '\n';
  } else {
    for (const VerifyReport& r : reports) {
      all_passed = all_passed && r.passed();
      buffer << (r.passed() ? "PASS " : "FAIL ") << r.suite << " cases=" << r.cases_run
             << " failures=" << r.failures.size() << " (" << r.elapsed.count() << " ms)\n";
      if (r.error) buffer << "  error: " << *r.error << '\n';
      for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 10); ++i) {
        const VerifyFailure& f = r.failures[i];
        buffer << "  " << f.input << ": expected " << f.expected << ", got " << f.got << '\n';
      }
    }
  }

  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw DomainError("cannot open output file '" + o.out_path + "'");
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branching multiplicities, theta lifts and spectral decompositions for U_n(F_q)",
               "ggp"};
  app.require_subcommand(1, 1);
  Options o;

  auto* mult = app.add_subcommand("mult", "Branching multiplicity of a unipotent pair");
  mult->add_option("--lam", o.lam, "Partition of the larger group, e.g. 2,1")->required();
  mult->add_option("--lamp", o.lamp, "Partition of the smaller group")->required();
  auto* ell = mult->add_option("--ell", o.ell, "Rank of the Lusztig-series factor");
  mult->add_option("--regular", o.regular, "Whether that factor is the regular character")->needs(ell);
  mult->add_option("--q", o.q, "Odd prime power (only used for the small-field warning)");
  mult->add_flag("--json", o.json);

  auto* theta = app.add_subcommand("theta", "Unipotent theta lift of pi_lambda to U_target");
  theta->add_option("--lam", o.lam)->required();
  theta->add_option("--target", o.target)->required();
  theta->add_flag("--json", o.json);

  auto* degree = app.add_subcommand("degree", "Degree of the unipotent representation pi_lambda");
  degree->add_option("--lam", o.lam)->required();
  degree->add_option("--q", o.q)->required();
  degree->add_flag("--json", o.json);

  auto* classes = app.add_subcommand("classes", "Semisimple class types of U_k(q)");
  classes->add_option("--k", o.k)->required();
  classes->add_option("--q", o.q)->required();
  classes->add_flag("--allow-one", o.allow_one, "Keep eigenvalue 1 in the size-1 orbit pool");
  classes->add_flag("--census-only", o.census_only, "Only print orbit counts (permits q = 2)");
  classes->add_flag("--json", o.json);

  auto* branch = app.add_subcommand("branch", "Decompose pi_lambda restricted to U_{n-1}");
  branch->add_option("--lam", o.lam)->required();
  branch->add_option("--q", o.q)->required();
  branch->add_flag("--json", o.json);

  auto* weil = app.add_subcommand("weil", "Decompose pi_lambda tensor the Weil representation");
  weil->add_option("--lam", o.lam)->required();
  weil->add_option("--q", o.q)->required();
  weil->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", o.suites, "Suite names or 'all'")->delimiter(',');
  verify->add_option("--q", o.qs, "Field sizes (repeatable)")->delimiter(',');
  verify->add_option("--max-n", o.max_n, "Override every suite's partition size bound");
  verify->add_option("--jobs", o.jobs, "Worker threads");
  verify->add_option("--out", o.out_path, "Write the report to a file");
  verify->add_flag("--json", o.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (mult->parsed()) return do_mult(o, out, err);
    if (theta->parsed()) return do_theta(o, out);
    if (degree->parsed()) return do_degree(o, out);
    if (classes->parsed()) return do_classes(o, out);
    if (branch->parsed()) return do_decomposition(o, DecompositionKind::Restriction, out);
    if (weil->parsed()) return do_decomposition(o, DecompositionKind::WeilTensor, out);
    if (verify->parsed()) return do_verify(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace ggp::cli
