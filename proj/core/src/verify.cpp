#include "ggp/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>

#include "ggp/classes.hpp"
#include "ggp/decomposition.hpp"
#include "ggp/error.hpp"
#include "ggp/multiplicity.hpp"
#include "ggp/partition.hpp"
#include "ggp/qseries.hpp"
#include "ggp/theta.hpp"

namespace ggp {

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void check(bool ok, const std::string& input, const std::string& expected,
             const std::string& got) {
    ++report_.cases_run;
    if (!ok) report_.failures.push_back({input, expected, got});
  }

 private:
  VerifyReport& report_;
};

std::string show(const std::vector<Partition>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? " " : "") + ps[i].to_string();
  return out + "}";
}

std::vector<Partition> partitions_up_to(unsigned n) {
  std::vector<Partition> out;
  for (unsigned k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Euler's pentagonal recurrence.
std::vector<std::uint64_t> partition_counts(unsigned n_max) {
  std::vector<std::uint64_t> p(n_max + 1, 0);
  p[0] = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    std::int64_t acc = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * static_cast<std::int64_t>(p[n - g1]);
      if (g2 <= n) acc += sign * static_cast<std::int64_t>(p[n - g2]);
    }
    p[n] = static_cast<std::uint64_t>(acc);
  }
  return p;
}

unsigned bound_or(const VerifyBounds& b, unsigned fallback) { return b.max_n.value_or(fallback); }

void partition_suite(const VerifyBounds& bounds, Recorder& rec) {
  const unsigned n_max = bound_or(bounds, 12);

  for (const Partition& lambda : partitions_up_to(n_max + 2)) {
    const Partition t = transpose(lambda);
    rec.check(transpose(t) == lambda && t.size() == lambda.size(), "transpose " + lambda.to_string(),
              lambda.to_string(), transpose(t).to_string());
  }

  const auto small = partitions_up_to(std::min(n_max, 8U));
  for (const Partition& a : small) {
    for (const Partition& b : small) {
      const std::string in = a.to_string() + " | " + b.to_string();
      rec.check(is_close(a, b) == is_close(b, a), "close symmetry " + in, "symmetric", "asymmetric");
      rec.check(common_parts(a, b) == common_parts(b, a), "common parts symmetry " + in,
                common_parts(a, b).to_string(), common_parts(b, a).to_string());
      rec.check(two_transverse(a, b) == two_transverse(b, a), "2-transverse symmetry " + in,
                "symmetric", "asymmetric");
    }
  }

  for (const Partition& lambda : partitions_up_to(n_max)) {
    const auto removals = two_hook_removals(lambda);
    for (const DominoMove& move : removals) {
      const auto adds = two_hook_additions(move.result);
      rec.check(std::find(adds.begin(), adds.end(), lambda) != adds.end(),
                "domino removal/addition " + lambda.to_string() + " -> " + move.result.to_string(),
                "present", "missing");
    }
    for (const Partition& bigger : two_hook_additions(lambda)) {
      const auto back = two_hook_removals(bigger);
      const bool found = std::any_of(back.begin(), back.end(),
                                     [&](const DominoMove& m) { return m.result == lambda; });
      rec.check(found, "domino addition/removal " + lambda.to_string() + " -> " + bigger.to_string(),
                "present", "missing");
    }

    // Removals commute with transpose, exchanging the two domino types.
    std::vector<DominoMove> mirrored;
    for (const DominoMove& move : removals) {
      mirrored.push_back({transpose(move.result), move.type == DominoType::Horizontal
                                                      ? DominoType::Vertical
                                                      : DominoType::Horizontal});
    }
    std::sort(mirrored.begin(), mirrored.end(), [](const DominoMove& a, const DominoMove& b) {
      return a.result != b.result ? a.result < b.result : a.type < b.type;
    });
    rec.check(mirrored == two_hook_removals(transpose(lambda)),
              "domino transpose " + lambda.to_string(), "commutes", "differs");

    if (lambda.empty()) continue;
    const Partition star = first_row_removed(lambda);
    const Partition t = transpose(lambda);
    for (const Partition& mu : partitions_of(lambda.size() - lambda.first())) {
      const bool hit = two_transverse(t, transpose(mu));
      rec.check(hit == (mu == star), "unique first-row removal " + lambda.to_string() + " vs " + mu.to_string(),
                mu == star ? "2-transverse" : "not 2-transverse", hit ? "2-transverse" : "not 2-transverse");
    }
  }

  const unsigned count_max = std::max(40U, n_max);
  const auto counts = partition_counts(count_max);
  for (unsigned n = 0; n <= count_max; ++n) {
    const auto ps = partitions_of(n);
    const bool strictly_sorted = std::adjacent_find(ps.begin(), ps.end(), [](const auto& a, const auto& b) {
                                   return !(a < b);
                                 }) == ps.end();
    rec.check(ps.size() == counts[n] && strictly_sorted, "partition count n=" + std::to_string(n),
              std::to_string(counts[n]), std::to_string(ps.size()));
  }
}

void theta_suite(const VerifyBounds& bounds, Recorder& rec) {
  const unsigned n12 = bound_or(bounds, 12);
  const unsigned n10 = bound_or(bounds, 10);
  const unsigned n8 = bound_or(bounds, 8);

  std::map<std::pair<Partition, unsigned>, ThetaSet> cache;
  auto lift = [&](const Partition& lambda, unsigned target) -> const ThetaSet& {
    auto key = std::make_pair(lambda, target);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, theta_set(lambda, target)).first;
    return it->second;
  };

  const auto up_to_12 = partitions_up_to(n12);
  for (const Partition& lambda : up_to_12) {
    for (unsigned target = 0; target <= n12; ++target) {
      for (const Partition& mu : lift(lambda, target).members) {
        rec.check(lift(mu, lambda.size()).contains(lambda),
                  "theta symmetry " + lambda.to_string() + " <-> " + mu.to_string(), "symmetric",
                  "one-sided");
      }
    }
  }

  for (const Partition& lambda : up_to_12) {
    if (lambda.empty()) continue;
    const unsigned floor = lambda.size() - lambda.first();
    for (unsigned target = 0; target < floor; ++target) {
      const ThetaSet& s = lift(lambda, target);
      rec.check(s.empty(), "below first occurrence " + lambda.to_string() + " n'=" + std::to_string(target), "{}",
                show(s.members));
    }
    const ThetaSet& first = lift(lambda, floor);
    const std::vector<Partition> expected{first_row_removed(lambda)};
    rec.check(first.members == expected, "first occurrence " + lambda.to_string(), show(expected),
              show(first.members));
  }

  for (const Partition& lambda : partitions_up_to(n10)) {
    if (lambda.empty()) continue;
    const unsigned n = lambda.size();
    const unsigned l1 = lambda.first();
    for (unsigned target = n + l1 - 1; target <= n + l1 + 3; ++target) {
      for (const Partition& mu : lift(lambda, target).members) {
        rec.check(mu.first() >= l1, "first row grows " + lambda.to_string() + " -> " + mu.to_string(),
                  "mu_1 >= " + std::to_string(l1), "mu_1 = " + std::to_string(mu.first()));
      }
    }
    const Partition star = first_row_removed(lambda);
    const auto additions = two_hook_additions(star);
    for (const Partition& mu : lift(lambda, n - l1 + 2).members) {
      rec.check(std::find(additions.begin(), additions.end(), mu) != additions.end(),
                "domino addition " + lambda.to_string() + " -> " + mu.to_string(),
                "domino addition to " + star.to_string(), "not a domino addition");
    }
  }

  for (const Partition& lambda : partitions_up_to(n8)) {
    const unsigned l1 = lambda.first();
    for (unsigned m = l1; m <= l1 + 4; ++m) {
      const Partition bigger = prepend_row(m + 2, lambda);
      const auto removals = two_hook_removals(bigger);
      for (const Partition& mu : lift(lambda, lambda.size() + m).members) {
        if (mu.first() > m + 2) continue;
        const bool found = std::any_of(removals.begin(), removals.end(),
                                       [&](const DominoMove& d) { return d.result == mu; });
        rec.check(found, "domino removal " + lambda.to_string() + " m=" + std::to_string(m) + " -> " + mu.to_string(),
                  "domino removal from " + bigger.to_string(), "not a domino removal");
      }
    }
  }
}

void duality_suite(const VerifyBounds& bounds, Recorder& rec) {
  for (const Partition& lambda : partitions_up_to(bound_or(bounds, 12))) {
    for (unsigned m = 0; m <= lambda.size(); ++m) {
      const bool ok = duality_diagram_check(lambda, m);
      rec.check(ok, "duality " + lambda.to_string() + " m=" + std::to_string(m), "commutes",
                show(ggp_partners(lambda, m)));
    }
  }
}

void vanishing_suite(const VerifyBounds& bounds, Recorder& rec) {
  const auto all = partitions_up_to(bound_or(bounds, 12));
  for (const Partition& lambda : all) {
    for (const Partition& mu : all) {
      if (mu.size() >= lambda.size()) continue;
      const unsigned a = lambda.first();
      const unsigned b = mu.first();
      if ((a > b ? a - b : b - a) < 2) continue;
      const int mult = unipotent_multiplicity(lambda, mu);
      rec.check(mult == 0, "vanishing " + lambda.to_string() + " | " + mu.to_string(), "0",
                std::to_string(mult));
    }
  }
}

void census_suite(const VerifyBounds& bounds, Recorder& rec) {
  const std::vector<std::uint64_t> brute_qs =
      bounds.q_values.empty() ? std::vector<std::uint64_t>{2, 3} : bounds.q_values;
  const std::vector<std::uint64_t> identity_qs =
      bounds.q_values.empty() ? std::vector<std::uint64_t>{2, 3, 5, 7, 9} : bounds.q_values;

  for (std::uint64_t q : brute_qs) {
    const auto census = brute_force_orbit_census(3, q);
    for (const auto& [d, count] : census) {
      const ExactInt formula = orbit_count(d, q);
      rec.check(formula == count,
                "orbit census q=" + std::to_string(q) + " d=" + std::to_string(d),
                to_decimal(count), to_decimal(formula));
    }
  }
  for (std::uint64_t q : identity_qs) {
    for (unsigned d = 1; d <= 12; ++d) {
      ExactInt lhs = 0;
      for (unsigned e = 1; e <= d; ++e)
        if (d % e == 0) lhs += e * orbit_count(e, q);
      const ExactInt rhs = ipow(q, d) - sign_power(d);
      rec.check(lhs == rhs, "fixed points q=" + std::to_string(q) + " d=" + std::to_string(d),
                to_decimal(rhs), to_decimal(lhs));
    }
  }
}

void dimension_suite(const VerifyBounds& bounds, Recorder& rec) {
  const std::vector<std::uint64_t> qs =
      bounds.q_values.empty() ? std::vector<std::uint64_t>{3, 5} : bounds.q_values;
  for (std::uint64_t q : qs) {
    const unsigned n_max = bound_or(bounds, q == 3 ? 5 : 4);
    for (const Partition& lambda : partitions_up_to(n_max)) {
      std::vector<Decomposition> decomps;
      if (!lambda.empty()) decomps.push_back(restriction_decomposition(lambda, q));
      decomps.push_back(weil_decomposition(lambda, q));
      for (const Decomposition& d : decomps) {
        const std::string in = std::string(to_string(d.kind)) + " " + lambda.to_string() +
                               " q=" + std::to_string(q);
        const DimensionReport report = verify_dimension_identity(d);
        rec.check(report.holds, in, to_decimal(report.expected), to_decimal(report.total));

        std::set<std::pair<Partition, ClassType>, std::less<>> labels;
        std::set<Partition> targets;
        const ExactInt smaller = unitary_group_order(
            d.kind == DecompositionKind::Restriction ? lambda.size() - 1 : lambda.size(), q).total();
        bool degrees_ok = true;
        for (const DecompositionTerm& t : d.terms) {
          labels.emplace(t.target_partition, t.family.class_type);
          targets.insert(t.target_partition);
          degrees_ok = degrees_ok && t.per_class_degree >= 1 && smaller % t.per_class_degree == 0;
        }
        rec.check(labels.size() == d.terms.size(), "multiplicity-free " + in,
                  std::to_string(d.terms.size()) + " distinct", std::to_string(labels.size()));
        rec.check(degrees_ok, "term degrees " + in, "positive divisors of the group order",
                  "violation");

        std::set<Partition> partners;
        const unsigned top = d.kind == DecompositionKind::Restriction ? lambda.size() - 1 : lambda.size();
        for (unsigned m = 0; m <= top; ++m)
          for (const Partition& mu : ggp_partners(lambda, m)) partners.insert(mu);
        rec.check(partners == targets, "partner consistency " + in,
                  show({partners.begin(), partners.end()}), show({targets.begin(), targets.end()}));
      }
    }
  }
}

void degree_suite(const VerifyBounds& bounds, Recorder& rec) {
  const std::vector<std::uint64_t> qs =
      bounds.q_values.empty() ? std::vector<std::uint64_t>{3, 5, 7} : bounds.q_values;
  for (std::uint64_t q : qs) {
    for (unsigned n = 0; n <= 8; ++n) {
      const Partition row(std::vector<unsigned>(n > 0 ? 1 : 0, n));
      const Partition column(std::vector<unsigned>(n, 1));
      const std::string tag = " n=" + std::to_string(n) + " q=" + std::to_string(q);
      const ExactInt trivial = unipotent_degree(row, q);
      rec.check(trivial == 1, "trivial degree" + tag, "1", to_decimal(trivial));
      const ExactInt steinberg = unipotent_degree(column, q);
      const ExactInt expected = ipow(q, n * (n - (n > 0)) / 2);
      rec.check(steinberg == expected, "Steinberg degree" + tag, to_decimal(expected),
                to_decimal(steinberg));
    }
    for (const Partition& lambda : partitions_up_to(bound_or(bounds, 10))) {
      const std::string in = "degree " + lambda.to_string() + " q=" + std::to_string(q);
      try {
        const ExactInt deg = unipotent_degree(lambda, q);
        const ExactInt order = unitary_group_order(lambda.size(), q).total();
        rec.check(deg >= 1 && order % deg == 0, in, "exact divisor of |U_n(q)|", to_decimal(deg));
      } catch (const InternalError& e) {
        rec.check(false, in, "exact hook division", e.what());
      }
    }
  }
  const ExactInt cuspidal = unipotent_degree(Partition{2, 1}, 3);
  rec.check(cuspidal == 6, "degree [2,1] q=3", "6", to_decimal(cuspidal));
}

void multiplicity_suite(const VerifyBounds& bounds, Recorder& rec) {
  const auto all = partitions_up_to(bound_or(bounds, 8));
  auto binary = [](int v) { return v == 0 || v == 1; };
  for (const Partition& lambda : all) {
    for (const Partition& mu : all) {
      const std::string in = lambda.to_string() + " | " + mu.to_string();
      const int theta = theta_multiplicity(lambda, mu);
      rec.check(binary(theta), "theta multiplicity " + in, "0 or 1", std::to_string(theta));
      if (mu.size() > lambda.size()) continue;
      const int unip = unipotent_multiplicity(lambda, mu);
      rec.check(binary(unip) && unip == unipotent_multiplicity(mu, lambda),
                "unipotent multiplicity " + in, "symmetric 0 or 1", std::to_string(unip));
      for (unsigned ell = 0; ell + mu.size() <= lambda.size() + 1; ++ell) {
        for (bool regular : {false, true}) {
          const int ext = extended_multiplicity(lambda, mu, ell, regular);
          const int want = (regular || ell == 0) ? unip : 0;
          rec.check(binary(ext) && ext == want,
                    "extended multiplicity " + in + " ell=" + std::to_string(ell) +
                        (regular ? " regular" : " non-regular"),
                    std::to_string(want), std::to_string(ext));
        }
      }
    }
  }
}

using SuiteFn = std::function<void(const VerifyBounds&, Recorder&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"partition", partition_suite}, {"theta", theta_suite},
      {"duality", duality_suite},     {"vanishing", vanishing_suite},
      {"census", census_suite},       {"dimension", dimension_suite},
      {"degree", degree_suite},       {"multiplicity", multiplicity_suite},
  };
  return suites;
}

VerifyReport run_one(const std::string& name, const SuiteFn& fn, const VerifyBounds& bounds) {
  VerifyReport report;
  report.suite = name;
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(report);
  try {
    fn(bounds, rec);
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<VerifyReport> run_suites(const std::vector<std::string>& selection,
                                     const VerifyBounds& bounds) {
  std::set<std::string> wanted;
  for (const std::string& s : selection) {
    if (s == "all") {
      wanted.insert(suite_names().begin(), suite_names().end());
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw DomainError("unknown suite '" + s + "'");
    wanted.insert(s);
  }

  std::vector<std::pair<std::string, SuiteFn>> chosen;
  for (const auto& entry : registry())
    if (wanted.count(entry.first)) chosen.push_back(entry);

  std::vector<VerifyReport> reports(chosen.size());
  if (bounds.jobs <= 1) {
    for (std::size_t i = 0; i < chosen.size(); ++i)
      reports[i] = run_one(chosen[i].first, chosen[i].second, bounds);
    return reports;
  }

  // Round-robin the suites over `jobs` workers; slots are preassigned so the
  // output order does not depend on scheduling.
  std::vector<std::future<void>> workers;
  const std::size_t jobs = std::min<std::size_t>(bounds.jobs, chosen.size());
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < chosen.size(); i += jobs)
        reports[i] = run_one(chosen[i].first, chosen[i].second, bounds);
    }));
  }
  for (auto& w : workers) w.get();
  return reports;
}

}  // namespace ggp
