#include "minorforge/sweep.hpp"

#include "minorforge/constructions.hpp"
#include "minorforge/enumerate.hpp"
#include "minorforge/families.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace minorforge {

namespace {

int int_option(const Json& check, const char* key, int fallback) {
  auto it = check.find(key);
  if (it == check.end())
    return fallback;
  if (!it->is_number_integer() || it->get<long long>() < 0 || it->get<long long>() > 1000000000)
    throw InputError(std::string("sweep: '") + key + "' must be a non-negative integer");
  return it->get<int>();
}

std::function<std::string()> graph_key(const Graph& g) {
  return [&g] { return to_json(g).dump(); };
}

std::function<std::string()> label(std::string text) {
  return [text = std::move(text)] { return text; };
}

// Runs `body` on one instance; false or an exception counts as a failure.
class Tally {
public:
  explicit Tally(std::string property) { result_.property = std::move(property); }

  // `key` names the instance and is only rendered for the first failure.
  void run(const std::function<std::string()>& key, const std::function<std::string()>& body) {
    ++result_.instances;
    std::string failure;
    try {
      failure = body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty()) {
      if (result_.failures == 0)
        result_.first_failure = key() + ": " + failure;
      ++result_.failures;
    }
  }

  CheckResult result() const { return result_; }

private:
  CheckResult result_;
};

void for_each_class(int lo, int hi, const std::function<void(const Graph&)>& visit) {
  for (int n = lo; n <= hi; ++n)
    for (const auto& g : graphs_up_to_isomorphism(n))
      visit(g);
}

std::string check_thm1(const Graph& g, const Limits& limits) {
  auto res = odd_hadwiger_witness(g);
  if (!verify_odd_expansion(g, res.expansion).ok())
    return "expansion does not verify";
  const int z = zig(g, limits).zig;
  if (res.expansion.order() < z / 2 + 1)
    return "order " + std::to_string(res.expansion.order()) + " < floor(zig/2)+1 with zig " +
           std::to_string(z);
  return {};
}

std::string check_thm2(const Hypergraph& h, const Limits& limits) {
  auto res = extract_minor_from_kneser_rep(h, limits);
  if (!verify_minor_model(res.kneser, res.model).ok())
    return "model does not verify";
  if (res.model.order() != res.t)
    return "model order differs from cd";
  Limits chi_limits = limits;
  chi_limits.chromatic = std::max(limits.chromatic, res.kneser.order());
  const int chi = chromatic_number(res.kneser, chi_limits).chi;
  if (res.t > chi)
    return "cd " + std::to_string(res.t) + " exceeds chromatic number " + std::to_string(chi);
  return {};
}

CheckResult check_thm3(const Json& c) {
  Tally tally("thm3");
  const int n_min = int_option(c, "n_min", 2);
  const int n_max = int_option(c, "n_max", 13);
  for (int n = std::max(n_min, 2); n <= n_max; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      tally.run(label("S(" + std::to_string(n) + "," + std::to_string(k) + ")"), [&]() -> std::string {
        const Graph g = schrijver(n, k);
        const auto x = schrijver_expansion(n, k);
        if (!verify_odd_expansion(g, x).ok())
          return "expansion does not verify";
        if (x.order() != n - 2 * k + 2)
          return "wrong number of trees";
        for (int i = 0; i < n - 2 * k; ++i)
          if (static_cast<int>(x.trees[i].vertices.size()) != 2 * k - 1)
            return "path tree " + std::to_string(i) + " has the wrong size";
        return {};
      });
  return tally.result();
}

CheckResult check_zig_le_chi(const Json& c, const Limits& limits) {
  Tally tally("zig_le_chi");
  for_each_class(1, int_option(c, "max_vertices", 6), [&](const Graph& g) {
    tally.run(graph_key(g), [&]() -> std::string {
      const int z = zig(g, limits).zig;
      const int chi = chromatic_number(g, limits).chi;
      return z <= chi ? "" : "zig exceeds chromatic number";
    });
  });
  return tally.result();
}

CheckResult check_thm1_sweep(const Json& c, const Limits& limits, std::uint64_t seed) {
  Tally tally("thm1");
  for_each_class(1, int_option(c, "max_vertices", 6), [&](const Graph& g) {
    tally.run(graph_key(g), [&] { return check_thm1(g, limits); });
  });
  Rng rng(seed);
  const int count = int_option(c, "random", 0);
  const int n = int_option(c, "random_vertices", 7);
  for (int i = 0; i < count; ++i) {
    const Graph g = random_graph(n, rng);
    tally.run(label("random#" + std::to_string(i)), [&] { return check_thm1(g, limits); });
  }
  return tally.result();
}

CheckResult check_thm2_sweep(const Json& c, const Limits& limits, std::uint64_t seed) {
  Tally tally("thm2");
  Rng rng(seed);
  const int count = int_option(c, "random", 500);
  const int max_ground = std::max(1, int_option(c, "max_ground", 8));
  const int max_edges = std::max(1, int_option(c, "max_edges", 12));
  for (int i = 0; i < count; ++i) {
    const Hypergraph h = random_hypergraph(max_ground, max_edges, rng);
    tally.run(label("random#" + std::to_string(i)), [&] { return check_thm2(h, limits); });
  }
  return tally.result();
}

std::string check_partition(const Graph& g) {
  const auto p = bipartite_connected_partition(g);
  auto report = verify_partition(g, p);
  if (!report.ok())
    return report.violations.front();
  return is_proper(g, partition_coloring(g, p)) ? "" : "partition coloring is not proper";
}

CheckResult check_decompose(const Json& c, std::uint64_t seed) {
  Tally tally("decompose");
  const int max_n = int_option(c, "max_vertices", 7);
  for (int n = 1; n <= max_n; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      tally.run(graph_key(g), [&] { return check_partition(g); });
    });
  Rng rng(seed);
  const int count = int_option(c, "random", 0);
  const int max_random = std::max(1, int_option(c, "random_max_vertices", 12));
  for (int i = 0; i < count; ++i) {
    const Graph g = random_graph(uniform_int(rng, 1, max_random), rng);
    tally.run(label("random#" + std::to_string(i)), [&] { return check_partition(g); });
  }
  return tally.result();
}

CheckResult check_roundtrip(const Json& c) {
  Tally tally("roundtrip");
  const int max_n = int_option(c, "max_vertices", 6);
  for (int n = 0; n <= max_n; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      tally.run(graph_key(g), [&]() -> std::string {
        const Graph back = kneser_graph(kneser_representation(g));
        return back.order() == g.order() && back.edges() == g.edges() ? "" : "round trip differs";
      });
    });
  return tally.result();
}

CheckResult check_oracles(const Json& c, const Limits& limits) {
  Tally tally("oracles");
  for_each_class(1, int_option(c, "max_vertices", 5), [&](const Graph& g) {
    tally.run(graph_key(g), [&]() -> std::string {
      const int odd = odd_clique_minor_number(g, limits);
      const int minor = clique_minor_number(g, limits);
      if (odd_hadwiger_witness(g).expansion.order() > odd)
        return "odd-minor certificate exceeds the odd Hadwiger number";
      const Hypergraph h = kneser_representation(g);
      Limits rep_limits = limits;
      rep_limits.cd = std::max(limits.cd, h.ground());
      if (extract_minor_from_kneser_rep(h, rep_limits).model.order() > minor)
        return "minor certificate exceeds the Hadwiger number";
      if (odd > minor)
        return "odd Hadwiger number exceeds the Hadwiger number";
      const auto comps = connected_components(g);
      const bool bipartite = std::all_of(comps.begin(), comps.end(), [&](const VertexSet& comp) {
        return bipartition_of(g, comp).has_value();
      });
      if (bipartite && odd > 2)
        return "bipartite graph with odd Hadwiger number above 2";
      return {};
    });
  });
  return tally.result();
}

CheckResult check_certificate(const Json& c) {
  Tally tally("certificate");
  tally.run(label(c.value("name", std::string("fixture"))), [&]() -> std::string {
    const Graph g = graph_from_json(c.at("graph"));
    ValidationReport report;
    if (c.contains("expansion"))
      report = verify_odd_expansion(g, expansion_from_json(c.at("expansion")));
    else if (c.contains("model"))
      report = verify_minor_model(g, minor_model_from_json(c.at("model")));
    else if (c.contains("partition"))
      report = verify_partition(g, partition_from_json(c.at("partition")));
    else
      throw InputError("certificate check needs 'expansion', 'model' or 'partition'");
    return report.ok() ? "" : report.violations.front();
  });
  return tally.result();
}

}  // namespace

bool SweepReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

Json SweepReport::to_json() const {
  Json rows = Json::array();
  for (const auto& c : checks) {
    Json row;
    row["property"] = c.property;
    row["instances"] = c.instances;
    row["failures"] = c.failures;
    row["pass"] = c.ok();
    if (!c.ok())
      row["first_failure"] = c.first_failure;
    rows.push_back(row);
  }
  Json out;
  out["pass"] = ok();
  out["checks"] = rows;
  return out;
}

const std::vector<std::string>& sweep_properties() {
  static const std::vector<std::string> names = {"thm1",      "thm2",     "thm3",
                                                 "zig_le_chi", "decompose", "roundtrip",
                                                 "oracles",   "certificate"};
  return names;
}

SweepReport run_sweep(const Json& config, const Limits& limits) {
  if (!config.is_object() || !config.contains("checks") || !config["checks"].is_array())
    throw InputError("sweep config must be an object with a 'checks' array");
  std::uint64_t seed = 0;
  if (auto it = config.find("seed"); it != config.end()) {
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0))
      throw InputError("sweep: 'seed' must be a non-negative integer");
    seed = it->get<std::uint64_t>();
  }
  for (const auto& c : config["checks"]) {
    if (!c.is_object() || !c.contains("property") || !c["property"].is_string())
      throw InputError("each sweep check needs a 'property' string");
    const auto& names = sweep_properties();
    if (std::find(names.begin(), names.end(), c["property"].get<std::string>()) == names.end())
      throw InputError("unknown sweep property '" + c["property"].get<std::string>() + "'");
  }

  SweepReport report;
  for (const auto& c : config["checks"]) {
    const auto property = c["property"].get<std::string>();
    if (property == "thm1")
      report.checks.push_back(check_thm1_sweep(c, limits, seed));
    else if (property == "thm2")
      report.checks.push_back(check_thm2_sweep(c, limits, seed));
    else if (property == "thm3")
      report.checks.push_back(check_thm3(c));
    else if (property == "zig_le_chi")
      report.checks.push_back(check_zig_le_chi(c, limits));
    else if (property == "decompose")
      report.checks.push_back(check_decompose(c, seed));
    else if (property == "roundtrip")
      report.checks.push_back(check_roundtrip(c));
    else if (property == "oracles")
      report.checks.push_back(check_oracles(c, limits));
    else
      report.checks.push_back(check_certificate(c));
  }
  return report;
}

}  // namespace minorforge
