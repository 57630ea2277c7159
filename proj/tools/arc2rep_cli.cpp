// Command-line driver: relation sweeps, weight dimensions, decategorification
// checks, arc algebras and matching counts.
#include "arc2rep/arcalg.hpp"
#include "arc2rep/arcrep.hpp"
#include "arc2rep/coinvrep.hpp"
#include "arc2rep/decat.hpp"
#include "arc2rep/errors.hpp"
#include "arc2rep/tworep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace arc2rep;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCapacity = 3;

// Hard limits the capacity overrides may not exceed.
constexpr int kHardMaxGamma = 8;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int k = 2;
  int n = 3;
  std::string backend = "arc";
  std::string field;
  std::vector<std::string> relations;
  std::string format = "text";
  int jobs = 0;
  bool no_timing = false;
  int max_gamma = 6;
  int max_coinvariant_size = kMaxCoinvariantSize;
};

void validate_shape(const RunConfig& c) {
  if (c.k < 1) throw ConfigError("--k must be at least 1");
  if (c.n < 2) throw ConfigError("--n must be at least 2");
  if (c.k > c.n) throw ConfigError("--k must satisfy 2k <= 2n");
  if (c.format != "text" && c.format != "json") throw ConfigError("--format must be text or json");
  if (c.max_gamma < 0 || c.max_gamma > kHardMaxGamma)
    throw ConfigError("--max-gamma must lie in 0.." + std::to_string(kHardMaxGamma));
  if (c.max_coinvariant_size < 0 || c.max_coinvariant_size > kMaxCoinvariantSize)
    throw ConfigError("--max-coinvariant-size must lie in 0.." + std::to_string(kMaxCoinvariantSize));
}

void check_arc_capacity(const RunConfig& c) {
  int gamma = std::min(c.k, c.n - c.k);
  if (gamma > c.max_gamma)
    throw CapacityError("weights at (k,n) = (" + std::to_string(c.k) + "," + std::to_string(c.n) + ") reach gamma " +
                        std::to_string(gamma) + ", above the bound " + std::to_string(c.max_gamma));
}

void check_coinvariant_capacity(const RunConfig& c) {
  if (2 * c.k > c.max_coinvariant_size)
    throw CapacityError("coinvariant rings at k = " + std::to_string(c.k) + " have size " + std::to_string(2 * c.k) +
                        ", above the bound " + std::to_string(c.max_coinvariant_size));
}

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    std::stringstream ss(r);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(item);
  }
  return out;
}

json lambda_json(const Weight& lam) { return json(lam.v); }

json instance_json(const InstanceResult& r, bool no_timing) {
  json j;
  j["relation"] = r.inst.relation;
  j["lambda"] = lambda_json(r.inst.lam);
  j["indices"] = r.inst.indices;
  j["backend"] = r.backend;
  j["status"] = status_str(r.status);
  j["degree"] = r.degree ? json(*r.degree) : json(nullptr);
  j["sign"] = r.sign;
  j["millis"] = no_timing ? 0 : r.millis;
  return j;
}

// The index n of the dotted bubble in the series convention, for relations
// that name a single bubble.
std::optional<int> bubble_label(const InstanceResult& r) {
  if (r.inst.relation == "bubble-zero" && r.inst.indices.size() >= 2)
    return bubble_series_index(r.inst.indices[0], r.inst.indices[1], r.inst.lam);
  if (r.inst.relation == "bubble-one" && !r.inst.indices.empty()) return 0;
  return std::nullopt;
}

std::string cell(const std::string& s, int width) {
  std::ostringstream os;
  os << std::left << std::setw(width) << s;
  return os.str();
}

void text_header() {
  std::cout << cell("backend", 12) << cell("relation", 26) << cell("lambda", 16) << cell("indices", 12)
            << cell("status", 14) << cell("degree", 8) << cell("sign", 6) << cell("millis", 8) << "note\n";
}

void text_row(const InstanceResult& r, bool no_timing) {
  std::string note;
  if (auto b = bubble_label(r)) note = "bubble n=" + std::to_string(*b);
  if (r.status == Status::Failed) note += (note.empty() ? "" : "; ") + r.detail;
  std::cout << cell(r.backend, 12) << cell(r.inst.relation, 26) << cell(r.inst.lam.str(), 16)
            << cell(word_str(r.inst.indices), 12) << cell(status_str(r.status), 14)
            << cell(r.degree ? std::to_string(*r.degree) : "-", 8) << cell(std::to_string(r.sign), 6)
            << cell(std::to_string(no_timing ? 0 : r.millis), 8) << note << "\n";
}

json summary_json(const SuiteReport& rep, bool no_timing) {
  json fam = json::object();
  for (const auto& [f, c] : rep.families)
    fam[f] = {{"instances", c.instances},
              {"nonvacuous", c.nonvacuous},
              {"failed", c.failed},
              {"sign_adjusted", c.sign_adjusted},
              {"structurally_nonzero", c.structurally_nonzero}};
  return {{"summary",
           {{"backend", rep.backend},
            {"k", rep.k},
            {"n", rep.n},
            {"instances", rep.results.size()},
            {"failures", rep.failures()},
            {"families", fam},
            {"uncovered_families", rep.uncovered_families()},
            {"millis", no_timing ? 0 : rep.millis}}}};
}

void text_summary(const SuiteReport& rep, bool no_timing) {
  std::cout << "\nsummary for backend " << rep.backend << " at (k,n) = (" << rep.k << "," << rep.n << ")\n";
  std::cout << cell("family", 26) << cell("instances", 11) << cell("nonvacuous", 12) << cell("failed", 8)
            << "sign-adjusted\n";
  for (const auto& [f, c] : rep.families)
    std::cout << cell(f, 26) << cell(std::to_string(c.instances), 11) << cell(std::to_string(c.nonvacuous), 12)
              << cell(std::to_string(c.failed), 8) << c.sign_adjusted << "\n";
  auto unc = rep.uncovered_families();
  std::cout << "uncovered families: " << (unc.empty() ? "none" : "") ;
  for (std::size_t x = 0; x < unc.size(); ++x) std::cout << (x ? ", " : "") << unc[x];
  std::cout << "\ninstances: " << rep.results.size() << ", failures: " << rep.failures();
  if (!no_timing) std::cout << ", elapsed: " << rep.millis << " ms";
  std::cout << "\n";
}

template <class F>
int run_backend(Backend<F>& be, const RunConfig& c, const std::vector<std::string>& rels) {
  bool json_out = c.format == "json";
  if (!json_out) text_header();
  auto rep = run_suite<F>(be, c.k, rels, c.jobs, [&](const InstanceResult& r) {
    if (json_out)
      std::cout << instance_json(r, c.no_timing).dump() << "\n";
    else
      text_row(r, c.no_timing);
    std::cout.flush();
  });
  if (json_out)
    std::cout << summary_json(rep, c.no_timing).dump() << "\n";
  else
    text_summary(rep, c.no_timing);
  return rep.failures();
}

int cmd_verify(const RunConfig& c) {
  validate_shape(c);
  if (c.backend != "arc" && c.backend != "coinvariant" && c.backend != "both")
    throw ConfigError("--backend must be arc, coinvariant or both");
  if (!c.field.empty()) {
    if (c.field != "f2" && c.field != "q") throw ConfigError("--field must be f2 or q");
    if (c.backend == "both") throw ConfigError("--field cannot be combined with --backend both");
    if (c.backend == "arc" && c.field != "f2") throw ConfigError("the arc backend works over f2");
    if (c.backend == "coinvariant" && c.field != "q") throw ConfigError("the coinvariant backend works over q");
  }
  auto rels = resolve_relation_filter(split_list(c.relations));
  if (!rels) throw ConfigError("unknown relation identifier in --relations");
  bool arc = c.backend != "coinvariant";
  bool coinv = c.backend != "arc";
  if (arc) check_arc_capacity(c);
  if (coinv) check_coinvariant_capacity(c);
  int failures = 0;
  if (arc) {
    ArcBackend be(c.n);
    failures += run_backend<F2>(be, c, *rels);
  }
  if (coinv) {
    CoinvariantBackend be(c.n);
    failures += run_backend<Q>(be, c, *rels);
  }
  return failures == 0 ? kExitPass : kExitFail;
}

int cmd_dims(const RunConfig& c) {
  validate_shape(c);
  auto rep = weight_dim_report(c.k, c.n);
  bool ok = rep.failures() == 0 && rep.total == rep.weyl;
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& e : rep.entries)
      rows.push_back({{"lambda", lambda_json(e.lam)},
                      {"gamma", e.gamma},
                      {"matchings", e.matchings},
                      {"catalan", e.catalan},
                      {"printed_formula", e.printed_formula},
                      {"ssyt", e.ssyt},
                      {"pass", e.pass}});
    std::cout << json{{"k", c.k}, {"n", c.n}, {"weights", rows}, {"total", rep.total}, {"weyl", rep.weyl},
                      {"failures", rep.failures()}}
                     .dump()
              << "\n";
  } else {
    std::cout << cell("lambda", 20) << cell("gamma", 7) << cell("matchings", 11) << cell("catalan", 9)
              << cell("printed", 9) << cell("ssyt", 6) << "status\n";
    for (const auto& e : rep.entries)
      std::cout << cell(e.lam.str(), 20) << cell(std::to_string(e.gamma), 7) << cell(std::to_string(e.matchings), 11)
                << cell(std::to_string(e.catalan), 9) << cell(std::to_string(e.printed_formula), 9)
                << cell(std::to_string(e.ssyt), 6) << (e.pass ? "pass" : "FAIL") << "\n";
    std::cout << "total " << rep.total << ", Weyl dimension " << rep.weyl << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

json decat_json(const DecatReport& rep) {
  json fam = json::object();
  json failed = json::array();
  for (const auto& ch : rep.checks) {
    auto& f = fam[ch.relation];
    if (f.is_null()) f = {{"checks", 0}, {"failed", 0}};
    f["checks"] = f["checks"].get<int>() + 1;
    if (!ch.pass) {
      f["failed"] = f["failed"].get<int>() + 1;
      failed.push_back({{"relation", ch.relation}, {"lambda", lambda_json(ch.lam)}, {"indices", ch.indices},
                        {"detail", ch.detail}});
    }
  }
  return {{"relations", fam}, {"failed", failed}, {"failures", rep.failures()}};
}

void decat_text(const std::string& title, const DecatReport& rep) {
  std::map<std::string, std::pair<int, int>> t;
  for (const auto& ch : rep.checks) {
    auto& x = t[ch.relation];
    ++x.first;
    if (!ch.pass) {
      ++x.second;
      std::cout << "FAIL " << ch.relation << " " << ch.lam.str() << " " << word_str(ch.indices) << " " << ch.detail
                << "\n";
    }
  }
  std::cout << title << "\n" << cell("relation", 26) << cell("checks", 9) << "failed\n";
  for (const auto& [r, x] : t) std::cout << cell(r, 26) << cell(std::to_string(x.first), 9) << x.second << "\n";
}

int cmd_decat(const RunConfig& c) {
  validate_shape(c);
  check_arc_capacity(c);
  auto q = check_qgroup(c.k, c.n);
  auto bim = bimodule_dims_report(c.k, c.n);
  if (c.format == "json") {
    std::cout << json{{"k", c.k}, {"n", c.n}, {"qgroup", decat_json(q)}, {"bimodule_dims", decat_json(bim)}}.dump()
              << "\n";
  } else {
    decat_text("quantum group relations (projective basis)", q);
    decat_text("bimodule graded-dimension identities (dimension-level)", bim);
  }
  return q.failures() + bim.failures() == 0 ? kExitPass : kExitFail;
}

int cmd_algebra(int r, bool basis, const std::string& format, int max_gamma) {
  if (r < 0) throw ConfigError("--r must be nonnegative");
  if (r > max_gamma) throw CapacityError("H^" + std::to_string(r) + " exceeds the bound " + std::to_string(max_gamma));
  ArcAlgebra h(r, max_gamma);
  Laurent gd = graded_dim(h.space());
  if (format == "json") {
    json j{{"r", r}, {"dim", h.dim()}, {"matchings", h.nm()}};
    json gdj = json::object();
    for (const auto& [p, cf] : gd.terms()) gdj[std::to_string(p)] = cf;
    j["graded_dim"] = gdj;
    if (basis) {
      json b = json::array();
      for (int x = 0; x < h.dim(); ++x) b.push_back({{"label", h.basis_label(x)}, {"degree", h.space().degree(x)}});
      j["basis"] = b;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "H^" << r << ": dim " << h.dim() << ", graded dim " << gd.str() << "\n";
    if (basis)
      for (int x = 0; x < h.dim(); ++x) std::cout << cell(h.basis_label(x), 40) << h.space().degree(x) << "\n";
  }
  return kExitPass;
}

int cmd_matchings(int r, bool list) {
  if (r < 0) throw ConfigError("--r must be nonnegative");
  if (r > 12) throw CapacityError("matchings of " + std::to_string(2 * r) + " points exceed the bound 24");
  const auto& all = enumerate_matchings(r);
  std::cout << all.size() << "\n";
  if (list)
    for (const auto& m : all) std::cout << m.str() << "\n";
  return static_cast<long long>(all.size()) == catalan(r) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categorified sl(n) representations: relation checks and decategorification"};
  app.require_subcommand(1);
  RunConfig cfg;
  int jobs_flag = 0;
  int r = 2;
  bool basis = false;
  bool list = false;

  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "half the weight total; weights lie in P(2 omega_k)");
    sub->add_option("--n", cfg.n, "rank parameter of sl(n)");
    sub->add_option("--format", cfg.format, "text or json");
    sub->add_option("--max-gamma", cfg.max_gamma, "largest gamma the arc model may build");
  };

  auto* verify = app.add_subcommand("verify", "verify the relation suite");
  add_shape(verify);
  verify->add_option("--backend", cfg.backend, "arc, coinvariant or both");
  verify->add_option("--field", cfg.field, "f2 (arc) or q (coinvariant)");
  verify->add_option("--relations", cfg.relations, "relation ids or family names, comma separated, or all");
  verify->add_option("--jobs", jobs_flag, "worker threads; overrides ARC2REP_JOBS");
  verify->add_flag("--no-timing", cfg.no_timing, "report zero for all timings");
  verify->add_option("--max-coinvariant-size", cfg.max_coinvariant_size, "largest coinvariant ring size");

  auto* dims = app.add_subcommand("dims", "weight-space dimensions against tableau counts");
  add_shape(dims);
  auto* decat = app.add_subcommand("decat", "quantum group relations and bimodule dimension identities");
  add_shape(decat);

  std::string alg_format = "text";
  auto* algebra = app.add_subcommand("algebra", "arc algebra H^r");
  algebra->add_option("--r", r, "number of arcs");
  algebra->add_flag("--basis", basis, "list the basis");
  algebra->add_option("--format", alg_format, "text or json");
  algebra->add_option("--max-gamma", cfg.max_gamma, "largest r to build");

  auto* matchings = app.add_subcommand("matchings", "count crossingless matchings");
  matchings->add_option("--r", r, "number of arcs");
  matchings->add_flag("--list", list, "print each matching");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  cfg.jobs = jobs_flag > 0 ? jobs_flag : default_jobs();
  try {
    if (*verify) return cmd_verify(cfg);
    if (*dims) return cmd_dims(cfg);
    if (*decat) return cmd_decat(cfg);
    if (*algebra) {
      if (alg_format != "text" && alg_format != "json") throw ConfigError("--format must be text or json");
      if (cfg.max_gamma < 0 || cfg.max_gamma > kHardMaxGamma)
        throw ConfigError("--max-gamma must lie in 0.." + std::to_string(kHardMaxGamma));
      return cmd_algebra(r, basis, alg_format, cfg.max_gamma);
    }
    if (*matchings) return cmd_matchings(r, list);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n\n" << app.help() << "\n";
    return kExitConfig;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitConfig;
}
