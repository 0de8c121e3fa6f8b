#include "hyperslice/commands.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <ostream>

#include "hyperslice/format.hpp"
#include "hyperslice/inequalities.hpp"
#include "hyperslice/oracle.hpp"
#include "hyperslice/specfun.hpp"

namespace hyperslice {
namespace {

using ordered_json = nlohmann::ordered_json;

double finite(double v, const std::string& what) {
  if (!std::isfinite(v)) throw NumericalError("non-finite value for " + what);
  return v;
}

std::vector<double> as_vector(const Vec& x) { return std::vector<double>(x.begin(), x.end()); }

void require_bodies(const RunConfig& c) {
  if (!c.has_bodies || c.bodies.empty()) throw ConfigError("this command needs a non-empty 'bodies' list");
}

void require_densities(const RunConfig& c) {
  if (!c.has_densities || c.densities.empty()) throw ConfigError("this command needs a non-empty 'densities' list");
}

std::vector<Cell> report_row(const InequalityReport& r, int n) {
  for (double v : {r.lhs, r.rhs, r.margin, r.tolerance}) finite(v, r.name);
  return {r.name, static_cast<std::int64_t>(n), r.lhs, r.rhs, r.bound_constant, r.margin, r.tolerance,
          r.passed, r.inputs_digest, Details(r.details)};
}

Table report_table(const std::string& command) {
  Table t;
  t.command = command;
  t.columns = report_columns();
  return t;
}

void add_report(Table& t, const InequalityReport& r, int n) {
  t.rows.push_back(report_row(r, n));
  t.all_passed = t.all_passed && r.passed;
}

std::vector<Vec> section_directions(const RunConfig& c, int n) {
  if (c.directions.empty()) return {unit(n, n - 1)};
  std::vector<Vec> out;
  for (const auto& d : c.directions) {
    if (static_cast<int>(d.size()) != n)
      throw ConfigError("direction has " + std::to_string(d.size()) + " entries but the dimension is " +
                        std::to_string(n));
    Vec x(n);
    for (int i = 0; i < n; ++i) x(i) = d[i];
    const double len = x.norm();
    if (!(len > 0) || !std::isfinite(len)) throw ConfigError("directions must be nonzero");
    out.push_back(x / len);
  }
  return out;
}

// Profiles for every (body, density) that pair commands touch, computed once.
class ProfileCache {
 public:
  ProfileCache(const std::vector<NamedBody>& bodies, const RunConfig& c) : bodies_(bodies), c_(c) {}

  const BodyProfile& get(std::size_t body, const Density& density, std::size_t density_key) {
    auto key = std::make_pair(body, density_key);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, make_profile(bodies_[body].body, density, c_.spec, c_.search_resolution)).first;
    return it->second;
  }

 private:
  const std::vector<NamedBody>& bodies_;
  const RunConfig& c_;
  std::map<std::pair<std::size_t, std::size_t>, BodyProfile> cache_;
};

void check_pair_indices(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::size_t count) {
  if (pairs.empty()) throw ConfigError("pair commands need at least two bodies or an explicit 'pairs' list");
  for (auto [k, l] : pairs)
    if (k >= count || l >= count) throw ConfigError("pair index out of range");
}

std::string pair_label(const std::string& kind, const NamedBody& k, const NamedBody& l, const std::string& f) {
  return kind + "/K=" + k.label + "/L=" + l.label + (f.empty() ? "" : "/f=" + f);
}

Table cmd_measure(const RunConfig& c, const CommandOptions& o) {
  require_bodies(c);
  require_densities(c);
  Table t;
  t.command = "measure";
  t.columns = {"body", "density", "n", "mu", "vol", "tolerance", "vol_tolerance"};
  if (o.mc) t.columns.insert(t.columns.end(), {"mc_mean", "mc_std_error", "mc_agrees"});
  const std::uint64_t seed = o.seed.value_or(c.seed);
  for (int n : c.dimensions) {
    const auto bodies = c.bodies_for(n);
    const auto densities = c.densities_for(n);
    for (const auto& b : bodies) {
      const Estimate vol = volume_estimate(b.body, c.spec);
      for (const auto& d : densities) {
        const Estimate mu = measure_estimate(b.body, d.density, c.spec);
        std::vector<Cell> row{b.label,          d.label,  static_cast<std::int64_t>(n), finite(mu.value, "mu"),
                              finite(vol.value, "vol"), mu.error, vol.error};
        if (o.mc) {
          const McEstimate mc = mc_measure(b.body, d.density, c.mc_samples, seed);
          const bool agrees = std::abs(mu.value - mc.mean) <= 4.0 * mc.std_error + mu.error;
          row.insert(row.end(), {mc.mean, mc.std_error, agrees});
        }
        t.rows.push_back(std::move(row));
      }
    }
  }
  return t;
}

Table cmd_section(const RunConfig& c, const CommandOptions& o) {
  require_bodies(c);
  require_densities(c);
  Table t;
  t.command = "section";
  t.columns = {"body", "density", "n", "xi", "value", "tolerance"};
  if (o.mc) t.columns.insert(t.columns.end(), {"mc_mean", "mc_std_error", "mc_agrees"});
  const std::uint64_t seed = o.seed.value_or(c.seed);
  for (int n : c.dimensions) {
    const auto bodies = c.bodies_for(n);
    const auto densities = c.densities_for(n);
    const auto dirs = section_directions(c, n);
    for (const auto& b : bodies) {
      for (const auto& d : densities) {
        for (const Vec& xi : dirs) {
          const Estimate s = section_estimate(b.body, d.density, xi, c.spec);
          std::vector<Cell> row{b.label, d.label, static_cast<std::int64_t>(n), as_vector(xi),
                                finite(s.value, "section"), s.error};
          if (o.mc) {
            const McEstimate mc = mc_section(b.body, d.density, xi, c.mc_samples, seed);
            const bool agrees = std::abs(s.value - mc.mean) <= 4.0 * mc.std_error + s.error;
            row.insert(row.end(), {mc.mean, mc.std_error, agrees});
          }
          t.rows.push_back(std::move(row));
        }
      }
    }
  }
  return t;
}

Table cmd_max_section(const RunConfig& c) {
  require_bodies(c);
  require_densities(c);
  Table t;
  t.command = "max-section";
  t.columns = {"body", "density", "n", "xi", "value", "tolerance", "search_resolution"};
  for (int n : c.dimensions) {
    const auto bodies = c.bodies_for(n);
    const auto densities = c.densities_for(n);
    for (const auto& b : bodies) {
      for (const auto& d : densities) {
        const SectionValue best = max_section(b.body, d.density, c.spec, c.search_resolution);
        const double fine = section_measure(b.body, d.density, best.direction, c.spec.refined());
        t.rows.push_back({b.label, d.label, static_cast<std::int64_t>(n), as_vector(best.direction),
                          finite(fine, "max section"), std::abs(fine - best.value),
                          static_cast<std::int64_t>(c.search_resolution)});
      }
    }
  }
  return t;
}

void hyperplane_rows(Table& t, const RunConfig& c, int n) {
  const auto bodies = c.bodies_for(n);
  const auto densities = c.densities_for(n);
  for (const auto& b : bodies) {
    for (const auto& d : densities) {
      InequalityReport r = hyperplane_report(b.body, d.density, c.spec, c.search_resolution);
      r.name = "hyperplane/K=" + b.label + "/f=" + d.label;
      add_report(t, r, n);
    }
  }
}

void volume_ratio_rows(Table& t, const RunConfig& c, int n) {
  for (const auto& b : c.bodies_for(n)) {
    InequalityReport r = volume_ratio_report(b.body, c.spec, c.search_resolution);
    r.name = "volume_ratio/K=" + b.label;
    add_report(t, r, n);
  }
}

enum class PairKind { stability, difference };

void pair_rows(Table& t, const RunConfig& c, int n, PairKind kind) {
  const auto bodies = c.bodies_for(n);
  const auto densities = c.densities_for(n);
  const auto pairs = c.pairs_for(bodies.size());
  check_pair_indices(pairs, bodies.size());
  ProfileCache cache(bodies, c);
  for (std::size_t di = 0; di < densities.size(); ++di) {
    for (auto [k, l] : pairs) {
      const BodyProfile& pk = cache.get(k, densities[di].density, di);
      const BodyProfile& pl = cache.get(l, densities[di].density, di);
      InequalityReport r = kind == PairKind::stability ? stability_report(pk, pl) : difference_report(pk, pl);
      r.name = pair_label(r.name, bodies[k], bodies[l], densities[di].label);
      add_report(t, r, n);
    }
  }
}

void volume_stability_rows(Table& t, const RunConfig& c, int n) {
  const auto bodies = c.bodies_for(n);
  const auto pairs = c.pairs_for(bodies.size());
  check_pair_indices(pairs, bodies.size());
  const Density one = make_constant(n, 1.0);
  ProfileCache cache(bodies, c);
  for (auto [k, l] : pairs) {
    VolumeStabilityReport r = volume_stability_report(cache.get(k, one, 0), cache.get(l, one, 0));
    r.volume_form.name = pair_label(r.volume_form.name, bodies[k], bodies[l], "");
    r.measure_form.name = pair_label(r.measure_form.name, bodies[k], bodies[l], "");
    add_report(t, r.volume_form, n);
    add_report(t, r.measure_form, n);
    // The measure form is checked through the implication only.
    t.all_passed = t.all_passed && r.volume_form.passed && r.implication_holds();
  }
}

Table cmd_lemmas(const RunConfig& c, const CommandOptions& o) {
  Table t = report_table("lemmas");
  for (int n = 2; n <= c.lemma_max_n; ++n) {
    const GammaLemmaSides g = gamma_lemma_sides(n);
    add_report(t, make_report("gamma_lemma/n=" + std::to_string(n), g.lhs, g.rhs, 1.0, 1e-12 * g.rhs, ""), n);
    const LogConvexitySides lc = log_convexity_sides(n);
    add_report(t, make_report("log_convexity/n=" + std::to_string(n), lc.lhs, lc.rhs, 1.0, 1e-12 * lc.rhs, ""), n);
  }
  // Random instances: alpha(t) = sum_k c_k^2 t^k, degree <= 4.
  const CounterRng rng(o.seed.value_or(c.seed), 0x4c454d4d41ULL);
  std::uint64_t ctr = 0;
  for (int i = 0; i < c.lemma_samples; ++i) {
    const int n = 2 + static_cast<int>(rng.bits(ctr++) % 3);
    const double a = 0.1 + 4.9 * rng.uniform(ctr++);
    const double b = 0.1 + 4.9 * rng.uniform(ctr++);
    std::array<double, 5> coef{};
    for (double& ck : coef) {
      const double u = 2.0 * rng.uniform(ctr++) - 1.0;
      ck = u * u;
    }
    auto alpha = [&](double x) {
      double s = 0.0;
      for (int k = 4; k >= 0; --k) s = s * x + coef[k];
      return s;
    };
    const LemmaSides s = lemma_ell_gap(n, a, b, alpha);
    InequalityReport r = make_report("lemma_ell/" + std::to_string(i), s.lhs, s.rhs, 1.0, 1e-10, "");
    r.details = {{"a", a}, {"b", b}};
    add_report(t, r, n);
  }
  return t;
}

Table cmd_sweep(const RunConfig& c) {
  Table t = report_table("sweep");
  for (int n : c.dimensions) {
    for (const std::string& what : c.sweep_commands) {
      if (what == "hyperplane") {
        require_bodies(c);
        require_densities(c);
        hyperplane_rows(t, c, n);
      } else if (what == "volume_ratio") {
        require_bodies(c);
        volume_ratio_rows(t, c, n);
      } else if (what == "stability" || what == "difference") {
        require_bodies(c);
        require_densities(c);
        pair_rows(t, c, n, what == "stability" ? PairKind::stability : PairKind::difference);
      } else if (what == "volume_stability") {
        require_bodies(c);
        volume_stability_rows(t, c, n);
      } else {
        throw ConfigError("unknown sweep entry '" + what + "'");
      }
    }
  }
  return t;
}

ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Details>) {
          ordered_json o = ordered_json::object();
          for (const auto& [k, x] : v) o[k] = x;
          return o;
        } else {
          return v;
        }
      },
      cell);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string cell_csv(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return csv_escape(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::vector<double>>) {
          std::string s;
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_number(v[i]);
          return s;
        } else {
          std::string s;
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i].first + "=" + format_number(v[i].second);
          return csv_escape(s);
        }
      },
      cell);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"measure",          "section",           "max-section",
                                              "verify-hyperplane", "verify-stability", "verify-difference",
                                              "verify-volume-stability", "lemmas",      "sweep"};
  return names;
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols{"name",      "n",      "lhs",           "rhs",    "bound_constant",
                                             "margin",    "tolerance", "passed",     "inputs_digest", "details"};
  return cols;
}

Table run_command(const std::string& name, const RunConfig& c, const CommandOptions& o) {
  if (name == "measure") return cmd_measure(c, o);
  if (name == "section") return cmd_section(c, o);
  if (name == "max-section") return cmd_max_section(c);
  if (name == "lemmas") return cmd_lemmas(c, o);
  if (name == "sweep") return cmd_sweep(c);

  Table t = report_table(name);
  for (int n : c.dimensions) {
    if (name == "verify-hyperplane") {
      require_bodies(c);
      require_densities(c);
      hyperplane_rows(t, c, n);
    } else if (name == "verify-stability" || name == "verify-difference") {
      require_bodies(c);
      require_densities(c);
      pair_rows(t, c, n, name == "verify-stability" ? PairKind::stability : PairKind::difference);
    } else if (name == "verify-volume-stability") {
      require_bodies(c);
      volume_stability_rows(t, c, n);
    } else {
      throw ConfigError("unknown command '" + name + "'");
    }
  }
  return t;
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["command"] = table.command;
    doc["all_passed"] = table.all_passed;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json r = ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = cell_json(row[i]);
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_csv(row[i]);
    out << '\n';
  }
}

int execute(const std::string& name, const RunConfig& config, const CommandOptions& options, std::ostream& out,
            std::ostream& err) {
  try {
    const Table table = run_command(name, config, options);
    write_table(table, options.format.value_or(config.format), out);
    return table.all_passed ? kExitOk : kExitFailed;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace hyperslice
