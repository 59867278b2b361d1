#include "bhsp/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "bhsp/bounds.hpp"
#include "bhsp/dtree.hpp"
#include "bhsp/error.hpp"
#include "bhsp/fourier.hpp"
#include "bhsp/pgm.hpp"
#include "bhsp/randstat.hpp"
#include "bhsp/shifts.hpp"
#include "bhsp/spectral.hpp"

namespace bhsp::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

std::string hex(Point v) { return fmt::format("0x{:x}", v); }

std::string rational(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used, 0);
    if (used != s.size() || s.empty() || s[0] == '-') throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw std::invalid_argument(fmt::format("invalid {} '{}'", what, s));
  }
}

int parse_int(const std::string& s, const char* what) {
  const std::uint64_t v = parse_uint(s, what);
  if (v > 1'000'000) throw std::invalid_argument(fmt::format("{} {} too large", what, v));
  return static_cast<int>(v);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BHSP_SEED")) return parse_uint(env, "BHSP_SEED");
  return 1;
}

// Blank out an "n=<k>" header so --n can take its place.
std::string strip_header(std::string text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos || text.compare(start, 2, "n=") != 0) return text;
  auto end = start + 2;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
  std::fill(text.begin() + static_cast<std::ptrdiff_t>(start), text.begin() + static_cast<std::ptrdiff_t>(end), ' ');
  return text;
}

Json shift_json(const BooleanFunction& f) {
  const ShiftStructure s = find_b_shifts(f);
  Json basis = Json::array();
  for (Point b : s.undetectable_basis) basis.push_back(hex(b));
  const ExactOneQueryWitness w = exact_one_query_feasible(f);
  Json out;
  out["n"] = f.n();
  out["undetectable_basis"] = basis;
  out["anti_shift"] = s.anti_shift ? Json(hex(*s.anti_shift)) : Json(nullptr);
  out["bent"] = is_bent(f);
  out["exact_one_query"] = {{"feasible", w.feasible},
                            {"p_empty", w.feasible ? Json(rational(w.p_empty)) : Json(nullptr)},
                            {"k", w.feasible ? Json(w.k) : Json(nullptr)}};
  return out;
}

Json bounds_json(int n, std::uint64_t weight) {
  Json out;
  out["n"] = n;
  out["weight"] = weight;
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t effective = std::min(weight, size - weight);
  out["effective_weight"] = effective;
  if (effective == 0) {
    out["upper_leading"] = nullptr;
    out["upper_note"] = "constant function: every shift is undetectable";
    out["lower_leading"] = nullptr;
    out["lower_note"] = nullptr;
    return out;
  }
  const BoundEstimate upper = grover_upper_bound(n, effective);
  const BoundEstimate lower = search_lower_bound(n, effective);
  out["upper_leading"] = upper.leading;
  out["upper_note"] = upper.note;
  out["lower_leading"] = lower.leading;
  out["lower_note"] = lower.note;
  return out;
}

void write_spectrum_csv(const Spectrum& spec, std::ostream& out) {
  out << "w,value\n";
  for (Point w = 0; w < spec.size(); ++w) {
    if (spec.is_exact()) {
      out << hex(w) << ',' << spec.numerators()[w] << "/2^" << spec.denominator_log2() << '\n';
    } else {
      out << hex(w) << ',' << fmt::format("{:.17g}", spec[w]) << '\n';
    }
  }
}

Json analyze(const BooleanFunction& f, int t_max) {
  const Spectrum spec = wht(f);
  std::size_t zeros = 0;
  for (auto v : spec.numerators()) zeros += v == 0;
  mpz_class plancherel = 0;
  for (auto v : spec.numerators()) plancherel += mpz_class(static_cast<long>(v)) * static_cast<long>(v);
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, 2 * static_cast<unsigned long>(f.n()));
  mpq_class plancherel_q(plancherel, denom);
  plancherel_q.canonicalize();

  Json out;
  out["schema"] = kSchema;
  out["n"] = f.n();
  out["weight"] = hamming_weight(f);
  out["spectrum"] = {{"zero_coefficients", zeros},
                     {"nonzero_coefficients", spec.size() - zeros},
                     {"sum_of_squares", rational(plancherel_q)}};
  const Json shifts = shift_json(f);
  out["bent"] = shifts["bent"];
  out["shifts"] = {{"undetectable_basis", shifts["undetectable_basis"]}, {"anti_shift", shifts["anti_shift"]}};
  out["exact_one_query"] = shifts["exact_one_query"];

  Json p_success = Json::object();
  Json qrs = Json::object();
  for (int t = 1; t <= t_max; ++t) {
    p_success[std::to_string(t)] = success_probability(f, t);
    const QrsParams q = qrs_params(f, t);
    qrs[std::to_string(t)] = {{"p_min", q.p_min}, {"p_max", q.p_max}};
  }
  out["p_success"] = p_success;
  out["p_success_1_exact"] = rational(success_probability_one_query_exact(f));
  out["qrs"] = qrs;
  const auto minimal = minimal_full_support_t(f);
  out["minimal_full_support_t"] = minimal ? Json(*minimal) : Json(nullptr);
  Json bounds = bounds_json(f.n(), hamming_weight(f));
  bounds.erase("n");
  bounds.erase("weight");
  out["bounds"] = bounds;
  return out;
}

Json dtree_report(const DecisionTree& tree) {
  const BooleanFunction f = tree_to_function(tree);
  const int h = tree_height(tree);
  std::size_t zeros = 0;
  for (auto v : walsh_coefficients(f)) zeros += v == 0;
  Json fractions = Json::array();
  for (int t = 1; t <= 4; ++t) fractions.push_back(support(f, t).fraction());
  const SparsityBound sb = sparsity_bound(tree.n(), h);
  const auto minimal = minimal_full_support_t(f);

  Json out;
  out["schema"] = kSchema;
  out["n"] = tree.n();
  out["height"] = h;
  out["weight"] = hamming_weight(f);
  out["zero_coefficients"] = zeros;
  out["support_fraction"] = fractions;
  out["degree_bound_holds"] = verify_degree_bound(tree);
  out["sparsity_bound"] = {{"exact_fraction", rational(sb.exact_fraction)}, {"entropy_bound", sb.entropy_bound}};
  out["minimal_full_support_t"] = minimal ? Json(*minimal) : Json(nullptr);
  return out;
}

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Check> golden_checks() {
  std::vector<Check> checks;
  auto add = [&](std::string name, const std::function<std::string()>& body) {
    try {
      const std::string failure = body();
      checks.push_back({std::move(name), failure.empty(), failure});
    } catch (const std::exception& e) {
      checks.push_back({std::move(name), false, e.what()});
    }
  };

  add("f10_tree", [] {
    const DecisionTree tree = parse_tree(kF10Tree, 10);
    const BooleanFunction f = tree_to_function(tree);
    std::size_t zeros = 0;
    for (auto v : walsh_coefficients(f)) zeros += v == 0;
    const double expected[] = {0.09, 0.61, 0.94, 1.00};
    for (int t = 1; t <= 4; ++t) {
      const double rounded = std::round(support(f, t).fraction() * 100.0) / 100.0;
      if (std::abs(rounded - expected[t - 1]) > 1e-12) return fmt::format("t={} fraction {}", t, rounded);
    }
    if (tree_height(tree) != 5) return std::string("height != 5");
    if (zeros != 928) return fmt::format("{} zero coefficients", zeros);
    if (minimal_full_support_t(f) != 4) return std::string("minimal full-support t != 4");
    return std::string();
  });
  add("inner_product_bent", [] {
    for (int n : {2, 4, 6}) {
      const BooleanFunction f = make_inner_product(n);
      if (!is_bent(f)) return fmt::format("IP_{} not bent", n);
      if (success_probability_one_query_exact(f) != 1) return fmt::format("IP_{} p_f(1) != 1", n);
      if (!exact_one_query_feasible(f).feasible) return fmt::format("IP_{} not exactly solvable", n);
    }
    return std::string();
  });
  add("delta_success", [] {
    const BooleanFunction f = make_delta(3, 0);
    if (success_probability_one_query_exact(f) != mpq_class(25, 32)) return std::string("p != 25/32");
    for (int n = 1; n <= 6; ++n) {
      for (int t = 1; t <= 8; ++t) {
        const double d = std::abs(success_probability(make_delta(n, 0), t) - delta_closed_form(n, t));
        if (d > 1e-10) return fmt::format("n={} t={} differs by {}", n, t, d);
      }
    }
    if (std::abs(delta_closed_form(12, 4096) - (1 - std::exp(-4.0))) > 0.02) return std::string("large-t limit");
    return std::string();
  });
  add("one_variable_exact", [] {
    const ExactOneQueryWitness w = exact_one_query_feasible(make_function(1, "01"));
    if (!w.feasible || w.k != 2 || w.p_empty != mpq_class(1, 2)) return std::string("expected k=2, p=1/2");
    return std::string();
  });
  add("moments", [] {
    for (int n : {2, 3}) {
      const MomentReport r = brute_force_moments(n, 2);
      if (r.mean != mpq_class(1, 1 << n)) return fmt::format("n={} mean {}", n, rational(r.mean));
      if (r.variance != *r.closed_form_variance) return fmt::format("n={} variance {}", n, rational(r.variance));
    }
    return std::string();
  });
  add("random_walk", [] {
    if (walk_expectation(2) != 1 || walk_expectation(4) != mpq_class(3, 2)) return std::string("L(2), L(4)");
    if (std::abs(random1_bound(16) - 2.0 / std::numbers::pi) > 1e-3) return std::string("L(2^16)");
    return std::string();
  });
  add("sparsity_bound", [] {
    if (sparsity_bound(10, 5).exact_fraction != mpq_class(319, 512)) return std::string("n=10 h=5");
    return std::string();
  });
  add("distinguishing_set", [] {
    const auto s = distinguishing_index_set({"00", "01", "11"});
    if (s.size() != 2) return std::string("expected two indices");
    return std::string();
  });
  return checks;
}

struct Options {
  std::string function;
  std::string file;
  int t = 1;
  int t_max = 4;
  std::string shift = "0";
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  int n = 0;
  std::uint64_t weight = 0;
  std::uint64_t samples = 2000;
  unsigned workers = 0;
  bool slow = false;
  bool csv = false;
  bool distribution = false;
  std::string kind = "signed";
  int tree_n = 0;
};

}  // namespace

BooleanFunction resolve_function(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty function reference");
  if (spec[0] == '@') return parse_truth_table(read_file(spec.substr(1)));
  if (spec.rfind("tree:", 0) == 0) return tree_to_function(parse_tree_file(read_file(spec.substr(5))));
  if (ends_with(spec, ".tt")) return parse_truth_table(read_file(spec));
  if (ends_with(spec, ".tree")) return tree_to_function(parse_tree_file(read_file(spec)));

  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto need = [&](std::size_t count) {
    if (parts.size() != count) throw std::invalid_argument(fmt::format("malformed function reference '{}'", spec));
  };
  if (kind == "delta") {
    need(3);
    const int n = parse_int(parts[1], "n");
    const std::uint64_t x0 = parse_uint(parts[2], "x0");
    if (x0 > 0xffffffffULL) throw std::invalid_argument("x0 out of range");
    return make_delta(n, static_cast<Point>(x0));
  }
  if (kind == "ip") {
    need(2);
    return make_inner_product(parse_int(parts[1], "n"));
  }
  if (kind == "random") {
    need(3);
    return random_function(parse_int(parts[1], "n"), parse_uint(parts[2], "seed"));
  }
  if (kind == "const") {
    need(3);
    return make_constant(parse_int(parts[1], "n"), parse_int(parts[2], "bit"));
  }
  if (kind == "tt") {
    need(3);
    return make_function(parse_int(parts[1], "n"), parts[2]);
  }
  throw std::invalid_argument(fmt::format("unknown function reference '{}'", spec));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  opt.seed = 0;
  CLI::App app{"Boolean hidden shift analysis toolkit", "bhsp"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Spectrum, shift structure, PGM and QRS summary");
  analyze_cmd->add_option("function", opt.function, "Function reference")->required();
  analyze_cmd->add_option("--t-max", opt.t_max, "Largest t reported")->check(CLI::Range(1, 16));
  analyze_cmd->add_flag("--csv", opt.csv, "Emit a spectrum as CSV instead of the JSON summary");
  analyze_cmd->add_option("--kind", opt.kind, "Spectrum for --csv")
      ->check(CLI::IsMember({"signed", "autocorrelation", "tfold"}));
  analyze_cmd->add_option("--t", opt.t, "t for --kind tfold")->check(CLI::Range(1, 64));

  auto* pgm_cmd = app.add_subcommand("pgm", "Success probability and sampled outcomes of the PGM");
  pgm_cmd->add_option("--function", opt.function, "Function reference")->required();
  pgm_cmd->add_option("--t", opt.t, "Number of parallel queries")->check(CLI::Range(1, 64));
  pgm_cmd->add_option("--shift", opt.shift, "Hidden shift (decimal or 0x hex)");
  pgm_cmd->add_option("--shots", opt.shots, "Number of sampled measurements");
  auto* pgm_seed = pgm_cmd->add_option("--seed", opt.seed, "Sampling seed");
  pgm_cmd->add_flag("--distribution", opt.distribution, "Include every outcome probability");

  auto* shifts_cmd = app.add_subcommand("shifts", "Undetectable shifts, anti-shifts, bentness");
  shifts_cmd->add_option("function", opt.function, "Function reference")->required();

  auto* support_cmd = app.add_subcommand("support", "Support fractions of the t-fold spectrum (CSV)");
  support_cmd->add_option("function", opt.function, "Function reference")->required();
  support_cmd->add_option("--t-max", opt.t_max, "Largest t reported")->check(CLI::Range(1, 64));

  auto* dtree_cmd = app.add_subcommand("dtree", "Decision-tree spectral report");
  dtree_cmd->add_option("file", opt.file, "Tree file")->required();
  dtree_cmd->add_option("--n", opt.tree_n, "Variable count (overrides the file header)")
      ->check(CLI::Range(1, kMaxVariables));

  auto* randstat_cmd = app.add_subcommand("randstat", "Random-function statistics");
  randstat_cmd->add_option("--n", opt.n, "Number of variables")->required()->check(CLI::Range(1, kMaxVariables));
  randstat_cmd->add_option("--t", opt.t, "Number of parallel queries")->check(CLI::Range(1, 64));
  randstat_cmd->add_option("--samples", opt.samples, "Monte Carlo samples");
  auto* randstat_seed = randstat_cmd->add_option("--seed", opt.seed, "Monte Carlo seed");
  randstat_cmd->add_option("--workers", opt.workers, "Worker threads (0 = hardware)");
  randstat_cmd->add_flag("--slow", opt.slow, "Allow n = 4 brute-force moments");

  auto* bounds_cmd = app.add_subcommand("bounds", "Query-complexity bound calculators");
  bounds_cmd->add_option("--n", opt.n, "Number of variables")->check(CLI::Range(1, 62));
  bounds_cmd->add_option("--weight", opt.weight, "Hamming weight |f|");
  bounds_cmd->add_option("--function", opt.function, "Take n and |f| from a function");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the golden checks");

  std::vector<const char*> argv{"bhsp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) {
      const BooleanFunction f = resolve_function(opt.function);
      if (opt.csv) {
        if (opt.kind == "signed") {
          write_spectrum_csv(wht(f), out);
        } else if (opt.kind == "autocorrelation") {
          write_spectrum_csv(autocorrelation(f), out);
        } else {
          write_spectrum_csv(tfold_spectrum(f, opt.t), out);
        }
        return 0;
      }
      out << analyze(f, opt.t_max).dump(2) << "\n";
    } else if (pgm_cmd->parsed()) {
      const BooleanFunction f = resolve_function(opt.function);
      const std::uint64_t s = parse_uint(opt.shift, "shift");
      if (s > 0xffffffffULL) throw std::invalid_argument("shift out of range");
      check_point(f.n(), static_cast<Point>(s), "shift");
      const OutcomeDistribution dist = outcome_distribution(f, opt.t, static_cast<Point>(s));
      Json j;
      j["schema"] = kSchema;
      j["n"] = f.n();
      j["t"] = opt.t;
      j["shift"] = hex(static_cast<Point>(s));
      j["p_success"] = success_probability(f, opt.t);
      j["p_inconclusive"] = dist.p_inconclusive;
      if (opt.distribution) {
        Json probs = Json::object();
        for (Point o = 0; o < dist.probs.size(); ++o) probs[hex(o)] = dist.probs[o];
        j["outcome_probabilities"] = probs;
      }
      if (opt.shots > 0) {
        const std::uint64_t seed = pgm_seed->count() ? opt.seed : default_seed();
        const MeasurementHistogram h = sample_measurement(f, opt.t, static_cast<Point>(s), opt.shots, seed);
        Json counts = Json::object();
        for (Point o = 0; o < h.counts.size(); ++o) {
          if (h.counts[o]) counts[hex(o)] = h.counts[o];
        }
        j["histogram"] = {{"shots", opt.shots}, {"seed", seed}, {"counts", counts}, {"inconclusive", h.inconclusive}};
      }
      out << j.dump(2) << "\n";
    } else if (shifts_cmd->parsed()) {
      Json j;
      j["schema"] = kSchema;
      j.update(shift_json(resolve_function(opt.function)));
      out << j.dump(2) << "\n";
    } else if (support_cmd->parsed()) {
      const BooleanFunction f = resolve_function(opt.function);
      const int t_max = std::min(opt.t_max, f.n());
      out << "t,support_size,fraction\n";
      for (int t = 1; t <= t_max; ++t) {
        const SupportSet s = support(f, t);
        out << t << ',' << s.size() << ',' << fmt::format("{:.17g}", s.fraction()) << '\n';
      }
      const auto minimal = minimal_full_support_t(f);
      out << "# minimal_full_support_t=" << (minimal ? std::to_string(*minimal) : "none") << '\n';
    } else if (dtree_cmd->parsed()) {
      const std::string text = read_file(opt.file);
      const DecisionTree tree = opt.tree_n ? parse_tree(strip_header(text), opt.tree_n) : parse_tree_file(text);
      out << dtree_report(tree).dump(2) << "\n";
    } else if (randstat_cmd->parsed()) {
      const std::uint64_t seed = randstat_seed->count() ? opt.seed : default_seed();
      const MonteCarloEstimate est = expected_success_mc(opt.n, opt.t, opt.samples, seed, opt.workers);
      const CantelliChain chain = cantelli_chain(opt.n);
      Json j;
      j["schema"] = kSchema;
      j["n"] = opt.n;
      j["t"] = opt.t;
      j["samples"] = opt.samples;
      j["seed"] = seed;
      j["estimate"] = est.estimate;
      j["stderr"] = est.stderr_;
      j["bound_random1"] = opt.n <= 20 ? Json(random1_bound(opt.n)) : Json(nullptr);
      j["bound_random2"] = random2_bound(opt.n);
      j["cantelli"] = {{"k", chain.k},
                       {"mu", chain.mu},
                       {"sigma_exact", chain.sigma_exact},
                       {"sigma_simplified", chain.sigma_simplified},
                       {"bound_exact_sigma", chain.cantelli_exact_sigma},
                       {"bound_simplified_sigma", chain.simplified},
                       {"linearized", chain.linearized},
                       {"additive", chain.additive}};
      if (opt.n <= kMaxBruteForceVars || (opt.slow && opt.n == kMaxBruteForceVars + 1)) {
        const MomentReport m = brute_force_moments(opt.n, opt.t, opt.slow);
        Json moments;
        moments["mean"] = rational(m.mean);
        moments["second_moment"] = rational(m.second_moment);
        moments["variance"] = rational(m.variance);
        moments["closed_form_variance"] =
            m.closed_form_variance ? Json(rational(*m.closed_form_variance)) : Json(nullptr);
        j["moments"] = moments;
      }
      out << j.dump(2) << "\n";
    } else if (bounds_cmd->parsed()) {
      Json j;
      j["schema"] = kSchema;
      if (!opt.function.empty()) {
        const BooleanFunction f = resolve_function(opt.function);
        j.update(bounds_json(f.n(), hamming_weight(f)));
      } else {
        if (opt.n == 0 || opt.weight == 0) {
          throw std::invalid_argument("bounds needs --function or both --n and --weight");
        }
        const BoundEstimate upper = grover_upper_bound(opt.n, opt.weight);
        const BoundEstimate lower = search_lower_bound(opt.n, opt.weight);
        j["n"] = opt.n;
        j["weight"] = opt.weight;
        j["upper_leading"] = upper.leading;
        j["upper_note"] = upper.note;
        j["lower_leading"] = lower.leading;
        j["lower_note"] = lower.note;
      }
      out << j.dump(2) << "\n";
    } else if (selftest_cmd->parsed()) {
      const auto checks = golden_checks();
      bool all = true;
      Json list = Json::array();
      for (const auto& c : checks) {
        all = all && c.passed;
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      out << Json{{"schema", kSchema}, {"passed", all}, {"checks", list}}.dump(2) << "\n";
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    out << Json{{"schema", kSchema}, {"error", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace bhsp::cli
