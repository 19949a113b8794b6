// Copyright 2026 The threebox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "threebox/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

namespace threebox::cli {

using nlohmann::ordered_json;

namespace {

std::string format_double(double v, int precision = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string format_exact(const ExactValue& v, int precision = 17) {
  if (const auto* r = std::get_if<Rational>(&v)) return threebox::to_string(*r);
  return format_double(std::get<double>(v), precision);
}

}  // namespace

ExactValue to_exact_value(const Probability& p) {
  if (p.exact) return *p.exact;
  return p.value;
}

void add_exact(OutputDocument& doc, const harness::ExactDistribution& dist) {
  for (const auto& [event, p] : dist.events) {
    doc.exact.emplace_back(std::string(harness::event_name(event)), to_exact_value(p));
  }
  doc.exact.emplace_back("p_post", to_exact_value(dist.p_post));
  if (dist.found_given_post) {
    doc.exact.emplace_back("found_given_post", to_exact_value(*dist.found_given_post));
  }
}

MonteCarloSection to_section(const harness::RunStatistics& stats) {
  MonteCarloSection s;
  s.runs = stats.runs;
  s.seed = stats.seed;
  for (const auto& [event, f] : stats.frequencies) {
    s.entries.push_back({std::string(harness::event_name(event)), f.successes, f.value, f.ci95});
  }
  s.entries.push_back({"p_post", stats.post.successes, stats.post.value, stats.post.ci95});
  if (stats.found_given_post) {
    const auto& f = *stats.found_given_post;
    s.entries.push_back({"found_given_post", f.successes, f.value, f.ci95});
  }
  return s;
}

ordered_json to_json(const OutputDocument& doc) {
  ordered_json j;
  j["scenario"] = doc.scenario;
  j["parameters"] = doc.parameters;
  ordered_json exact = ordered_json::object();
  for (const auto& [name, value] : doc.exact) {
    if (const auto* r = std::get_if<Rational>(&value)) {
      exact[name] = threebox::to_string(*r);
    } else {
      exact[name] = std::get<double>(value);
    }
  }
  j["exact"] = std::move(exact);
  if (!doc.monte_carlo) {
    j["monte_carlo"] = nullptr;
    return j;
  }
  const auto& mc = *doc.monte_carlo;
  ordered_json counts = ordered_json::object();
  ordered_json freqs = ordered_json::object();
  ordered_json cis = ordered_json::object();
  for (const auto& e : mc.entries) {
    counts[e.event] = e.count;
    freqs[e.event] = e.frequency;
    cis[e.event] = ordered_json::array({e.ci95.low, e.ci95.high});
  }
  j["monte_carlo"] = {{"runs", mc.runs},
                      {"seed", mc.seed},
                      {"counts", std::move(counts)},
                      {"frequencies", std::move(freqs)},
                      {"ci95", std::move(cis)}};
  return j;
}

OutputDocument from_json(const ordered_json& j) {
  try {
    for (const char* key : {"scenario", "parameters", "exact", "monte_carlo"}) {
      if (!j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
    }
    OutputDocument doc;
    doc.scenario = j.at("scenario").get<std::string>();
    doc.parameters = j.at("parameters");
    for (const auto& [name, value] : j.at("exact").items()) {
      if (value.is_string()) {
        doc.exact.emplace_back(name, parse_rational(value.get<std::string>()));
      } else if (value.is_number()) {
        doc.exact.emplace_back(name, value.get<double>());
      } else {
        throw std::invalid_argument("exact value for '" + name + "' is neither string nor number");
      }
    }
    const auto& mc = j.at("monte_carlo");
    if (!mc.is_null()) {
      MonteCarloSection s;
      s.runs = mc.at("runs").get<std::uint64_t>();
      s.seed = mc.at("seed").get<std::uint64_t>();
      for (const auto& [name, count] : mc.at("counts").items()) {
        MonteCarloEntry e;
        e.event = name;
        e.count = count.get<std::uint64_t>();
        e.frequency = mc.at("frequencies").at(name).get<double>();
        const auto& ci = mc.at("ci95").at(name);
        e.ci95 = {ci.at(0).get<double>(), ci.at(1).get<double>()};
        s.entries.push_back(std::move(e));
      }
      doc.monte_carlo = std::move(s);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed output document: ") + e.what());
  }
}

namespace {

struct Row {
  std::string event;
  std::string exact;
  std::string frequency;
  std::string ci_low;
  std::string ci_high;
};

std::vector<Row> rows_of(const OutputDocument& doc, int precision) {
  std::vector<Row> rows;
  for (const auto& [name, value] : doc.exact) rows.push_back({name, format_exact(value, precision), "", "", ""});
  if (doc.monte_carlo) {
    for (const auto& e : doc.monte_carlo->entries) {
      auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.event == e.event; });
      if (it == rows.end()) {
        rows.push_back({e.event, "", "", "", ""});
        it = rows.end() - 1;
      }
      it->frequency = format_double(e.frequency, precision);
      it->ci_low = format_double(e.ci95.low, precision);
      it->ci_high = format_double(e.ci95.high, precision);
    }
  }
  return rows;
}

}  // namespace

std::string to_csv(const OutputDocument& doc) {
  std::ostringstream os;
  os << "event,exact,frequency,ci_low,ci_high\n";
  for (const auto& r : rows_of(doc, 17)) {
    os << r.event << ',' << r.exact << ',' << r.frequency << ',' << r.ci_low << ',' << r.ci_high << '\n';
  }
  return os.str();
}

std::string to_text(const OutputDocument& doc) {
  std::ostringstream os;
  os << "scenario: " << doc.scenario << '\n';
  for (const auto& [key, value] : doc.parameters.items()) {
    os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  if (doc.monte_carlo) {
    os << "monte carlo: " << doc.monte_carlo->runs << " runs, seed " << doc.monte_carlo->seed << '\n';
  }
  const auto rows = rows_of(doc, 6);
  std::size_t w = 5;
  for (const auto& r : rows) w = std::max(w, r.event.size());
  os << '\n' << std::left << std::setw(static_cast<int>(w) + 2) << "event" << std::setw(14) << "exact";
  if (doc.monte_carlo) os << std::setw(14) << "frequency" << "ci95";
  os << '\n';
  for (const auto& r : rows) {
    os << std::left << std::setw(static_cast<int>(w) + 2) << r.event << std::setw(14) << r.exact;
    if (doc.monte_carlo && !r.frequency.empty()) {
      os << std::setw(14) << r.frequency << '[' << r.ci_low << ", " << r.ci_high << ']';
    }
    os << '\n';
  }
  return os.str();
}

OutputDocument compare_document(const std::vector<harness::DiscriminatorRow>& rows) {
  OutputDocument doc;
  doc.scenario = "compare";
  for (const auto& r : rows) {
    doc.exact.emplace_back(r.system + ".post_without_measurement", to_exact_value(r.post_without_measurement));
    doc.exact.emplace_back(r.system + ".post_with_measurement", to_exact_value(r.post_with_measurement));
    doc.exact.emplace_back(r.system + ".found_given_post", to_exact_value(r.found_given_post));
  }
  return doc;
}

std::string compare_table(const std::vector<harness::DiscriminatorRow>& rows) {
  const auto cell = [](const Probability& p) {
    if (p.exact) return threebox::to_string(*p.exact);
    std::string s = format_double(p.value, 4);
    if (auto f = nearest_fraction(p.value, 1000, 1e-9); f && threebox::to_string(*f) != s) {
      s = threebox::to_string(*f) + " ≈ " + s;
    }
    return s;
  };
  const std::vector<std::string> header{"system", "P(post | no measurement)", "P(post | measurement)",
                                        "P(found | post)"};
  std::vector<std::vector<std::string>> table{header};
  for (const auto& r : rows) {
    table.push_back({r.system, cell(r.post_without_measurement), cell(r.post_with_measurement),
                     cell(r.found_given_post)});
  }
  // Column widths in code points, so "≈" counts once.
  const auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
      return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
  };
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t i = 0; i < table[r].size(); ++i) {
      os << table[r][i];
      if (i + 1 < table[r].size()) os << std::string(widths[i] - width(table[r][i]) + 2, ' ');
    }
    os << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : widths) total += w + 2;
      os << std::string(total - 2, '-') << '\n';
    }
  }
  return os.str();
}

namespace {

struct CommonOptions {
  std::string mode = "exact";
  std::uint64_t runs = 100000;
  std::uint64_t seed = 0;
  CLI::Option* seed_option = nullptr;
  unsigned workers = 1;
  std::string format;
  std::string out_path;
};

void add_output_options(CLI::App* sub, CommonOptions& o, const std::string& default_format) {
  o.format = default_format;
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--out", o.out_path, "Write the output to PATH instead of stdout");
}

void add_run_options(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--mode", o.mode, "exact enumeration, or exact plus Monte Carlo")
      ->check(CLI::IsMember({"exact", "mc"}))
      ->capture_default_str();
  sub->add_option("--runs", o.runs, "Monte Carlo runs")->check(CLI::PositiveNumber)->capture_default_str();
  o.seed_option = sub->add_option("--seed", o.seed, "Monte Carlo seed (generated and reported when omitted)");
  sub->add_option("--threads", o.workers, "Monte Carlo worker threads")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
}

std::uint64_t resolve_seed(const CommonOptions& o) {
  if (o.seed_option && o.seed_option->count() > 0) return o.seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) | rd();
}

std::string render(const OutputDocument& doc, const std::string& format) {
  if (format == "json") return to_json(doc).dump(2) + "\n";
  if (format == "csv") return to_csv(doc);
  return to_text(doc);
}

void emit(const std::string& text, const CommonOptions& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw std::runtime_error("cannot open output file '" + o.out_path + "'");
  file << text;
}

void attach_monte_carlo(OutputDocument& doc, const harness::GameModel& game, CommonOptions& o) {
  doc.parameters["mode"] = o.mode;
  if (o.mode != "mc") return;
  const std::uint64_t seed = resolve_seed(o);
  doc.parameters["runs"] = o.runs;
  doc.parameters["seed"] = seed;
  doc.monte_carlo = to_section(harness::monte_carlo(game, o.runs, seed, o.workers));
}

OutputDocument quantum_document(const std::string& scenario_name, const std::string& measure,
                                CommonOptions& o) {
  using scenarios::ScenarioId;
  const ScenarioId id = scenario_name == "three-box" ? ScenarioId::ThreeBox : ScenarioId::SpinBox;
  std::optional<std::string> projector;
  if (id == ScenarioId::ThreeBox) {
    if (measure == "up" || measure == "down") {
      throw UsageError("--measure " + measure + " is only valid for --scenario spin-box");
    }
    if (measure != "none") projector = measure;
  } else {
    if (measure == "A" || measure == "B" || measure == "C") {
      throw UsageError("--measure " + measure + " is only valid for --scenario three-box");
    }
    if (measure != "none") projector = measure;
  }
  const auto game = harness::make_quantum_game(id, projector);
  OutputDocument doc;
  doc.scenario = scenario_name;
  doc.parameters["measure"] = measure;
  add_exact(doc, harness::enumerate_exact(*game));
  if (id == ScenarioId::ThreeBox) {
    const auto system = scenarios::build(id);
    for (const auto& [name, p] : system.projectors) {
      doc.exact.emplace_back("weak_value_" + name, std::real(twostate::weak_value(system.tsv, p)));
    }
  }
  attach_monte_carlo(doc, *game, o);
  return doc;
}

std::unique_ptr<harness::GameModel> classical_game(const std::string& game, const std::string& search,
                                                   const std::string& variant, bool variant_given) {
  using namespace classical;
  if (variant_given && game != "simplified") {
    throw UsageError("--variant only applies to --game simplified");
  }
  const auto bad_search = [&](const char* allowed) {
    return UsageError("--search " + search + " is not valid for --game " + game + " (expected " + allowed + ")");
  };
  if (game == "kirkpatrick" || game == "simplified") {
    std::optional<Suit> suit;
    if (search == "S") suit = Suit::S;
    else if (search == "D") suit = Suit::D;
    else if (search != "none") throw bad_search("S, D or none");
    if (game == "kirkpatrick") return harness::make_kirkpatrick_game(suit);
    return harness::make_simplified_game(
        suit, variant == "literal" ? SimplifiedVariant::LiteralText : SimplifiedVariant::Faithful);
  }
  if (game == "leifer-spekkens") {
    std::optional<Side> side;
    if (search == "left") side = Side::Left;
    else if (search == "right") side = Side::Right;
    else if (search != "none") throw bad_search("left, right or none");
    return harness::make_leifer_spekkens_game(side);
  }
  std::optional<Box> box;
  if (search == "box1") box = Box::Box1;
  else if (search == "box2") box = Box::Box2;
  else if (search != "none") throw bad_search("box1, box2 or none");
  return harness::make_move_game(box);
}

void run_bob(std::uint64_t seed, std::uint64_t rounds, Streams io) {
  using scenarios::BobStrategy;
  std::ostream& out = io.out;
  bool scripted = !io.interactive;
  out << "Alice has prepared a particle in three boxes and hands you boxes A and B.\n"
      << "You win a round if the box you open is empty. Alice decides afterwards\n"
      << "which rounds count. Seed " << seed << ", " << rounds << " rounds.\n";
  if (scripted) out << "(non-interactive input: Bob alternates A, B, A, ...)\n";

  std::vector<std::uint64_t> kept;
  std::uint64_t wins_kept = 0;
  std::uint64_t wins_all = 0;
  for (std::uint64_t i = 0; i < rounds; ++i) {
    BobStrategy choice = i % 2 == 0 ? BobStrategy::OpenA : BobStrategy::OpenB;
    while (!scripted) {
      out << "round " << i + 1 << ": open box A or B? " << std::flush;
      std::string line;
      if (!std::getline(io.in, line)) {
        scripted = true;
        out << "\n(input closed: Bob alternates from here on)\n";
        break;
      }
      line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
                 line.end());
      if (line == "A" || line == "a") { choice = BobStrategy::OpenA; break; }
      if (line == "B" || line == "b") { choice = BobStrategy::OpenB; break; }
      out << "please answer A or B\n";
    }
    VariateStream stream(seed, i);
    const auto r = scenarios::alice_bob_round(choice, stream);
    const bool found = r.bob_found.value_or(false);
    out << "round " << i + 1 << ": opened " << scenarios::to_string(choice) << " -> "
        << (found ? "the particle is there (you lose)" : "empty (you win)") << '\n';
    if (!found) ++wins_all;
    if (r.post_selected) {
      kept.push_back(i + 1);
      if (!found) ++wins_kept;
    }
  }

  out << "\nsummary\n";
  if (rounds == 0) {
    out << "  no rounds played\n";
    return;
  }
  out << "  rounds played: " << rounds << ", wins before post-selection: " << wins_all << '\n';
  out << "  rounds Alice kept: " << kept.size() << " (expected fraction 1/9)";
  if (!kept.empty()) {
    out << ":";
    for (auto k : kept) out << ' ' << k;
  }
  out << '\n';
  out << "  your wins among kept rounds: " << wins_kept << '\n';
  if (!kept.empty()) {
    const double loss = 100.0 * static_cast<double>(kept.size() - wins_kept) / static_cast<double>(kept.size());
    out << "  loss rate among kept rounds: " << format_double(loss, 4) << "%\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Three-box pre-/post-selection experiments and their classical analogues", "threebox"};
  app.require_subcommand(1);

  CommonOptions q_opts;
  std::string q_scenario = "three-box";
  std::string q_measure = "none";
  auto* quantum = app.add_subcommand("quantum", "Quantum scenario: post-selection rate, ABL probability, weak values");
  quantum->add_option("--scenario", q_scenario)->check(CLI::IsMember({"three-box", "spin-box"}))->capture_default_str();
  quantum->add_option("--measure", q_measure, "Intermediate projector")
      ->check(CLI::IsMember({"A", "B", "C", "up", "down", "none"}))
      ->capture_default_str();
  add_run_options(quantum, q_opts);
  add_output_options(quantum, q_opts, "json");

  CommonOptions c_opts;
  std::string c_game;
  std::string c_search;
  std::string c_variant = "faithful";
  auto* classical = app.add_subcommand("classical", "Classical game: exact enumeration and Monte Carlo");
  classical->add_option("--game", c_game)
      ->required()
      ->check(CLI::IsMember({"kirkpatrick", "simplified", "leifer-spekkens", "move-game"}));
  classical->add_option("--search", c_search, "S|D, left|right, box1|box2, or none")->required();
  auto* variant_opt = classical->add_option("--variant", c_variant, "simplified game negative-branch rule")
                          ->check(CLI::IsMember({"faithful", "literal"}));
  add_run_options(classical, c_opts);
  add_output_options(classical, c_opts, "json");

  CommonOptions cmp_opts;
  auto* compare = app.add_subcommand("compare", "Post-selection with and without the intermediate measurement");
  add_output_options(compare, cmp_opts, "text");

  CommonOptions w_opts;
  std::string w_scenario = "three-box";
  std::string w_measure = "all";
  std::vector<double> couplings{0.01, 0.1, 0.5, 1.0, 2.0};
  double sigma = 1.0;
  auto* weak = app.add_subcommand("weak", "Weak values and the Gaussian meter mean over a coupling sweep");
  weak->add_option("--scenario", w_scenario)->check(CLI::IsMember({"three-box", "spin-box"}))->capture_default_str();
  weak->add_option("--measure", w_measure, "Projector name, or all")->capture_default_str();
  weak->add_option("--coupling", couplings, "Coupling values g")->check(CLI::PositiveNumber);
  weak->add_option("--sigma", sigma, "Meter width")->check(CLI::PositiveNumber)->capture_default_str();
  add_output_options(weak, w_opts, "json");

  CommonOptions b_opts;
  std::uint64_t b_rounds = 18;
  auto* bob = app.add_subcommand("bob", "Play Bob against Alice's post-selection");
  bob->add_option("--rounds", b_rounds)->capture_default_str();
  b_opts.seed_option = bob->add_option("--seed", b_opts.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (quantum->parsed()) {
      emit(render(quantum_document(q_scenario, q_measure, q_opts), q_opts.format), q_opts, io.out);
    } else if (classical->parsed()) {
      const auto game = classical_game(c_game, c_search, c_variant, variant_opt->count() > 0);
      OutputDocument doc;
      doc.scenario = c_game;
      doc.parameters["search"] = c_search;
      if (c_game == "simplified") doc.parameters["variant"] = c_variant;
      add_exact(doc, harness::enumerate_exact(*game));
      attach_monte_carlo(doc, *game, c_opts);
      emit(render(doc, c_opts.format), c_opts, io.out);
    } else if (compare->parsed()) {
      const auto rows = harness::discriminator_table();
      emit(cmp_opts.format == "text" ? compare_table(rows) : render(compare_document(rows), cmp_opts.format),
           cmp_opts, io.out);
    } else if (weak->parsed()) {
      const auto id = w_scenario == "three-box" ? scenarios::ScenarioId::ThreeBox : scenarios::ScenarioId::SpinBox;
      const auto system = scenarios::build(id);
      std::vector<std::string> names;
      if (w_measure == "all") {
        for (const auto& [name, _] : system.projectors) names.push_back(name);
      } else if (system.projectors.count(w_measure)) {
        names.push_back(w_measure);
      } else {
        throw UsageError("--measure " + w_measure + " is not a projector of " + w_scenario);
      }
      OutputDocument doc;
      doc.scenario = w_scenario;
      doc.parameters["measure"] = w_measure;
      doc.parameters["sigma"] = sigma;
      doc.parameters["couplings"] = couplings;
      for (const auto& name : names) {
        const auto& p = system.projector(name);
        doc.exact.emplace_back("weak_value_" + name, std::real(twostate::weak_value(system.tsv, p)));
        for (double g : couplings) {
          const double mean = twostate::meter_mean(system.tsv, p, g, sigma);
          const std::string tag = name + "[g=" + format_double(g, 6) + "]";
          doc.exact.emplace_back("meter_mean_" + tag, mean);
          doc.exact.emplace_back("meter_mean_over_g_" + tag, mean / g);
        }
      }
      emit(render(doc, w_opts.format), w_opts, io.out);
    } else if (bob->parsed()) {
      run_bob(resolve_seed(b_opts), b_rounds, io);
    }
  } catch (const UsageError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace threebox::cli
