#include "epsnc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "epsnc/cumulants.hpp"
#include "epsnc/eps_lattice.hpp"
#include "epsnc/errors.hpp"
#include "epsnc/json_io.hpp"
#include "epsnc/oracles.hpp"
#include "epsnc/verification.hpp"

namespace epsnc {
namespace {

using json_io::json;

std::vector<int> parse_int_list(std::string_view text, char sep, const char* what) {
  std::vector<int> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = std::min(text.find(sep, start), text.size());
    auto item = text.substr(start, stop - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidArgument(std::string("bad ") + what + " entry '" + std::string(item) + "'");
    }
    out.push_back(value);
    start = stop + 1;
  }
  return out;
}

// "1,3;2,4" -> {{1,3},{2,4}}
std::vector<std::vector<int>> parse_blocks(std::string_view text) {
  std::vector<std::vector<int>> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = std::min(text.find(';', start), text.size());
    out.push_back(parse_int_list(text.substr(start, stop - start), ',', "block"));
    start = stop + 1;
  }
  return out;
}

struct Common {
  std::string eps_file;
  std::string decoration;
  int max_n = 8;
  std::string format = "json";
  std::size_t limit_states = 1'000'000;

  SearchLimits limits() const { return {limit_states, max_n}; }

  EpsilonMatrix load_eps() const {
    if (eps_file.empty()) throw InvalidArgument("--eps is required");
    return json_io::eps_from_json(json_io::read_file(eps_file));
  }

  Decoration load_decoration(const EpsilonMatrix& eps) const {
    Decoration d(parse_int_list(decoration, ',', "decoration"));
    eps.validate(d);
    return d;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_eps) {
  if (with_eps) {
    cmd->add_option("--eps", c.eps_file, "ε-matrix JSON file");
    cmd->add_option("--decoration", c.decoration, "comma-separated labels, e.g. 1,2,1,2");
  }
  cmd->add_option("--max-n", c.max_n, "largest ground set size")->check(CLI::Range(0, 64));
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "dot", "table"}));
  cmd->add_option("--limit-states", c.limit_states, "state budget for one ε-noncrossing decision")
      ->check(CLI::PositiveNumber);
}

std::shared_ptr<const ModelFunctional> load_model(const std::string& name_or_path) {
  for (const auto& m : bundled_models()) {
    if (m.name == name_or_path) return m.model;
  }
  return json_io::model_from_json(json_io::read_file(name_or_path));
}

int cmd_enumerate(const Common& c, bool count, std::ostream& out) {
  const auto eps = c.load_eps();
  const auto d = c.load_decoration(eps);
  const auto parts = enumerate_eps_nc(d, eps, c.limits());
  if (count) {
    out << parts.size() << '\n';
    return kExitOk;
  }
  for (const auto& p : parts) {
    if (c.format == "table") out << p.to_string() << '\n';
    else out << json_io::to_json(p).dump() << '\n';
  }
  return kExitOk;
}

int cmd_check(const Common& c, const std::string& blocks, std::ostream& out) {
  const auto eps = c.load_eps();
  const auto d = c.load_decoration(eps);
  const DecoratedPartition dp(SetPartition::from_blocks(d.size(), parse_blocks(blocks)), d);
  const bool verdict = is_eps_noncrossing(dp, eps, c.limits());
  if (c.format == "table") {
    out << dp.to_string() << (verdict ? " is" : " is not") << " ε-noncrossing\n";
  } else {
    json j = json_io::to_json(dp);
    j["eps_noncrossing"] = verdict;
    out << j.dump() << '\n';
  }
  return verdict ? kExitOk : kExitCheckFailed;
}

int cmd_lattice(const Common& c, std::ostream& out) {
  const auto eps = c.load_eps();
  const auto d = c.load_decoration(eps);
  const EpsLattice lattice(d, eps, c.limits());
  // Every pair is checked before anything is printed.
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    for (std::size_t b = a + 1; b < lattice.size(); ++b) {
      (void)lattice.meet(a, b);
      (void)lattice.join(a, b);
    }
  }
  const auto covers = lattice.cover_relations();
  if (c.format == "dot") {
    out << "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      out << "  n" << k << " [label=\"" << lattice.element(k).to_string() << "\"];\n";
    }
    for (const auto& [a, b] : covers) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
  } else if (c.format == "table") {
    for (const auto& [a, b] : covers) {
      out << lattice.element(a).to_string() << " < " << lattice.element(b).to_string() << '\n';
    }
  } else {
    json nodes = json::array();
    for (const auto& p : lattice.elements()) nodes.push_back(json_io::to_json(p));
    json edges = json::array();
    for (const auto& [a, b] : covers) edges.push_back({a, b});
    out << json{{"decoration", std::vector<int>(d.labels().begin(), d.labels().end())},
                {"size", lattice.size()},
                {"nodes", nodes},
                {"covers", edges}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

int cmd_cumulants(const Common& c, const std::string& model_arg, const std::string& moments_file,
                  const std::string& word_text, std::ostream& out) {
  if (model_arg.empty() == moments_file.empty()) throw InvalidArgument("give exactly one of --model and --moments");
  const Word w = parse_word(word_text);
  if (w.empty()) throw InvalidArgument("--word must be nonempty");
  if (static_cast<int>(w.size()) > c.max_n) {
    throw LimitExceeded("word length " + std::to_string(w.size()) + " exceeds --max-n " + std::to_string(c.max_n));
  }

  std::shared_ptr<const ModelFunctional> model;
  MomentTable moments;
  EpsilonMatrix eps;
  const MomentFunctional* phi = nullptr;
  if (!model_arg.empty()) {
    model = load_model(model_arg);
    eps = c.eps_file.empty() ? model->eps() : c.load_eps();
    phi = model.get();
  } else {
    moments = json_io::moments_from_json(json_io::read_file(moments_file));
    eps = c.load_eps();
    phi = &moments;
  }
  eps.validate(decoration_of(w));

  CumulantEngine engine(*phi, eps, c.limits());
  std::map<Word, Rational> values;
  for (Mask x = 1; x <= full_mask(static_cast<int>(w.size())); ++x) {
    Word sub = subword(w, x);
    if (!values.count(sub)) values.emplace(sub, engine.cumulant(sub));
  }
  if (c.format == "table") {
    for (const auto& [sub, value] : values) out << to_string(sub) << '\t' << to_string(value) << '\n';
  } else {
    out << json{{"word", json_io::word_to_json(w)},
                {"cumulant", to_string(values.at(w))},
                {"subwords", json_io::moments_to_json(values)}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& suite, const std::vector<std::string>& models, int trials,
               std::uint64_t seed, bool all_entries, std::ostream& out) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  SuiteOptions options;
  options.max_n = c.max_n;
  options.trials = trials;
  options.seed = seed;
  if (!models.empty()) {
    options.models.clear();
    for (const auto& m : models) options.models.push_back({m, load_model(m)});
  }
  const Report report = run_suite(suite, options);
  json j = to_json(report, all_entries);
  j["suite"] = suite;
  j["max_n"] = c.max_n;
  out << j.dump(2) << '\n';
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_counts(const Common& c, std::ostream& out) {
  json rows = json::array();
  if (!c.eps_file.empty()) {
    const auto eps = c.load_eps();
    const auto d = c.load_decoration(eps);
    EpsEnumerator enumerator(eps, c.limits());
    for (int n = 0; n <= d.size(); ++n) {
      const auto prefix = d.restrict_standardize(full_mask(n));
      rows.push_back({{"n", n}, {"count", enumerator.partitions(prefix)->size()}});
    }
  } else {
    for (int n = 0; n <= c.max_n; ++n) {
      std::vector<int> labels;
      for (int i = 1; i <= n; ++i) labels.push_back(i);
      const Decoration d(labels);
      auto limits = c.limits();
      const auto all = enumerate_eps_nc(d, EpsilonMatrix::uniform(labels, true, false), limits).size();
      const auto none = enumerate_eps_nc(d, EpsilonMatrix::uniform(labels, false, false), limits).size();
      rows.push_back({{"n", n},
                      {"bell", oracles::bell_number(n).get_str()},
                      {"catalan", oracles::catalan_number(n).get_str()},
                      {"all_commuting", all},
                      {"none_commuting", none}});
    }
  }
  if (c.format == "table") {
    for (const auto& row : rows) {
      std::string line;
      for (const auto& [key, value] : row.items()) {
        line += (line.empty() ? "" : " ") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
      }
      out << line << '\n';
    }
  } else {
    for (const auto& row : rows) out << row.dump() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ε-noncrossing partitions and ε-cumulants with exact rational arithmetic", "epsnc"};
  app.require_subcommand(1);

  Common c;
  bool count = false;
  std::string blocks;
  std::string model;
  std::string moments;
  std::string word;
  std::string suite;
  std::vector<std::string> models;
  int trials = 100;
  std::uint64_t seed = SuiteOptions{}.seed;
  bool all_entries = false;
  bool dot = false;
  bool as_json = false;

  auto* enumerate = app.add_subcommand("enumerate", "list the ε-noncrossing partitions of a decoration");
  add_common(enumerate, c, true);
  enumerate->add_flag("--count", count, "print only the number of partitions");

  auto* check = app.add_subcommand("check", "decide whether one decorated partition is ε-noncrossing");
  add_common(check, c, true);
  check->add_option("--blocks", blocks, "blocks as 1,3;2,4")->required();

  auto* lattice = app.add_subcommand("lattice", "export the Hasse diagram of the ε-noncrossing lattice");
  add_common(lattice, c, true);
  lattice->add_flag("--dot", dot, "same as --format dot");
  lattice->add_flag("--json", as_json, "same as --format json");

  auto* cumulants = app.add_subcommand("cumulants", "ε-cumulants of a word and all of its subwords");
  add_common(cumulants, c, true);
  cumulants->add_option("--model", model, "bundled model name or model JSON file");
  cumulants->add_option("--moments", moments, "moment data JSON file (needs --eps)");
  cumulants->add_option("--word", word, "letters as label or label:symbol, e.g. 1,2,1:u")->required();

  auto* verify = app.add_subcommand("verify", "run a property suite and print a JSON report");
  add_common(verify, c, false);
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--model", models, "restrict to these models (bundled names or files)");
  verify->add_option("--trials", trials, "random trials for the roundtrip suite")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "seed for random data");
  verify->add_flag("--all-entries", all_entries, "list passing checks too");

  auto* counts = app.add_subcommand("counts", "sizes of ε-noncrossing sets against Bell and Catalan numbers");
  add_common(counts, c, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  if (verify->parsed() && !verify->count("--max-n")) c.max_n = 5;
  if (lattice->parsed()) {
    if (dot && as_json) {
      err << "error: --dot and --json are exclusive\n";
      return kExitInputError;
    }
    if (dot) c.format = "dot";
    else if (as_json) c.format = "json";
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(c, count, out);
    if (check->parsed()) return cmd_check(c, blocks, out);
    if (lattice->parsed()) return cmd_lattice(c, out);
    if (cumulants->parsed()) return cmd_cumulants(c, model, moments, word, out);
    if (verify->parsed()) return cmd_verify(c, suite, models, trials, seed, all_entries, out);
    return cmd_counts(c, out);
  } catch (const LatticeViolation& e) {
    err << "lattice violation: " << e.what() << '\n';
    return kExitLatticeViolation;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kExitLimitExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace epsnc
