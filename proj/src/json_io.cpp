#include "epsnc/json_io.hpp"

#include <fstream>

#include "epsnc/errors.hpp"

namespace epsnc::json_io {

namespace {

// Runs a decoder and reports nlohmann type errors as InvalidArgument.
template <typename F>
auto decode(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::vector<int> int_list(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidArgument(std::string("missing key '") + key + "'");
  return j.at(key).get<std::vector<int>>();
}

}  // namespace

json to_json(const SetPartition& p) { return json{{"n", p.size()}, {"blocks", p.blocks()}}; }

SetPartition partition_from_json(const json& j) {
  return decode("partition", [&] {
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks")) {
      throw InvalidArgument("partition JSON needs 'n' and 'blocks'");
    }
    return SetPartition::from_blocks(j.at("n").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>());
  });
}

json to_json(const DecoratedPartition& dp) {
  json j = to_json(dp.partition);
  j["decoration"] = std::vector<int>(dp.decoration.labels().begin(), dp.decoration.labels().end());
  return j;
}

DecoratedPartition decorated_from_json(const json& j) {
  return decode("decorated partition", [&] {
    return DecoratedPartition(partition_from_json(j), Decoration(int_list(j, "decoration")));
  });
}

json to_json(const EpsilonMatrix& eps) {
  return json{{"labels", std::vector<int>(eps.labels().begin(), eps.labels().end())}, {"eps", eps.rows()}};
}

EpsilonMatrix eps_from_json(const json& j) {
  return decode("epsilon matrix", [&] {
    if (!j.is_object() || !j.contains("eps")) throw InvalidArgument("ε-matrix JSON needs 'labels' and 'eps'");
    return EpsilonMatrix(int_list(j, "labels"), j.at("eps").get<std::vector<std::vector<int>>>());
  });
}

json word_to_json(std::span<const Letter> w) {
  json out = json::array();
  for (const auto& l : w) {
    out.push_back(l.is_unit() ? json::array({l.label, "unit"}) : json::array({l.label, l.symbol}));
  }
  return out;
}

Word word_from_json(const json& j) {
  return decode("word", [&] {
    if (!j.is_array()) throw InvalidArgument("word JSON must be a list of [label, symbol] pairs");
    Word w;
    for (const auto& item : j) {
      if (!item.is_array() || item.size() != 2) throw InvalidArgument("word letters must be [label, symbol] pairs");
      Letter l;
      l.label = item[0].get<int>();
      const auto& sym = item[1];
      if (sym.is_string()) {
        const auto s = sym.get<std::string>();
        if (s != "unit" && s != "u") throw InvalidArgument("unknown symbol '" + s + "'");
        l.symbol = Letter::kUnit;
      } else {
        l.symbol = sym.get<int>();
        if (l.symbol < Letter::kUnit) throw InvalidArgument("negative generator symbol");
      }
      w.push_back(l);
    }
    return w;
  });
}

MomentTable moments_from_json(const json& j) {
  return decode("moment data", [&] {
    if (!j.is_array()) throw InvalidArgument("moment data must be a list of {word, value} objects");
    MomentTable table;
    for (const auto& entry : j) {
      if (!entry.contains("word") || !entry.contains("value")) {
        throw InvalidArgument("moment entries need 'word' and 'value'");
      }
      table.set(word_from_json(entry.at("word")), parse_rational(entry.at("value").get<std::string>()));
    }
    return table;
  });
}

json moments_to_json(const std::map<Word, Rational>& entries) {
  json out = json::array();
  for (const auto& [w, value] : entries) out.push_back(json{{"word", word_to_json(w)}, {"value", to_string(value)}});
  return out;
}

json to_json(const CumulantTable& table) { return moments_to_json(table.entries()); }

std::shared_ptr<ModelFunctional> model_from_json(const json& j) {
  return decode("model", [&] {
    if (!j.is_object() || !j.contains("eps") || !j.contains("algebras")) {
      throw InvalidArgument("model JSON needs 'eps' and 'algebras'");
    }
    std::vector<AlgebraSpec> specs;
    for (const auto& a : j.at("algebras")) {
      AlgebraSpec s;
      s.label = a.at("label").get<int>();
      if (a.contains("cumulants")) {
        for (const auto& [key, value] : a.at("cumulants").items()) {
          int degree = 0;
          try {
            degree = std::stoi(key);
          } catch (const std::exception&) {
            throw InvalidArgument("cumulant degree '" + key + "' is not an integer");
          }
          s.cumulants[degree] = parse_rational(value.get<std::string>());
        }
      }
      specs.push_back(std::move(s));
    }
    const int cap = j.value("degree_cap", 8);
    return std::make_shared<ModelFunctional>(eps_from_json(j.at("eps")), std::move(specs), cap);
  });
}

json to_json(const ModelFunctional& model) {
  json algebras = json::array();
  for (const auto& spec : model.algebras()) {
    json cumulants = json::object();
    for (const auto& [degree, value] : spec.cumulants) cumulants[std::to_string(degree)] = to_string(value);
    algebras.push_back(json{{"label", spec.label}, {"cumulants", cumulants}});
  }
  return json{{"eps", to_json(model.eps())}, {"algebras", algebras}, {"degree_cap", model.degree_cap()}};
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("cannot parse " + path.string() + ": " + e.what());
  }
}

}  // namespace epsnc::json_io
