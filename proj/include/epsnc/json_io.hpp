#pragma once

// JSON encodings shared by the CLI and the Python bindings. Rationals are
// always strings ("p/q" or "p"); UNIT letters use the symbol "unit".
//
//   partition   {"n": 4, "blocks": [[1, 3], [2, 4]]}
//   decorated   partition fields plus "decoration": [1, 2, 1, 2]
//   ε-matrix    {"labels": [1, 2], "eps": [[0, 1], [1, 0]]}
//   moments     [{"word": [[1, 0], [2, "unit"]], "value": "1/2"}, ...]
//   model       {"eps": <ε-matrix>, "algebras": [{"label": 1, "cumulants": {"2": "1"}}],
//                "degree_cap": 8}

#include <filesystem>
#include <memory>
#include <span>

#include "json.hpp"

#include "epsnc/cumulants.hpp"
#include "epsnc/decorated.hpp"
#include "epsnc/models.hpp"
#include "epsnc/word.hpp"

namespace epsnc::json_io {

using nlohmann::json;

json to_json(const SetPartition& p);
SetPartition partition_from_json(const json& j);

json to_json(const DecoratedPartition& dp);
DecoratedPartition decorated_from_json(const json& j);

json to_json(const EpsilonMatrix& eps);
EpsilonMatrix eps_from_json(const json& j);

json word_to_json(std::span<const Letter> w);
Word word_from_json(const json& j);

MomentTable moments_from_json(const json& j);
json moments_to_json(const std::map<Word, Rational>& entries);
json to_json(const CumulantTable& table);

std::shared_ptr<ModelFunctional> model_from_json(const json& j);
json to_json(const ModelFunctional& model);

/// Reads and parses a file; throws InvalidArgument on I/O or syntax errors.
json read_file(const std::filesystem::path& path);

}  // namespace epsnc::json_io
