#ifndef CONIFOLD_REPORT_HPP
#define CONIFOLD_REPORT_HPP

#include "conifold/laurent.hpp"
#include "conifold/moments.hpp"
#include "conifold/polytope.hpp"
#include "conifold/solver.hpp"
#include "conifold/toric.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace conifold {

// Key order is insertion order so documents are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// {"d": int, "terms": [{"e": [int, ...], "c": "p/q"}, ...]}
Json polynomial_to_json(const LaurentPolynomial& w);
LaurentPolynomial polynomial_from_json(const Json& doc);

/// {"d": int, "rays": [[int, ...], ...]}
Json fan_to_json(const FanInput& fan);
FanInput fan_from_json(const Json& doc);
FanInput load_fan_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

Json to_json(const SupportValidation& validation);
Json to_json(const std::vector<IterationRecord>& trace);
Json to_json(const ConifoldReport& report);
Json to_json(const MomentSequence& seq);
Json to_json(const DkReport& report);
Json to_json(const ToricReport& report);

}  // namespace conifold

#endif
