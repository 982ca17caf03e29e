#pragma once

#include <string>

#include <json.hpp>

#include "pbec/error_model.hpp"
#include "pbec/gcc.hpp"

namespace pbec::cli {

/// Error-set descriptor: {"ball": t}, {"box": a}, {"subspace": [[..], ..]}
/// or {"explicit": [[..], ..]}.
ErrorSet parse_descriptor(const nlohmann::json& j, const Field& field, std::size_t n);
nlohmann::json descriptor_json(const ErrorSet& s);

/// {"q": .., "n": .., "m": .., "w": .., "E1": descriptor, "E2": descriptor}
PbeChannel parse_channel(const nlohmann::json& j, std::uint64_t budget = kDefaultBudget);
nlohmann::json channel_json(const PbeChannel& ch);

/// GCC structure: inner generator rows and outer codes per level.
nlohmann::json gcc_json(const GccCode& code);
GccSpec parse_gcc(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

} // namespace pbec::cli
