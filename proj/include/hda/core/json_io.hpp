#pragma once

#include <filesystem>
#include <string>

#include "hda/core/hda.hpp"
#include "json.hpp"

namespace hda {

/// Reads the model schema
///   {"cubes":[{"id":..,"dim":..,"d0":[..],"d1":[..]}], "initial":..,
///    "events":[..], "labels":{id:[1-based event positions]}}
/// Unknown fields and wrong types raise ParseError; structural checks are
/// left to validate_hda.
ModelDecl parse_model(const nlohmann::json& doc);
ModelDecl parse_model_text(const std::string& text);
ModelDecl read_model_file(const std::filesystem::path& path);

/// Parse + build; ParseError or ModelError on failure.
Hda load_hda(const std::filesystem::path& path);

nlohmann::json model_to_json(const ModelDecl& model);
inline nlohmann::json model_to_json(const Hda& hda) { return model_to_json(to_decl(hda)); }

nlohmann::json violation_to_json(const Violation& v);
nlohmann::json report_to_json(const ValidationReport& report);

}  // namespace hda
