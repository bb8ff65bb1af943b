#include "hda/core/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hda/core/errors.hpp"

namespace hda {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ParseError("unknown field '" + key + "' in " + where);
  }
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> as_string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(as_string(e, where + " entry"));
  return out;
}

}  // namespace

ModelDecl parse_model(const json& doc) {
  if (!doc.is_object()) throw ParseError("model must be a JSON object");
  reject_unknown(doc, {"cubes", "initial", "events", "labels"}, "model");
  if (!doc.contains("cubes")) throw ParseError("model has no 'cubes'");
  if (!doc.contains("initial")) throw ParseError("model has no 'initial'");

  ModelDecl model;
  const auto& cubes = doc.at("cubes");
  if (!cubes.is_array()) throw ParseError("'cubes' must be an array");
  for (const auto& c : cubes) {
    if (!c.is_object()) throw ParseError("cube entries must be objects");
    reject_unknown(c, {"id", "dim", "d0", "d1"}, "cube");
    if (!c.contains("id") || !c.contains("dim")) throw ParseError("cube entries need 'id' and 'dim'");
    CubeDecl d;
    d.id = as_string(c.at("id"), "cube id");
    if (!c.at("dim").is_number_integer()) throw ParseError("dim of '" + d.id + "' must be an integer");
    d.dim = c.at("dim").get<int>();
    if (c.contains("d0")) d.lower = as_string_list(c.at("d0"), "d0 of '" + d.id + "'");
    if (c.contains("d1")) d.upper = as_string_list(c.at("d1"), "d1 of '" + d.id + "'");
    model.cubes.push_back(std::move(d));
  }
  model.initial = as_string(doc.at("initial"), "'initial'");

  if (doc.contains("events") || doc.contains("labels")) {
    LabelingDecl labeling;
    if (doc.contains("events")) labeling.events = as_string_list(doc.at("events"), "'events'");
    if (doc.contains("labels")) {
      const auto& labels = doc.at("labels");
      if (!labels.is_object()) throw ParseError("'labels' must be an object");
      for (const auto& [id, tuple] : labels.items()) {
        if (!tuple.is_array()) throw ParseError("label of '" + id + "' must be an array");
        std::vector<int> t;
        for (const auto& e : tuple) {
          if (!e.is_number_integer()) throw ParseError("label of '" + id + "' must hold integers");
          t.push_back(e.get<int>());
        }
        labeling.labels.emplace(id, std::move(t));
      }
    }
    model.labeling = std::move(labeling);
  }
  return model;
}

ModelDecl parse_model_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_model(doc);
}

ModelDecl read_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model_text(buffer.str());
}

Hda load_hda(const std::filesystem::path& path) { return build_hda(read_model_file(path)); }

json model_to_json(const ModelDecl& model) {
  json cubes = json::array();
  for (const auto& c : model.cubes) {
    cubes.push_back({{"id", c.id}, {"dim", c.dim}, {"d0", c.lower}, {"d1", c.upper}});
  }
  json doc = {{"cubes", cubes}, {"initial", model.initial}};
  if (model.labeling) {
    doc["events"] = model.labeling->events;
    json labels = json::object();
    for (const auto& [id, t] : model.labeling->labels) labels[id] = t;
    doc["labels"] = labels;
  }
  return doc;
}

json violation_to_json(const Violation& v) {
  json out = {{"kind", std::string(to_string(v.kind))}, {"cube", v.cube}, {"message", v.message}};
  if (v.kind == ViolationKind::identity) {
    out["k"] = v.k;
    out["l"] = v.l;
    out["nu"] = v.nu;
    out["mu"] = v.mu;
    out["lhs"] = v.lhs;
    out["rhs"] = v.rhs;
  } else if (v.k) {
    out["k"] = v.k;
    out["nu"] = v.nu;
  }
  return out;
}

json report_to_json(const ValidationReport& report) {
  json list = json::array();
  for (const auto& v : report.violations) list.push_back(violation_to_json(v));
  return list;
}

}  // namespace hda
