#include "beic/io.hpp"

#include <json.hpp>

#include "beic/errors.hpp"

namespace beic {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> string_array(const ordered_json& j, const char* what) {
  if (!j.is_array()) {
    fail(ErrorKind::ParseError, std::string(what) + " must be an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) {
      fail(ErrorKind::ParseError, std::string(what) + " must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

ordered_json cert_to_json(const CertEntry& e) {
  ordered_json j;
  j["rule"] = e.rule;
  j["paper_result"] = e.result;
  if (!e.note.empty()) j["note"] = e.note;
  j["children"] = ordered_json::array();
  for (const auto& child : e.children) j["children"].push_back(cert_to_json(child));
  return j;
}

}  // namespace

Clutter clutter_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    fail(ErrorKind::ParseError,
         "expected an object with 'vertices' and 'edges' arrays");
  }
  auto labels = string_array(j["vertices"], "'vertices'");
  if (!j["edges"].is_array()) {
    fail(ErrorKind::ParseError, "'edges' must be an array of arrays");
  }
  std::vector<std::vector<std::string>> edges;
  edges.reserve(j["edges"].size());
  for (const auto& e : j["edges"]) edges.push_back(string_array(e, "each edge"));
  return Clutter::make(std::move(labels), edges, /*minimize=*/false);
}

std::string clutter_to_json(const Clutter& c) {
  ordered_json j;
  j["vertices"] = c.labels();
  j["edges"] = c.edge_labels();
  return j.dump(2) + "\n";
}

std::string generators_text(const Clutter& c) {
  std::string out;
  for (const Binomial& b : binomial_generators(c)) {
    const std::string& a = c.label(b.i);
    const std::string& z = c.label(b.j);
    out += "x" + a + "*y" + z + " - x" + z + "*y" + a + "\n";
  }
  return out;
}

std::string verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["status"] = to_string(v.status);
  j["unmixed"] = v.unmixed;
  j["dim"] = v.dim;
  if (v.depth) {
    j["depth"] = *v.depth;
  } else {
    j["depth"] = nullptr;
  }
  j["certificate"] = ordered_json::array();
  for (const auto& e : v.certificate) j["certificate"].push_back(cert_to_json(e));
  return j.dump(2) + "\n";
}

}  // namespace beic
