#include "ponyexpress/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "ponyexpress/error.hpp"

namespace pony {

using ordered_json = nlohmann::ordered_json;

const char* to_string(Variant v) {
  switch (v) {
    case Variant::kPony: return "pony";
    case Variant::kHalfBroadcast: return "half_broadcast";
    case Variant::kBroadcast: return "broadcast";
  }
  return "?";
}

std::string format_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double round_sig12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_sig12(x).c_str(), nullptr);
}

std::string serialize(const ProblemInstance& inst) {
  ordered_json doc;
  doc["variant"] = to_string(inst.variant);
  ordered_json robots = ordered_json::array();
  for (const Robot& r : inst.robots) {
    if (!std::isfinite(r.p) || !std::isfinite(r.v)) {
      fail(Errc::kMalformedDocument, "non-finite robot field");
    }
    ordered_json jr;
    jr["id"] = r.id;
    jr["p"] = round_sig12(r.p);
    jr["v"] = round_sig12(r.v);
    robots.push_back(std::move(jr));
  }
  doc["robots"] = std::move(robots);
  return doc.dump();
}

namespace {

Variant parse_variant(const std::string& name) {
  if (name == "pony") return Variant::kPony;
  if (name == "half_broadcast") return Variant::kHalfBroadcast;
  if (name == "broadcast") return Variant::kBroadcast;
  fail(Errc::kUnknownVariant, "variant \"" + name + "\"");
}

[[noreturn]] void malformed(const std::string& why) {
  fail(Errc::kMalformedDocument, why);
}

}  // namespace

ValidatedInstance parse_instance(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "variant" && key != "robots") malformed("unknown field \"" + key + "\"");
  }
  if (!doc.contains("variant") || !doc["variant"].is_string()) {
    malformed("missing string field \"variant\"");
  }
  if (!doc.contains("robots") || !doc["robots"].is_array()) {
    malformed("missing array field \"robots\"");
  }
  ProblemInstance inst;
  inst.variant = parse_variant(doc["variant"].get<std::string>());
  for (const auto& jr : doc["robots"]) {
    if (!jr.is_object()) malformed("robot entries must be objects");
    for (const auto& [key, value] : jr.items()) {
      (void)value;
      if (key != "id" && key != "p" && key != "v") {
        malformed("unknown robot field \"" + key + "\"");
      }
    }
    if (!jr.contains("id") || !jr["id"].is_number_integer()) {
      malformed("robot needs integer \"id\"");
    }
    if (!jr.contains("p") || !jr["p"].is_number()) malformed("robot needs number \"p\"");
    if (!jr.contains("v") || !jr["v"].is_number()) malformed("robot needs number \"v\"");
    Robot r;
    r.id = jr["id"].get<int>();
    r.p = jr["p"].get<double>();
    r.v = jr["v"].get<double>();
    inst.robots.push_back(r);
  }
  return validate(inst);
}

}  // namespace pony
