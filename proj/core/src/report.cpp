#include "gcalc/report.hpp"

#include <cstdint>
#include <cstdio>

#include <json.hpp>

namespace gcalc {

void Report::add_residual(const std::string& name, const std::string& value) {
  residuals_.emplace_back(name, value);
}

void Report::add_field(const std::string& key, const std::string& value) {
  fields_.emplace_back(key, value);
}

void Report::add_numeric(const std::string& key, long value) {
  numerics_.emplace_back(key, value);
}

std::string Report::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = command_;
  j["input_digest"] = digest_;
  j["pass"] = pass_;
  for (const auto& [k, v] : numerics_) j[k] = v;
  for (const auto& [k, v] : fields_) j[k] = v;
  if (!residuals_.empty()) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& [name, value] : residuals_) {
      nlohmann::ordered_json e;
      e["name"] = name;
      e["value"] = value;
      r.push_back(std::move(e));
    }
    j["residuals"] = std::move(r);
  }
  if (with_timing) j["timing_ms"] = timing_ms_;
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& [k, v] : numerics_) out += k + ": " + std::to_string(v) + "\n";
  for (const auto& [k, v] : fields_) out += k + ": " + v + "\n";
  for (const auto& [n, v] : residuals_)
    out += "residual " + n + " = " + v + "\n";
  return out;
}

std::string digest_bytes(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
  return std::string(buf);
}

}  // namespace gcalc
