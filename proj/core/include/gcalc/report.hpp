#ifndef GCALC_REPORT_HPP
#define GCALC_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace gcalc {

// Machine report accumulated by a CLI run. Serialized as versioned JSON
// (schema 1); field order is fixed so reports are byte-stable. Timing is
// emitted only on request, keeping default reports reproducible.
class Report {
 public:
  Report(std::string command, std::string input_digest)
      : command_(std::move(command)), digest_(std::move(input_digest)) {}

  void set_pass(bool pass) { pass_ = pass; }
  bool pass() const { return pass_; }
  void add_residual(const std::string& name, const std::string& value);
  void add_field(const std::string& key, const std::string& value);
  void add_numeric(const std::string& key, long value);
  void set_timing_ms(double ms) { timing_ms_ = ms; }

  std::string to_json(bool with_timing) const;
  std::string to_text() const;

 private:
  std::string command_;
  std::string digest_;
  bool pass_ = false;
  double timing_ms_ = 0.0;
  std::vector<std::pair<std::string, std::string>> residuals_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::pair<std::string, long>> numerics_;
};

// FNV-1a hash of the raw input bytes, as fixed-width hex.
std::string digest_bytes(const std::string& bytes);

}  // namespace gcalc

#endif
