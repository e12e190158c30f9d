#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcc/system_model.hpp"

namespace qcc {

inline constexpr int kSpecFileVersion = 1;

/// Versioned JSON description of a system. Exactly one of `levels` or
/// `spacings` (+ `ground_energy`) is present.
struct SpecFile {
  int version = kSpecFileVersion;
  std::string name;
  std::optional<std::vector<double>> levels;
  std::optional<std::vector<double>> spacings;
  std::optional<double> ground_energy;
  std::vector<double> dipoles;
  std::optional<double> eps_param;
  std::optional<double> eps_rank;

  /// Throws SpecFileError if the arrays violate SystemSpec's invariants.
  SystemSpec to_spec() const;
};

/// Parse or validation failure. `line` is 1-based and 0 when unknown;
/// `field` is a JSON pointer-like path ("dipoles[2]") or empty.
class SpecFileError : public std::runtime_error {
 public:
  SpecFileError(std::string source, int line, std::string field,
                const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string source_;
  int line_;
  std::string field_;
};

SpecFile parse_spec_file(std::string_view text,
                         std::string_view source = "<input>");
/// Throws SpecFileError when the file cannot be read or parsed.
SpecFile load_spec_file(const std::filesystem::path& path);

/// Levels-form spec file for `spec`.
SpecFile to_spec_file(const SystemSpec& spec, std::string name);

/// The document in its original form (levels or spacings).
nlohmann::ordered_json to_json(const SpecFile& file);
std::string dump_spec_file(const SpecFile& file);

}  // namespace qcc
