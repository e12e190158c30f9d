#include "qcc/spec_file.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace qcc {
namespace {

using nlohmann::json;

std::string format_error(const std::string& source, int line,
                         const std::string& field, const std::string& msg) {
  std::string out = source;
  if (line > 0) out += ":" + std::to_string(line);
  out += ": ";
  if (!field.empty()) out += "field '" + field + "': ";
  return out + msg;
}

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

// Line of the first occurrence of "key" as an object key, 0 if not found.
int line_of_key(std::string_view text, const std::string& key) {
  const std::string quoted = "\"" + key + "\"";
  std::size_t pos = 0;
  while ((pos = text.find(quoted, pos)) != std::string_view::npos) {
    std::size_t after = pos + quoted.size();
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) {
      ++after;
    }
    if (after < text.size() && text[after] == ':') return line_of_offset(text, pos);
    pos = after;
  }
  return 0;
}

class Reader {
 public:
  Reader(std::string_view text, std::string source)
      : text_(text), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& field,
                         const std::string& msg) const {
    throw SpecFileError(source_, key.empty() ? 0 : line_of_key(text_, key),
                        field, msg);
  }

  double number(const json& v, const std::string& key,
                const std::string& field) const {
    if (!v.is_number()) fail(key, field, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(key, field, "value is not finite");
    return x;
  }

  std::vector<double> array(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, key, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(number(v[i], key, key + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  const std::string& source() const { return source_; }
  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::string source_;
};

}  // namespace

SpecFileError::SpecFileError(std::string source, int line, std::string field,
                             const std::string& message)
    : std::runtime_error(format_error(source, line, field, message)),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

SpecFile parse_spec_file(std::string_view text, std::string_view source) {
  Reader r(text, std::string(source));
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SpecFileError(r.source(), line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0),
                        "", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) r.fail("", "", "top level must be a JSON object");

  static const std::set<std::string> known = {
      "version", "name", "levels", "spacings", "ground_energy", "dipoles",
      "tolerances"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) r.fail(key, key, "unknown field");
  }

  SpecFile f;
  if (!doc.contains("version")) r.fail("", "version", "missing required field");
  const json& version = doc["version"];
  if (!version.is_number_integer()) r.fail("version", "version", "expected an integer");
  f.version = version.get<int>();
  if (f.version != kSpecFileVersion) {
    r.fail("version", "version",
           "unsupported version " + std::to_string(f.version) + " (expected " +
               std::to_string(kSpecFileVersion) + ")");
  }

  if (doc.contains("name")) {
    if (!doc["name"].is_string()) r.fail("name", "name", "expected a string");
    f.name = doc["name"].get<std::string>();
  }

  const bool has_levels = doc.contains("levels");
  const bool has_spacings = doc.contains("spacings");
  if (has_levels == has_spacings) {
    r.fail(has_levels ? "spacings" : "", has_levels ? "spacings" : "levels",
           "exactly one of 'levels' or 'spacings' must be given");
  }
  if (has_levels) {
    if (doc.contains("ground_energy")) {
      r.fail("ground_energy", "ground_energy",
             "only allowed together with 'spacings'");
    }
    f.levels = r.array(doc["levels"], "levels");
  } else {
    f.spacings = r.array(doc["spacings"], "spacings");
    for (std::size_t i = 0; i < f.spacings->size(); ++i) {
      if ((*f.spacings)[i] < 0) {
        r.fail("spacings", "spacings[" + std::to_string(i) + "]",
               "spacings must be non-negative");
      }
    }
    if (!doc.contains("ground_energy")) {
      r.fail("spacings", "ground_energy", "required together with 'spacings'");
    }
    f.ground_energy = r.number(doc["ground_energy"], "ground_energy", "ground_energy");
  }

  if (!doc.contains("dipoles")) r.fail("", "dipoles", "missing required field");
  f.dipoles = r.array(doc["dipoles"], "dipoles");
  const std::size_t n =
      has_levels ? f.levels->size() : f.spacings->size() + 1;
  if (n < 2) {
    r.fail(has_levels ? "levels" : "spacings", has_levels ? "levels" : "spacings",
           "a system needs at least two levels");
  }
  if (f.dipoles.size() != n - 1) {
    r.fail("dipoles", "dipoles",
           "expected " + std::to_string(n - 1) + " dipoles for " +
               std::to_string(n) + " levels, got " +
               std::to_string(f.dipoles.size()));
  }

  if (doc.contains("tolerances")) {
    const json& tol = doc["tolerances"];
    if (!tol.is_object()) r.fail("tolerances", "tolerances", "expected an object");
    for (const auto& [key, value] : tol.items()) {
      const std::string field = "tolerances." + key;
      double x = 0;
      if (key == "eps_param" || key == "eps_rank") {
        x = r.number(value, key, field);
        if (!(x > 0)) r.fail(key, field, "must be positive");
      } else {
        r.fail(key, field, "unknown field");
      }
      (key == "eps_param" ? f.eps_param : f.eps_rank) = x;
    }
  }

  if (has_levels) {
    for (std::size_t i = 1; i < f.levels->size(); ++i) {
      if ((*f.levels)[i] < (*f.levels)[i - 1]) {
        r.fail("levels", "levels[" + std::to_string(i) + "]",
               "levels must be non-decreasing");
      }
    }
  }
  return f;
}

SpecFile load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecFileError(path.string(), 0, "", "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_file(buf.str(), path.string());
}

SystemSpec SpecFile::to_spec() const {
  std::vector<double> e;
  if (levels) {
    e = *levels;
  } else if (spacings && ground_energy) {
    e.push_back(*ground_energy);
    for (double m : *spacings) e.push_back(e.back() + m);
  } else {
    throw SpecFileError(name, 0, "levels", "neither levels nor spacings set");
  }
  try {
    return SystemSpec(std::move(e), dipoles);
  } catch (const std::invalid_argument& ex) {
    throw SpecFileError(name, 0, "", ex.what());
  }
}

SpecFile to_spec_file(const SystemSpec& spec, std::string name) {
  SpecFile f;
  f.name = std::move(name);
  f.levels = std::vector<double>(spec.levels().begin(), spec.levels().end());
  f.dipoles.assign(spec.dipoles().begin(), spec.dipoles().end());
  return f;
}

nlohmann::ordered_json to_json(const SpecFile& f) {
  nlohmann::ordered_json j;
  j["version"] = f.version;
  j["name"] = f.name;
  if (f.levels) {
    j["levels"] = *f.levels;
  } else {
    j["spacings"] = f.spacings.value_or(std::vector<double>{});
    j["ground_energy"] = f.ground_energy.value_or(0.0);
  }
  j["dipoles"] = f.dipoles;
  if (f.eps_param || f.eps_rank) {
    nlohmann::ordered_json tol = nlohmann::ordered_json::object();
    if (f.eps_param) tol["eps_param"] = *f.eps_param;
    if (f.eps_rank) tol["eps_rank"] = *f.eps_rank;
    j["tolerances"] = tol;
  }
  return j;
}

std::string dump_spec_file(const SpecFile& f) { return to_json(f).dump(2) + "\n"; }

}  // namespace qcc
