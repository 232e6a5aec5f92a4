#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tkk {

// Raised for malformed or semantically invalid configuration; message names the key path or line/column.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  std::string type = "Fp";  // Fp | Fq | Q
  std::uint32_t p = 0;
  std::vector<std::uint32_t> modulus;  // monic, low degree first
};

// Scalars are kept as text ("3", "-1/2") and interpreted in the chosen field.
struct AlgebraSpec {
  std::string family;  // exchange | matrix | jordan | hurwitz
  std::string base = "field";  // exchange: field | quaternion | octonion
  std::vector<std::string> params;  // Cayley-Dickson parameters
  bool division = false;
  std::string eta = "1";
  std::string cubic = "rank1";  // rank1 | field
  std::vector<std::uint32_t> cubic_modulus;
  std::string kind = "extension";  // jordan: extension | quadratic
  std::vector<std::string> modulus;
  std::vector<std::vector<std::string>> gram;
  std::vector<std::string> basepoint;
};

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t budget = 10000000;
  unsigned threads = 1;
  bool large = false;
  std::string out;
  std::size_t word_length = 4;
  std::size_t cycles = 100;
};

struct RunConfig {
  FieldSpec field;
  AlgebraSpec algebra;
  RunOptions run;
};

enum class ConfigFormat { toml, json };

RunConfig parse_config(const std::string& text, ConfigFormat fmt = ConfigFormat::toml);
// Format chosen by extension: .json is JSON, anything else TOML.
RunConfig load_config(const std::string& path);

}  // namespace tkk
