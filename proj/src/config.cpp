#include "tkklab/config.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "toml.hpp"

#include "tkklab/field.hpp"

namespace tkk {

namespace {

using nlohmann::json;

json toml_to_json(const toml::node& n) {
  if (auto t = n.as_table()) {
    json j = json::object();
    for (auto&& [k, v] : *t) j[std::string(k.str())] = toml_to_json(v);
    return j;
  }
  if (auto a = n.as_array()) {
    json j = json::array();
    for (auto&& v : *a) j.push_back(toml_to_json(v));
    return j;
  }
  if (auto v = n.as_integer()) return v->get();
  if (auto v = n.as_floating_point()) return v->get();
  if (auto v = n.as_boolean()) return v->get();
  if (auto v = n.as_string()) return v->get();
  auto src = n.source();
  throw ConfigError("unsupported value type at line " + std::to_string(src.begin.line) + ", column " + std::to_string(src.begin.column));
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void only_keys(const json& j, const std::string& path, const std::set<std::string>& allowed, const std::string& context = "") {
  if (!j.is_object()) throw ConfigError(path + ": expected a table");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError("unknown key '" + (path.empty() ? "" : path + ".") + it.key() + "'" + context);
}

const json* find(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const json& require(const json& j, const std::string& path, const std::string& key) {
  auto p = find(j, key);
  if (!p) throw ConfigError("missing key '" + path + "." + key + "'");
  return *p;
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path + ": expected a string");
  return v.get<std::string>();
}

std::uint64_t get_uint(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ConfigError(path + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

bool get_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) throw ConfigError(path + ": expected true or false");
  return v.get<bool>();
}

const std::regex rational_re(R"(\s*[-+]?\d+(\s*/\s*[-+]?\d+)?\s*)");

std::string get_scalar(const json& v, const std::string& path) {
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_string() && std::regex_match(v.get<std::string>(), rational_re)) return v.get<std::string>();
  throw ConfigError(path + ": expected an integer or a rational string like \"-1/2\"");
}

std::vector<std::string> get_scalars(const json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError(path + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_scalar(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::uint32_t> get_poly(const json& v, const std::string& path, std::uint32_t p) {
  if (!v.is_array()) throw ConfigError(path + ": expected an array of coefficients, low degree first");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) throw ConfigError(path + "[" + std::to_string(i) + "]: expected an integer");
    long long c = v[i].get<long long>() % (long long)p;
    out.push_back(std::uint32_t(c < 0 ? c + p : c));
  }
  return out;
}

// Denominators must be invertible in the field.
void check_scalar(const FieldSpec& f, const std::string& s, const std::string& path) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return;
  long long den = std::stoll(s.substr(slash + 1));
  if (den == 0 || (f.type != "Q" && den % (long long)f.p == 0))
    throw ConfigError(path + ": denominator of " + s + " is zero in the field");
}

bool scalar_is_zero(const FieldSpec& f, const std::string& s) {
  auto slash = s.find('/');
  long long num = std::stoll(s.substr(0, slash));
  return f.type == "Q" ? num == 0 : num % (long long)f.p == 0;
}

FieldSpec parse_field(const json& j) {
  FieldSpec f;
  only_keys(j, "field", {"type", "p", "modulus"});
  f.type = get_string(require(j, "field", "type"), "field.type");
  if (f.type == "Q") {
    only_keys(j, "field", {"type"}, " (not valid for type Q)");
    return f;
  }
  if (f.type != "Fp" && f.type != "Fq") throw ConfigError("field.type: expected \"Fp\", \"Fq\" or \"Q\", got \"" + f.type + "\"");
  auto p = get_uint(require(j, "field", "p"), "field.p");
  if (p > 0xffffffffull) throw ConfigError("field.p: too large");
  f.p = std::uint32_t(p);
  if (f.type == "Fp") {
    only_keys(j, "field", {"type", "p"}, " (not valid for type Fp)");
  } else {
    f.modulus = get_poly(require(j, "field", "modulus"), "field.modulus", f.p);
    if (f.modulus.size() < 3) throw ConfigError("field.modulus: Fq needs a modulus of degree >= 2");
  }
  try {
    FiniteField probe(f.p, f.modulus);
  } catch (const FieldError& e) {
    throw ConfigError(std::string("field: ") + e.what());
  }
  return f;
}

AlgebraSpec parse_algebra(const json& j, const FieldSpec& f) {
  AlgebraSpec a;
  if (!j.is_object()) throw ConfigError("algebra: expected a table");
  a.family = get_string(require(j, "algebra", "family"), "algebra.family");
  const std::string ctx = " (not valid for family " + a.family + ")";
  auto scalars = [&](const std::string& key) {
    auto v = get_scalars(j.at(key), "algebra." + key);
    for (std::size_t i = 0; i < v.size(); ++i) check_scalar(f, v[i], "algebra." + key + "[" + std::to_string(i) + "]");
    return v;
  };
  if (a.family == "exchange") {
    only_keys(j, "algebra", {"family", "base", "params"}, ctx);
    if (auto b = find(j, "base")) a.base = get_string(*b, "algebra.base");
    if (a.base != "field" && a.base != "quaternion" && a.base != "octonion")
      throw ConfigError("algebra.base: expected \"field\", \"quaternion\" or \"octonion\"");
    if (find(j, "params")) a.params = scalars("params");
    std::size_t want = a.base == "field" ? 0 : (a.base == "quaternion" ? 2 : 3);
    if (a.params.size() != want) throw ConfigError("algebra.params: base " + a.base + " needs " + std::to_string(want) + " parameters");
  } else if (a.family == "matrix") {
    only_keys(j, "algebra", {"family", "cubic", "cubic_modulus", "eta"}, ctx);
    if (auto c = find(j, "cubic")) a.cubic = get_string(*c, "algebra.cubic");
    if (auto e = find(j, "eta")) {
      a.eta = get_scalar(*e, "algebra.eta");
      check_scalar(f, a.eta, "algebra.eta");
    }
    if (scalar_is_zero(f, a.eta)) throw ConfigError("algebra.eta: must be nonzero");
    if (a.cubic == "field") {
      if (f.type != "Fp") throw ConfigError("algebra.cubic: \"field\" needs a prime field");
      a.cubic_modulus = get_poly(require(j, "algebra", "cubic_modulus"), "algebra.cubic_modulus", f.p);
      if (a.cubic_modulus.size() != 4 || a.cubic_modulus.back() != 1)
        throw ConfigError("algebra.cubic_modulus: expected a monic cubic");
      if (!is_irreducible_mod_p(a.cubic_modulus, f.p)) throw ConfigError("algebra.cubic_modulus: reducible over F_" + std::to_string(f.p));
    } else if (a.cubic == "rank1") {
      if (find(j, "cubic_modulus")) throw ConfigError("unknown key 'algebra.cubic_modulus' (only valid with cubic = \"field\")");
    } else {
      throw ConfigError("algebra.cubic: expected \"rank1\" or \"field\"");
    }
  } else if (a.family == "jordan") {
    only_keys(j, "algebra", {"family", "kind", "modulus", "gram", "basepoint"}, ctx);
    if (auto k = find(j, "kind")) a.kind = get_string(*k, "algebra.kind");
    if (a.kind == "extension") {
      only_keys(j, "algebra", {"family", "kind", "modulus"}, " (not valid for kind extension)");
      require(j, "algebra", "modulus");
      a.modulus = scalars("modulus");
      if (a.modulus.size() < 2) throw ConfigError("algebra.modulus: degree must be at least 1");
    } else if (a.kind == "quadratic") {
      only_keys(j, "algebra", {"family", "kind", "gram", "basepoint"}, " (not valid for kind quadratic)");
      const auto& g = require(j, "algebra", "gram");
      if (!g.is_array() || g.empty()) throw ConfigError("algebra.gram: expected a nonempty array of rows");
      for (std::size_t r = 0; r < g.size(); ++r) {
        auto path = "algebra.gram[" + std::to_string(r) + "]";
        auto row = get_scalars(g[r], path);
        if (row.size() != g.size()) throw ConfigError(path + ": Gram matrix must be square");
        for (const auto& s : row) check_scalar(f, s, path);
        a.gram.push_back(row);
      }
      require(j, "algebra", "basepoint");
      a.basepoint = scalars("basepoint");
      if (a.basepoint.size() != a.gram.size()) throw ConfigError("algebra.basepoint: length must match the Gram matrix");
    } else {
      throw ConfigError("algebra.kind: expected \"extension\" or \"quadratic\"");
    }
  } else if (a.family == "hurwitz") {
    only_keys(j, "algebra", {"family", "params", "division"}, ctx);
    require(j, "algebra", "params");
    a.params = scalars("params");
    if (a.params.size() != 2 && a.params.size() != 3) throw ConfigError("algebra.params: expected 2 (quaternion) or 3 (octonion) parameters");
    if (auto d = find(j, "division")) a.division = get_bool(*d, "algebra.division");
  } else {
    throw ConfigError("algebra.family: unknown family \"" + a.family + "\" (expected exchange, matrix, jordan or hurwitz)");
  }
  for (std::size_t i = 0; i < a.params.size(); ++i)
    if (scalar_is_zero(f, a.params[i])) throw ConfigError("algebra.params[" + std::to_string(i) + "]: must be nonzero");
  return a;
}

RunOptions parse_run(const json& j) {
  RunOptions r;
  only_keys(j, "run", {"seed", "samples", "budget", "threads", "large", "out", "word_length", "cycles"});
  if (auto v = find(j, "seed")) r.seed = get_uint(*v, "run.seed");
  if (auto v = find(j, "samples")) r.samples = get_uint(*v, "run.samples");
  if (auto v = find(j, "budget")) r.budget = get_uint(*v, "run.budget");
  if (auto v = find(j, "threads")) r.threads = unsigned(std::max<std::uint64_t>(1, get_uint(*v, "run.threads")));
  if (auto v = find(j, "large")) r.large = get_bool(*v, "run.large");
  if (auto v = find(j, "out")) r.out = get_string(*v, "run.out");
  if (auto v = find(j, "word_length")) r.word_length = get_uint(*v, "run.word_length");
  if (auto v = find(j, "cycles")) r.cycles = get_uint(*v, "run.cycles");
  return r;
}

}  // namespace

RunConfig parse_config(const std::string& text, ConfigFormat fmt) {
  json j;
  if (fmt == ConfigFormat::toml) {
    try {
      j = toml_to_json(toml::parse(text));
    } catch (const toml::parse_error& e) {
      auto b = e.source().begin;
      throw ConfigError("parse error at line " + std::to_string(b.line) + ", column " + std::to_string(b.column) + ": " +
                        std::string(e.description()));
    }
  } else {
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      auto [l, c] = line_col(text, e.byte ? e.byte - 1 : 0);
      std::string what = e.what();
      auto col = what.find("column");
      auto sep = col == std::string::npos ? std::string::npos : what.find(": ", col);
      throw ConfigError("parse error at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                        (sep == std::string::npos ? what : what.substr(sep + 2)));
    }
  }
  only_keys(j, "", {"field", "algebra", "run"});
  RunConfig cfg;
  if (!find(j, "field")) throw ConfigError("missing table 'field'");
  if (!find(j, "algebra")) throw ConfigError("missing table 'algebra'");
  cfg.field = parse_field(j["field"]);
  cfg.algebra = parse_algebra(j["algebra"], cfg.field);
  if (auto r = find(j, "run")) cfg.run = parse_run(*r);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return parse_config(ss.str(), is_json ? ConfigFormat::json : ConfigFormat::toml);
}

}  // namespace tkk
