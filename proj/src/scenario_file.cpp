#include "cyclift/scenario_file.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cyclift/errors.hpp"
#include "cyclift/parse.hpp"

namespace cyclift {

namespace {

constexpr std::array<const char*, 8> kKeys{"vars", "p", "f", "fnext", "order", "deform_g", "a", "b_decomp"};
constexpr std::array<const char*, 7> kRequired{"vars", "p", "f", "fnext", "order", "deform_g", "a"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string where(std::size_t line, const std::string& key) {
  return "line " + std::to_string(line) + " (" + key + "): ";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

class Reader {
 public:
  explicit Reader(ScenarioFields f) : f_(std::move(f)) {
    for (const char* key : kRequired) {
      if (!f_.fields.count(key)) {
        throw ScenarioFileError(ScenarioFileError::Kind::MissingKey, 0, key, std::string("missing key: ") + key);
      }
    }
  }

  bool has(const std::string& key) const { return f_.fields.count(key) > 0; }
  std::size_t line(const std::string& key) const { return f_.fields.at(key).line; }
  const std::string& raw(const std::string& key) const { return f_.fields.at(key).value; }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ScenarioFileError(ScenarioFileError::Kind::Parse, line(key), key, where(line(key), key) + what);
  }
  [[noreturn]] void violated(const std::string& key, const std::string& what) const {
    throw ScenarioFileError(ScenarioFileError::Kind::Invariant, line(key), key, where(line(key), key) + what);
  }

  int integer(const std::string& key) const {
    const std::string& v = raw(key);
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) fail(key, "expected an integer, got '" + v + "'");
    return out;
  }

  Polynomial polynomial(const std::string& key, const std::string& text, const Variables& vars) const {
    try {
      return parse_polynomial(text, vars);
    } catch (const ParseError& e) {
      fail(key, e.what());
    }
  }

  std::vector<Polynomial> list(const std::string& key, const Variables& vars) const {
    std::vector<Polynomial> out;
    const std::string& v = raw(key);
    if (v.empty()) return out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, '|')) {
      std::string t = trim(item);
      if (t.empty()) fail(key, "empty list entry");
      out.push_back(polynomial(key, t, vars));
    }
    return out;
  }

 private:
  ScenarioFields f_;
};

}  // namespace

ScenarioFileError::ScenarioFileError(Kind kind, std::size_t line, std::string key, const std::string& what)
    : std::runtime_error(what), kind_(kind), line_(line), key_(std::move(key)) {}

ScenarioFields read_fields(const std::string& text) {
  ScenarioFields out;
  std::stringstream ss(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    std::string_view body(raw);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    const std::string content = trim(body);
    if (content.empty()) continue;
    const auto colon = content.find(':');
    if (colon == std::string::npos) {
      throw ScenarioFileError(ScenarioFileError::Kind::Parse, line, "",
                              "line " + std::to_string(line) + ": expected 'key: value'");
    }
    const std::string key = trim(std::string_view(content).substr(0, colon));
    const std::string value = trim(std::string_view(content).substr(colon + 1));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ScenarioFileError(ScenarioFileError::Kind::Parse, line, key,
                              "line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
    if (!out.fields.emplace(key, ScenarioFields::Field{line, value}).second) {
      throw ScenarioFileError(ScenarioFileError::Kind::Parse, line, key, where(line, key) + "repeated key");
    }
  }
  return out;
}

Scenario parse_scenario(const std::string& text) {
  Reader r(read_fields(text));

  std::vector<std::string> names;
  {
    std::string v = r.raw("vars");
    std::replace(v.begin(), v.end(), ',', ' ');
    std::stringstream ss(v);
    for (std::string n; ss >> n;) names.push_back(n);
  }
  if (names.empty()) r.fail("vars", "no variables declared");
  Variables vars;
  try {
    vars = Variables(names);
  } catch (const std::invalid_argument& e) {
    r.fail("vars", e.what());
  }

  const int p = r.integer("p");
  if (p < 1) r.violated("p", "p must be at least 1");
  std::vector<Polynomial> f = r.list("f", vars);
  if (static_cast<int>(f.size()) != p) {
    r.violated("f", "expected " + std::to_string(p) + " entries, got " + std::to_string(f.size()));
  }
  std::optional<PrimePoint> q1;
  try {
    q1 = PrimePoint::sequence(f);
  } catch (const NotRegularSequence&) {
    r.violated("f", "not a regular sequence");
  } catch (const std::invalid_argument& e) {
    r.violated("f", e.what());
  }

  const Polynomial fnext = r.polynomial("fnext", r.raw("fnext"), vars);
  const int order = r.integer("order");
  if (order < 0) r.violated("order", "order must be nonnegative");

  std::optional<std::pair<Polynomial, Polynomial>> g;
  try {
    g = parse_fraction(r.raw("deform_g"), vars);
  } catch (const ParseError& e) {
    r.fail("deform_g", e.what());
  }
  std::optional<LocalFraction> gf;
  try {
    gf = LocalFraction(g->first, g->second, *q1);
  } catch (const InvalidFraction& e) {
    r.violated("deform_g", e.what());
  }

  std::vector<Polynomial> a = r.list("a", vars);
  if (static_cast<int>(a.size()) < order) {
    r.violated("a", "expected at least " + std::to_string(order) + " entries, got " + std::to_string(a.size()));
  }
  std::optional<std::vector<Polynomial>> b_decomp;
  if (r.has("b_decomp")) {
    b_decomp = r.list("b_decomp", vars);
    if (static_cast<int>(b_decomp->size()) != p) {
      r.violated("b_decomp", "expected " + std::to_string(p) + " entries, got " + std::to_string(b_decomp->size()));
    }
  }

  try {
    return Scenario(vars, f, fnext, order, *gf, a, b_decomp);
  } catch (const std::invalid_argument& e) {
    // Everything left concerns fnext against f.
    r.violated("fnext", e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ScenarioFileError(ScenarioFileError::Kind::Io, 0, "", "cannot read " + path.string());
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string format_scenario(const Scenario& s) {
  auto list = [](const std::vector<Polynomial>& ps) {
    std::vector<std::string> parts;
    for (const auto& q : ps) parts.push_back(q.to_string());
    return join(parts, " | ");
  };
  std::string out;
  out += "vars: " + join(s.vars().names(), " ") + "\n";
  out += "p: " + std::to_string(s.p()) + "\n";
  out += "f: " + list(s.f()) + "\n";
  out += "fnext: " + s.fnext().to_string() + "\n";
  out += "order: " + std::to_string(s.order()) + "\n";
  out += "deform_g: " + s.g().to_string() + "\n";
  out += "a: " + list(s.a()) + "\n";
  if (s.b_decomp()) out += "b_decomp: " + list(*s.b_decomp()) + "\n";
  return out;
}

}  // namespace cyclift
