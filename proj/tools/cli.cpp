#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <future>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "cyclift/cycles.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/groebner.hpp"
#include "cyclift/parse.hpp"
#include "cyclift/report.hpp"
#include "cyclift/scenario_file.hpp"

namespace cyclift::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr int kMaxOrder = 64;

struct Outcome {
  int code = kPass;
  std::string text;
  json doc;
  std::string error;
};

CycleElement at_order(CycleElement e, int j) {
  return j <= e.order() ? restrict_order(e, j) : pad_order(e, j);
}

CycleElement named_element(const Scenario& s, const std::string& name, int j) {
  if (name == "muY") return at_order(mu_Y(s), j);
  if (name == "muZ") return at_order(mu_Z(s), j);
  if (name == "C") return build_C(s, j);
  return build_C(s, j) - at_order(mu_Z(s), j);
}

Outcome verify_one(const fs::path& path, const std::string& label, std::optional<int> order) {
  Outcome o;
  try {
    Scenario s = load_scenario(path);
    PipelineReport r = verify_scenario(s, order);
    o.text = render_text(label, s, r);
    o.doc = render_json(label, s, r);
    o.code = r.passed() ? kPass : kMathFailure;
  } catch (const ScenarioFileError& e) {
    o.code = kInputError;
    o.error = label + ": " + e.what();
  } catch (const std::invalid_argument& e) {
    o.code = kInputError;
    o.error = label + ": " + e.what();
  }
  return o;
}

std::vector<std::string> identifiers(const std::vector<std::string>& texts) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  std::set<std::string> names;
  for (const auto& t : texts) {
    for (auto it = std::sregex_iterator(t.begin(), t.end(), ident); it != std::sregex_iterator(); ++it) {
      names.insert(it->str());
    }
  }
  return {names.begin(), names.end()};
}

Variables ring_for(const std::string& declared, const std::vector<std::string>& texts) {
  if (!declared.empty()) {
    std::string v = declared;
    std::replace(v.begin(), v.end(), ',', ' ');
    std::stringstream ss(v);
    std::vector<std::string> names;
    for (std::string n; ss >> n;) names.push_back(n);
    return Variables(names);
  }
  auto names = identifiers(texts);
  if (names.empty()) names.push_back("x");
  return Variables(names);
}

std::vector<std::string> split_ideal(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty ideal");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Koszul-cycle deformation checker", "cyclift"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string file;
  std::string all_dir;
  std::string cls = "muY";
  std::optional<int> order;
  int to = 0;
  std::string poly;
  std::string ideal;
  std::string vars;

  auto* verify = app.add_subcommand("verify", "classify a scenario and run the matching pipeline");
  verify->add_option("file", file, "scenario file");
  verify->add_option("--all", all_dir, "verify every *.scn in a directory");
  verify->add_flag("--json", as_json, "emit JSON");

  auto* check = app.add_subcommand("check-cycle", "Milnor-cycle test of a named class");
  check->add_option("file", file, "scenario file")->required();
  check->add_option("--class", cls, "muY | muZ | C | C-minus-muZ")
      ->required()
      ->check(CLI::IsMember({"muY", "muZ", "C", "C-minus-muZ"}));
  check->add_option("--order", order, "eps-order (default: the scenario's)")->check(CLI::Range(1, kMaxOrder));
  check->add_flag("--json", as_json, "emit JSON");

  auto* bnd = app.add_subcommand("boundary", "boundary classes of a named class");
  bnd->add_option("file", file, "scenario file")->required();
  bnd->add_option("--class", cls, "muY | muZ | C | C-minus-muZ")
      ->check(CLI::IsMember({"muY", "muZ", "C", "C-minus-muZ"}));
  bnd->add_option("--order", order, "eps-order (default: the scenario's)")->check(CLI::Range(1, kMaxOrder));

  auto* lift = app.add_subcommand("lift", "successive lifting checks up to a given order");
  lift->add_option("file", file, "scenario file")->required();
  lift->add_option("--to", to, "target order")->required()->check(CLI::Range(1, kMaxOrder));
  lift->add_flag("--json", as_json, "emit JSON");

  auto* member = app.add_subcommand("member", "ideal membership");
  member->add_option("poly", poly, "polynomial")->required();
  member->add_option("--ideal", ideal, "comma-separated generators")->required();
  member->add_option("--vars", vars, "variable order (default: sorted identifiers)");

  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis (grevlex)");
  groebner->add_option("--ideal", ideal, "comma-separated generators")->required();
  groebner->add_option("--vars", vars, "variable order (default: sorted identifiers)");

  if (!args.empty() && !args[0].starts_with("-") && !app.get_subcommand_no_throw(args[0])) {
    err << "error: unknown command: " << args[0] << "\n";
    return kInputError;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (verify->parsed()) {
      if (file.empty() == all_dir.empty()) {
        err << "error: verify needs exactly one of FILE or --all DIR\n";
        return kInputError;
      }
      std::vector<std::pair<fs::path, std::string>> jobs;
      if (!file.empty()) {
        jobs.emplace_back(file, file);
      } else {
        if (!fs::is_directory(all_dir)) {
          err << "error: not a directory: " << all_dir << "\n";
          return kInputError;
        }
        for (const auto& entry : fs::directory_iterator(all_dir)) {
          if (entry.is_regular_file() && entry.path().extension() == ".scn") {
            jobs.emplace_back(entry.path(), entry.path().filename().string());
          }
        }
        std::sort(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        if (jobs.empty()) {
          err << "error: no .scn files in " << all_dir << "\n";
          return kInputError;
        }
      }
      std::vector<std::future<Outcome>> running;
      for (const auto& [path, label] : jobs) {
        running.push_back(std::async(std::launch::async, verify_one, path, label, std::nullopt));
      }
      int code = kPass;
      json docs = json::array();
      bool first = true;
      for (auto& f : running) {
        Outcome o = f.get();
        code = std::max(code, o.code);
        if (!o.error.empty()) {
          err << "error: " << o.error << "\n";
          continue;
        }
        if (as_json) {
          docs.push_back(o.doc);
        } else {
          if (!first) out << "\n";
          out << o.text;
        }
        first = false;
      }
      if (as_json) out << (file.empty() ? docs : (docs.empty() ? json::object() : docs[0])).dump(2) << "\n";
      return code;
    }

    if (check->parsed() || bnd->parsed()) {
      Scenario s = load_scenario(file);
      const int j = order.value_or(s.order());
      CycleElement e = named_element(s, cls, j);
      if (check->parsed()) {
        Check c = milnor_check(cls + " at order " + std::to_string(j) + " is a Milnor cycle", e, s);
        if (as_json) {
          out << render_json(c).dump(2) << "\n";
        } else {
          out << "element: " << e.to_string() << "\n" << render_text(c);
        }
        return c.passed ? kPass : kMathFailure;
      }
      MilnorVerdict v = is_milnor_cycle(e, s);
      out << "element: " << e.to_string() << "\n";
      for (const auto& r : v.rewrites) {
        out << "rewrite term " << r.term + 1 << ": " << r.from << " -> " << r.to
            << (r.certified ? " (certified)" : " (NOT certified)") << "\n";
      }
      for (const auto& t : v.terms) {
        out << "term " << t.term + 1 << " at " << t.locus << ": " << t.boundary.to_string() << "\n";
        out << "  " << (t.verdict.trivial ? "trivial" : "nontrivial") << "\n";
      }
      out << "sum: " << v.total.to_string() << "\n";
      for (const auto& line : describe(v.verdict)) out << "  " << line << "\n";
      out << "verdict: " << (v.is_cycle ? "trivial" : "nontrivial") << "\n";
      return kPass;
    }

    if (lift->parsed()) {
      Outcome o = verify_one(file, file, to);
      if (!o.error.empty()) {
        err << "error: " << o.error << "\n";
        return o.code;
      }
      out << (as_json ? o.doc.dump(2) + "\n" : o.text);
      return o.code;
    }

    if (member->parsed() || groebner->parsed()) {
      auto gens_text = split_ideal(ideal);
      std::vector<std::string> all = gens_text;
      if (member->parsed()) all.push_back(poly);
      Variables ring = ring_for(vars, all);
      std::vector<Polynomial> gens;
      for (const auto& g : gens_text) gens.push_back(parse_polynomial(g, ring));
      IdealBasis basis = groebner_basis(IdealBasis(ring, gens));
      if (groebner->parsed()) {
        for (const auto& g : basis.groebner()) out << g.to_string() << "\n";
        return kPass;
      }
      Polynomial u = parse_polynomial(poly, ring);
      const Polynomial nf = normal_form(u, basis);
      out << "member: " << (nf.is_zero() ? "true" : "false") << "\n";
      out << "normal form: " << nf.to_string() << "\n";
      return nf.is_zero() ? kPass : kMathFailure;
    }
  } catch (const ScenarioFileError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedShape& e) {
    err << "unsupported: " << e.what() << "\n";
    return kMathFailure;
  }
  return kInputError;
}

}  // namespace cyclift::cli
