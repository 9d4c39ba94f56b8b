// Command-line front end: reads shapes, tableaux and polynomials as JSON,
// prints JSON results. Exit status 0 on success, 1 on a library error
// (with {"error": {...}} on stdout), 2 on bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rowconvex/json_io.hpp"
#include "rowconvex/rowconvex.hpp"
#include "rowconvex/suites.hpp"

using namespace rowconvex;
using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Alphabet alphabet_for(const std::string& spec, const std::vector<json>& inputs)
{
  if (!spec.empty()) return Alphabet::parse(spec);
  std::vector<std::string> tokens;
  for (const auto& j : inputs) io::collect_tableau_tokens(j, tokens);
  return io::infer_alphabet(tokens);
}

std::optional<Flags> flags_for(const std::string& path, const Alphabet& a)
{
  if (path.empty()) return std::nullopt;
  return io::flags_from_json(read_json(path), a);
}

SyzygyMethod method_for(const std::string& name)
{
  if (name == "polarization") return SyzygyMethod::polarization;
  if (name == "printed") return SyzygyMethod::printed;
  throw Error(ErrorCode::ParseError, "unknown method", name);
}

Polynomial polynomial_input(const json& j, const Alphabet& a)
{
  // a polynomial file may also hold a tableau or a tableau sum
  if (j.is_object() && j.contains("shape")) return tableau_to_polynomial(io::tableau_from_json(j, a));
  if (j.is_array() && !j.empty() && j[0].is_object() && j[0].contains("tableau")) return io::sum_from_json(j, a).expand();
  return io::polynomial_from_json(j, a);
}

std::string verify_table(const std::vector<suites::Result>& results)
{
  std::ostringstream os;
  std::size_t w = 6;
  for (const auto& r : results) w = std::max(w, r.name.size());
  os << std::left;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << std::string(w - r.name.size(), ' ') << "  cases=" << r.cases
       << " failures=" << r.failures << "\n";
    for (const auto& m : r.messages) os << "      " << m << "\n";
  }
  return os.str();
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Straight-tableau bases and straightening for row-convex shapes"};
  app.require_subcommand(1, 1);
  std::string output;
  app.add_option("-o,--output", output, "write the result to this file instead of stdout");

  std::string tableau_path, shape_path, alphabet_spec, flags_path, sum_path, poly_path, method_name = "polarization";
  std::string remove_token, left_path, right_path, basis_name = "straight";
  bool row_standard = false, full_family = false, json_out = false, no_verify = false;
  std::vector<std::string> suite_names;
  int max_cells = 6;
  std::uint64_t seed = 0;
  std::size_t sample = 0;

  auto* straighten = app.add_subcommand("straighten", "express [T] in straight tableaux");
  straighten->add_option("--tableau", tableau_path, "tableau JSON")->required();
  straighten->add_option("--alphabet", alphabet_spec, "letters in increasing order, e.g. \"a+,b-\"");
  straighten->add_option("--method", method_name, "syzygy construction: polarization or printed");
  straighten->add_flag("--no-verify", no_verify, "skip the expansion check of the result");

  auto* expand = app.add_subcommand("expand", "letterplace expansion of a tableau or tableau sum");
  auto* expand_in = expand->add_option_group("input");
  expand_in->add_option("--tableau", tableau_path, "tableau JSON");
  expand_in->add_option("--sum", sum_path, "tableau sum JSON");
  expand_in->require_option(1);
  expand->add_option("--alphabet", alphabet_spec, "letters in increasing order");

  auto* enumerate = app.add_subcommand("enumerate", "straight (or row-standard) tableaux of a shape");
  enumerate->add_option("--shape", shape_path, "shape JSON")->required();
  enumerate->add_option("--alphabet", alphabet_spec, "letters in increasing order")->required();
  enumerate->add_option("--flags", flags_path, "flags JSON {\"g\": [...], \"f\": [...]}");
  enumerate->add_flag("--row-standard", row_standard, "list row-standard tableaux instead");

  auto* character = app.add_subcommand("character", "character of the (flagged) module");
  character->add_option("--shape", shape_path, "shape JSON")->required();
  character->add_option("--alphabet", alphabet_spec, "letters in increasing order")->required();
  character->add_option("--flags", flags_path, "flags JSON");

  auto* branch = app.add_subcommand("branch", "branching identity and strip filtration");
  branch->add_option("--shape", shape_path, "shape JSON")->required();
  branch->add_option("--alphabet", alphabet_spec, "letters in increasing order")->required();
  branch->add_option("--remove", remove_token, "letter to remove (default: the smallest)");
  branch->add_option("--flags", flags_path, "flags JSON");

  auto* relations = app.add_subcommand("relations", "degree-2 relations among straight tableaux");
  relations->add_option("--shape", shape_path, "shape JSON (all pairs)");
  relations->add_option("--left", left_path, "left tableau JSON (single pair)");
  relations->add_option("--right", right_path, "right tableau JSON (single pair)");
  relations->add_option("--alphabet", alphabet_spec, "letters in increasing order");
  relations->add_flag("--full-family", full_family, "every consecutive marking, not only row-straighten's");

  auto* subduct = app.add_subcommand("subduct", "SAGBI subduction against [T] for T of a shape");
  subduct->add_option("--shape", shape_path, "shape JSON")->required();
  subduct->add_option("--alphabet", alphabet_spec, "letters in increasing order")->required();
  subduct->add_option("--polynomial", poly_path, "polynomial, tableau or tableau-sum JSON")->required();
  subduct->add_option("--basis", basis_name, "straight or row-standard");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite_names, "suite name (repeatable; default all)");
  verify->add_option("--max-cells", max_cells, "largest shape size");
  verify->add_option("--alphabet", alphabet_spec, "single alphabet (default: every sign pattern of 1..3 letters)");
  verify->add_option("--seed", seed, "seed for sampled suites");
  verify->add_option("--sample", sample, "cases per shape and alphabet (0 = all)");
  verify->add_flag("--json", json_out, "print JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  json result;
  std::string text;
  int status = 0;
  try {
    if (*straighten) {
      json tj = read_json(tableau_path);
      Alphabet a = alphabet_for(alphabet_spec, {tj});
      StraightenOptions opt;
      opt.method = method_for(method_name);
      opt.verify_result = !no_verify;
      result = io::to_json(straighten_tableau(io::tableau_from_json(tj, a), opt), a);
    } else if (*expand) {
      json j = read_json(tableau_path.empty() ? sum_path : tableau_path);
      Alphabet a = alphabet_for(alphabet_spec, {j});
      Polynomial p = tableau_path.empty() ? io::sum_from_json(j, a).expand() : tableau_to_polynomial(io::tableau_from_json(j, a));
      result = io::to_json(p, a);
    } else if (*enumerate) {
      Alphabet a = Alphabet::parse(alphabet_spec);
      RowConvexShape d = io::shape_from_json(read_json(shape_path));
      auto fl = flags_for(flags_path, a);
      std::vector<Tableau> ts;
      if (row_standard) {
        for (const auto& t : enumerate_row_standard(d, a))
          if (!fl || is_flagged(t, *fl)) ts.push_back(t);
      } else {
        ts = enumerate_straight(d, a, fl);
      }
      result = json::array();
      for (const auto& t : ts) result.push_back(io::to_json(t, a));
    } else if (*character) {
      Alphabet a = Alphabet::parse(alphabet_spec);
      RowConvexShape d = io::shape_from_json(read_json(shape_path));
      result = io::to_json(rowconvex::character(d, a, flags_for(flags_path, a)), a);
    } else if (*branch) {
      Alphabet a = Alphabet::parse(alphabet_spec);
      if (a.empty()) throw Error(ErrorCode::UnknownLetter, "branching needs a nonempty alphabet");
      RowConvexShape d = io::shape_from_json(read_json(shape_path));
      Letter removed = remove_token.empty() ? a.letters().front() : a.letter(remove_token);
      auto fl = flags_for(flags_path, a);
      result = io::to_json(branching_check(d, a, removed, fl), a);
      if (!fl) result["filtration"] = io::to_json(filtration_ranks(d, a, removed));
    } else if (*relations) {
      RelationOptions opt;
      opt.full_family = full_family;
      std::vector<QuadraticRelation> rels;
      Alphabet a;
      if (!left_path.empty() || !right_path.empty()) {
        if (left_path.empty() || right_path.empty()) throw InputError("--left and --right go together");
        json lj = read_json(left_path), rj = read_json(right_path);
        a = alphabet_for(alphabet_spec, {lj, rj});
        rels = relations_for_pair(io::tableau_from_json(lj, a), io::tableau_from_json(rj, a), opt);
      } else {
        if (shape_path.empty()) throw InputError("relations needs --shape or --left/--right");
        if (alphabet_spec.empty()) throw InputError("relations over a shape needs --alphabet");
        a = Alphabet::parse(alphabet_spec);
        rels = groebner_relations_deg2(io::shape_from_json(read_json(shape_path)), a, opt);
      }
      result = json::array();
      for (const auto& r : rels) result.push_back(io::to_json(r, a));
    } else if (*subduct) {
      Alphabet a = Alphabet::parse(alphabet_spec);
      RowConvexShape d = io::shape_from_json(read_json(shape_path));
      SubductionBasis basis;
      if (basis_name == "straight") basis = SubductionBasis::straight;
      else if (basis_name == "row-standard") basis = SubductionBasis::row_standard;
      else throw Error(ErrorCode::ParseError, "unknown basis", basis_name);
      result = io::to_json(sagbi_subduct(polynomial_input(read_json(poly_path), a), d, a, basis), a);
    } else if (*verify) {
      suites::Config cfg;
      cfg.max_cells = max_cells;
      cfg.seed = seed;
      cfg.sample = sample;
      if (!alphabet_spec.empty()) cfg.alphabets = {Alphabet::parse(alphabet_spec)};
      if (suite_names.empty()) suite_names = suites::suite_names();
      std::vector<suites::Result> results;
      for (const auto& s : suite_names) results.push_back(suites::run_suite(s, cfg));
      bool all = true;
      result = json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        result.push_back({{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"failures", r.failures},
                          {"messages", r.messages}});
      }
      if (!json_out) text = verify_table(results);
      status = all ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) {
      std::cerr << "error: " << e.what() << " " << e.witness() << "\n";
      return 2;
    }
    result = io::error_json(e);
    status = 1;
  }

  if (text.empty()) text = result.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return 2;
    }
    out << text;
  }
  return status;
}
