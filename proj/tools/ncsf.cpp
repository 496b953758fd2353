#include "ncsf/algebra.hpp"
#include "ncsf/bases.hpp"
#include "ncsf/error.hpp"
#include "ncsf/expr.hpp"
#include "ncsf/identities.hpp"
#include "ncsf/io.hpp"
#include "ncsf/kostka.hpp"
#include "ncsf/qsym.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace ncsf;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultMaxDegree = 12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_degree() {
  const char* raw = std::getenv("NCSF_MAX_DEGREE");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultMaxDegree;
  }
  try {
    std::size_t used = 0;
    const int value = std::stoi(raw, &used);
    if (used == std::string(raw).size() && value >= 1) {
      return value;
    }
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("NCSF_MAX_DEGREE must be a positive integer, got '") + raw + "'");
}

void check_degree(int n) {
  if (n < 1) {
    throw UsageError("degree must be positive");
  }
  if (n > max_degree()) {
    throw UsageError("degree " + std::to_string(n) + " exceeds NCSF_MAX_DEGREE=" + std::to_string(max_degree()));
  }
}

// Largest degree an expression can reach.
int expr_degree(const Expr& e) {
  switch (e.kind) {
  case Expr::Kind::Number:
    return 0;
  case Expr::Kind::Atom:
    return e.index.weight();
  case Expr::Kind::Mul:
    return expr_degree(e.children[0]) + expr_degree(e.children[1]);
  default: {
    int best = 0;
    for (const auto& child : e.children) {
      best = std::max(best, expr_degree(child));
    }
    return best;
  }
  }
}

Expr parse_checked(const std::string& text) {
  Expr e = parse_expr(text);
  const int degree = expr_degree(e);
  if (degree > max_degree()) {
    throw UsageError("expression degree " + std::to_string(degree) + " exceeds NCSF_MAX_DEGREE=" +
                     std::to_string(max_degree()));
  }
  return e;
}

Basis basis_arg(const std::string& name) {
  const auto b = parse_basis(name);
  if (!b) {
    throw UsageError("unknown basis '" + name + "' (use Psi, S, E, M, F, L or R)");
  }
  return *b;
}

Composition index_arg(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }),
             text.end());
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string piece = text.substr(start, comma - start);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size() || value < 1) {
      throw UsageError("index must be a list of positive integers, e.g. 2,1");
    }
    parts.push_back(value);
    start = comma + 1;
  }
  return Composition(std::move(parts));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative symmetric functions: conversions, products, pairings and identity checks"};
  app.require_subcommand(1);

  std::string expr_text;
  std::string other_text;
  std::string basis_to;
  std::string basis_from;
  std::string format;
  std::string family;
  std::string index;
  std::string check_name;
  int degree = 0;
  bool gessel = false;
  bool timing = false;

  auto* expand = app.add_subcommand("expand", "Rewrite an expression in a basis");
  expand->add_option("expr", expr_text, "Expression, e.g. \"F[2,2,1,3]\"")->required();
  expand->add_option("--to", basis_to, "Target basis (default: the expression's own basis, else Psi)");
  expand->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* pair_cmd = app.add_subcommand("pair", "Scalar product <a, b> with <M^I, S^J> = delta");
  pair_cmd->add_option("expr", expr_text, "Left argument")->required();
  pair_cmd->add_option("--with", other_text, "Right argument")->required();

  auto* matrix = app.add_subcommand("matrix", "Transition matrix between two bases");
  matrix->add_option("--from", basis_from, "Source basis")->required();
  matrix->add_option("--to", basis_to, "Target basis")->required();
  matrix->add_option("--degree", degree, "Degree n")->required();
  matrix->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* kostka = app.add_subcommand("kostka", "Ribbons in the monomial (or fundamental) basis");
  kostka->add_option("--degree", degree, "Degree n")->required();
  kostka->add_flag("--gessel", gessel, "Use the fundamental basis");
  kostka->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* qsym = app.add_subcommand("qsym", "Quasi-symmetric table in the monomial basis");
  qsym->add_option("--family", family, "psi, s, lambda, ribbon or fundamental")->required();
  qsym->add_option("--index", index, "Composition, e.g. 2,1")->required();
  qsym->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("name", check_name, "Check name or 'all'")->required();
  verify->add_option("--degree", degree, "Degree bound (default: each check's own)");
  verify->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  verify->add_flag("--timing", timing, "Include wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (expand->parsed()) {
      const Expr e = parse_checked(expr_text);
      Basis target = Basis::Psi;
      if (!basis_to.empty()) {
        target = basis_arg(basis_to);
      } else if (const auto dominant = dominant_basis(e)) {
        target = *dominant;
      }
      const Element result = convert(eval(e), target);
      std::cout << (format == "json" ? element_json(result) : element_text(result) + "\n");
    } else if (pair_cmd->parsed()) {
      const Element a = eval(parse_checked(expr_text));
      const Element b = eval(parse_checked(other_text));
      std::cout << pair(a, b).str() << "\n";
    } else if (matrix->parsed()) {
      check_degree(degree);
      const TransitionMatrix m = transition_matrix(basis_arg(basis_from), basis_arg(basis_to), degree);
      std::cout << (format == "json" ? matrix_json(m) : matrix_csv(m));
    } else if (kostka->parsed()) {
      check_degree(degree);
      const KostkaReport r = gessel ? kostka_gessel_matrix(degree) : kostka_matrix(degree);
      std::cout << (format == "json" ? kostka_json(r) : kostka_csv(r));
    } else if (qsym->parsed()) {
      const auto f = parse_family(family);
      if (!f) {
        throw UsageError("unknown family '" + family + "' (use psi, s, lambda, ribbon or fundamental)");
      }
      const Composition I = index_arg(index);
      check_degree(I.weight());
      const QsymTable t = qsym_table(*f, I);
      std::cout << (format == "text" ? qsym_text(t) : qsym_json(t));
    } else if (verify->parsed()) {
      std::vector<VerificationResult> results;
      const bool explicit_degree = verify->count("--degree") > 0;
      if (explicit_degree) {
        check_degree(degree);
      }
      bool found = false;
      for (const auto& entry : identity_registry()) {
        if (check_name != "all" && check_name != entry.name) {
          continue;
        }
        found = true;
        const int bound = explicit_degree ? degree : std::min(entry.default_bound, max_degree());
        results.push_back(entry.run(bound));
      }
      if (!found) {
        std::string names;
        for (const auto& entry : identity_registry()) {
          names += " " + entry.name;
        }
        throw UsageError("unknown check '" + check_name + "'; available: all" + names);
      }
      std::cout << (format == "json" ? verify_json(results, timing) : verify_table(results, timing));
      const bool all_pass = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
      return all_pass ? 0 : kExitFailure;
    }
  } catch (const ParseError& e) {
    std::cerr << "ncsf: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "ncsf: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "ncsf: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
