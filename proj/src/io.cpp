#include "ncsf/io.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace ncsf {

namespace {

using Json = nlohmann::ordered_json;

Json composition_json(const Composition& I) { return Json(I.vector()); }

Json terms_json(const std::map<Composition, Rational>& terms) {
  Json out = Json::array();
  for (const auto& [I, c] : terms) {
    out.push_back(Json{{"composition", composition_json(I)}, {"coefficient", c.str()}});
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string index_list(const Composition& I) {
  std::string out;
  for (std::size_t k = 0; k < I.length(); ++k) {
    out += (k ? "," : "") + std::to_string(I[k]);
  }
  return out;
}

Json matrix_body(const TransitionMatrix& m) {
  Json index = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    index.push_back(composition_json(m.index(i)));
  }
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) {
      row.push_back(m.at(r, c).str());
    }
    rows.push_back(std::move(row));
  }
  return Json{{"from", basis_name(m.from())},
              {"to", basis_name(m.to())},
              {"degree", m.degree()},
              {"index", std::move(index)},
              {"rows", std::move(rows)}};
}

} // namespace

std::string element_text(const Element& e) {
  if (e.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [I, c] : e.terms()) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (I.empty()) {
      out += magnitude.str();
      continue;
    }
    if (!magnitude.is_one()) {
      out += magnitude.str() + "*";
    }
    out += std::string(basis_atom(e.basis())) + "[" + index_list(I) + "]";
  }
  return out;
}

std::string element_json(const Element& e) {
  return dump(Json{{"basis", basis_name(e.basis())}, {"terms", terms_json(e.terms())}});
}

std::string matrix_csv(const TransitionMatrix& m) {
  std::ostringstream os;
  os << basis_name(m.from()) << "\\" << basis_name(m.to());
  for (std::size_t c = 0; c < m.size(); ++c) {
    os << ',' << m.index(c).dotted();
  }
  os << '\n';
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << m.index(r).dotted();
    for (std::size_t c = 0; c < m.size(); ++c) {
      os << ',' << m.at(r, c).str();
    }
    os << '\n';
  }
  return os.str();
}

std::string matrix_json(const TransitionMatrix& m) { return dump(matrix_body(m)); }

std::string kostka_csv(const KostkaReport& r) {
  std::ostringstream os;
  os << "# all_integer=" << (r.all_integer ? "true" : "false")
     << " all_nonnegative=" << (r.all_nonnegative ? "true" : "false") << " min=" << r.min_entry.str()
     << " max=" << r.max_entry.str() << '\n';
  os << matrix_csv(r.matrix);
  return os.str();
}

std::string kostka_json(const KostkaReport& r) {
  Json body = matrix_body(r.matrix);
  Json violations = Json::array();
  for (const auto& [row, col] : r.violations) {
    violations.push_back(Json::array({composition_json(r.matrix.index(row)), composition_json(r.matrix.index(col))}));
  }
  body["flags"] = Json{{"kind", r.kind == KostkaKind::Kostka ? "kostka" : "gessel"},
                       {"all_integer", r.all_integer},
                       {"all_nonnegative", r.all_nonnegative},
                       {"min", r.min_entry.str()},
                       {"max", r.max_entry.str()},
                       {"violations", std::move(violations)}};
  return dump(body);
}

std::string qsym_json(const QsymTable& t) {
  return dump(Json{{"family", family_name(t.family)},
                   {"index", composition_json(t.index)},
                   {"degree", t.degree()},
                   {"terms", terms_json(t.terms)}});
}

std::string qsym_text(const QsymTable& t) {
  std::ostringstream os;
  os << family_name(t.family) << t.index.str() << " =";
  if (t.terms.empty()) {
    os << " 0";
  }
  bool first = true;
  for (const auto& [K, c] : t.terms) {
    os << (first ? " " : " + ") << c.str() << "*M_" << K.str();
    first = false;
  }
  os << '\n';
  return os.str();
}

std::string verify_json(const std::vector<VerificationResult>& results, bool timing) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json item{{"name", r.name}, {"bound", r.bound}, {"pass", r.pass}};
    if (!r.pass) {
      item["counterexample"] = r.counterexample;
    }
    if (timing) {
      item["seconds"] = r.seconds;
    }
    list.push_back(std::move(item));
    all = all && r.pass;
  }
  return dump(Json{{"pass", all}, {"results", std::move(list)}});
}

std::string verify_table(const std::vector<VerificationResult>& results, bool timing) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << std::left << std::setw(14) << r.name << std::setw(7) << ("n=" + std::to_string(r.bound))
       << (r.pass ? "pass" : "FAIL");
    if (timing) {
      os << "  " << std::fixed << std::setprecision(3) << r.seconds << "s";
    }
    os << '\n';
    if (!r.pass) {
      os << "  counterexample: " << r.counterexample << '\n';
    }
  }
  return os.str();
}

} // namespace ncsf
