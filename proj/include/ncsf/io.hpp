#pragma once

#include "ncsf/bases.hpp"
#include "ncsf/element.hpp"
#include "ncsf/identities.hpp"
#include "ncsf/kostka.hpp"
#include "ncsf/qsym.hpp"

#include <string>
#include <vector>

namespace ncsf {

/// "1/3*Psi[6] - 1/3*Psi[4,2]"; reparses with parse_expr. "0" when empty.
std::string element_text(const Element& e);
/// {"basis": .., "terms": [{"composition": [..], "coefficient": "p/q"}]}
std::string element_json(const Element& e);

/// Header row of dotted compositions, then one row per composition.
std::string matrix_csv(const TransitionMatrix& m);
std::string matrix_json(const TransitionMatrix& m);

std::string kostka_csv(const KostkaReport& r);
std::string kostka_json(const KostkaReport& r);

std::string qsym_json(const QsymTable& t);
std::string qsym_text(const QsymTable& t);

/// Timing is left out unless asked for, keeping reports byte-stable.
std::string verify_json(const std::vector<VerificationResult>& results, bool timing);
std::string verify_table(const std::vector<VerificationResult>& results, bool timing);

} // namespace ncsf
