#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "multiconf/configuration.hpp"
#include "multiconf/gvd.hpp"
#include "multiconf/invariants.hpp"

namespace multiconf {

/// Problem document: field, variables (names or a count), caps, the
/// multicomplex as exponent vectors or the monomial ideal I(M) by its
/// generators, form families and the order.
struct ProblemInput {
  Field field = Field::rationals();
  RingPtr ring;
  Multicomplex multicomplex;
  FormFamilies families;
};

/// Thrown with every located problem of a document, one per line.
class InputError : public InvalidInput {
 public:
  explicit InputError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// field_override replaces the document's field when set.
ProblemInput parse_input(const nlohmann::json& document, const std::optional<Field>& field_override = std::nullopt);
ProblemInput parse_input_text(const std::string& text, const std::optional<Field>& field_override = std::nullopt);

/// Inverse of parse_input for linear families; used to write fixtures.
nlohmann::ordered_json to_document(const ProblemInput& input);

nlohmann::ordered_json to_json(const TheoremReport& report);
nlohmann::ordered_json to_json(const GlicciCertificate& certificate);
nlohmann::ordered_json to_json(const BettiTable& table);

struct BettiComparison {
  BettiTable monomial;
  BettiTable polynomial;
  IntPoly hilbert_numerator;
  bool passed() const;
};

/// Betti numbers of I(M) in kappa[x_1..x_n] against those of I(M, F) in S,
/// together with the alternating-sum identity on both tables.
BettiComparison compare_betti(const ProblemInput& input, const ResolutionLimits& limits = {});
nlohmann::ordered_json to_json(const BettiComparison& comparison);

/// Plain-text renderings for the terminal.
std::string to_text(const TheoremReport& report);
std::string to_text(const GlicciCertificate& certificate);
std::string to_text(const BettiComparison& comparison);

}  // namespace multiconf
