#pragma once

#include "ghost/sequence.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ghost {

/// Broad Lebesgue type of a ghost measure.
enum class LebesgueKind { LebesgueMeasure, AbsolutelyContinuous, SingularContinuous, PurePoint };

std::string_view to_string(LebesgueKind k);

/// A named affine sequence together with the facts known about it.
struct CatalogEntry {
    std::string name;
    AffineParams params;
    std::string description;
    CaseLabel expected_case;
    LebesgueKind expected_kind;
    /// Human-readable closed form of Sigma(N), empty when none is known.
    std::string sigma_formula;
    /// Closed form of Sigma(N) for N >= 1, when known.
    std::function<mpz_class(unsigned)> sigma_closed_form;
};

/// Looks up a catalog entry. Besides the fixed names this accepts
/// "missing_digit(d,j)" with d >= 2 and 1 <= j <= d - 1.
CatalogEntry catalog_lookup(const std::string& name);

/// Names of the fixed entries plus one representative missing_digit instance.
std::vector<std::string> catalog_names();

}  // namespace ghost
