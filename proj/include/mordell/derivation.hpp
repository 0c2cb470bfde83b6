#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mordell/family.hpp"
#include "mordell/poly.hpp"

namespace mordell {

/// One polynomial identity of the construction. It holds when every
/// residual expands to the zero polynomial.
struct IdentityCheck {
  std::string name;
  std::string statement;
  std::vector<MultiPoly> residuals;

  bool passed() const;
  std::size_t residual_terms() const;
};

struct DerivationReport {
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  const IdentityCheck& find(const std::string& name) const;
};

struct DerivationOptions {
  /// Mutation hook for exercising the checker: one of k, u1, u2, u3, v1, v2,
  /// v3 or w. The named closed form gets its leading coefficient bumped by
  /// one before the identities are evaluated.
  std::optional<std::string> perturb;
};

/// Every step of the construction as an exact identity in a, b, c (and the
/// auxiliary symbols k, r, w1, w2, w3 where a step is generic in them).
DerivationReport verify_derivation(const DerivationOptions& options = {});

/// The same identities with a, b, c fixed to the given integers.
DerivationReport verify_derivation(const FamilyParams& params,
                                   const DerivationOptions& options = {});

}  // namespace mordell
