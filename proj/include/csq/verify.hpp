#pragma once

// The full invariant suite behind `csq verify`.

#include <optional>
#include <string>
#include <vector>

namespace csq {

enum class CheckKind {
  AtMost,   ///< passes when value <= tolerance
  AtLeast,  ///< passes when value >= tolerance
};

struct CheckRecord {
  std::string group;
  std::string name;
  CheckKind kind = CheckKind::AtMost;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  /// Replaces the tolerance of every AtMost check.
  std::optional<double> tolerance_override;
  /// Run a single group only.
  std::optional<std::string> only;
};

/// Groups in execution order.
const std::vector<std::string>& verification_groups();

/// Throws InvalidArgument if `only` names an unknown group.
std::vector<CheckRecord> run_verification(const VerifyOptions& options = {});

}  // namespace csq
