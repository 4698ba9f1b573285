#ifndef HILLPOLY_IDENTITIES_HPP
#define HILLPOLY_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hillpoly {

/// Outcome of one registered checker. On failure, `failing_case` names the
/// smallest failing index and `lhs`/`rhs` hold both sides.
struct IdentityReport {
  std::string name;
  bool pass = true;
  int range = 0;
  int cases = 0;
  std::optional<std::string> failing_case;
  std::string lhs;
  std::string rhs;
  /// Extra reported data (for instance orthogonality norms).
  std::vector<std::string> notes;
  double seconds = 0.0;
};

struct IdentityInfo {
  std::string name;
  std::string description;
  std::function<IdentityReport(int range)> check;
};

class UnknownIdentity : public std::out_of_range {
 public:
  explicit UnknownIdentity(const std::string& name) : std::out_of_range("unknown identity: " + name) {}
};

/// Every checker, in a fixed order.
const std::vector<IdentityInfo>& identity_registry();

/// Runs one checker. Throws UnknownIdentity for an unregistered name and
/// std::invalid_argument for range < 1.
IdentityReport verify_identity(std::string_view name, int range);

}  // namespace hillpoly

#endif  // HILLPOLY_IDENTITIES_HPP
