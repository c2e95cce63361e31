#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ncdouble/catalog.hpp"

namespace ncd {

/// Exit codes of a session run.
enum class ExitCode : int { Pass = 0, VerificationFailed = 1, InputError = 2, ResourceExceeded = 3 };

/// Command line overrides; unset fields fall back to the document's
/// "options" section and then to the library defaults.
struct SessionOptions {
  std::optional<std::uint64_t> fuel;
  std::optional<int> degree_bound;
  std::optional<MembershipMode> mode;
  std::optional<std::uint64_t> seed;
  /// Adds N = 3 to the catalog consistency sweep.
  bool long_suites = false;
};

struct SessionResult {
  std::string report;  // pretty-printed JSON, byte-identical for identical input
  ExitCode exit_code = ExitCode::Pass;
};

/// Runs a JSON session document: sections "params", "options", "seed",
/// "matrices", "algebras", "doubles" and "commands" (executed in order).
/// Input and resource errors stop the run; mathematical failures (a pole, a
/// singular system) mark the command as failed and the run continues.
SessionResult run_session(std::string_view document, const SessionOptions& options = {});

/// JSON array describing the catalog.
std::string catalog_list_json();
/// JSON definition of a catalog double (or its stand-alone algebras) in the
/// document format accepted by the "doubles"/"algebras" sections.
std::string catalog_export_json(const std::string& name, const CatalogParams& params);

}  // namespace ncd
