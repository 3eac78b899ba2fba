#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <maxss/distributions.hpp>

namespace maxss::cli {

/// Seed used by `simulate`, `psi-table` and `bootstrap` when --seed is absent.
inline constexpr std::uint64_t kDefaultSeed = 20100817;

/// Environment variable naming a psi CSV to use instead of the builtin table.
inline constexpr const char* kPsiTableEnv = "MAXSS_PSI_TABLE";

/// Parses "name:key=value,key=value", e.g. "frechet:alpha=1.5".
DistributionSpec parse_dist(std::string_view text);

/// Reads one numeric series. Blank lines and lines starting with '#' are
/// skipped; a non-numeric first row is a header. Multi-column input needs
/// `column`, given as a header name or a 1-based index.
std::vector<double> read_series(std::istream& in, const std::optional<std::string>& column);

/// Runs one command; args excludes the program name. Reports go to `out`
/// (or --output), error objects to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace maxss::cli
