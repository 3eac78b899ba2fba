#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "detail/overloaded.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace maxss {

/// pi^2 / (6 ln^2 2): the variance of log2 of a standard 1-Frechet variable.
inline constexpr double psi_zero_exact =
    std::numbers::pi * std::numbers::pi / (6.0 * std::numbers::ln2 * std::numbers::ln2);

struct BuiltinProvenance {};

struct MonteCarloProvenance {
    std::uint64_t pairs = 0;
    std::uint64_t bags = 0;
    std::uint64_t seed = 0;
};

using PsiProvenance = std::variant<BuiltinProvenance, MonteCarloProvenance>;

/// Lag-indexed values of psi(a) = Cov(log2 Z1, log2(Z1 v (2^a - 1) Z2)).
/// Lags past the end of the table read as 0.
class PsiTable {
public:
    PsiTable(std::vector<double> values, PsiProvenance provenance)
        : values_(std::move(values)), provenance_(provenance)
    {
        detail::require(!values_.empty(), ErrorKind::parameter, "psi table is empty");
        if (std::abs(values_[0] - psi_zero_exact) > 0.05) {
            detail::fail(ErrorKind::numeric, "psi(0) is not within 0.05 of pi^2/(6 ln^2 2)");
        }
        for (std::size_t a = 1; a < values_.size(); ++a) {
            if (!(values_[a] < values_[a - 1]) || !(values_[a] >= 0.0)) {
                detail::fail(ErrorKind::numeric, "psi table must be non-negative and strictly "
                                                 "decreasing (lag " + std::to_string(a) + ")");
            }
        }
    }

    double operator()(int lag) const noexcept
    {
        if (lag < 0) {
            lag = -lag;
        }
        return static_cast<std::size_t>(lag) < values_.size() ? values_[static_cast<std::size_t>(lag)]
                                                              : 0.0;
    }

    int max_lag() const noexcept { return static_cast<int>(values_.size()) - 1; }
    const std::vector<double>& values() const noexcept { return values_; }
    const PsiProvenance& provenance() const noexcept { return provenance_; }

private:
    std::vector<double> values_;
    PsiProvenance provenance_;
};

/// The shipped table: psi(0..19) from a 10^7-pair, 1000-bag Monte Carlo run.
inline const PsiTable& builtin_psi()
{
    static const PsiTable table(
        {3.423696, 2.211864, 1.387207, 0.846734, 0.504666, 0.294581, 0.168963,
         0.095563, 0.053288, 0.029470, 0.016072, 0.008755, 0.004756, 0.002552,
         0.001405, 0.000709, 0.000335, 0.000175, 0.000097, 0.000032},
        BuiltinProvenance{});
    return table;
}

namespace detail {

// Sample covariance of log2 Z1 and log2(Z1 v c Z2) over `pairs` draws.
//
// For a > 0 the second coordinate is written as (log2 c + log2 Z2) + R with
// R = max(log2 Z1 - log2 c - log2 Z2, 0). The first term is independent of
// Z1, so the covariance equals Cov(log2 Z1, R); R is zero on most pairs and
// its sample covariance has far smaller variance at large lags.
inline double psi_one_bag(int lag, std::uint64_t pairs, SeededStream stream)
{
    Rng rng(stream);
    const double log2_c = lag == 0 ? 0.0 : std::log2(std::exp2(lag) - 1.0);
    double mean_x = 0.0, mean_r = 0.0, comoment = 0.0;
    for (std::uint64_t i = 0; i < pairs; ++i) {
        const double x = -std::log2(-std::log(rng.uniform()));
        double r;
        if (lag == 0) {
            r = x;
        } else {
            const double w = -std::log2(-std::log(rng.uniform()));
            r = std::max(x - log2_c - w, 0.0);
        }
        const double k = static_cast<double>(i + 1);
        const double dx = x - mean_x;
        mean_x += dx / k;
        mean_r += (r - mean_r) / k;
        comoment += dx * (r - mean_r);
    }
    return comoment / static_cast<double>(pairs - 1);
}

} // namespace detail

/// Monte Carlo estimate of psi(a): the mean of `bags` independent sample
/// covariances, bag b drawn from stream.child(b). Deterministic given the
/// stream whatever the thread count.
inline double psi_mc(int lag, std::uint64_t pairs, std::uint64_t bags, SeededStream stream,
                     Threads threads = {})
{
    detail::require(lag >= 0, ErrorKind::parameter, "lag must be >= 0");
    detail::require(lag <= 1000, ErrorKind::parameter, "lag must be <= 1000");
    detail::require(pairs >= 10000, ErrorKind::parameter, "psi_mc needs pairs >= 10^4");
    detail::require(bags >= 1, ErrorKind::parameter, "psi_mc needs bags >= 1");

    std::vector<double> per_bag(bags);
    parallel_for(bags, threads, [&](std::size_t b) {
        per_bag[b] = detail::psi_one_bag(lag, pairs, stream.child(b));
    });
    double sum = 0.0;
    for (double v : per_bag) {
        sum += v;
    }
    return sum / static_cast<double>(bags);
}

/// Regenerates psi(0..max_lag); lag a uses stream.child(a).
inline PsiTable psi_table_mc(int max_lag, std::uint64_t pairs, std::uint64_t bags,
                             SeededStream stream, Threads threads = {})
{
    detail::require(max_lag >= 0, ErrorKind::parameter, "max lag must be >= 0");
    std::vector<double> values(static_cast<std::size_t>(max_lag) + 1);
    for (int a = 0; a <= max_lag; ++a) {
        values[static_cast<std::size_t>(a)] =
            psi_mc(a, pairs, bags, stream.child(static_cast<std::uint64_t>(a)), threads);
    }
    return PsiTable(std::move(values), MonteCarloProvenance{pairs, bags, stream.seed});
}

// CSV form:
//   # provenance: builtin
//   # provenance: montecarlo pairs=<n> bags=<n> seed=<n>
//   lag,psi
//   0,3.423696
inline void write_psi_csv(std::ostream& out, const PsiTable& table)
{
    std::visit(Overloaded{
                   [&](const BuiltinProvenance&) { out << "# provenance: builtin\n"; },
                   [&](const MonteCarloProvenance& p) {
                       out << "# provenance: montecarlo pairs=" << p.pairs << " bags=" << p.bags
                           << " seed=" << p.seed << "\n";
                   },
               },
               table.provenance());
    out << "lag,psi\n";
    char buf[64];
    for (int a = 0; a <= table.max_lag(); ++a) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, table(a), std::chars_format::general, 17);
        out << a << ',' << std::string_view(buf, static_cast<std::size_t>(end - buf)) << '\n';
    }
}

inline PsiTable read_psi_csv(std::istream& in)
{
    PsiProvenance provenance = BuiltinProvenance{};
    std::vector<double> values;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            if (line.find("montecarlo") != std::string::npos) {
                MonteCarloProvenance p;
                std::istringstream fields(line.substr(line.find("montecarlo") + 10));
                std::string field;
                while (fields >> field) {
                    const auto eq = field.find('=');
                    if (eq == std::string::npos) {
                        continue;
                    }
                    const auto key = field.substr(0, eq);
                    const auto value = std::stoull(field.substr(eq + 1));
                    if (key == "pairs") p.pairs = value;
                    if (key == "bags") p.bags = value;
                    if (key == "seed") p.seed = value;
                }
                provenance = p;
            }
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            if (line == "lag,psi") {
                continue;
            }
        }
        const auto comma = line.find(',');
        int lag = -1;
        double value = 0.0;
        const char* first = line.data();
        const char* mid = line.data() + (comma == std::string::npos ? line.size() : comma);
        const char* last = line.data() + line.size();
        const auto r1 = std::from_chars(first, mid, lag);
        const auto r2 = comma == std::string::npos ? std::from_chars_result{first, std::errc::invalid_argument}
                                                   : std::from_chars(mid + 1, last, value);
        if (r1.ec != std::errc{} || r1.ptr != mid || r2.ec != std::errc{} || r2.ptr != last) {
            detail::fail(ErrorKind::parse, "psi table line " + std::to_string(line_no) +
                                               ": expected '<lag>,<psi>'");
        }
        if (lag != static_cast<int>(values.size())) {
            detail::fail(ErrorKind::parse, "psi table line " + std::to_string(line_no) +
                                               ": lags must be consecutive from 0");
        }
        values.push_back(value);
    }
    return PsiTable(std::move(values), provenance);
}

} // namespace maxss
