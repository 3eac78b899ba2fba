#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <maxss/maxss.hpp>

namespace maxss::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::optional<double> parse_number(std::string_view s)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::string format_double(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

// JSON has no infinity; unbounded endpoints serialise as null.
Json json_number(double x)
{
    return std::isfinite(x) ? Json(x) : Json(nullptr);
}

Json error_json(std::string_view kind, std::string_view message)
{
    return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

// ----- options -------------------------------------------------------------

struct Options {
    std::string input = "-";
    std::optional<std::string> column;
    std::optional<int> j1;
    std::optional<int> j2;
    double p = 0.01;
    int b = 3;
    double level = 0.95;
    std::size_t replicates = 1000;
    std::uint64_t seed = kDefaultSeed;
    std::string format; // empty: csv for simulate/psi-table, json otherwise
    std::optional<std::string> output;
    unsigned threads = 0;
    std::optional<std::string> psiTable;
    std::string dist;
    std::size_t n = 0;
    std::optional<std::size_t> k;
    int maxLag = 19;
    std::uint64_t pairs = 1'000'000;
    std::uint64_t bags = 100;
};

std::vector<double> load_input(const Options& opt)
{
    if (opt.input == "-") {
        return read_series(std::cin, opt.column);
    }
    std::ifstream in(opt.input);
    if (!in) {
        detail::fail(ErrorKind::input, "cannot open input file '" + opt.input + "'");
    }
    return read_series(in, opt.column);
}

struct LoadedPsi {
    PsiTable table;
    std::string source;
};

LoadedPsi load_psi(const Options& opt)
{
    std::optional<std::string> path = opt.psiTable;
    if (!path) {
        if (const char* env = std::getenv(kPsiTableEnv); env != nullptr && *env != '\0') {
            path = env;
        }
    }
    if (!path) {
        return {builtin_psi(), "builtin"};
    }
    std::ifstream in(*path);
    if (!in) {
        detail::fail(ErrorKind::input, "cannot open psi table '" + *path + "'");
    }
    return {read_psi_csv(in), *path};
}

Json interval_json(Interval iv)
{
    return Json::array({json_number(iv.low), json_number(iv.high)});
}

Json fit_json(const GlsFit& fit)
{
    return Json{{"j1", fit.j1},           {"j2", fit.j2},  {"H", fit.H},
                {"C", fit.C},             {"cw", fit.cw},  {"seH", fit.seH},
                {"nTop", fit.nTop},       {"w", fit.w},    {"v", fit.v}};
}

Json report_json(const ConfidenceReport& r)
{
    Json j{{"level", r.level},
           {"hInterval", interval_json(r.hInterval)},
           {"alphaInterval", interval_json(r.alphaInterval)},
           {"alphaUnbounded", r.alphaUnbounded}};
    std::visit(Overloaded{[&](const AsymptoticMethod&) { j["method"] = {{"name", "asymptotic"}}; },
                          [&](const PermutationMethod& m) {
                              j["method"] = {{"name", "permutation"},
                                             {"replicates", m.replicates},
                                             {"seed", m.seed},
                                             {"dropped", m.dropped}};
                          }},
               r.method);
    if (r.pointEstimate) {
        j["pointEstimate"] = {{"alpha", r.pointEstimate->alpha},
                              {"H", r.fit.H},
                              {"C", r.fit.C},
                              {"sigma0", r.pointEstimate->sigma0}};
    } else {
        j["pointEstimate"] = nullptr;
    }
    j["fit"] = fit_json(r.fit);
    if (const auto* m = std::get_if<PermutationMethod>(&r.method)) {
        j["hReplicates"] = m->hReplicates;
    }
    return j;
}

// ----- commands --------------------------------------------------------------

struct Outcome {
    std::string body;
    int status = 0;
    std::optional<Json> error; // also reported on the error stream
};

GlsFit fit_for_range(const MaxSpectrum& spectrum, const PsiTable& psi, const Options& opt,
                     std::optional<SelectionTrace>& trace)
{
    const int j2 = opt.j2.value_or(spectrum.j_max());
    if (opt.j1) {
        return gls_fit(spectrum, *opt.j1, j2, psi);
    }
    trace = select_j1(spectrum, psi, SelectionOptions{opt.p, opt.b, j2});
    return trace->finalFit;
}

Outcome cmd_estimate(const Options& opt)
{
    const std::vector<double> data = load_input(opt);
    const LoadedPsi psi = load_psi(opt);
    const MaxSpectrum spectrum = compute_spectrum(data);
    std::optional<SelectionTrace> trace;
    const GlsFit fit = fit_for_range(spectrum, psi.table, opt, trace);
    const double z = normal_two_sided_z(1.0 - opt.level);

    std::optional<ConfidenceReport> ci;
    std::optional<Json> error;
    if (fit.H > 0.0) {
        ci = asymptotic_ci(fit, opt.level);
    } else {
        error = error_json(to_string(ErrorKind::nonpositive_slope),
                           "degenerate spectrum: zero slope (H = " + format_double(fit.H) +
                               "); no tail estimate or confidence interval");
    }
    const double alpha = ci ? ci->pointEstimate->alpha : std::numeric_limits<double>::quiet_NaN();
    const double sigma0 = ci ? ci->pointEstimate->sigma0 : std::numeric_limits<double>::quiet_NaN();

    struct Point {
        int j;
        std::size_t nj;
        double y;
        double half;
    };
    std::vector<Point> points;
    for (int j = 1; j <= spectrum.j_max(); ++j) {
        const bool ok = spectrum.valid(j);
        points.push_back({j, spectrum.blocks(j), ok ? spectrum.y(j) : std::numeric_limits<double>::quiet_NaN(),
                          ok ? spectrum_halfwidth(fit.H, psi.table, spectrum.blocks(j), z)
                             : std::numeric_limits<double>::quiet_NaN()});
    }

    std::ostringstream body;
    if (opt.format == "csv") {
        const Interval none{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
        const Interval h = ci ? ci->hInterval : none;
        const Interval a = ci ? ci->alphaInterval : none;
        body << "n,jMax,jMinValid,j1,j2,H,C,seH,cw,alpha,sigma0,level,hLow,hHigh,alphaLow,alphaHigh\n"
             << spectrum.n() << ',' << spectrum.j_max() << ',' << spectrum.j_min_valid() << ','
             << fit.j1 << ',' << fit.j2 << ',' << format_double(fit.H) << ','
             << format_double(fit.C) << ',' << format_double(fit.seH) << ','
             << format_double(fit.cw) << ',' << format_double(alpha) << ','
             << format_double(sigma0) << ',' << format_double(opt.level) << ','
             << format_double(h.low) << ',' << format_double(h.high) << ','
             << format_double(a.low) << ',' << format_double(a.high) << "\n\n"
             << "j,nj,y,halfwidth\n";
        for (const Point& pt : points) {
            body << pt.j << ',' << pt.nj << ',' << format_double(pt.y) << ','
                 << format_double(pt.half) << '\n';
        }
    } else {
        Json j{{"command", "estimate"},
               {"n", spectrum.n()},
               {"jMax", spectrum.j_max()},
               {"jMinValid", spectrum.j_min_valid()},
               {"psiTable", psi.source}};
        Json pts = Json::array();
        for (const Point& pt : points) {
            pts.push_back({{"j", pt.j}, {"nj", pt.nj}, {"y", json_number(pt.y)},
                           {"halfwidth", json_number(pt.half)}});
        }
        j["spectrum"] = std::move(pts);
        j["j1"] = fit.j1;
        j["j2"] = fit.j2;
        j["alpha"] = json_number(alpha);
        j["H"] = fit.H;
        j["C"] = fit.C;
        j["sigma0"] = json_number(sigma0);
        j["seH"] = fit.seH;
        j["cw"] = fit.cw;
        j["ci"] = ci ? Json{{"level", ci->level},
                            {"hInterval", interval_json(ci->hInterval)},
                            {"alphaInterval", interval_json(ci->alphaInterval)},
                            {"alphaUnbounded", ci->alphaUnbounded}}
                     : Json(nullptr);
        if (trace) {
            Json steps = Json::array();
            for (const SelectionStep& s : trace->steps) {
                steps.push_back({{"j1", s.j1Candidate}, {"hOld", s.hOld}, {"hNew", s.hNew},
                                 {"ciLow", s.ciLow}, {"ciHigh", s.ciHigh}, {"accepted", s.accepted}});
            }
            j["selection"] = {{"p", opt.p}, {"b", opt.b}, {"steps", std::move(steps)}};
        } else {
            j["selection"] = nullptr;
        }
        if (error) {
            j.update(*error);
        }
        body << j.dump(2) << '\n';
    }
    return {body.str(), error ? kExitError : 0, error};
}

Outcome cmd_hill(const Options& opt)
{
    const std::vector<double> data = load_input(opt);
    std::vector<HillPoint> points;
    if (opt.k) {
        points.push_back({*opt.k, hill_estimate(data, *opt.k)});
    } else {
        points = hill_plot(data);
    }
    std::ostringstream body;
    if (opt.format == "csv") {
        body << "k,alpha\n";
        for (const HillPoint& pt : points) {
            body << pt.k << ',' << format_double(pt.alpha) << '\n';
        }
    } else {
        Json pts = Json::array();
        for (const HillPoint& pt : points) {
            pts.push_back({{"k", pt.k}, {"alpha", json_number(pt.alpha)}});
        }
        body << Json{{"command", "hill"}, {"n", data.size()}, {"points", std::move(pts)}}.dump(2)
             << '\n';
    }
    return {body.str(), 0, std::nullopt};
}

Outcome cmd_simulate(const Options& opt)
{
    const DistributionSpec spec = parse_dist(opt.dist);
    const std::vector<double> x = sample(spec, opt.n, SeededStream{opt.seed, 0});
    std::ostringstream body;
    if (opt.format == "csv") {
        body << "# dist=" << opt.dist << " n=" << opt.n << " seed=" << opt.seed << '\n';
        for (double v : x) {
            body << format_double(v) << '\n';
        }
    } else {
        body << Json{{"command", "simulate"}, {"dist", opt.dist}, {"n", opt.n},
                     {"seed", opt.seed},      {"values", x}}
                    .dump()
             << '\n';
    }
    return {body.str(), 0, std::nullopt};
}

Outcome cmd_psi_table(const Options& opt)
{
    const PsiTable table =
        psi_table_mc(opt.maxLag, opt.pairs, opt.bags, SeededStream{opt.seed, 0}, Threads{opt.threads});
    std::ostringstream body;
    if (opt.format == "csv") {
        write_psi_csv(body, table);
    } else {
        Json rows = Json::array();
        for (std::size_t a = 0; a < table.values().size(); ++a) {
            rows.push_back({{"lag", a}, {"psi", table.values()[a]}});
        }
        body << Json{{"command", "psi-table"}, {"pairs", opt.pairs}, {"bags", opt.bags},
                     {"seed", opt.seed},       {"values", std::move(rows)}}
                    .dump(2)
             << '\n';
    }
    return {body.str(), 0, std::nullopt};
}

Outcome cmd_bootstrap(const Options& opt)
{
    const std::vector<double> data = load_input(opt);
    const LoadedPsi psi = load_psi(opt);
    std::optional<SelectionTrace> trace;
    const GlsFit fit = fit_for_range(compute_spectrum(data), psi.table, opt, trace);
    const ConfidenceReport r =
        permutation_bootstrap(data, fit.j1, fit.j2, psi.table, SeededStream{opt.seed, 0},
                              BootstrapOptions{opt.replicates, opt.level, Threads{opt.threads}});
    const auto& m = std::get<PermutationMethod>(r.method);

    std::ostringstream body;
    if (opt.format == "csv") {
        const double alpha = r.pointEstimate ? r.pointEstimate->alpha
                                             : std::numeric_limits<double>::quiet_NaN();
        body << "level,hLow,hHigh,alphaLow,alphaHigh,alphaUnbounded,replicates,dropped,seed,j1,j2,H,alpha\n"
             << format_double(r.level) << ',' << format_double(r.hInterval.low) << ','
             << format_double(r.hInterval.high) << ',' << format_double(r.alphaInterval.low) << ','
             << format_double(r.alphaInterval.high) << ',' << (r.alphaUnbounded ? 1 : 0) << ','
             << m.replicates << ',' << m.dropped << ',' << m.seed << ',' << r.fit.j1 << ','
             << r.fit.j2 << ',' << format_double(r.fit.H) << ',' << format_double(alpha) << '\n';
    } else {
        Json j{{"command", "bootstrap"}, {"n", data.size()}, {"psiTable", psi.source}};
        j.update(report_json(r));
        body << j.dump(2) << '\n';
    }
    return {body.str(), 0, std::nullopt};
}

void emit(const Outcome& outcome, const Options& opt, std::ostream& out)
{
    if (!opt.output) {
        out << outcome.body;
        return;
    }
    std::ofstream file(*opt.output, std::ios::binary);
    if (!file) {
        detail::fail(ErrorKind::input, "cannot open output file '" + *opt.output + "'");
    }
    file << outcome.body;
    if (!file.flush()) {
        detail::fail(ErrorKind::input, "failed writing '" + *opt.output + "'");
    }
}

} // namespace

// ----- public helpers --------------------------------------------------------

DistributionSpec parse_dist(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string name(trim(text.substr(0, colon)));
    std::map<std::string, double, std::less<>> params;
    if (colon != std::string_view::npos) {
        for (std::string_view item : split(text.substr(colon + 1), ',')) {
            if (item.empty()) {
                continue;
            }
            const auto eq = item.find('=');
            const auto value = eq == std::string_view::npos ? std::nullopt : parse_number(trim(item.substr(eq + 1)));
            if (!value) {
                detail::fail(ErrorKind::parameter, "bad distribution parameter '" + std::string(item) +
                                                       "' (expected key=number)");
            }
            params[std::string(trim(item.substr(0, eq)))] = *value;
        }
    }

    auto take = [&](const char* key, std::optional<double> fallback = std::nullopt) {
        if (auto it = params.find(key); it != params.end()) {
            const double v = it->second;
            params.erase(it);
            return v;
        }
        if (!fallback) {
            detail::fail(ErrorKind::parameter, "distribution '" + name + "' needs " + key);
        }
        return *fallback;
    };

    auto build = [&]() -> DistributionSpec {
        if (name == "pareto") {
            const double alpha = take("alpha");
            return Pareto(alpha, take("sigma0", 1.0));
        }
        if (name == "frechet") {
            const double alpha = take("alpha");
            return Frechet(alpha, take("sigma0", 1.0));
        }
        if (name == "pareto-mixture") {
            const double p = take("p");
            const double alpha0 = take("alpha0");
            const double sigma0 = take("sigma0", 1.0);
            const double alpha1 = take("alpha1");
            return ParetoMixture(p, alpha0, sigma0, alpha1, take("sigma1", 1.0));
        }
        if (name == "frechet-max-product") {
            const double alpha0 = take("alpha0");
            const double sigma0 = take("sigma0", 1.0);
            const double alpha1 = take("alpha1");
            return FrechetMaxProduct(alpha0, sigma0, alpha1, take("sigma1", 1.0));
        }
        if (name == "exp-frechet-mixture") {
            const double p = take("p", 0.1);
            const double alpha = take("alpha", 1.0);
            const double sigma0 = take("sigma0", 1.0);
            return ExpFrechetMixture(p, alpha, sigma0, take("mean", 5.0));
        }
        if (name == "stable") {
            const double alpha = take("alpha");
            const double beta = take("beta", 0.0);
            return Stable(alpha, beta, take("scale", 1.0));
        }
        if (name == "student-t") {
            return StudentT(take("dof"));
        }
        detail::fail(ErrorKind::parameter,
                     "unknown distribution '" + name +
                         "' (pareto, frechet, pareto-mixture, frechet-max-product, "
                         "exp-frechet-mixture, stable, student-t)");
    };
    DistributionSpec spec = build();
    if (!params.empty()) {
        detail::fail(ErrorKind::parameter, "unknown parameter '" + params.begin()->first +
                                               "' for distribution '" + name + "'");
    }
    return spec;
}

std::vector<double> read_series(std::istream& in, const std::optional<std::string>& column)
{
    std::vector<double> values;
    std::optional<std::size_t> index;
    std::size_t columns = 0;
    std::string line;
    std::size_t line_no = 0;

    auto resolve_column = [&](const std::vector<std::string_view>& header) {
        columns = header.size();
        if (!column) {
            if (columns > 1) {
                detail::fail(ErrorKind::input, "input has " + std::to_string(columns) +
                                                   " columns; choose one with --column");
            }
            index = 0;
            return;
        }
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c] == *column) {
                index = c;
                return;
            }
        }
        const auto pos = parse_number(*column);
        if (pos && *pos >= 1 && *pos == std::floor(*pos) && *pos <= static_cast<double>(columns)) {
            index = static_cast<std::size_t>(*pos) - 1;
            return;
        }
        detail::fail(ErrorKind::input, "no column '" + *column + "' in input");
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        const auto fields = split(text, ',');
        if (!index) {
            resolve_column(fields);
            bool numeric = true;
            for (std::string_view f : fields) {
                numeric = numeric && parse_number(f).has_value();
            }
            if (!numeric && values.empty()) {
                continue; // header row
            }
        }
        if (fields.size() != columns) {
            detail::fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected " +
                                               std::to_string(columns) + " fields, found " +
                                               std::to_string(fields.size()));
        }
        const auto value = parse_number(fields[*index]);
        if (!value) {
            detail::fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": cannot parse '" +
                                               std::string(fields[*index]) + "' as a finite number");
        }
        values.push_back(*value);
    }
    if (values.empty()) {
        detail::fail(ErrorKind::input, "input contains no data values");
    }
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Heavy-tail exponent estimation by max self-similarity", "maxss"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format (json|csv, default json)")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output,-o", opt.output, "Write the report here instead of stdout");
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input,-i", opt.input, "Data file, one value per line ('-' = stdin)")
            ->capture_default_str();
        cmd->add_option("--column", opt.column, "Column name or 1-based index for multi-column CSV");
    };
    auto add_range = [&](CLI::App* cmd) {
        cmd->add_option("--j1", opt.j1, "Lower scale (default: automatic selection)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--j2", opt.j2, "Upper scale (default: jMax)")->check(CLI::PositiveNumber);
        cmd->add_option("--p", opt.p, "Significance level of the j1 selection test")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_option("--b", opt.b, "Back-start: initial fit spans j2-b..j2")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--level", opt.level, "Confidence level")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_option("--psi-table", opt.psiTable,
                        std::string("psi CSV (default: $") + kPsiTableEnv + " or builtin)");
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    };
    auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", opt.threads, "Worker cap (0 = all cores); results do not depend on it")
            ->capture_default_str();
    };

    CLI::App* estimate = app.add_subcommand("estimate", "Max-spectrum estimate of alpha with asymptotic CI");
    add_input(estimate);
    add_range(estimate);
    add_output(estimate);

    CLI::App* hill = app.add_subcommand("hill", "Hill estimator (single k) or full Hill plot");
    add_input(hill);
    hill->add_option("--k", opt.k, "Number of upper order statistics")->check(CLI::PositiveNumber);
    add_output(hill);

    CLI::App* simulate = app.add_subcommand("simulate", "Write a seeded sample from a distribution");
    simulate->add_option("--dist", opt.dist, "name:key=value,... e.g. frechet:alpha=1.5")->required();
    simulate->add_option("--n", opt.n, "Sample size")->required()->check(CLI::PositiveNumber);
    add_seed(simulate);
    simulate->add_option("--format", opt.format, "Output format (csv|json, default csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    simulate->add_option("--output,-o", opt.output, "Write the sample here instead of stdout");

    CLI::App* psi_cmd = app.add_subcommand("psi-table", "Regenerate the psi table by Monte Carlo");
    psi_cmd->add_option("--max-lag", opt.maxLag, "Largest lag")->check(CLI::NonNegativeNumber)->capture_default_str();
    psi_cmd->add_option("--pairs", opt.pairs, "Pairs per bag (>= 10000)")->capture_default_str();
    psi_cmd->add_option("--bags", opt.bags, "Independent bags averaged per lag")->capture_default_str();
    add_seed(psi_cmd);
    add_threads(psi_cmd);
    psi_cmd->add_option("--format", opt.format, "Output format (csv|json, default csv)")->check(CLI::IsMember({"json", "csv"}));
    psi_cmd->add_option("--output,-o", opt.output, "Write the table here instead of stdout");

    CLI::App* bootstrap = app.add_subcommand("bootstrap", "Permutation-bootstrap confidence interval");
    add_input(bootstrap);
    add_range(bootstrap);
    bootstrap->add_option("--replicates,-M", opt.replicates, "Number of permutations (>= 100)")
        ->capture_default_str();
    add_seed(bootstrap);
    add_threads(bootstrap);
    add_output(bootstrap);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_json("usage", e.what()).dump() << '\n';
        return kExitUsage;
    }
    // simulate and psi-table write csv by default so their output feeds
    // straight back into estimate and --psi-table.
    if (opt.format.empty()) {
        opt.format = simulate->parsed() || psi_cmd->parsed() ? "csv" : "json";
    }

    try {
        Outcome outcome;
        if (estimate->parsed()) {
            outcome = cmd_estimate(opt);
        } else if (hill->parsed()) {
            outcome = cmd_hill(opt);
        } else if (simulate->parsed()) {
            outcome = cmd_simulate(opt);
        } else if (psi_cmd->parsed()) {
            outcome = cmd_psi_table(opt);
        } else {
            outcome = cmd_bootstrap(opt);
        }
        emit(outcome, opt, out);
        if (outcome.error) {
            err << outcome.error->dump() << '\n';
        }
        return outcome.status;
    } catch (const Error& e) {
        err << error_json(to_string(e.kind()), e.what()).dump() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what()).dump() << '\n';
        return kExitError;
    }
}

} // namespace maxss::cli
