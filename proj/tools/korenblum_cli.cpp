// korenblum: command-line front end for the maximum-principle certifier.
//
//   korenblum certify bergman --c 0.21
//   korenblum search fock --lo 0.1 --hi 0.9
//   korenblum eval cstar --c 0.21 --a 0.5 --z "-0.5"
//   korenblum scan criterion --space bergman --c-lo 0.05 --c-hi 0.30 --step 0.01 --format csv
//   korenblum verify --all
//   korenblum check-pair --file pair.json --space bergman --c 0.71
//
// Exit codes: 0 success / pass, 1 certification or claim failure (check-pair:
// conclusion fails), 2 invalid input or computation error, 3 (check-pair only)
// the hypothesis |f| <= |g| itself fails.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "complex_arg.hpp"
#include "korenblum/korenblum.hpp"
#include "korenblum/report_json.hpp"

namespace {

using korenblum::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitHypothesis = 3;

struct GlobalOptions {
    double tol = korenblum::kDefaultQuadratureTol;
    double trunc_eps = 1e-12;
    int max_terms = 64;
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 0;
    int threads = 1;

    korenblum::TruncationPolicy truncation() const {
        korenblum::TruncationPolicy p;
        p.epsilon = trunc_eps;
        p.max_terms = max_terms;
        return p;
    }
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string fixed(double v, int precision = 12) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Plain CSV writer; fields are numbers or identifiers, never quoted.
void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i];
        os << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
}

std::string csv_number(double v) { return json(v).dump(); }

void write_certificate(std::ostream& os, const korenblum::Certificate& cert, const std::string& format) {
    if (format == "json") {
        os << korenblum::envelope("certificate", cert).dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        write_csv(os,
                  {"space", "c", "numerator", "denominator", "denominator_error", "criterion", "error_budget",
                   "clamped_fraction", "pass"},
                  {{korenblum::space_name(cert.space), csv_number(cert.c), csv_number(cert.numerator),
                    csv_number(cert.denominator.value), csv_number(cert.denominator.abs_error_estimate),
                    csv_number(cert.criterion), csv_number(cert.error_budget), csv_number(cert.clamped_fraction),
                    cert.pass ? "true" : "false"}});
        return;
    }
    os << "space             " << korenblum::space_name(cert.space) << '\n'
       << "c                 " << fixed(cert.c) << '\n'
       << "numerator         " << fixed(cert.numerator) << '\n'
       << "denominator       " << fixed(cert.denominator.value) << " +- " << fixed(cert.denominator.abs_error_estimate, 3)
       << " (" << cert.denominator.evaluations << " evaluations, converged " << yes_no(cert.denominator.converged)
       << ")\n";
    if (cert.closed_form_denominator) os << "closed form       " << fixed(*cert.closed_form_denominator) << '\n';
    os << "criterion         " << fixed(cert.criterion) << '\n'
       << "error budget      " << fixed(cert.error_budget, 3) << '\n'
       << "margin            " << fixed(1.0 - cert.criterion - cert.error_budget, 6) << '\n';
    if (cert.space == korenblum::Space::bergman) {
        os << "clamped fraction  " << fixed(cert.clamped_fraction, 6) << "  (share of (c,1) where F >= 1)\n";
    }
    os << "result            " << (cert.pass ? "PASS (certified numerically)" : "FAIL (criterion + budget >= 1)")
       << '\n';
}

double default_c(korenblum::Space space) { return space == korenblum::Space::bergman ? 0.21 : 0.54; }

korenblum::Space require_space(const std::string& name) {
    const auto space = korenblum::parse_space(name);
    if (!space) throw korenblum::domain_error("unknown space '" + name + "' (expected bergman or fock)");
    return *space;
}

// ---------------------------------------------------------------------------

struct CertifyArgs {
    std::string space = "bergman";
    std::optional<double> c;
};

int cmd_certify(const CertifyArgs& args, const GlobalOptions& g) {
    const auto space = require_space(args.space);
    const double c = args.c.value_or(default_c(space));
    const auto cert = korenblum::certify(space, c, g.tol, g.truncation());
    Output out(g.out);
    write_certificate(out.stream(), cert, g.format);
    return cert.pass ? kExitOk : kExitFail;
}

struct SearchArgs {
    std::string space = "bergman";
    std::optional<double> lo;
    std::optional<double> hi;
    double width = 1e-4;
};

int cmd_search(const SearchArgs& args, const GlobalOptions& g) {
    const auto space = require_space(args.space);
    const double lo = args.lo.value_or(space == korenblum::Space::bergman ? 0.05 : 0.1);
    const double hi = args.hi.value_or(space == korenblum::Space::bergman ? 0.70 : 0.9);
    korenblum::SearchOptions opts;
    opts.width = args.width;
    opts.tol = g.tol;
    opts.trunc = g.truncation();
    const auto result = korenblum::search_max_constant(space, lo, hi, opts);

    Output out(g.out);
    std::ostream& os = out.stream();
    if (g.format == "json") {
        os << korenblum::envelope("search", result).dump(2) << '\n';
    } else if (g.format == "csv") {
        write_csv(os, {"space", "c_max", "bracket_lo", "bracket_hi", "iterations", "criterion_lo", "criterion_hi"},
                  {{korenblum::space_name(space), csv_number(result.c_max), csv_number(result.bracket.first),
                    csv_number(result.bracket.second), std::to_string(result.iterations),
                    csv_number(result.lo_certificate.criterion),
                    result.hi_certificate ? csv_number(result.hi_certificate->criterion) : "degenerate"}});
    } else {
        os << "space        " << korenblum::space_name(space) << '\n'
           << "c_max        " << fixed(result.c_max, 8) << '\n'
           << "bracket      [" << fixed(result.bracket.first, 8) << ", " << fixed(result.bracket.second, 8) << "]\n"
           << "iterations   " << result.iterations << '\n'
           << "criterion at lo  " << fixed(result.lo_certificate.criterion) << " (pass)\n"
           << "criterion at hi  "
           << (result.hi_certificate ? fixed(result.hi_certificate->criterion) + " (fail)" : std::string("degenerate"))
           << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct PointArgs {
    std::optional<double> c;
    std::optional<double> a;
    std::optional<double> rho;
    std::string z;
    double theta = 0.0;
    std::string space = "bergman";
};

double need(const std::optional<double>& v, const char* flag) {
    if (!v) throw korenblum::domain_error(std::string("missing required option ") + flag);
    return *v;
}

int cmd_eval(const std::string& what, const PointArgs& args, const GlobalOptions& g) {
    const auto space = require_space(args.space);
    const double c = args.c.value_or(default_c(space));
    json result{{"what", what}, {"c", c}};
    std::vector<std::string> notes;

    if (what == "cstar") {
        const double a = args.a ? *args.a : need(args.rho, "--a");
        if (args.z.empty()) throw korenblum::domain_error("missing required option --z");
        const auto z = korenblum::cli::parse_complex(args.z);
        if (!z) throw korenblum::domain_error("cannot parse complex number '" + args.z + "'");
        const auto v = korenblum::cstar_annulus(a, *z, korenblum::AnnulusDomain(c), g.truncation());
        result.update({{"a", a},
                       {"z", {z->real(), z->imag()}},
                       {"value", v.value},
                       {"truncation_bound", v.truncation_bound},
                       {"terms_used", v.terms_used},
                       {"clamped", v.clamped}});
    } else if (what == "cstar-circle") {
        const double rho = need(args.rho, "--rho");
        const auto v = korenblum::cstar_circle(rho, args.theta, korenblum::AnnulusDomain(c), g.truncation());
        result.update({{"rho", rho},
                       {"theta", args.theta},
                       {"value", v.value},
                       {"truncation_bound", v.truncation_bound},
                       {"terms_used", v.terms_used},
                       {"clamped", v.clamped}});
    } else if (what == "f-bound") {
        const double rho = need(args.rho, "--rho");
        const double F = korenblum::circle_sup_bound(rho, c);
        result.update({{"rho", rho}, {"value", F}});
        if (F >= 1.0) notes.emplace_back("F >= 1: boundary layer, the gamma bound is vacuous here");
    } else if (what == "gamma") {
        const double rho = need(args.rho, "--rho");
        result["rho"] = rho;
        result["space"] = korenblum::space_name(space);
        if (space == korenblum::Space::fock) {
            result["value"] = korenblum::fock_gamma_upper(rho, c);
        } else {
            const auto gamma = korenblum::gamma_upper_bound(rho, c);
            result["value"] = gamma ? json(*gamma) : json(nullptr);
            result["unbounded"] = !gamma.has_value();
            if (!gamma) notes.emplace_back("F >= 1: gamma is unbounded by this estimate");
        }
    } else if (what == "integrand") {
        const double rho = need(args.rho, "--rho");
        result.update({{"rho", rho}, {"value", korenblum::bergman_integrand(rho, c)}});
    } else {
        throw korenblum::domain_error("unknown eval target '" + what + "'");
    }
    if (!notes.empty()) result["notes"] = notes;

    Output out(g.out);
    std::ostream& os = out.stream();
    if (g.format == "json") {
        os << korenblum::envelope("eval", result).dump(2) << '\n';
    } else if (g.format == "csv") {
        std::vector<std::string> header;
        std::vector<std::string> row;
        for (const auto& [key, value] : result.items()) {
            if (key == "notes" || key == "z") continue;
            header.push_back(key);
            row.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
        write_csv(os, header, {row});
    } else {
        for (const auto& [key, value] : result.items()) {
            if (key == "notes") continue;
            os << std::left << std::setw(18) << key
               << (value.is_number_float() ? fixed(value.get<double>(), 15)
                                           : (value.is_string() ? value.get<std::string>() : value.dump()))
               << '\n';
        }
        for (const auto& note : notes) os << "note: " << note << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
    std::string space = "bergman";
    std::optional<double> c;
    double rho = 0.5;
    double c_lo = 0.05;
    double c_hi = 0.30;
    double step = 0.01;
    int steps = 200;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<json>> rows;
};

/// Runs fn(i) for i in [0, count) on `threads` workers; results land in order.
template <typename Fn>
std::vector<std::vector<json>> parallel_rows(std::size_t count, int threads, Fn&& fn) {
    std::vector<std::vector<json>> rows(count);
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, std::max<std::size_t>(count, 1));
    auto chunk = [&](std::size_t w) {
        for (std::size_t i = count * w / workers; i < count * (w + 1) / workers; ++i) rows[i] = fn(i);
    };
    if (workers == 1) {
        chunk(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(chunk, w);
    }
    return rows;
}

int cmd_scan(const std::string& what, const ScanArgs& args, const GlobalOptions& g) {
    const auto space = require_space(args.space);
    Table table;
    if (what == "criterion") {
        if (!(args.step > 0.0) || !(args.c_hi >= args.c_lo)) throw korenblum::domain_error("scan: empty or malformed c range");
        const auto count = static_cast<std::size_t>(std::floor((args.c_hi - args.c_lo) / args.step + 1e-9)) + 1;
        table.header = {"c", "criterion", "error_budget", "status"};
        table.rows = parallel_rows(count, g.threads, [&](std::size_t i) -> std::vector<json> {
            const double c = args.c_lo + args.step * static_cast<double>(i);
            try {
                const auto cert = korenblum::certify(space, c, g.tol, g.truncation());
                return {c, cert.criterion, cert.error_budget, cert.pass ? "pass" : "fail"};
            } catch (const korenblum::degenerate_error&) {
                return {c, nullptr, nullptr, "degenerate"};
            }
        });
    } else if (what == "f-bound" || what == "gamma" || what == "integrand" || what == "cstar-circle") {
        const double c = args.c.value_or(default_c(space));
        if (args.steps < 1) throw korenblum::domain_error("scan: --steps must be >= 1");
        const korenblum::AnnulusDomain dom(c);
        const auto n = static_cast<std::size_t>(args.steps);
        if (what == "cstar-circle") {
            table.header = {"theta", "value"};
            table.rows = parallel_rows(n, g.threads, [&](std::size_t i) -> std::vector<json> {
                const double theta = n == 1 ? 0.0 : std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1);
                return {theta, korenblum::cstar_circle(args.rho, theta, dom, g.truncation()).value};
            });
        } else {
            table.header = {"rho", "value"};
            table.rows = parallel_rows(n, g.threads, [&](std::size_t i) -> std::vector<json> {
                const double rho = c + (1.0 - c) * static_cast<double>(i + 1) / static_cast<double>(n + 1);
                if (what == "f-bound") return {rho, korenblum::circle_sup_bound(rho, c)};
                if (what == "integrand") return {rho, korenblum::bergman_integrand(rho, c)};
                if (space == korenblum::Space::fock) return {rho, korenblum::fock_gamma_upper(rho, c)};
                const auto gamma = korenblum::gamma_upper_bound(rho, c);
                return {rho, gamma ? json(*gamma) : json(nullptr)};
            });
        }
    } else {
        throw korenblum::domain_error("unknown scan target '" + what + "'");
    }

    Output out(g.out);
    std::ostream& os = out.stream();
    if (g.format == "json") {
        json rows = json::array();
        for (const auto& row : table.rows) {
            json obj;
            for (std::size_t k = 0; k < table.header.size(); ++k) obj[table.header[k]] = row[k];
            rows.push_back(obj);
        }
        os << korenblum::envelope("scan", json{{"what", what}, {"rows", rows}}).dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> text_rows;
        for (const auto& row : table.rows) {
            std::vector<std::string> fields;
            for (const auto& v : row) fields.push_back(v.is_null() ? "" : (v.is_string() ? v.get<std::string>() : v.dump()));
            text_rows.push_back(fields);
        }
        if (g.format == "csv") {
            write_csv(os, table.header, text_rows);
        } else {
            for (const auto& h : table.header) os << std::left << std::setw(24) << h;
            os << '\n';
            for (const auto& row : text_rows) {
                for (const auto& f : row) os << std::left << std::setw(24) << f;
                os << '\n';
            }
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> claims;
    bool all = false;
    std::vector<double> c_values;
    std::optional<int> rho_steps;
    std::optional<int> theta_steps;
    std::optional<int> n_max;
};

int cmd_verify(const VerifyArgs& args, const GlobalOptions& g) {
    std::vector<korenblum::Claim> claims;
    const bool all = args.all || args.claims.empty();
    if (all) {
        claims.assign(std::begin(korenblum::kAllClaims), std::end(korenblum::kAllClaims));
    } else {
        for (const auto& id : args.claims) {
            const auto claim = korenblum::parse_claim(id);
            if (!claim) throw korenblum::domain_error("unknown claim '" + id + "'");
            claims.push_back(*claim);
        }
    }

    std::vector<korenblum::ClaimReport> reports;
    for (const auto claim : claims) {
        auto grid = korenblum::default_grid(claim);
        if (!args.c_values.empty()) grid.c_values = args.c_values;
        if (args.rho_steps) grid.rho_steps = *args.rho_steps;
        if (args.theta_steps) grid.theta_steps = *args.theta_steps;
        if (args.n_max) grid.n_max = *args.n_max;
        reports.push_back(korenblum::verify_claim(claim, grid, g.threads));
    }
    if (all) {
        for (const auto suite : korenblum::kAllMetricSuites) reports.push_back(korenblum::run_metric_suite(suite, g.seed));
    }

    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    Output out(g.out);
    std::ostream& os = out.stream();
    if (g.format == "json") {
        os << korenblum::envelope("claims", reports).dump(2) << '\n';
    } else if (g.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : reports) {
            rows.push_back({r.claim_id, csv_number(r.max_violation), csv_number(r.tolerance),
                            std::to_string(r.points_checked), r.low_density ? "true" : "false",
                            r.pass ? "true" : "false"});
        }
        write_csv(os, {"claim_id", "max_violation", "tolerance", "points_checked", "low_density", "pass"}, rows);
    } else {
        for (const auto& r : reports) {
            os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(26) << r.claim_id
               << " max_violation=" << std::setw(14) << fixed(r.max_violation, 4) << " tol=" << std::setw(7)
               << fixed(r.tolerance, 2) << " points=" << r.points_checked;
            if (!r.grid.c_values.empty() && r.points_checked > 0) {
                os << " worst@(c=" << fixed(r.worst_point.c, 6) << ", rho=" << fixed(r.worst_point.point.rho, 6)
                   << ", theta=" << fixed(r.worst_point.point.theta, 6) << ", n=" << r.worst_point.n << ")";
            }
            if (r.low_density) os << " [low-density grid]";
            os << '\n';
        }
    }
    return all_pass ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------

struct PairArgs {
    std::string file;
    std::string space = "bergman";
    std::optional<double> c;
    int grid_density = 64;
};

int cmd_check_pair(const PairArgs& args, const GlobalOptions& g) {
    const auto space = require_space(args.space);
    const double c = args.c.value_or(default_c(space));

    std::ifstream in(args.file);
    if (!in) throw korenblum::domain_error("cannot read pair file '" + args.file + "'");
    korenblum::LaurentFunction f;
    korenblum::LaurentFunction gfn;
    try {
        const json doc = json::parse(in);
        f = doc.at("f").get<korenblum::LaurentFunction>();
        gfn = doc.at("g").get<korenblum::LaurentFunction>();
    } catch (const json::exception& e) {
        throw korenblum::domain_error("invalid pair file '" + args.file + "': " + e.what());
    }

    const auto report = korenblum::check_pair(f, gfn, c, space, args.grid_density);
    Output out(g.out);
    std::ostream& os = out.stream();
    if (g.format == "json") {
        os << korenblum::envelope("pair", report).dump(2) << '\n';
    } else if (g.format == "csv") {
        write_csv(os, {"space", "c", "hypothesis_margin", "hypothesis_holds", "norm_f_sq", "norm_g_sq", "conclusion_holds"},
                  {{korenblum::space_name(space), csv_number(c), csv_number(report.hypothesis_margin),
                    report.hypothesis_holds ? "true" : "false", csv_number(report.norm_f_sq),
                    csv_number(report.norm_g_sq), report.conclusion_holds ? "true" : "false"}});
    } else {
        os << "space              " << korenblum::space_name(space) << '\n'
           << "c                  " << fixed(c) << '\n'
           << "hypothesis margin  " << fixed(report.hypothesis_margin) << " (" << report.samples << " samples, r <= "
           << fixed(report.outer_radius, 6) << ")\n";
        if (space == korenblum::Space::fock) os << "behaviour at inf   " << (report.infinity_check ? "ok" : "|f| > |g| eventually") << '\n';
        os << "norm_f^2           " << fixed(report.norm_f_sq) << '\n'
           << "norm_g^2           " << fixed(report.norm_g_sq) << '\n'
           << "hypothesis         " << (report.hypothesis_holds ? "holds" : "FAILS") << '\n'
           << "conclusion         " << (report.conclusion_holds ? "holds" : "FAILS") << '\n';
    }
    if (!report.hypothesis_holds) return kExitHypothesis;
    return report.conclusion_holds ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical certification of the Bergman and Fock space maximum principle constants"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--tol", g.tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--trunc-eps", g.trunc_eps, "relative truncation target for infinite products")->check(CLI::PositiveNumber);
    app.add_option("--max-terms", g.max_terms, "cap on product factors")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", g.out, "output path (default: standard output)");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--threads", g.threads, "worker threads for scans and verifier grids")->check(CLI::PositiveNumber);

    CertifyArgs certify;
    auto* certify_cmd = app.add_subcommand("certify", "certify a constant c for one space");
    certify_cmd->add_option("space", certify.space, "bergman or fock")->required();
    certify_cmd->add_option("--c", certify.c, "constant to certify");

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "bisect for the largest certifiable c");
    search_cmd->add_option("space", search.space, "bergman or fock")->required();
    search_cmd->add_option("--lo", search.lo, "lower end of the bracket");
    search_cmd->add_option("--hi", search.hi, "upper end of the bracket");
    search_cmd->add_option("--width", search.width, "bisection width")->check(CLI::PositiveNumber);

    std::string eval_what;
    PointArgs point;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one quantity at a point");
    eval_cmd->add_option("what", eval_what, "cstar | cstar-circle | f-bound | gamma | integrand")->required();
    eval_cmd->add_option("--c", point.c, "inner radius of A(c,1)");
    eval_cmd->add_option("--a", point.a, "real base point for cstar");
    eval_cmd->add_option("--rho", point.rho, "radius");
    eval_cmd->add_option("--z", point.z, "complex point, e.g. \"-0.4+0.2i\"");
    eval_cmd->add_option("--theta", point.theta, "angle for cstar-circle");
    eval_cmd->add_option("--space", point.space, "bergman or fock (gamma only)");

    std::string scan_what;
    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "tabulate a quantity over a range");
    scan_cmd->add_option("what", scan_what, "criterion | f-bound | gamma | integrand | cstar-circle")->required();
    scan_cmd->add_option("--space", scan.space, "bergman or fock");
    scan_cmd->add_option("--c", scan.c, "inner radius for rho scans");
    scan_cmd->add_option("--rho", scan.rho, "radius for cstar-circle scans");
    scan_cmd->add_option("--c-lo", scan.c_lo, "first c for criterion scans");
    scan_cmd->add_option("--c-hi", scan.c_hi, "last c for criterion scans");
    scan_cmd->add_option("--step", scan.step, "c step for criterion scans");
    scan_cmd->add_option("--steps", scan.steps, "number of rows for rho / theta scans");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the bound-chain claim verifiers");
    verify_cmd->add_option("claims", verify.claims, "fn-bound gn-theta-max fg-product tail-bound tedious");
    verify_cmd->add_flag("--all", verify.all, "every claim plus the metric property suites");
    verify_cmd->add_option("--c", verify.c_values, "override the c grid");
    verify_cmd->add_option("--rho-steps", verify.rho_steps, "override rho steps");
    verify_cmd->add_option("--theta-steps", verify.theta_steps, "override theta steps");
    verify_cmd->add_option("--n-max", verify.n_max, "override the upper n");

    PairArgs pair;
    auto* pair_cmd = app.add_subcommand("check-pair", "check the maximum principle on a concrete pair");
    pair_cmd->add_option("--file", pair.file, "JSON file with keys f and g")->required();
    pair_cmd->add_option("--space", pair.space, "bergman or fock");
    pair_cmd->add_option("--c", pair.c, "constant c");
    pair_cmd->add_option("--grid-density", pair.grid_density, "circles and angles per circle")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*certify_cmd) return cmd_certify(certify, g);
        if (*search_cmd) return cmd_search(search, g);
        if (*eval_cmd) return cmd_eval(eval_what, point, g);
        if (*scan_cmd) return cmd_scan(scan_what, scan, g);
        if (*verify_cmd) return cmd_verify(verify, g);
        if (*pair_cmd) return cmd_check_pair(pair, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
