// hbf: evaluate F(z,x), run identity checks and sweeps, dump tables.
//
// Exit codes: 0 ok, 1 usage, 2 domain, 3 non-convergence / failed residual.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hb/f_function.hpp"
#include "hb/report_io.hpp"
#include "hb/sweep.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

hb::cplx parse_z(const std::string& s) {
    double re = 0.0, im = 0.0;
    char trail = 0;
    if (std::sscanf(s.c_str(), "%lf,%lf%c", &re, &im, &trail) == 2) return {re, im};
    if (std::sscanf(s.c_str(), "%lf%c", &re, &trail) == 1) return {re, 0.0};
    throw UsageError("--z: cannot parse '" + s + "' (expected re or re,im)");
}

// "start:stop:step" range or semicolon/comma separated list.  A comma in a
// z-grid is reserved for re,im, so z lists use ';'.
std::vector<double> parse_real_grid(const std::string& s, const char* flag) {
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        double start, stop, step;
        char trail = 0;
        if (std::sscanf(s.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &trail) != 3 ||
            step <= 0.0)
            throw UsageError(std::string(flag) + ": bad range '" + s + "'");
        for (double v = start; v <= stop + step * 1e-9; v += step) out.push_back(v);
        return out;
    }
    std::string item;
    std::stringstream ss(s);
    const char sep = s.find(';') != std::string::npos ? ';' : ',';
    while (std::getline(ss, item, sep)) {
        double v;
        char trail = 0;
        if (std::sscanf(item.c_str(), "%lf%c", &v, &trail) != 1)
            throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError(std::string(flag) + ": empty grid");
    return out;
}

std::vector<hb::cplx> parse_z_grid(const std::string& s) {
    std::vector<hb::cplx> out;
    if (s.find(':') != std::string::npos) {
        for (double v : parse_real_grid(s, "--z")) out.push_back({v, 0.0});
        return out;
    }
    if (s.find(';') != std::string::npos) {
        std::string item;
        std::stringstream ss(s);
        while (std::getline(ss, item, ';'))
            if (!item.empty()) out.push_back(parse_z(item));
    } else {
        out.push_back(parse_z(s));
    }
    if (out.empty()) throw UsageError("--z: empty grid");
    return out;
}

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw UsageError("--output: expected text, json or csv");
}

// Output sink: --out redirects the report stream to a file; summary lines
// stay on stdout so machine-readable streams remain clean.
struct Sink {
    std::ofstream file;
    bool to_file = false;

    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw UsageError("--out: cannot open '" + path + "'");
            to_file = true;
        }
    }
    std::ostream& stream() { return to_file ? file : std::cout; }
};

void emit_reports(const std::vector<hb::IdentityReport>& reports, Format fmt, Sink& sink) {
    std::ostream& os = sink.stream();
    if (fmt == Format::Csv) os << hb::report_csv_header() << "\n";
    for (const auto& r : reports) {
        switch (fmt) {
        case Format::Json:
            os << hb::report_json_line(r) << "\n";
            break;
        case Format::Csv:
            os << hb::report_csv_row(r) << "\n";
            break;
        case Format::Text:
            os << r.identity_name;
            for (const auto& [k, v] : r.params) {
                os << " " << k << "=" << v.real();
                if (v.imag() != 0.0) os << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
            }
            char buf[128];
            std::snprintf(buf, sizeof(buf), "  rel_residual=%.3e  [%s vs %s]%s",
                          r.rel_residual, r.lhs_method.c_str(), r.rhs_method.c_str(),
                          r.converged ? "" : "  NOT CONVERGED");
            os << buf << "\n";
            break;
        }
    }
}

int cmd_eval_f(const std::string& z_str, double x, const std::string& method, double tol,
               Format fmt, Sink& sink) {
    const hb::cplx z = parse_z(z_str);
    hb::MethodChoice m;
    try {
        m = hb::method_from_string(method);
    } catch (const hb::domain_error& e) {
        throw UsageError(std::string("--method: ") + e.what());
    }
    const hb::FEvalResult r = hb::f_eval({z, x, m, tol});
    std::ostream& os = sink.stream();
    if (fmt == Format::Json) {
        nlohmann::ordered_json j;
        j["z"] = {{"re", z.real()}, {"im", z.imag()}};
        j["x"] = x;
        j["value"] = {{"re", r.result.value.real()}, {"im", r.result.value.imag()}};
        j["abs_error_estimate"] = r.result.abs_error_estimate;
        j["terms_used"] = r.result.terms_used;
        j["method"] = hb::to_string(r.method);
        j["converged"] = r.result.converged;
        os << j.dump() << "\n";
    } else if (fmt == Format::Csv) {
        os << "z_re,z_im,x,value_re,value_im,abs_error_estimate,terms_used,method,converged\n";
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%ld,%s,%d\n",
                      z.real(), z.imag(), x, r.result.value.real(), r.result.value.imag(),
                      r.result.abs_error_estimate, r.result.terms_used,
                      hb::to_string(r.method).c_str(), r.result.converged ? 1 : 0);
        os << buf;
    } else {
        char buf[256];
        if (z.imag() == 0.0 && r.result.value.imag() == 0.0)
            std::snprintf(buf, sizeof(buf), "F(%g, %g) = %.15g\n", z.real(), x,
                          r.result.value.real());
        else
            std::snprintf(buf, sizeof(buf), "F(%g%+gi, %g) = %.15g%+.15gi\n", z.real(),
                          z.imag(), x, r.result.value.real(), r.result.value.imag());
        os << buf;
        std::snprintf(buf, sizeof(buf),
                      "method=%s  terms=%ld  error_estimate=%.3e  converged=%s\n",
                      hb::to_string(r.method).c_str(), r.result.terms_used,
                      r.result.abs_error_estimate, r.result.converged ? "yes" : "no");
        os << buf;
    }
    return r.result.converged ? 0 : 3;
}

int run_points(const std::string& identity, const std::vector<hb::IdentityPoint>& pts,
               double tol, Format fmt, Sink& sink, bool summary) {
    hb::SweepOutcome out;
    for (const auto& pt : pts) hb::detail::sweep_point(out, identity, pt, tol);
    if (out.reports.empty()) {
        std::cerr << identity << ": no admissible points (" << out.skipped << " skipped)\n";
        return 2;
    }
    emit_reports(out.reports, fmt, sink);
    if (summary) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "# %zu reports, %ld skipped, max_rel_residual=%.3e, %s\n",
                      out.reports.size(), out.skipped, out.max_rel_residual,
                      out.all_pass ? "all pass" : "FAILURES");
        (sink.to_file ? std::cout : (fmt == Format::Text ? std::cout : std::cerr)) << buf;
    }
    return out.all_pass ? 0 : 3;
}

int cmd_check(const std::string& identity, const std::string& z_str,
              std::optional<double> x, std::optional<long> p, double tol, Format fmt,
              Sink& sink) {
    bool known = identity == "all";
    for (const auto& n : hb::identity_names()) known = known || n == identity;
    if (!known) {
        std::string msg = "--identity: unknown '" + identity + "'; valid:";
        for (const auto& n : hb::identity_names()) msg += " " + n;
        throw UsageError(msg);
    }
    hb::IdentityPoint pt;
    if (!z_str.empty()) pt.z = parse_z(z_str);
    pt.x = x;
    pt.p = p;
    return run_points(identity, {pt}, tol, fmt, sink, false);
}

int cmd_sweep(const std::string& identity, const std::string& z_grid,
              const std::string& x_grid, const std::string& p_grid, double tol, Format fmt,
              Sink& sink) {
    bool known = identity == "all";
    for (const auto& n : hb::identity_names()) known = known || n == identity;
    if (!known) {
        std::string msg = "--identity: unknown '" + identity + "'; valid: all";
        for (const auto& n : hb::identity_names()) msg += " " + n;
        throw UsageError(msg);
    }
    if (z_grid.empty() && x_grid.empty() && p_grid.empty()) {
        // Canonical hard-coded grids.
        hb::SweepOutcome out = hb::default_sweep(identity, tol);
        emit_reports(out.reports, fmt, sink);
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "# %zu reports, %ld skipped, max_rel_residual=%.3e, %s\n",
                      out.reports.size(), out.skipped, out.max_rel_residual,
                      out.all_pass ? "all pass" : "FAILURES");
        (sink.to_file ? std::cout : (fmt == Format::Text ? std::cout : std::cerr)) << buf;
        if (out.reports.empty()) return 2;
        return out.all_pass ? 0 : 3;
    }
    if (identity == "all")
        throw UsageError("--identity all uses the built-in grids; drop --z/--x/--p");
    std::vector<hb::cplx> zs;
    std::vector<double> xs;
    std::vector<long> ps;
    if (!z_grid.empty()) zs = parse_z_grid(z_grid);
    if (!x_grid.empty()) xs = parse_real_grid(x_grid, "--x");
    if (!p_grid.empty())
        for (double v : parse_real_grid(p_grid, "--p")) ps.push_back(static_cast<long>(v));
    // z-major, then x ordering; absent axes contribute a single empty slot.
    std::vector<hb::IdentityPoint> pts;
    const size_t nz = zs.empty() ? 1 : zs.size();
    const size_t nx = xs.empty() ? 1 : xs.size();
    const size_t np = ps.empty() ? 1 : ps.size();
    for (size_t ip = 0; ip < np; ++ip)
        for (size_t iz = 0; iz < nz; ++iz)
            for (size_t ix = 0; ix < nx; ++ix) {
                hb::IdentityPoint pt;
                if (!zs.empty()) pt.z = zs[iz];
                if (!xs.empty()) pt.x = xs[ix];
                if (!ps.empty()) pt.p = ps[ip];
                pts.push_back(pt);
            }
    return run_points(identity, pts, tol, fmt, sink, true);
}

int cmd_table(const std::string& what, long n, Format fmt, Sink& sink) {
    std::ostream& os = sink.stream();
    if (what == "stirling") {
        if (n < 0 || n > 20) {
            std::cerr << "table: stirling rows are exact only up to n=20\n";
            return 2;
        }
        const hb::StirlingTable tbl(static_cast<int>(n));
        if (fmt == Format::Json) {
            nlohmann::ordered_json j;
            j["max_n"] = n;
            auto& rows = j["entries"] = nlohmann::ordered_json::array();
            for (long i = 0; i <= n; ++i) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (long k = 0; k <= i; ++k)
                    row.push_back(tbl(static_cast<int>(i), static_cast<int>(k)));
                rows.push_back(std::move(row));
            }
            os << j.dump() << "\n";
        } else {
            const char* sep = fmt == Format::Csv ? "," : " ";
            for (long i = 0; i <= n; ++i) {
                for (long k = 0; k <= i; ++k)
                    os << (k ? sep : "") << tbl(static_cast<int>(i), static_cast<int>(k));
                os << "\n";
            }
        }
        return 0;
    }
    if (what == "harmonic") {
        if (n < 0) {
            std::cerr << "table: --n must be non-negative\n";
            return 2;
        }
        if (fmt == Format::Json) {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (long i = 0; i <= n; ++i) j.push_back(hb::harmonic(i));
            os << j.dump() << "\n";
        } else {
            char buf[64];
            for (long i = 0; i <= n; ++i) {
                std::snprintf(buf, sizeof(buf), "%.17g\n", hb::harmonic(i));
                if (fmt == Format::Csv)
                    os << i << "," << buf;
                else
                    os << buf;
            }
        }
        return 0;
    }
    throw UsageError("--what: expected stirling or harmonic");
}

int cmd_taylor(double x, double tol, Format fmt, Sink& sink) {
    if (x < 0.0 || x > 1.0) {
        std::cerr << "taylor: both coefficient forms require 0 <= x <= 1\n";
        return 2;
    }
    std::ostream& os = sink.stream();
    if (fmt == Format::Csv) os << "k,stirling_form,polylog_form,diff\n";
    for (int k = 1; k <= 6; ++k) {
        const hb::TaylorCoeff c = hb::f_taylor_coeff(k, x);
        const double diff = std::abs(c.stirling_form - c.polylog_form);
        char buf[160];
        switch (fmt) {
        case Format::Json: {
            nlohmann::ordered_json j;
            j["k"] = k;
            j["stirling_form"] = c.stirling_form;
            j["polylog_form"] = c.polylog_form;
            j["diff"] = diff;
            os << j.dump() << "\n";
            break;
        }
        case Format::Csv:
            std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.3e\n", k, c.stirling_form,
                          c.polylog_form, diff);
            os << buf;
            break;
        case Format::Text:
            std::snprintf(buf, sizeof(buf), "c_%d  %+.15g  %+.15g  (diff %.3e)\n", k,
                          c.stirling_form, c.polylog_form, diff);
            os << buf;
            break;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binomial-harmonic series evaluator"};
    app.require_subcommand(1);

    std::string z_str, method = "auto", identity, what = "stirling";
    std::string z_grid, x_grid, p_grid, output = "text", out_path;
    double x = 0.0, tol = 1e-10;
    long n = 10, p = 0;
    bool has_x = false, has_p = false;

    auto add_io = [&](CLI::App* c) {
        c->add_option("--output", output, "text, json or csv");
        c->add_option("--out", out_path, "write report stream to file");
        c->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);
    };

    auto* eval = app.add_subcommand("eval-f", "evaluate F(z,x)");
    eval->add_option("--z", z_str, "z as re or re,im")->required();
    eval->add_option("--x", x, "argument x")->required();
    eval->add_option("--method", method, "series|closed_pos|closed_neg|integral|"
                                         "functional_eq|finite_integer|at_one|auto");
    add_io(eval);

    auto* check = app.add_subcommand("check", "run one identity at a point");
    check->add_option("--identity", identity, "identity name")->required();
    check->add_option("--z", z_str, "z as re or re,im");
    check->add_option("--x", x, "argument x")->each([&](const std::string&) { has_x = true; });
    check->add_option("--p", p, "integer parameter")
        ->each([&](const std::string&) { has_p = true; });
    add_io(check);

    auto* sweep = app.add_subcommand("sweep", "run identity grids");
    sweep->add_option("--identity", identity, "identity name or 'all'")->required();
    sweep->add_option("--z", z_grid, "z grid: start:stop:step or ';' list");
    sweep->add_option("--x", x_grid, "x grid: start:stop:step or ',' list");
    sweep->add_option("--p", p_grid, "p grid");
    add_io(sweep);

    auto* table = app.add_subcommand("table", "dump stirling or harmonic tables");
    table->add_option("--what", what, "stirling or harmonic");
    table->add_option("--n", n, "max row / index");
    add_io(table);

    auto* taylor = app.add_subcommand("taylor", "Taylor coefficients c_1..c_6 at x");
    taylor->add_option("--x", x, "argument x")->required();
    add_io(taylor);

    CLI11_PARSE(app, argc, argv);

    try {
        Sink sink(out_path);
        const Format fmt = parse_format(output);
        if (eval->parsed()) return cmd_eval_f(z_str, x, method, tol, fmt, sink);
        if (check->parsed())
            return cmd_check(identity, z_str,
                             has_x ? std::optional<double>(x) : std::nullopt,
                             has_p ? std::optional<long>(p) : std::nullopt, tol, fmt, sink);
        if (sweep->parsed()) return cmd_sweep(identity, z_grid, x_grid, p_grid, tol, fmt, sink);
        if (table->parsed()) return cmd_table(what, n, fmt, sink);
        if (taylor->parsed()) return cmd_taylor(x, tol, fmt, sink);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const hb::no_admissible_method_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hb::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hb::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
