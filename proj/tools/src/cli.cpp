#include "ramanujan_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace ramanujan::cli {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw SpecError("cannot parse number '" + text + "'");
    }
    if (used != text.size()) throw SpecError("cannot parse number '" + text + "'");
    return v;
}

// Real scalar: signed decimal, p/q or symbolic token.
double parse_real(std::string text) {
    text = trim(text);
    double sign = 1.0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        if (text[0] == '-') sign = -1.0;
        text = text.substr(1);
    }
    if (text.empty()) throw SpecError("empty value");
    if (text == "pi") return sign * pi;
    if (text == "2pi") return sign * 2.0 * pi;
    if (text == "4pi2") return sign * 4.0 * pi * pi;
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const double den = parse_real(text.substr(slash + 1));
        if (den == 0.0) throw SpecError("zero denominator in '" + text + "'");
        return sign * parse_real(text.substr(0, slash)) / den;
    }
    return sign * parse_number(text);
}

std::string format17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

const char* kind_name(ParamKind k) {
    switch (k) {
        case ParamKind::Integer: return "integer";
        case ParamKind::Real: return "real";
        case ParamKind::Complex: return "complex";
    }
    return "real";
}

void apply_precision_key(PrecisionConfig& p, const std::string& key, const std::string& value) {
    if (key == "rel_tol") p.rel_tol = parse_real(value);
    else if (key == "abs_tol") p.abs_tol = parse_real(value);
    else if (key == "max_series_terms") p.max_series_terms = static_cast<long>(parse_real(value));
    else if (key == "em_order") p.em_order = static_cast<int>(parse_real(value));
    else if (key == "quad_order") p.quad_order = static_cast<int>(parse_real(value));
    else if (key == "tail_cut") p.tail_cut = parse_real(value);
    else throw SpecError("unknown precision key '" + key + "'");
}

bool is_precision_key(const std::string& key) {
    return key == "rel_tol" || key == "abs_tol" || key == "max_series_terms" || key == "em_order" ||
           key == "quad_order" || key == "tail_cut";
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw SpecError("format must be json or csv, got '" + s + "'");
}

void set_axis(std::vector<GridAxis>& axes, const std::string& name, std::vector<cplx> values) {
    for (auto& a : axes)
        if (a.name == name) {
            a.values = std::move(values);
            return;
        }
    axes.push_back({name, std::move(values)});
}

// Applies one key of a config or grid file. Unrecognized keys are identity parameters.
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "id") cfg.identity = value;
    else if (key == "tol") cfg.tolerance = parse_real(value);
    else if (key == "out") cfg.out_path = value;
    else if (key == "format") cfg.format = parse_format(value);
    else if (key == "jobs") cfg.jobs = static_cast<int>(parse_real(value));
    else if (key == "timing") cfg.timing = value == "1" || value == "true";
    else if (key == "command") {
        if (value == "check") cfg.command = Command::check;
        else if (value == "grid") cfg.command = Command::grid;
        else if (value == "asym") cfg.command = Command::asym;
        else if (value == "list") cfg.command = Command::list;
        else throw SpecError("unknown command '" + value + "'");
    } else if (is_precision_key(key)) apply_precision_key(cfg.precision, key, value);
    else set_axis(cfg.params, key, parse_list(value));
}

const GridAxis* find_axis(const RunConfig& cfg, const std::string& name) {
    for (const auto& a : cfg.params)
        if (a.name == name) return &a;
    return nullptr;
}

int valid_ids_error(std::ostream& err, const std::string& what) {
    err << "error: " << what << "\n";
    return exit_usage;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw SpecError("cannot open output file '" + cfg.out_path + "'");
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_list(const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == Format::json) {
        emit(cfg, dump(listing_to_json()), out);
        return exit_ok;
    }
    std::ostringstream s;
    s << "identity,parameters,hypotheses,anchor,tolerance\n";
    for (const auto& info : list_identities()) {
        std::string params;
        for (const auto& p : info.schema) params += (params.empty() ? "" : " ") + p.name;
        s << info.id << ',' << csv_field(params) << ',' << csv_field(info.hypotheses) << ','
          << csv_field(info.anchor) << ',' << format17(info.tolerance) << '\n';
    }
    emit(cfg, s.str(), out);
    return exit_ok;
}

int run_identity(const RunConfig& cfg, std::ostream& out) {
    const std::string id = run_id(cfg);
    const auto start = std::chrono::steady_clock::now();
    GridReport report;
    if (cfg.command == Command::check) {
        ParamMap params;
        for (const auto& a : cfg.params) {
            if (a.values.size() != 1)
                throw SpecError("check takes one value per parameter; use grid for '" + a.name + "'");
            params[a.name] = a.values.front();
        }
        report.results.push_back(check(cfg.identity, params, cfg.precision, cfg.tolerance));
        if (report.results.back().status == Status::fail) report.failures = 1;
    } else {
        report = grid_check(cfg.identity, cfg.params, cfg.precision, cfg.jobs, cfg.tolerance);
    }
    const double elapsed =
        cfg.timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() : 0.0;
    const double per_row = report.results.empty() ? 0.0 : elapsed / static_cast<double>(report.results.size());

    if (cfg.format == Format::csv) {
        emit(cfg, results_to_csv(report.results), out);
    } else if (cfg.command == Command::check) {
        emit(cfg, dump(result_to_json(report.results.front(), id, per_row)), out);
    } else {
        json rows = json::array();
        for (const auto& r : report.results) rows.push_back(result_to_json(r, id, per_row));
        json doc = {{"run_id", id},
                    {"identity", cfg.identity},
                    {"summary",
                     {{"points", report.results.size()},
                      {"failures", report.failures},
                      {"degraded", report.degraded},
                      {"max_abs_residual", report.max_abs_residual},
                      {"max_rel_residual", report.max_rel_residual}}},
                    {"results", rows}};
        emit(cfg, dump(doc), out);
    }
    return report.failures > 0 ? exit_failed : exit_ok;
}

std::vector<double> real_axis(const RunConfig& cfg, const std::string& name, std::vector<double> fallback) {
    const GridAxis* a = find_axis(cfg, name);
    if (!a) return fallback;
    std::vector<double> v;
    for (cplx z : a->values) {
        if (z.imag() != 0.0) throw SpecError("'" + name + "' must be real");
        v.push_back(z.real());
    }
    return v;
}

int integer_param(const RunConfig& cfg, const std::string& name, int fallback) {
    const auto v = real_axis(cfg, name, {static_cast<double>(fallback)});
    if (v.size() != 1 || v[0] != std::round(v[0])) throw SpecError("'" + name + "' must be a single integer");
    return static_cast<int>(v[0]);
}

int run_asym(const RunConfig& cfg, std::ostream& out) {
    const std::string id = run_id(cfg);
    AsymptoticReport rep;
    double window = 0.0;
    if (cfg.identity == "SIGMA_2M") {
        for (const auto& a : cfg.params)
            if (a.name != "m" && a.name != "r" && a.name != "y") throw SpecError("SIGMA_2M: unknown parameter '" + a.name + "'");
        rep = sigma2m_order_report(integer_param(cfg, "m", 1), integer_param(cfg, "r", 1),
                                   real_axis(cfg, "y", {0.4, 0.2, 0.1, 0.05}), cfg.precision);
        window = 0.5;
    } else if (cfg.identity == "WRIGHT") {
        for (const auto& a : cfg.params)
            if (a.name != "r" && a.name != "x" && a.name != "N") throw SpecError("WRIGHT: unknown parameter '" + a.name + "'");
        rep = wright_order_report(integer_param(cfg, "r", 2), real_axis(cfg, "x", {0.9, 0.95, 0.975}),
                                  integer_param(cfg, "N", 600), cfg.precision);
        window = 0.7;
    } else {
        throw SpecError("asym: unknown id '" + cfg.identity + "'; valid ids: SIGMA_2M WRIGHT");
    }
    const bool within = std::abs(rep.fitted_exponent - rep.expected_exponent) <= window;
    if (cfg.format == Format::csv)
        emit(cfg, report_to_csv(rep), out);
    else
        emit(cfg, dump(report_to_json(rep, cfg.identity, id, window, within)), out);
    return within ? exit_ok : exit_failed;
}

// Splits CLI11 leftovers ("--name value" or "--name=value") into key/value pairs.
std::vector<std::pair<std::string, std::string>> extra_pairs(const std::vector<std::string>& extras) {
    std::vector<std::pair<std::string, std::string>> kv;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const std::string& tok = extras[i];
        if (tok.rfind("--", 0) != 0 || tok.size() < 3) throw SpecError("unexpected argument '" + tok + "'");
        const auto eq = tok.find('=');
        if (eq != std::string::npos) {
            kv.emplace_back(tok.substr(2, eq - 2), tok.substr(eq + 1));
        } else {
            if (i + 1 >= extras.size()) throw SpecError("missing value for '" + tok + "'");
            kv.emplace_back(tok.substr(2), extras[++i]);
        }
    }
    return kv;
}

}  // namespace

void RunConfig::validate() const {
    precision.validate();
    if (jobs < 1) throw SpecError("jobs must be >= 1");
    if (command != Command::list && identity.empty()) throw SpecError("--id is required");
    if (command == Command::grid)
        for (const auto& a : params)
            if (a.values.empty()) throw SpecError("grid axis '" + a.name + "' is empty");
    if (tolerance && !(*tolerance > 0.0)) throw SpecError("tol must be positive");
}

cplx parse_value(const std::string& token) {
    const std::string t = trim(token);
    if (t.empty()) throw SpecError("empty value");
    if (t.back() != 'i' || t == "pi" || (t.size() > 2 && t.substr(t.size() - 2) == "pi" && t.find_first_of("+-", 1) == std::string::npos))
        return parse_real(t);
    const std::string body = t.substr(0, t.size() - 1);
    // split at the last sign that is not leading and not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_real(s);
    };
    if (split == std::string::npos) return {0.0, imag_part(body)};
    return {parse_real(body.substr(0, split)), imag_part(body.substr(split))};
}

std::vector<cplx> parse_list(const std::string& text) {
    std::vector<cplx> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_value(item));
    if (v.empty()) throw SpecError("empty list");
    return v;
}

std::vector<std::pair<std::string, std::string>> parse_key_values(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> kv;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw SpecError("line " + std::to_string(number) + ": expected key=value");
        kv.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return kv;
}

std::string run_id(const RunConfig& cfg) {
    std::ostringstream s;
    s << static_cast<int>(cfg.command) << '|' << cfg.identity << '|';
    for (const auto& a : cfg.params) {
        s << a.name << '=';
        for (cplx z : a.values) s << format17(z.real()) << ':' << format17(z.imag()) << ',';
        s << ';';
    }
    s << '|' << (cfg.tolerance ? format17(*cfg.tolerance) : "default") << '|' << format17(cfg.precision.rel_tol) << ','
      << format17(cfg.precision.abs_tol) << ',' << cfg.precision.max_series_terms << ',' << cfg.precision.em_order << ','
      << cfg.precision.quad_order << ',' << format17(cfg.precision.tail_cut);
    // 64-bit FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json result_to_json(const IdentityCheckResult& r, const std::string& id, double wall_time_ms) {
    json params = json::object();
    for (const auto& p : r.params) {
        if (p.kind == ParamKind::Complex)
            params[p.name] = complex_json(p.value);
        else if (p.kind == ParamKind::Integer)
            params[p.name] = static_cast<long long>(p.value.real());
        else
            params[p.name] = p.value.real();
    }
    json diag = {{"terms", r.diagnostics.terms},
                 {"cells", r.diagnostics.cells},
                 {"tail_bounds", {r.diagnostics.tail_bounds[0], r.diagnostics.tail_bounds[1]}}};
    if (!r.diagnostics.note.empty()) diag["note"] = r.diagnostics.note;
    if (!r.diagnostics.error.empty()) diag["error"] = r.diagnostics.error;
    return {{"run_id", id},
            {"identity", r.identity},
            {"params", params},
            {"lhs", complex_json(r.lhs)},
            {"rhs", complex_json(r.rhs)},
            {"abs_residual", r.abs_residual},
            {"rel_residual", r.rel_residual},
            {"tolerance", r.tolerance},
            {"status", to_string(r.status)},
            {"diagnostics", diag},
            {"wall_time_ms", wall_time_ms}};
}

json report_to_json(const AsymptoticReport& r, const std::string& identity, const std::string& id, double window,
                    bool within) {
    json j = {{"run_id", id},
              {"identity", identity},
              {"label", r.label},
              {"scale", r.scale_name},
              {"eval_points", r.eval_points},
              {"truncation_order", r.truncation_order},
              {"predicted", r.predicted},
              {"exact", r.exact},
              {"errors", r.errors},
              {"fitted_exponent", r.fitted_exponent},
              {"expected_exponent", r.expected_exponent},
              {"exponent_window", window},
              {"status", within ? "pass" : "fail"}};
    if (!std::isnan(r.constant_integral)) {
        j["constant_integral"] = r.constant_integral;
        j["constant_regression"] = r.constant_regression;
        j["constant_difference"] = std::abs(r.constant_integral - r.constant_regression);
    }
    return j;
}

json listing_to_json() {
    json list = json::array();
    for (const auto& info : list_identities()) {
        json schema = json::array();
        for (const auto& p : info.schema) {
            json e = {{"name", p.name}, {"kind", kind_name(p.kind)}, {"description", p.description}};
            if (p.default_value) e["default"] = complex_json(*p.default_value);
            schema.push_back(e);
        }
        list.push_back({{"id", info.id},
                        {"schema", schema},
                        {"hypotheses", info.hypotheses},
                        {"anchor", info.anchor},
                        {"tolerance", info.tolerance}});
    }
    return list;
}

std::string results_to_csv(const std::vector<IdentityCheckResult>& rows) {
    std::ostringstream s;
    s << "identity";
    // header from the first row's parameter list; all rows of one identity share it
    std::vector<std::pair<std::string, ParamKind>> columns;
    if (!rows.empty())
        for (const auto& p : rows.front().params) columns.emplace_back(p.name, p.kind);
    for (const auto& [name, kind] : columns) {
        if (kind == ParamKind::Complex)
            s << ',' << name << "_re," << name << "_im";
        else
            s << ',' << name;
    }
    s << ",abs_residual,rel_residual,status,lhs_re,lhs_im,rhs_re,rhs_im\n";
    for (const auto& r : rows) {
        s << r.identity;
        for (const auto& [name, kind] : columns) {
            cplx v{std::numeric_limits<double>::quiet_NaN(), 0.0};
            for (const auto& p : r.params)
                if (p.name == name) v = p.value;
            if (kind == ParamKind::Complex)
                s << ',' << format17(v.real()) << ',' << format17(v.imag());
            else
                s << ',' << format17(v.real());
        }
        s << ',' << format17(r.abs_residual) << ',' << format17(r.rel_residual) << ',' << to_string(r.status) << ','
          << format17(r.lhs.real()) << ',' << format17(r.lhs.imag()) << ',' << format17(r.rhs.real()) << ','
          << format17(r.rhs.imag()) << '\n';
    }
    return s.str();
}

std::string report_to_csv(const AsymptoticReport& r) {
    std::ostringstream s;
    s << "point,scale,predicted,exact,error\n";
    for (std::size_t i = 0; i < r.eval_points.size(); ++i) {
        const double x = r.eval_points[i];
        const double scale = r.scale_name == "y" ? x : -std::log(x);
        s << format17(x) << ',' << format17(scale) << ',' << format17(r.predicted[i]) << ',' << format17(r.exact[i])
          << ',' << format17(r.errors[i]) << '\n';
    }
    return s.str();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        cfg.validate();
        switch (cfg.command) {
            case Command::list: return run_list(cfg, out);
            case Command::asym: return run_asym(cfg, out);
            case Command::check:
            case Command::grid: return run_identity(cfg, out);
        }
    } catch (const SpecError& e) {
        return valid_ids_error(err, e.what());
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_usage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical verification of Ramanujan-type identities", "ramanujan"};
    app.require_subcommand(0, 1);

    bool list_flag = false;
    app.add_flag("--list", list_flag, "List identities and exit");

    struct Shared {
        std::string id, grid_file, config_file, out_path, format;
        std::optional<double> tol;
        std::optional<int> jobs;
        bool timing = false;
    } opt;

    auto add_common = [&](CLI::App* sub, bool grid) {
        sub->add_option("--id", opt.id, "Identity id");
        sub->add_option("--tol", opt.tol, "Relative tolerance override");
        sub->add_option("--out", opt.out_path, "Output path (default: standard output)");
        sub->add_option("--format", opt.format, "json or csv");
        sub->add_option("--config", opt.config_file, "Flat key=value configuration file");
        sub->add_flag("--timing", opt.timing, "Record wall_time_ms (otherwise 0, for reproducible reports)");
        if (grid) {
            sub->add_option("--grid-file", opt.grid_file, "Grid axes as name=v1,v2,... lines");
            sub->add_option("--jobs", opt.jobs, "Worker threads");
        }
        sub->allow_extras();
        sub->footer("Identity parameters are passed as --name value (comma lists for grid).\n"
                    "Values: decimals, p/q, pi, 2pi, 4pi2, complex a+bi.");
    };
    CLI::App* check_cmd = app.add_subcommand("check", "Check one identity at one parameter point");
    CLI::App* grid_cmd = app.add_subcommand("grid", "Check an identity over a cartesian grid");
    CLI::App* asym_cmd = app.add_subcommand("asym", "Fit the order of an asymptotic expansion (SIGMA_2M, WRIGHT)");
    CLI::App* list_cmd = app.add_subcommand("list", "List identities with schemas");
    add_common(check_cmd, false);
    add_common(grid_cmd, true);
    add_common(asym_cmd, false);
    list_cmd->add_option("--format", opt.format, "json or csv");
    list_cmd->add_option("--out", opt.out_path, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    RunConfig cfg;
    try {
        CLI::App* used = nullptr;
        if (check_cmd->parsed()) used = check_cmd, cfg.command = Command::check;
        else if (grid_cmd->parsed()) used = grid_cmd, cfg.command = Command::grid, cfg.format = Format::csv;
        else if (asym_cmd->parsed()) used = asym_cmd, cfg.command = Command::asym;
        else if (list_cmd->parsed() || list_flag) cfg.command = Command::list;
        else {
            out << app.help();
            return exit_usage;
        }

        if (!opt.config_file.empty()) {
            std::ifstream f(opt.config_file);
            if (!f) throw SpecError("cannot read config file '" + opt.config_file + "'");
            for (const auto& [k, v] : parse_key_values(f)) apply_key(cfg, k, v);
        }
        if (!opt.grid_file.empty()) {
            std::ifstream f(opt.grid_file);
            if (!f) throw SpecError("cannot read grid file '" + opt.grid_file + "'");
            for (const auto& [k, v] : parse_key_values(f)) set_axis(cfg.params, k, parse_list(v));
        }
        if (used)
            for (const auto& [k, v] : extra_pairs(used->remaining())) {
                if (is_precision_key(k)) apply_precision_key(cfg.precision, k, v);
                else set_axis(cfg.params, k, parse_list(v));
            }
        if (!opt.id.empty()) cfg.identity = opt.id;
        if (opt.tol) cfg.tolerance = opt.tol;
        if (!opt.out_path.empty()) cfg.out_path = opt.out_path;
        if (!opt.format.empty()) cfg.format = parse_format(opt.format);
        if (opt.jobs) cfg.jobs = *opt.jobs;
        if (opt.timing) cfg.timing = true;
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return run(cfg, out, err);
}

}  // namespace ramanujan::cli
