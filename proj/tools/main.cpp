#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmzeta/fit.hpp"
#include "qmzeta/verify.hpp"
#include "qmzeta/zeta.hpp"

namespace {

using qmzeta::QSpec;
using qmzeta::Rational;
using qmzeta::Route;
using qmzeta::ZetaQuery;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadConfig = 2;

struct RunConfig {
    std::string command;
    long n = 5;
    long n_min = 2, n_max = 6;
    long m = 2;
    long m_min = 0, m_max = 2;
    long s = 1;
    long s_min = 1, s_max = 2;
    bool star = false;
    std::string kind = "both";  // verify: star | nonstar | both
    std::string q_text;         // empty: root of unity
    long root_exponent = 1;
    std::vector<std::string> routes;  // value: empty means every valid route
    std::string route;                // table/fit: single route, "auto" default
    std::string format = "plain";     // plain | json | csv
    std::string out_path;
    std::string inject_fault;
    std::string ref_path;  // fit: reference coefficient file
    std::string ref_label;
    long n_start = 0;
    long max_samples = 64;
    long l = 1;  // fpoly
};

QSpec parse_qspec(const RunConfig& cfg) {
    if (cfg.q_text.empty()) return QSpec::root(cfg.root_exponent);
    return QSpec::rational(Rational::from_string(cfg.q_text));
}

ordered_json config_echo(const RunConfig& cfg) {
    ordered_json j;
    j["command"] = cfg.command;
    if (cfg.command == "value") {
        j["n"] = cfg.n;
        j["m"] = cfg.m;
        j["s"] = cfg.s;
        j["star"] = cfg.star;
        j["q"] = parse_qspec(cfg).label(cfg.n);
    } else if (cfg.command == "table" || cfg.command == "verify") {
        j["n_min"] = cfg.n_min;
        j["n_max"] = cfg.n_max;
        j["m_min"] = cfg.m_min;
        j["m_max"] = cfg.m_max;
        j["s_min"] = cfg.s_min;
        j["s_max"] = cfg.s_max;
        j["kind"] = cfg.kind;
        if (!cfg.q_text.empty()) j["q"] = cfg.q_text;
        if (cfg.command == "table") j["route"] = cfg.route;
        if (!cfg.inject_fault.empty()) j["inject_fault"] = cfg.inject_fault;
    } else if (cfg.command == "fit") {
        j["m"] = cfg.m;
        j["s"] = cfg.s;
        j["star"] = cfg.star;
        j["route"] = cfg.route;
        if (cfg.n_start > 0) j["n_start"] = cfg.n_start;
        j["max_samples"] = cfg.max_samples;
        if (!cfg.ref_path.empty()) j["ref"] = cfg.ref_path;
    } else if (cfg.command == "fpoly") {
        j["s"] = cfg.s;
        j["l"] = cfg.l;
    }
    j["format"] = cfg.format;
    return j;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
    out << text;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += "\"\"";
        else r += c;
    }
    return r + "\"";
}

struct ReportRow {
    ordered_json fields;  // flat string/number/bool map, insertion-ordered
};

std::string render_rows(const RunConfig& cfg, const std::vector<ReportRow>& rows,
                        const ordered_json& summary) {
    std::ostringstream os;
    if (cfg.format == "json") {
        ordered_json j;
        j["config"] = config_echo(cfg);
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) j["rows"].push_back(r.fields);
        j["summary"] = summary;
        os << j.dump(2) << "\n";
        return os.str();
    }
    if (cfg.format == "csv") {
        if (!rows.empty()) {
            bool first = true;
            for (auto it = rows[0].fields.begin(); it != rows[0].fields.end(); ++it) {
                if (!first) os << ",";
                os << csv_escape(it.key());
                first = false;
            }
            os << "\n";
            for (const auto& r : rows) {
                first = true;
                for (auto it = r.fields.begin(); it != r.fields.end(); ++it) {
                    if (!first) os << ",";
                    const auto& v = it.value();
                    if (v.is_string()) os << csv_escape(v.get<std::string>());
                    else os << v.dump();
                    first = false;
                }
                os << "\n";
            }
        }
        return os.str();
    }
    // plain
    for (const auto& r : rows) {
        bool first = true;
        for (auto it = r.fields.begin(); it != r.fields.end(); ++it) {
            if (!first) os << "  ";
            const auto& v = it.value();
            os << it.key() << "=";
            if (v.is_string()) os << v.get<std::string>();
            else os << v.dump();
            first = false;
        }
        os << "\n";
    }
    for (auto it = summary.begin(); it != summary.end(); ++it)
        os << it.key() << ": " << it.value().dump() << "\n";
    return os.str();
}

ordered_json base_row(const ZetaQuery& q) {
    ordered_json j;
    j["n"] = q.n;
    j["m"] = q.m;
    j["s"] = q.s;
    j["q"] = q.q.label(q.n);
    j["star"] = q.star;
    return j;
}

int cmd_value(const RunConfig& cfg) {
    ZetaQuery query{cfg.n, cfg.m, cfg.s, cfg.star, parse_qspec(cfg)};
    qmzeta::validate_query(query);
    std::vector<Route> selected;
    const bool want_all =
        cfg.routes.empty() ||
        std::find(cfg.routes.begin(), cfg.routes.end(), "all") != cfg.routes.end();
    if (want_all) {
        selected = qmzeta::routes_for(query.star);
    } else {
        for (const auto& name : cfg.routes) {
            auto r = qmzeta::route_from_name(name);
            if (!r) throw std::invalid_argument("unknown route: " + name);
            selected.push_back(*r);
        }
    }
    struct Eval {
        Route route;
        int status;  // 0 ok, 1 invalid-here, 2 error
        Rational value;
        std::string note;
    };
    std::vector<Eval> evals;
    for (Route r : selected) {
        Eval e{r, 0, Rational(0), ""};
        if (!qmzeta::route_valid(r, query)) {
            e.status = 1;
            e.note = qmzeta::route_requirement(r, query.star);
        } else {
            try {
                e.value = qmzeta::eval_route(r, query);
            } catch (const std::exception& ex) {
                e.status = 2;
                e.note = ex.what();
            }
        }
        evals.push_back(std::move(e));
    }
    bool any_ok = false, mismatch = false, any_error = false;
    Rational consensus;
    for (const auto& e : evals) {
        if (e.status == 2) any_error = true;
        if (e.status != 0) continue;
        if (!any_ok) {
            consensus = e.value;
            any_ok = true;
        } else if (e.value != consensus) {
            mismatch = true;
        }
    }
    const bool agree = any_ok && !mismatch && !any_error;
    std::vector<ReportRow> rows;
    for (const auto& e : evals) {
        ordered_json j = base_row(query);
        j["route"] = qmzeta::route_name(e.route);
        if (e.status == 0) j["value"] = e.value.to_string();
        else j["value"] = nullptr;
        j["agree"] = agree;
        if (e.status == 1) j["note"] = "not applicable: " + e.note;
        if (e.status == 2) j["error"] = e.note;
        rows.push_back({std::move(j)});
    }
    ordered_json summary;
    summary["routes_evaluated"] = static_cast<long>(std::count_if(
        evals.begin(), evals.end(), [](const Eval& e) { return e.status == 0; }));
    summary["pass"] = agree ? 1 : 0;
    summary["fail"] = agree ? 0 : 1;
    if (any_ok) summary["value"] = consensus.to_string();
    emit(cfg, render_rows(cfg, rows, summary));
    if (!any_ok) return kExitBadConfig;  // nothing could evaluate this query
    return agree ? kExitOk : kExitCheckFailed;
}

int cmd_table(const RunConfig& cfg) {
    QSpec qspec = parse_qspec(cfg);
    const bool do_star = cfg.kind != "nonstar";
    const bool do_nonstar = cfg.kind != "star";
    if (cfg.kind != "star" && cfg.kind != "nonstar" && cfg.kind != "both")
        throw std::invalid_argument("kind must be star, nonstar, or both");
    std::vector<ReportRow> rows;
    long emitted = 0;
    for (long n = cfg.n_min; n <= cfg.n_max; ++n)
        for (long m = cfg.m_min; m <= cfg.m_max; ++m)
            for (long s = cfg.s_min; s <= cfg.s_max; ++s)
                for (int st = 0; st < 2; ++st) {
                    if (st == 0 && !do_nonstar) continue;
                    if (st == 1 && !do_star) continue;
                    ZetaQuery query{n, m, s, st == 1, qspec};
                    qmzeta::validate_query(query);
                    Route route;
                    if (cfg.route == "auto") {
                        route = query.star
                                    ? (qspec.is_root() ? Route::GenFun : Route::Stirling)
                                    : (qspec.is_root() ? Route::Newton : Route::Stirling);
                    } else {
                        auto r = qmzeta::route_from_name(cfg.route);
                        if (!r) throw std::invalid_argument("unknown route: " + cfg.route);
                        route = *r;
                    }
                    if (!qmzeta::route_valid(route, query)) continue;
                    ordered_json j = base_row(query);
                    j["route"] = qmzeta::route_name(route);
                    j["value"] = qmzeta::eval_route(route, query).to_string();
                    j["agree"] = true;  // single-route table rows carry no comparison
                    rows.push_back({std::move(j)});
                    ++emitted;
                }
    if (emitted == 0) throw std::invalid_argument("table: no evaluable cells in range");
    ordered_json summary;
    summary["rows"] = emitted;
    summary["pass"] = emitted;
    summary["fail"] = 0;
    emit(cfg, render_rows(cfg, rows, summary));
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    qmzeta::GridSpec grid;
    grid.n_min = cfg.n_min;
    grid.n_max = cfg.n_max;
    grid.m_min = cfg.m_min;
    grid.m_max = cfg.m_max;
    grid.s_min = cfg.s_min;
    grid.s_max = cfg.s_max;
    if (cfg.kind == "star") grid.nonstar = false;
    else if (cfg.kind == "nonstar") grid.star = false;
    else if (cfg.kind != "both") throw std::invalid_argument("kind must be star, nonstar, or both");
    grid.q = parse_qspec(cfg);
    std::optional<Route> fault;
    if (!cfg.inject_fault.empty()) {
        fault = qmzeta::route_from_name(cfg.inject_fault);
        if (!fault) throw std::invalid_argument("unknown route: " + cfg.inject_fault);
    }
    auto cells = qmzeta::verify_grid(grid, fault);
    if (cells.empty()) throw std::invalid_argument("verify: no evaluable cells in range");
    long pass = 0, fail = 0;
    std::vector<ReportRow> rows;
    for (const auto& cell : cells) {
        (cell.agree ? pass : fail) += 1;
        for (const auto& out : cell.outcomes) {
            ordered_json j = base_row(cell.query);
            j["route"] = qmzeta::route_name(out.route);
            if (out.evaluated) j["value"] = out.value.to_string();
            else j["value"] = nullptr;
            j["agree"] = cell.agree;
            if (!out.error.empty()) j["error"] = out.error;
            rows.push_back({std::move(j)});
        }
    }
    ordered_json summary;
    summary["cells"] = static_cast<long>(cells.size());
    summary["pass"] = pass;
    summary["fail"] = fail;
    emit(cfg, render_rows(cfg, rows, summary));
    return fail == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_fit(const RunConfig& cfg) {
    Route route;
    if (cfg.route == "auto") route = cfg.star ? Route::GenFun : Route::Newton;
    else {
        auto r = qmzeta::route_from_name(cfg.route);
        if (!r) throw std::invalid_argument("unknown route: " + cfg.route);
        route = *r;
    }
    qmzeta::FitResult fit =
        qmzeta::fit_zeta_npoly(cfg.m, cfg.s, cfg.star, route, cfg.n_start, cfg.max_samples);
    ordered_json row;
    row["m"] = cfg.m;
    row["s"] = cfg.s;
    row["star"] = cfg.star;
    row["route"] = qmzeta::route_name(route);
    row["degree"] = fit.poly.degree();
    ordered_json coeffs = ordered_json::array();
    for (long i = 0; i <= fit.poly.degree(); ++i) coeffs.push_back(fit.poly.coeff(i).to_string());
    row["coeffs"] = coeffs;
    row["pretty"] = fit.poly.to_string("n");
    row["n_start"] = fit.n_start;
    row["samples_used"] = fit.samples_used;
    bool checked = false, match = false;
    if (!cfg.ref_path.empty()) {
        std::ifstream in(cfg.ref_path);
        if (!in) throw std::invalid_argument("cannot read reference file: " + cfg.ref_path);
        ordered_json ref = ordered_json::parse(in);
        const ordered_json* entry = nullptr;
        for (const auto& e : ref) {
            if (!cfg.ref_label.empty()) {
                if (e.at("label").get<std::string>() == cfg.ref_label) { entry = &e; break; }
                continue;
            }
            if (e.at("star").get<bool>() == cfg.star && e.at("m").get<long>() == cfg.m &&
                e.at("s").get<long>() == cfg.s) {
                entry = &e;
                break;
            }
        }
        if (!entry) throw std::invalid_argument("no matching entry in reference file");
        checked = true;
        std::vector<Rational> want;
        for (const auto& c : entry->at("coeffs")) want.push_back(Rational::from_string(c.get<std::string>()));
        while (!want.empty() && want.back().is_zero()) want.pop_back();
        match = static_cast<long>(want.size()) == fit.poly.degree() + 1;
        for (long i = 0; match && i <= fit.poly.degree(); ++i)
            if (want[static_cast<size_t>(i)] != fit.poly.coeff(i)) match = false;
        row["ref_label"] = entry->at("label").get<std::string>();
        row["match"] = match;
    }
    ordered_json summary;
    summary["pass"] = (!checked || match) ? 1 : 0;
    summary["fail"] = (!checked || match) ? 0 : 1;
    std::vector<ReportRow> rows;
    rows.push_back({std::move(row)});
    emit(cfg, render_rows(cfg, rows, summary));
    return (!checked || match) ? kExitOk : kExitCheckFailed;
}

int cmd_fpoly(const RunConfig& cfg) {
    qmzeta::BiPoly f = qmzeta::f_poly(cfg.s, cfg.l);
    std::vector<ReportRow> rows;
    if (cfg.format == "csv") {
        for (long i = 0; i <= std::max<long>(f.x_degree(), 0); ++i)
            for (long j = 0; j <= std::max<long>(f.y_degree(), 0); ++j) {
                ordered_json r;
                r["x_power"] = i;
                r["y_power"] = j;
                r["coeff"] = f.coeff(i, j).to_string();
                rows.push_back({std::move(r)});
            }
        ordered_json summary;
        summary["pass"] = 1;
        summary["fail"] = 0;
        emit(cfg, render_rows(cfg, rows, summary));
        return kExitOk;
    }
    ordered_json row;
    row["s"] = cfg.s;
    row["l"] = cfg.l;
    row["x_degree"] = f.x_degree();
    row["y_degree"] = f.y_degree();
    ordered_json grid = ordered_json::array();
    for (long i = 0; i <= f.x_degree(); ++i) {
        ordered_json grow = ordered_json::array();
        for (long j = 0; j <= f.y_degree(); ++j) grow.push_back(f.coeff(i, j).to_string());
        grid.push_back(grow);
    }
    row["grid"] = grid;
    row["pretty"] = f.to_string();
    ordered_json summary;
    summary["pass"] = 1;
    summary["fail"] = 0;
    std::vector<ReportRow> out_rows;
    out_rows.push_back({std::move(row)});
    emit(cfg, render_rows(cfg, out_rows, summary));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact q-multiple zeta and zeta-star values at roots of unity and rational q"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format: plain, json, or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        sub->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
    };
    auto add_qopts = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q_text,
                        "Rational base point, e.g. 2 or 3/5 (default: primitive root of unity)");
        sub->add_option("--root-exponent", cfg.root_exponent,
                        "Use zeta_n^a as the root of unity; a must be coprime to n");
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--n-min", cfg.n_min, "Smallest n");
        sub->add_option("--n-max", cfg.n_max, "Largest n");
        sub->add_option("--m-min", cfg.m_min, "Smallest depth m");
        sub->add_option("--m-max", cfg.m_max, "Largest depth m");
        sub->add_option("--s-min", cfg.s_min, "Smallest level s");
        sub->add_option("--s-max", cfg.s_max, "Largest level s");
        sub->add_option("--kind", cfg.kind, "star, nonstar, or both")
            ->check(CLI::IsMember({"star", "nonstar", "both"}));
    };

    CLI::App* value = app.add_subcommand("value", "Evaluate one (n, m, s) query on every route");
    value->add_option("--n", cfg.n, "Sum length bound n >= 2")->required();
    value->add_option("--m", cfg.m, "Depth m >= 0")->required();
    value->add_option("--s", cfg.s, "Level s >= 1")->required();
    value->add_flag("--star", cfg.star, "Weak (star) instead of strict index tuples");
    value->add_option("--routes", cfg.routes, "Comma-separated route subset")->delimiter(',');
    add_qopts(value);
    add_common(value);

    CLI::App* table = app.add_subcommand("table", "Tabulate values over a grid with one route");
    add_grid(table);
    table->add_option("--route", cfg.route, "Route to use, or auto")->default_val("auto");
    add_qopts(table);
    add_common(table);

    CLI::App* verify =
        app.add_subcommand("verify", "Cross-check all valid routes against each other on a grid");
    add_grid(verify);
    verify->add_option("--inject-fault", cfg.inject_fault,
                       "Perturb this route by +1 (negative control; the run must then fail)");
    add_qopts(verify);
    add_common(verify);

    CLI::App* fit = app.add_subcommand(
        "fit", "Reconstruct the exact polynomial in n behind a (m, s, star) family");
    fit->add_option("--m", cfg.m, "Depth m >= 0")->required();
    fit->add_option("--s", cfg.s, "Level s >= 1")->required();
    fit->add_flag("--star", cfg.star, "Fit the star family");
    fit->add_option("--route", cfg.route, "Sampling route, or auto")->default_val("auto");
    fit->add_option("--n-start", cfg.n_start, "First sample node (0: smallest admissible)");
    fit->add_option("--max-samples", cfg.max_samples, "Sample budget before giving up");
    fit->add_option("--ref", cfg.ref_path, "JSON file of reference coefficient lists");
    fit->add_option("--ref-label", cfg.ref_label, "Pick the reference entry by label");
    add_common(fit);

    CLI::App* fpoly = app.add_subcommand(
        "fpoly", "Characteristic polynomial of the l-th compound of the level-s companion matrix");
    fpoly->add_option("--s", cfg.s, "Level s, 1 <= s <= 6")->required();
    fpoly->add_option("--l", cfg.l, "Compound order l, 0 <= l <= s")->required();
    add_common(fpoly);

    CLI11_PARSE(app, argc, argv);

    try {
        if (value->parsed()) {
            cfg.command = "value";
            return cmd_value(cfg);
        }
        if (table->parsed()) {
            cfg.command = "table";
            return cmd_table(cfg);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg);
        }
        if (fit->parsed()) {
            cfg.command = "fit";
            return cmd_fit(cfg);
        }
        if (fpoly->parsed()) {
            cfg.command = "fpoly";
            return cmd_fpoly(cfg);
        }
    } catch (const qmzeta::NonRationalError& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const qmzeta::ValuationError& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }
    return kExitBadConfig;
}
