#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "alwyn/harness.hpp"
#include "alwyn/matrix.hpp"
#include "alwyn/report.hpp"
#include "alwyn/serialize.hpp"
#include "alwyn/series.hpp"

namespace {

using namespace alwyn;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCheckFailed = 3;

struct Options {
    std::vector<std::string> p{"-3,-2,-1,0,1,2,3"};
    std::vector<std::string> q{"-3,-2,-1,0,1,2,3"};
    std::vector<std::string> r{"-2,-1,0,1,2"};
    std::vector<std::string> a{"-1,0,1,2"};
    std::vector<std::string> b{"-1,0,1,2"};
    int n = 10;
    int n_max = 25;
    int u_max = 5;
    int v_max = 5;
    int m_max = 10;
    int order = 21;
    int threads = 0;
    int max_counterexamples = 10;
    std::string kind = "scalar";
    std::string format;
    std::string out;
    std::string suite;
    std::string mode = "scalar";
    std::string reading = "both";
    std::string grid_name = "default";
    std::string dsl_path;
    std::vector<std::string> identities;
};

std::vector<Rational> parse_rational_list(const std::vector<std::string>& raw,
                                          const char* flag) {
    std::vector<Rational> out;
    for (const auto& chunk : raw) {
        std::stringstream ss(chunk);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            try {
                out.push_back(Rational::parse(item));
            } catch (const Error& e) {
                throw InvalidParams(std::string("bad value for --") + flag + ": " +
                                    e.what());
            }
        }
    }
    if (out.empty())
        throw InvalidParams(std::string("empty value list for --") + flag);
    return out;
}

SeqParams single_point(const Options& o) {
    auto one = [](const std::vector<std::string>& raw, const char* flag) {
        const auto values = parse_rational_list(raw, flag);
        if (values.size() != 1)
            throw InvalidParams(std::string("--") + flag +
                                " must be a single value for this subcommand");
        return values[0];
    };
    SeqParams s{one(o.p, "p"), one(o.q, "q"), one(o.r, "r"), one(o.a, "a"),
                one(o.b, "b")};
    s.validate();
    return s;
}

GridSpec grid_from(const Options& o) {
    GridSpec g;
    if (o.grid_name == "default") {
        g = GridSpec::default_grid();
    } else if (o.grid_name != "flags") {
        throw InvalidParams("unknown grid '" + o.grid_name +
                            "' (expected: default, flags)");
    }
    g.p_values = parse_rational_list(o.p, "p");
    g.q_values = parse_rational_list(o.q, "q");
    g.r_values = parse_rational_list(o.r, "r");
    g.a_values = parse_rational_list(o.a, "a");
    g.b_values = parse_rational_list(o.b, "b");
    g.n_max = o.n_max;
    g.u_max = o.u_max;
    g.v_max = o.v_max;
    g.m_max = o.m_max;
    return g;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    out << text;
    if (!out.good()) throw std::ios_base::failure("short write to '" + path + "'");
}

// Applies a JSON config file as defaults; explicitly passed flags override.
void apply_config(const std::string& path, Options& o, const CLI::App& cmd) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read config '" + path + "'");
    Json cfg;
    try {
        cfg = Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidParams("config is not valid JSON: " + std::string(e.what()));
    }
    auto passed = [&](const std::string& flag) {
        const CLI::Option* opt = cmd.get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    auto list = [&](const char* key, std::vector<std::string>& into) {
        if (!cfg.contains(key) || passed(std::string("--") + key)) return;
        const Json& v = cfg.at(key);
        into.clear();
        if (v.is_array()) {
            std::string joined;
            for (const auto& item : v) {
                if (!joined.empty()) joined += ',';
                joined += item.is_string() ? item.get<std::string>() : item.dump();
            }
            into.push_back(joined);
        } else {
            into.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
    };
    auto integer = [&](const char* key, int& into) {
        if (cfg.contains(key) && !passed(std::string("--") + key))
            into = cfg.at(key).get<int>();
    };
    auto text = [&](const char* key, std::string& into) {
        if (cfg.contains(key) && !passed(std::string("--") + key))
            into = cfg.at(key).get<std::string>();
    };
    list("p", o.p);
    list("q", o.q);
    list("r", o.r);
    list("a", o.a);
    list("b", o.b);
    integer("n", o.n);
    integer("n-max", o.n_max);
    integer("u-max", o.u_max);
    integer("v-max", o.v_max);
    integer("m-max", o.m_max);
    integer("order", o.order);
    integer("threads", o.threads);
    integer("max-counterexamples", o.max_counterexamples);
    text("kind", o.kind);
    text("format", o.format);
    text("out", o.out);
    text("suite", o.suite);
    text("mode", o.mode);
    text("reading", o.reading);
    text("grid", o.grid_name);
    text("dsl", o.dsl_path);
    if (cfg.contains("identity") && !passed("--identity")) {
        o.identities.clear();
        if (cfg.at("identity").is_array())
            for (const auto& item : cfg.at("identity"))
                o.identities.push_back(item.get<std::string>());
        else
            o.identities.push_back(cfg.at("identity").get<std::string>());
    }
}

// ---------------------------------------------------------------- gen

int run_gen(const Options& o) {
    const SeqParams s = single_point(o);
    if (o.n < 0) throw InvalidParams("--n must be >= 0");
    const std::string format = o.format.empty() ? "csv" : o.format;
    std::string text;
    if (o.kind == "scalar") {
        const auto terms = la_terms(s, o.n);
        if (format == "csv") {
            text = "n,value\n";
            for (int k = 0; k < o.n; ++k)
                text += std::to_string(k) + "," + terms[k].str() + "\n";
        } else if (format == "json") {
            for (int k = 0; k < o.n; ++k) {
                Json row{{"n", k}, {"value", terms[k].str()}};
                text += row.dump() + "\n";
            }
        } else {
            throw InvalidParams("unknown format '" + format + "'");
        }
    } else if (o.kind == "hybrid") {
        const auto terms = lah_by_recurrence(s, o.n);
        if (format == "csv") {
            text = "n,re,i,eps,h\n";
            for (int k = 0; k < o.n; ++k)
                text += std::to_string(k) + "," + terms[k].re.str() + "," +
                        terms[k].i.str() + "," + terms[k].eps.str() + "," +
                        terms[k].h.str() + "\n";
        } else if (format == "json") {
            for (int k = 0; k < o.n; ++k) {
                Json row{{"m", k}, {"value", to_json(terms[k])}};
                text += row.dump() + "\n";
            }
        } else {
            throw InvalidParams("unknown format '" + format + "'");
        }
    } else {
        throw InvalidParams("unknown kind '" + o.kind + "' (expected scalar|hybrid)");
    }
    write_text(o.out, text);
    return kExitOk;
}

// -------------------------------------------------------------- check

void write_report(const Options& o, const IdentityReport& report,
                  const std::string& file_stem) {
    if (o.out.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(o.out, ec);
    write_text(o.out + "/" + file_stem + ".json", report.to_json().dump(2) + "\n");
}

std::string summary_line(const IdentityReport& report) {
    std::string line = report.identity + ": " + report.classification;
    line += " pass=" + std::to_string(report.pass());
    line += " fail=" + std::to_string(report.fail());
    line += " skipped=" + std::to_string(report.skipped());
    if (report.artifact_defect) line += " ARTIFACT-DEFECT";
    return line;
}

int run_check(const Options& o) {
    const GridSpec grid = grid_from(o);
    HarnessOptions hopts;
    hopts.threads = o.threads;
    hopts.counterexample_cap = std::max(1, o.max_counterexamples);

    std::vector<std::string> selected = o.identities;
    if (!o.suite.empty()) {
        if (o.suite != "all" && o.suite != "must-pass" && o.suite != "under-test")
            throw InvalidParams("unknown suite '" + o.suite + "'");
        for (const auto& entry : identity_catalog()) {
            const bool in_suite =
                o.suite == "all" ||
                (o.suite == "must-pass" && entry.cls == IdentityClass::must_pass) ||
                (o.suite == "under-test" && entry.cls == IdentityClass::under_test);
            if (in_suite &&
                std::find(selected.begin(), selected.end(), entry.name) ==
                    selected.end())
                selected.push_back(entry.name);
        }
    }
    for (const auto& name : selected)
        if (find_identity(name) == nullptr)
            throw InvalidParams("unknown identity '" + name + "'");

    std::vector<dsl::IdentityAst> dsl_asts;
    if (!o.dsl_path.empty()) {
        std::ifstream in(o.dsl_path);
        if (!in)
            throw std::ios_base::failure("cannot read DSL file '" + o.dsl_path + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            try {
                dsl_asts.push_back(dsl::parse_identity(line));
            } catch (const SyntaxError& e) {
                std::cerr << o.dsl_path << ":" << lineno << ":" << e.column
                          << ": syntax error: " << e.what()
                          << " (expected " << e.expected << ")\n";
                return kExitConfig;
            }
        }
    }
    if (selected.empty() && dsl_asts.empty())
        throw InvalidParams("nothing selected: pass --suite, --identity or --dsl");

    bool any_block = false;
    bool any_under_test_failure = false;
    for (const auto& name : selected) {
        const IdentityReport report = run_identity(name, grid, hopts);
        write_report(o, report, name);
        std::cout << summary_line(report) << "\n";
        any_block |= identity_blocks(report);
        any_under_test_failure |=
            under_test_failure(report, find_identity(name)->cls);
    }
    for (size_t k = 0; k < dsl_asts.size(); ++k) {
        const IdentityReport report = run_dsl_identity(dsl_asts[k], grid, hopts);
        write_report(o, report, "dsl-" + std::to_string(k + 1));
        std::cout << summary_line(report) << "\n";
        any_block |= report.artifact_defect;
        any_under_test_failure |= report.fail() > 0;
    }
    if (any_block || any_under_test_failure) {
        std::cout << "result: check failures recorded\n";
        return kExitCheckFailed;
    }
    std::cout << "result: ok\n";
    return kExitOk;
}

// -------------------------------------------------------------- series

int run_series(const Options& o) {
    const SeqParams s = single_point(o);
    if (o.order < 1) throw InvalidParams("--order must be >= 1");
    const HybridSeries series = expand_ogf(s, o.order);
    Json coeffs = Json::array();
    for (const auto& c : series.coeffs) coeffs.push_back(to_json(c));
    const auto num = ogf_numerator(s);
    const auto den = ogf_denominator(s);
    Json doc{{"params", to_json(s)},
             {"order", o.order},
             {"numerator", Json::array({to_json(num[0]), to_json(num[1]),
                                        to_json(num[2])})},
             {"denominator", Json::array({den[0].str(), den[1].str(), den[2].str(),
                                          den[3].str()})},
             {"coefficients", coeffs}};
    write_text(o.out, doc.dump(2) + "\n");
    return kExitOk;
}

// -------------------------------------------------------------- matrix

int run_matrix(const Options& o) {
    const SeqParams s = single_point(o);
    GridSpec grid;
    grid.p_values = {s.p};
    grid.q_values = {s.q};
    grid.r_values = {s.r};
    grid.a_values = {s.a};
    grid.b_values = {s.b};
    HarnessOptions hopts;
    hopts.threads = o.threads;
    hopts.counterexample_cap = std::max(1, o.max_counterexamples);
    bool failed = false;
    Json docs = Json::array();
    const IdentityReport column = run_identity("column-vector", grid, hopts);
    docs.push_back(column.to_json());
    std::cout << summary_line(column) << "\n";
    failed |= identity_blocks(column);
    const IdentityReport power = matrix_power_identity_check(s, o.m_max, hopts);
    docs.push_back(power.to_json());
    std::cout << summary_line(power) << "\n";
    failed |= identity_blocks(power);
    docs.push_back(Json{{"companion", to_json(companion_matrix(s))}});
    write_text(o.out, docs.dump(2) + "\n");
    return failed ? kExitCheckFailed : kExitOk;
}

// ----------------------------------------------------------------- det

int run_det(const Options& o) {
    const SeqParams s = single_point(o);
    if (o.mode != "scalar" && o.mode != "hybrid")
        throw InvalidParams("unknown mode '" + o.mode + "' (expected scalar|hybrid)");
    if (o.reading != "literal" && o.reading != "uniform" && o.reading != "both")
        throw InvalidParams("unknown reading '" + o.reading +
                            "' (expected literal|uniform|both)");
    if (s.q.is_zero())
        throw InvalidParams("determinant entries divide by w = -q; q must be nonzero");

    Json rows = Json::array();
    std::vector<CerecedaReading> readings;
    if (o.reading != "uniform") readings.push_back(CerecedaReading::literal_display);
    if (o.reading != "literal") readings.push_back(CerecedaReading::uniform_interior);

    if (o.mode == "scalar") {
        if (s.a.is_zero()) throw InvalidParams("seed a must be nonzero (x0 invertible)");
        const auto cp = cereceda_scalar_params(s);
        const auto terms = la_terms(s, o.n_max + 1);
        for (int n = 0; n <= o.n_max; ++n) {
            Json row{{"n", n}, {"expected", terms[n].str()}};
            for (const auto reading : readings) {
                const Rational det =
                    generic_determinant(cereceda_matrix(cp, n, reading));
                const char* key = reading == CerecedaReading::literal_display
                                      ? "literal"
                                      : "uniform";
                row[key] = det.str();
                row[std::string(key) + "_matches"] = det == terms[n];
            }
            rows.push_back(std::move(row));
        }
    } else {
        const auto lah = lah_by_recurrence(s, o.n_max + 1);
        if (character(lah[0]).is_zero())
            throw InvalidParams("LaH(0) has zero character; its inverse is needed");
        for (int n = 0; n <= o.n_max; ++n) {
            Json row{{"n", n}, {"expected", to_json(lah[n])}};
            for (const auto reading : readings) {
                const Hybrid<Rational> det =
                    generic_determinant(lah_cereceda_matrix(s, n, reading));
                const char* key = reading == CerecedaReading::literal_display
                                      ? "literal"
                                      : "uniform";
                row[key] = to_json(det);
                row[std::string(key) + "_matches"] = det == lah[n];
            }
            rows.push_back(std::move(row));
        }
    }
    Json doc{{"params", to_json(s)}, {"mode", o.mode}, {"rows", rows}};
    write_text(o.out, doc.dump(2) + "\n");
    return kExitOk;
}

void add_param_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.p, "p values (comma-separated rationals)");
    cmd->add_option("--q", o.q, "q values");
    cmd->add_option("--r", o.r, "r values");
    cmd->add_option("--a", o.a, "a values (initial term)");
    cmd->add_option("--b", o.b, "b values (second term)");
    cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
    cmd->add_option("--out", o.out, "output path (directory for check)");
    cmd->add_option("--config", "JSON config file; flags override its values");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for generalized Leonardo-Alwyn hybrid sequences"};
    app.require_subcommand(1);
    Options o;

    CLI::App* gen = app.add_subcommand("gen", "generate scalar or hybrid terms");
    add_param_flags(gen, o);
    gen->add_option("--n", o.n, "number of terms");
    gen->add_option("--kind", o.kind, "scalar|hybrid");
    gen->add_option("--format", o.format, "csv|json");

    CLI::App* check = app.add_subcommand("check", "run identity suites over a grid");
    add_param_flags(check, o);
    check->add_option("--suite", o.suite, "must-pass|under-test|all");
    check->add_option("--identity", o.identities, "identity name (repeatable)");
    check->add_option("--dsl", o.dsl_path, "file with one identity per line");
    check->add_option("--grid", o.grid_name, "default|flags");
    check->add_option("--n-max", o.n_max, "max n index");
    check->add_option("--u-max", o.u_max, "max u shift");
    check->add_option("--v-max", o.v_max, "max v shift");
    check->add_option("--m-max", o.m_max, "max m index");
    check->add_option("--max-counterexamples", o.max_counterexamples,
                      "archived counterexamples per report");

    CLI::App* series = app.add_subcommand("series", "expand the generating function");
    add_param_flags(series, o);
    series->add_option("--order", o.order, "truncation order");

    CLI::App* matrix = app.add_subcommand("matrix", "companion-matrix checks");
    add_param_flags(matrix, o);
    matrix->add_option("--m-max", o.m_max, "max matrix power");

    CLI::App* det = app.add_subcommand("det", "bordered tridiagonal reconstruction");
    add_param_flags(det, o);
    det->add_option("--n-max", o.n_max, "max term index");
    det->add_option("--mode", o.mode, "scalar|hybrid");
    det->add_option("--reading", o.reading, "literal|uniform|both");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    CLI::App* active = app.get_subcommands().front();
    try {
        const CLI::Option* config_opt = active->get_option_no_throw("--config");
        if (config_opt != nullptr && config_opt->count() > 0)
            apply_config(config_opt->as<std::string>(), o, *active);

        if (active == gen) return run_gen(o);
        if (active == check) return run_check(o);
        if (active == series) return run_series(o);
        if (active == matrix) return run_matrix(o);
        return run_det(o);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at " << e.line << ":" << e.column << ": "
                  << e.what() << " (expected " << e.expected << ")\n";
        return kExitConfig;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DegenerateParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
