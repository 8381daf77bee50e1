// kostantq — exact q-analog Kostant partition counts on the highest root of
// the classical Lie algebras, computed four independent ways.
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 bad arguments, 3 enumeration limit exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kostantq/closed_form.hpp"
#include "kostantq/errors.hpp"
#include "kostantq/genfun.hpp"
#include "kostantq/oracle.hpp"
#include "kostantq/recurrences.hpp"
#include "kostantq/verify.hpp"

namespace {

using namespace kostantq;
using nlohmann::ordered_json;

enum class ExitCode : int { ok = 0, verify_failed = 1, bad_arguments = 2, limit_exceeded = 3 };

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

QPolynomial compute_by(const std::string& method, const LieType& t) {
    switch (verify::method_from_name(method)) {
        case verify::Method::oracle: return oracle::count_highest_root(t);
        case verify::Method::recurrence: return recurrences::count(t);
        case verify::Method::genfun: {
            const auto series = genfun::expand(genfun::series_for(t.family), t.rank);
            return series[static_cast<std::size_t>(t.rank - 1)];
        }
        case verify::Method::closed_form: return closed_form::value(t);
    }
    return {};
}

ordered_json poly_json(const QPolynomial& p) { return ordered_json(p.coeff_strings()); }

std::string csv_degree_header(std::size_t n_coeffs) {
    std::string out;
    for (std::size_t i = 0; i < n_coeffs; ++i) out += ",c" + std::to_string(i);
    return out;
}

std::string csv_coeff_row(const QPolynomial& p, std::size_t width) {
    std::string out;
    for (std::size_t i = 0; i < width; ++i) out += "," + p.coeff(i).str();
    return out;
}

int run_compute(const std::string& family, int rank, const std::string& method,
                const std::string& format) {
    const LieType t{family_from_letter(family.at(0)), rank};
    const QPolynomial p = compute_by(method, t);
    const std::string degree = p.degree() ? std::to_string(*p.degree()) : "-inf";

    if (format == "json") {
        ordered_json j;
        j["family"] = std::string(1, family_letter(t.family));
        j["rank"] = t.rank;
        j["method"] = verify::method_name(verify::method_from_name(method));
        j["degree"] = degree;
        j["q1"] = p.value_at_one().str();
        j["coefficients"] = poly_json(p);
        j["text"] = p.to_string();
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        const std::size_t width = p.coeffs().size();
        std::cout << "family,rank,method,degree,q1" << csv_degree_header(width) << "\n";
        std::cout << family_letter(t.family) << "," << t.rank << ","
                  << verify::method_name(verify::method_from_name(method)) << "," << degree << ","
                  << p.value_at_one().str() << csv_coeff_row(p, width) << "\n";
    } else {
        std::cout << p.to_string() << "\n";
        std::cout << "# family=" << family_letter(t.family) << " rank=" << t.rank
                  << " method=" << verify::method_name(verify::method_from_name(method))
                  << " degree=" << degree << " q1=" << p.value_at_one().str() << "\n";
    }
    return static_cast<int>(ExitCode::ok);
}

int run_enumerate(const std::string& family, int rank, std::uint64_t limit,
                  const std::string& format) {
    const LieType t{family_from_letter(family.at(0)), rank};
    const auto roots = positive_roots(t);
    const auto target = highest_root(t);
    auto partitions = oracle::enumerate_partitions(roots, target, limit);

    // Largest partitions first, the tabular layout the counts are usually
    // displayed in.
    std::map<std::size_t, std::vector<const oracle::PartitionMultiset*>, std::greater<>> groups;
    for (const auto& p : partitions) groups[p.size()].push_back(&p);

    auto render_parts = [](const oracle::PartitionMultiset& p, const char* sep) {
        std::string out;
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            if (i > 0) out += sep;
            out += p.parts[i].to_string();
        }
        return out;
    };

    if (format == "json") {
        ordered_json j;
        j["family"] = std::string(1, family_letter(t.family));
        j["rank"] = t.rank;
        j["target"] = target.to_string();
        j["count"] = partitions.size();
        ordered_json rows = ordered_json::array();
        for (const auto& [size, group] : groups) {
            for (const auto* p : group) {
                ordered_json parts = ordered_json::array();
                for (const auto& part : p->parts) parts.push_back(part.to_string());
                rows.push_back(ordered_json{{"size", size}, {"parts", std::move(parts)}});
            }
        }
        j["partitions"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "family,rank,size,parts\n";
        for (const auto& [size, group] : groups)
            for (const auto* p : group)
                std::cout << family_letter(t.family) << "," << t.rank << "," << size << ","
                          << render_parts(*p, " ") << "\n";
    } else {
        std::cout << "# " << t.name() << ": " << partitions.size() << " partitions of "
                  << target.to_string() << "\n";
        for (const auto& [size, group] : groups) {
            std::cout << "[" << size << " part" << (size == 1 ? "" : "s") << "] " << group.size()
                      << "\n";
            for (const auto* p : group) std::cout << "  {" << render_parts(*p, ", ") << "}\n";
        }
    }
    return static_cast<int>(ExitCode::ok);
}

int run_series(const std::string& family, int terms, bool q1, const std::string& variant_name,
               const std::string& format) {
    const Family f = family_from_letter(family.at(0));
    genfun::Variant variant = genfun::Variant::full;
    if (variant_name == "nonhooked") variant = genfun::Variant::b_nonhooked;
    else if (variant_name == "hooked") variant = genfun::Variant::b_hooked;
    else if (variant_name != "full")
        throw CLI::ValidationError("--variant must be full, nonhooked or hooked");

    const genfun::GenFun g = genfun::series_for(f, variant);

    if (q1) {
        const auto ints = genfun::expand(genfun::specialize_q1(g), terms);
        if (format == "json") {
            ordered_json j;
            j["family"] = std::string(1, family_letter(f));
            j["terms"] = terms;
            j["q1"] = true;
            ordered_json vals = ordered_json::array();
            for (const auto& v : ints) vals.push_back(v.str());
            j["values"] = std::move(vals);
            std::cout << j.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "family,rank,value\n";
            for (std::size_t i = 0; i < ints.size(); ++i)
                std::cout << family_letter(f) << "," << i + 1 << "," << ints[i].str() << "\n";
        } else {
            for (std::size_t i = 0; i < ints.size(); ++i)
                std::cout << (i ? " " : "") << ints[i].str();
            std::cout << "\n";
        }
        return static_cast<int>(ExitCode::ok);
    }

    const auto polys = genfun::expand(g, terms);
    if (format == "json") {
        ordered_json j;
        j["family"] = std::string(1, family_letter(f));
        j["terms"] = terms;
        j["q1"] = false;
        ordered_json vals = ordered_json::array();
        for (const auto& p : polys) vals.push_back(poly_json(p));
        j["values"] = std::move(vals);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::size_t width = 1;
        for (const auto& p : polys) width = std::max(width, p.coeffs().size());
        std::cout << "family,rank" << csv_degree_header(width) << "\n";
        for (std::size_t i = 0; i < polys.size(); ++i)
            std::cout << family_letter(f) << "," << i + 1 << csv_coeff_row(polys[i], width) << "\n";
    } else {
        for (const auto& p : polys) std::cout << p.to_string() << "\n";
    }
    return static_cast<int>(ExitCode::ok);
}

struct VerifyConfig {
    std::optional<std::string> family;
    std::optional<int> max_rank;
    std::optional<std::string> methods;
    std::optional<int> oracle_budget;
    std::optional<double> oracle_seconds;
    std::optional<int> q1_terms;
};

// "key = value" lines; '#' starts a comment.
VerifyConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open config file " + path);
    VerifyConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) continue;
        if (key == "family") cfg.family = value;
        else if (key == "max_rank") cfg.max_rank = std::stoi(value);
        else if (key == "methods") cfg.methods = value;
        else if (key == "oracle_budget") cfg.oracle_budget = std::stoi(value);
        else if (key == "oracle_seconds") cfg.oracle_seconds = std::stod(value);
        else if (key == "q1_terms") cfg.q1_terms = std::stoi(value);
        else throw CLI::ValidationError("unknown config key '" + key + "'");
    }
    return cfg;
}

int run_verify(const VerifyConfig& cfg, const std::string& format) {
    std::vector<verify::Method> methods = verify::all_methods();
    if (cfg.methods) {
        methods.clear();
        for (const auto& name : split_list(*cfg.methods))
            methods.push_back(verify::method_from_name(name));
        if (methods.empty()) throw CLI::ValidationError("--methods list is empty");
    }

    verify::Options options;
    if (cfg.oracle_budget) options.oracle_budget = *cfg.oracle_budget;
    if (cfg.oracle_seconds) options.oracle_seconds = *cfg.oracle_seconds;

    std::vector<Family> families;
    if (cfg.family) {
        families.push_back(family_from_letter(cfg.family->at(0)));
    } else {
        families = {Family::A, Family::B, Family::C, Family::D};
    }

    std::vector<verify::VerificationReport> reports;
    for (Family f : families) {
        const int max_rank =
            cfg.max_rank ? *cfg.max_rank : std::max(verify::default_oracle_budget(f), min_rank(f));
        reports.push_back(verify::verify_family(f, max_rank, methods, options));
    }
    // The q = 1 integer-sequence check rides along on full runs.
    if (!cfg.family && !cfg.methods)
        reports.push_back(verify::verify_q1_sequences(cfg.q1_terms.value_or(20)));

    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;

    if (format == "json") {
        ordered_json j;
        j["status"] = pass ? "pass" : "fail";
        ordered_json rs = ordered_json::array();
        for (const auto& r : reports) rs.push_back(ordered_json::parse(r.to_json_string()));
        j["reports"] = std::move(rs);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "family,rank_lo,rank_hi,methods,status,discrepancy_rank\n";
        for (const auto& r : reports) {
            std::string ms;
            for (std::size_t i = 0; i < r.methods.size(); ++i)
                ms += (i ? ";" : "") + verify::method_name(r.methods[i]);
            std::cout << r.family << "," << r.min_rank << "," << r.max_rank << "," << ms << ","
                      << (r.pass ? "pass" : "fail") << ","
                      << (r.discrepancy ? std::to_string(r.discrepancy->rank) : "") << "\n";
        }
    } else {
        for (const auto& r : reports) std::cout << r.to_string() << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return static_cast<int>(pass ? ExitCode::ok : ExitCode::verify_failed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-analog Kostant partition counts on the highest root (types A-D)"};
    app.require_subcommand(1);

    std::string family = "B";
    int rank = 2;
    std::string method = "recurrence";
    std::string format = "plain";
    std::uint64_t limit = 1'000'000;
    int terms = 1;
    bool q1 = false;
    std::string variant = "full";
    std::string config_path;
    VerifyConfig cli_cfg;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: plain, json or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}))
            ->capture_default_str();
    };

    auto* compute = app.add_subcommand("compute", "Count polynomial for one family and rank");
    compute->add_option("--family", family, "Family letter: A, B, C or D")->required();
    compute->add_option("--rank", rank, "Rank")->required();
    compute->add_option("--method", method, "oracle, recurrence, genfun or closed")
        ->capture_default_str();
    add_format(compute);

    auto* enumerate = app.add_subcommand("enumerate", "List all partitions of the highest root");
    enumerate->add_option("--family", family, "Family letter: A, B, C or D")->required();
    enumerate->add_option("--rank", rank, "Rank")->required();
    enumerate->add_option("--limit", limit, "Refuse to list more than this many partitions")
        ->capture_default_str();
    add_format(enumerate);

    auto* series = app.add_subcommand("series", "Expand a family's generating series");
    series->add_option("--family", family, "Family letter: B, C or D")->required();
    series->add_option("--terms", terms, "Number of leading coefficients")->required();
    series->add_flag("--q1", q1, "Evaluate every coefficient at q = 1");
    series->add_option("--variant", variant, "full, nonhooked or hooked (family B only)")
        ->capture_default_str();
    add_format(series);

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check all computation methods");
    verify_cmd->add_option("--family", cli_cfg.family, "Restrict to one family");
    verify_cmd->add_option("--max-rank", cli_cfg.max_rank, "Largest rank to verify");
    verify_cmd->add_option("--methods", cli_cfg.methods, "Comma-separated method list");
    verify_cmd->add_option("--oracle-budget", cli_cfg.oracle_budget,
                           "Largest rank the brute-force oracle runs at");
    verify_cmd->add_option("--oracle-seconds", cli_cfg.oracle_seconds,
                           "Wall-clock guard for total oracle time");
    verify_cmd->add_option("--q1-terms", cli_cfg.q1_terms,
                           "Terms checked in the q = 1 sequence comparison");
    verify_cmd->add_option("--config", config_path, "key = value defaults file");
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);

        if (compute->parsed()) return run_compute(family, rank, method, format);
        if (enumerate->parsed()) return run_enumerate(family, rank, limit, format);
        if (series->parsed()) return run_series(family, terms, q1, variant, format);
        if (verify_cmd->parsed()) {
            VerifyConfig cfg;
            if (!config_path.empty()) cfg = load_config(config_path);
            // Priority: command line over config file over environment.
            auto merge = [](auto& dst, const auto& src) {
                if (src) dst = src;
            };
            merge(cfg.family, cli_cfg.family);
            merge(cfg.max_rank, cli_cfg.max_rank);
            merge(cfg.methods, cli_cfg.methods);
            merge(cfg.oracle_budget, cli_cfg.oracle_budget);
            merge(cfg.oracle_seconds, cli_cfg.oracle_seconds);
            merge(cfg.q1_terms, cli_cfg.q1_terms);
            if (!cfg.oracle_budget) {
                if (const char* env = std::getenv("KOSTANTQ_ORACLE_BUDGET"))
                    cfg.oracle_budget = std::stoi(env);
            }
            return run_verify(cfg, format);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return static_cast<int>(ExitCode::bad_arguments);
    } catch (const LimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::limit_exceeded);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::bad_arguments);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::bad_arguments);
    }
    return static_cast<int>(ExitCode::ok);
}
