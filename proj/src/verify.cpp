#include "kostantq/verify.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "kostantq/closed_form.hpp"
#include "kostantq/errors.hpp"
#include "kostantq/genfun.hpp"
#include "kostantq/oracle.hpp"
#include "kostantq/recurrences.hpp"

namespace kostantq {
namespace verify {

std::string method_name(Method m) {
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::recurrence: return "recurrence";
        case Method::genfun: return "genfun";
        case Method::closed_form: return "closed";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "oracle") return Method::oracle;
    if (name == "recurrence") return Method::recurrence;
    if (name == "genfun") return Method::genfun;
    if (name == "closed" || name == "closed_form") return Method::closed_form;
    throw std::invalid_argument("unknown method '" + name +
                                "' (expected oracle, recurrence, genfun or closed)");
}

std::vector<Method> all_methods() {
    return {Method::oracle, Method::recurrence, Method::genfun, Method::closed_form};
}

int default_oracle_budget(Family f) { return f == Family::A ? 16 : 12; }

namespace {

// Smallest rank a method is defined at; nullopt when the method does not
// apply to the family at all.
std::optional<int> method_min_rank(Family f, Method m) {
    switch (m) {
        case Method::oracle:
        case Method::recurrence:
            return min_rank(f);
        case Method::genfun:
            if (f == Family::A) return std::nullopt;
            return min_rank(f);
        case Method::closed_form:
            return closed_form::min_closed_rank(f);
    }
    return std::nullopt;
}

nlohmann::ordered_json poly_json(const QPolynomial& p) {
    return nlohmann::ordered_json(p.coeff_strings());
}

}  // namespace

std::string VerificationReport::to_json_string(int indent) const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["rank_range"] = {min_rank, max_rank};
    nlohmann::ordered_json ms = nlohmann::ordered_json::array();
    for (Method m : methods) ms.push_back(method_name(m));
    j["methods"] = std::move(ms);
    j["status"] = pass ? "pass" : "fail";
    if (discrepancy) {
        nlohmann::ordered_json d;
        d["rank"] = discrepancy->rank;
        d["first_method"] = method_name(discrepancy->first);
        d["second_method"] = method_name(discrepancy->second);
        d["first_value"] = poly_json(discrepancy->first_value);
        d["second_value"] = poly_json(discrepancy->second_value);
        if (!discrepancy->detail.empty()) d["detail"] = discrepancy->detail;
        j["discrepancy"] = std::move(d);
    }
    nlohmann::ordered_json sk = nlohmann::ordered_json::array();
    for (const auto& note : skips) {
        nlohmann::ordered_json n;
        n["method"] = method_name(note.method);
        if (note.from_rank != 0) n["ranks"] = {note.from_rank, note.to_rank};
        n["reason"] = note.reason;
        sk.push_back(std::move(n));
    }
    j["skips"] = std::move(sk);
    return j.dump(indent);
}

std::string VerificationReport::to_string() const {
    std::string out = "family " + family + " ranks " + std::to_string(min_rank) + ".." +
                      std::to_string(max_rank) + " methods ";
    for (std::size_t i = 0; i < methods.size(); ++i) {
        if (i > 0) out += ",";
        out += method_name(methods[i]);
    }
    out += pass ? ": PASS" : ": FAIL";
    if (discrepancy) {
        out += " at rank " + std::to_string(discrepancy->rank) + " (" +
               method_name(discrepancy->first) + " vs " + method_name(discrepancy->second) + ")";
        if (!discrepancy->detail.empty()) out += " [" + discrepancy->detail + "]";
        out += "\n  " + method_name(discrepancy->first) + ": " +
               discrepancy->first_value.to_string();
        out += "\n  " + method_name(discrepancy->second) + ": " +
               discrepancy->second_value.to_string();
    }
    for (const auto& note : skips) {
        out += "\n  skip " + method_name(note.method);
        if (note.from_rank != 0)
            out += " ranks " + std::to_string(note.from_rank) + ".." + std::to_string(note.to_rank);
        out += ": " + note.reason;
    }
    return out;
}

VerificationReport verify_family(Family f, int max_rank, const std::vector<Method>& methods,
                                 const Options& options) {
    LieType{f, max_rank}.validate();

    VerificationReport report;
    report.family = std::string(1, family_letter(f));
    report.min_rank = min_rank(f);
    report.max_rank = max_rank;
    report.methods = methods;

    const int oracle_budget =
        options.oracle_budget > 0 ? options.oracle_budget : default_oracle_budget(f);

    // Rank range each method actually runs at.
    struct Active {
        Method method;
        int from;
        int to;
    };
    std::vector<Active> active;
    for (Method m : methods) {
        const auto from = method_min_rank(f, m);
        if (!from) {
            report.skips.push_back({m, 0, 0, "not defined for family " + report.family});
            continue;
        }
        int to = max_rank;
        if (m == Method::oracle && oracle_budget < max_rank) {
            to = oracle_budget;
            report.skips.push_back({m, oracle_budget + 1, max_rank,
                                    "above oracle rank budget " + std::to_string(oracle_budget)});
        }
        if (*from > report.min_rank && *from <= to) {
            report.skips.push_back({m, report.min_rank, *from - 1,
                                    "defined from rank " + std::to_string(*from)});
        }
        if (*from <= to) active.push_back({m, *from, to});
    }

    recurrences::RecurrenceTable table(f);
    std::vector<QPolynomial> series;
    if (f != Family::A) series = genfun::expand(genfun::series_for(f), max_rank);

    double oracle_spent = 0.0;
    bool oracle_timed_out = false;

    auto evaluate = [&](Method m, int rank) -> QPolynomial {
        const LieType t{f, rank};
        if (auto it = options.overrides.find(m); it != options.overrides.end())
            return it->second(t);
        switch (m) {
            case Method::oracle: return oracle::count_highest_root(t);
            case Method::recurrence: return table.at(rank);
            case Method::genfun: return series[static_cast<std::size_t>(rank - 1)];
            case Method::closed_form: return closed_form::value(t);
        }
        return {};
    };

    for (int rank = report.min_rank; rank <= max_rank && report.pass; ++rank) {
        std::vector<std::pair<Method, QPolynomial>> values;
        for (const auto& a : active) {
            if (rank < a.from || rank > a.to) continue;
            if (a.method == Method::oracle && oracle_timed_out) continue;
            if (a.method == Method::oracle && options.oracle_seconds > 0) {
                const auto start = std::chrono::steady_clock::now();
                values.emplace_back(a.method, evaluate(a.method, rank));
                oracle_spent += std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
                if (oracle_spent > options.oracle_seconds && rank < a.to) {
                    oracle_timed_out = true;
                    report.skips.push_back({Method::oracle, rank + 1, a.to,
                                            "wall-clock guard exceeded"});
                }
            } else {
                values.emplace_back(a.method, evaluate(a.method, rank));
            }
        }
        for (std::size_t i = 0; i + 1 < values.size() && report.pass; ++i) {
            for (std::size_t j = i + 1; j < values.size(); ++j) {
                if (values[i].second == values[j].second) continue;
                report.pass = false;
                report.discrepancy = Discrepancy{rank, values[i].first, values[j].first,
                                                 values[i].second, values[j].second, ""};
                break;
            }
        }
    }
    return report;
}

VerificationReport verify_q1_sequences(int max_rank) {
    if (max_rank < 2) throw std::invalid_argument("verify_q1_sequences: max_rank must be >= 2");

    VerificationReport report;
    report.family = "q1";
    report.min_rank = 1;
    report.max_rank = max_rank;
    report.methods = {Method::recurrence, Method::genfun};

    for (Family f : {Family::B, Family::C, Family::D}) {
        const auto ints =
            genfun::expand(genfun::specialize_q1(genfun::series_for(f)), max_rank);
        recurrences::RecurrenceTable table(f);
        for (int rank = min_rank(f); rank <= max_rank; ++rank) {
            const BigInt via_table = table.at(rank).value_at_one();
            const BigInt& via_series = ints[static_cast<std::size_t>(rank - 1)];
            if (via_table == via_series) continue;
            report.pass = false;
            report.discrepancy =
                Discrepancy{rank, Method::recurrence, Method::genfun, QPolynomial(via_table),
                            QPolynomial(via_series), std::string(1, family_letter(f))};
            return report;
        }
    }
    return report;
}

}  // namespace verify
}  // namespace kostantq
