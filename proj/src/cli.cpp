#include "zetakit/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetakit/numverify.hpp"
#include "zetakit/order.hpp"
#include "zetakit/poly_parser.hpp"
#include "zetakit/regsum.hpp"
#include "zetakit/values.hpp"

namespace zetakit::cli {

namespace {

using nlohmann::json;

// Bernoulli/Euler recurrences are quadratic in the argument; beyond this the
// CLI refuses rather than stalling.
constexpr std::int64_t kMaxArgument = 1000;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputRecord {
    std::string operation;
    json args = json::array();
    std::string status = "ok";  // ok | unsupported | error
    std::optional<PiValue> exact;
    std::optional<std::string> float_text;
    std::optional<std::string> reason;
};

json to_json(const OutputRecord& r) {
    json j;
    j["operation"] = r.operation;
    j["args"] = r.args;
    j["status"] = r.status;
    if (r.exact) {
        json terms = json::array();
        for (const auto& [m, q] : r.exact->terms()) {
            terms.push_back({{"pi_power", m}, {"coeff", q.to_string()}});
        }
        j["exact"] = {{"terms", terms}, {"text", r.exact->to_string()}};
    } else {
        j["exact"] = nullptr;
    }
    j["float"] = r.float_text ? json(*r.float_text) : json(nullptr);
    j["reason"] = r.reason ? json(*r.reason) : json(nullptr);
    return j;
}

json to_json(const numverify::VerificationReport& r) {
    return {{"name", r.name},           {"lhs", r.lhs},         {"rhs", r.rhs},
            {"deviation", r.deviation}, {"tolerance", r.tolerance}, {"passed", r.passed},
            {"terms_used", r.terms_used}, {"error_bound", r.error_bound}};
}

std::string format_float(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

FunctionId require_function(const std::string& name) {
    auto fn = parse_function(name);
    if (!fn) {
        throw UsageError("unknown function '" + name + "' (expected zeta, eta, lambda or beta)");
    }
    return *fn;
}

void require_argument_range(std::int64_t s) {
    if (s < -kMaxArgument || s > kMaxArgument) {
        throw UsageError("argument " + std::to_string(s) + " outside supported range [-" +
                         std::to_string(kMaxArgument) + ", " + std::to_string(kMaxArgument) + "]");
    }
}

struct FloatOptions {
    bool include = false;
    int digits = 15;
};

OutputRecord eval_record(FunctionId fn, std::int64_t s, const FloatOptions& fopt) {
    OutputRecord rec;
    rec.operation = "eval";
    rec.args = {std::string(name_of(fn)), s};
    auto result = eval(fn, s);
    if (const auto* u = std::get_if<Unsupported>(&result)) {
        rec.status = "unsupported";
        rec.reason = std::string(u->code()) + ": " + u->detail;
        return rec;
    }
    rec.exact = std::get<PiValue>(result);
    if (fopt.include) {
        rec.float_text = format_float(numverify::to_float(*rec.exact), fopt.digits);
    }
    return rec;
}

int emit_record(const OutputRecord& rec, const std::string& format, bool as_json, std::ostream& out) {
    if (as_json) {
        out << to_json(rec).dump() << "\n";
    } else if (rec.status != "ok") {
        out << rec.status << " (" << rec.reason.value_or("") << ")\n";
    } else if (format == "float") {
        out << rec.float_text.value_or("") << "\n";
    } else if (format == "both") {
        out << rec.exact->to_string() << " ≈ " << rec.float_text.value_or("") << "\n";
    } else {
        out << rec.exact->to_string() << "\n";
    }
    if (rec.status == "unsupported") return kUnsupportedValue;
    if (rec.status == "error") return kUsageError;
    return kSuccess;
}

int usage_failure(const CLI::App& app, bool want_json, const std::string& message, std::ostream& out,
                  std::ostream& err) {
    if (want_json) {
        OutputRecord rec;
        const auto subs = app.get_subcommands();
        rec.operation = subs.empty() ? "" : subs.front()->get_name();
        rec.status = "error";
        rec.reason = message;
        out << to_json(rec).dump() << "\n";
    }
    err << "zetakit: " << message << "\n";
    return kUsageError;
}

std::string_view relation_text(order::Relation r) {
    switch (r) {
        case order::Relation::Precedes: return "a ≺ b";
        case order::Relation::Equal: return "a = b";
        case order::Relation::Follows: return "b ≺ a";
    }
    return "";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact values of zeta, eta, lambda and beta at integers, generalized sums, and checks"};
    app.name("zetakit");
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a function at an integer argument");
    std::string eval_fn;
    std::int64_t eval_s = 0;
    std::string eval_format = "exact";
    int digits = 15;
    bool eval_json = false;
    eval_cmd->add_option("fn", eval_fn, "zeta | eta | lambda | beta")->required();
    eval_cmd->add_option("s", eval_s, "integer argument")->required();
    eval_cmd->add_option("--format", eval_format, "exact | float | both")
        ->check(CLI::IsMember({"exact", "float", "both"}));
    eval_cmd->add_option("--digits", digits, "significant digits of float output")->check(CLI::Range(1, 15));
    eval_cmd->add_flag("--json", eval_json);

    // sum
    auto* sum_cmd = app.add_subcommand("sum", "Generalized sum of a polynomial over Z_{a,b}");
    std::string poly_src;
    std::int64_t sum_from = 0;
    std::int64_t sum_to = 0;
    bool sum_json = false;
    sum_cmd->add_option("--poly", poly_src, "polynomial in u, e.g. \"u^2 + 3*u - 1/2\"")->required();
    sum_cmd->add_option("--from", sum_from, "lower limit a")->required();
    sum_cmd->add_option("--to", sum_to, "upper limit b")->required();
    sum_cmd->add_flag("--json", sum_json);

    // table
    auto* table_cmd = app.add_subcommand("table", "Tabulate a function over a range of integers");
    std::string table_fn;
    std::int64_t table_from = 0;
    std::int64_t table_to = 0;
    bool table_json = false;
    table_cmd->add_option("fn", table_fn, "zeta | eta | lambda | beta")->required();
    table_cmd->add_option("--from", table_from)->required();
    table_cmd->add_option("--to", table_to)->required();
    table_cmd->add_flag("--json", table_json);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Compare closed forms with numeric summation");
    std::string suite;
    numverify::NumericConfig cfg;
    bool verify_json = false;
    verify_cmd->add_option("--suite", suite, "values | identities | functional-equation | all")->required();
    verify_cmd->add_option("--tol", cfg.tolerance, "absolute tolerance");
    verify_cmd->add_option("--max-terms", cfg.max_terms, "series term cap");
    verify_cmd->add_flag("--json", verify_json);

    // order cmp
    auto* order_cmd = app.add_subcommand("order", "Integer order 0, 1, 2, ..., -2, -1");
    order_cmd->require_subcommand(1);
    auto* cmp_cmd = order_cmd->add_subcommand("cmp", "Compare two integers");
    std::int64_t cmp_a = 0;
    std::int64_t cmp_b = 0;
    cmp_cmd->add_option("a", cmp_a)->required();
    cmp_cmd->add_option("b", cmp_b)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    bool want_json = false;
    try {
        if (eval_cmd->parsed()) {
            want_json = eval_json;
            const FunctionId fn = require_function(eval_fn);
            require_argument_range(eval_s);
            const FloatOptions fopt{eval_format != "exact", digits};
            return emit_record(eval_record(fn, eval_s, fopt), eval_format, eval_json, out);
        }
        if (sum_cmd->parsed()) {
            want_json = sum_json;
            const RegularFunction rf(expr::parse_polynomial(poly_src));
            OutputRecord rec;
            rec.operation = "sum";
            rec.args = {poly_src, sum_from, sum_to};
            rec.exact = PiValue(finite_sum(rf, sum_from, sum_to).value());
            rec.float_text = format_float(numverify::to_float(*rec.exact), 15);
            return emit_record(rec, "exact", sum_json, out);
        }
        if (table_cmd->parsed()) {
            want_json = table_json;
            const FunctionId fn = require_function(table_fn);
            require_argument_range(table_from);
            require_argument_range(table_to);
            if (table_from > table_to) {
                throw UsageError("--from must not exceed --to");
            }
            json rows = json::array();
            for (std::int64_t s = table_from; s <= table_to; ++s) {
                const OutputRecord rec = eval_record(fn, s, {true, 15});
                if (table_json) {
                    rows.push_back(to_json(rec));
                } else if (rec.status == "ok") {
                    out << s << "\t" << rec.exact->to_string() << "\t" << *rec.float_text << "\n";
                } else {
                    out << s << "\t" << rec.status << " (" << *rec.reason << ")\n";
                }
            }
            if (table_json) out << rows.dump() << "\n";
            return kSuccess;
        }
        if (verify_cmd->parsed()) {
            want_json = verify_json;
            const auto reports = numverify::run_suite(suite, cfg);
            const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
            if (verify_json) {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(to_json(r));
                out << arr.dump() << "\n";
            } else {
                for (const auto& r : reports) {
                    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  series=" << format_float(r.lhs, 15)
                        << "  closed=" << format_float(r.rhs, 15) << "  dev=" << format_float(r.deviation, 3)
                        << "  terms=" << r.terms_used << "\n";
                }
                out << passed << "/" << reports.size() << " passed\n";
            }
            return static_cast<std::size_t>(passed) == reports.size() ? kSuccess : kVerificationFailed;
        }
        if (cmp_cmd->parsed()) {
            out << relation_text(order::compare(cmp_a, cmp_b)) << "\n";
            return kSuccess;
        }
    } catch (const numverify::UnsupportedValue& e) {
        err << "zetakit: unsupported: " << e.what() << "\n";
        return kUnsupportedValue;
    } catch (const expr::SyntaxError& e) {
        return usage_failure(app, want_json, e.what(), out, err);
    } catch (const UsageError& e) {
        return usage_failure(app, want_json, e.what(), out, err);
    } catch (const std::invalid_argument& e) {
        return usage_failure(app, want_json, e.what(), out, err);
    } catch (const std::out_of_range& e) {
        return usage_failure(app, want_json, e.what(), out, err);
    }
    err << "zetakit: no command\n";
    return kUsageError;
}

}  // namespace zetakit::cli
