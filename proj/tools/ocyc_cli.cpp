#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ocyc/ocyc.hpp"

namespace {

using namespace ocyc;

enum Exit { kOk = 0, kVerifyFail = 1, kConfig = 2, kInadmissible = 3, kBound = 4 };

struct Options {
    std::int64_t q = 0;
    std::int64_t p = 0;
    int m = 0;
    std::int64_t max_q = FieldOptions{}.max_q;
    unsigned workers = 1;
    bool json = false;
    bool no_check = false;
    std::vector<std::int64_t> dim4;
    std::vector<std::int64_t> dim3;
    std::vector<std::int64_t> check_exps;
};

unsigned default_workers() {
    if (const char* env = std::getenv("OCYC_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring OCYC_WORKERS=" << env << "\n";
    }
    return 1;
}

std::shared_ptr<const FieldContext> make_field(const Options& o) {
    std::int64_t p = o.p;
    int m = o.m;
    if (o.q != 0) {
        if (o.p != 0 || o.m != 0) throw ConfigError("give either --q or --p/--m, not both");
        if (!split_prime_power(o.q, p, m)) throw ConfigError("q = " + std::to_string(o.q) + " is not a prime power");
    } else if (p == 0) {
        throw ConfigError("missing --q or --p/--m");
    } else if (m == 0) {
        m = 1;
    }
    return std::make_shared<const FieldContext>(build_field(p, m, FieldOptions{o.max_q}));
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

// Builds the code selected by --dim4 / --dim3 / --check-exps.
CodeSpec make_code(const Options& o, const std::shared_ptr<const FieldContext>& field) {
    const auto& f = *field;
    const std::int64_t q = f.q();
    const int chosen = int(!o.dim4.empty()) + int(!o.dim3.empty()) + int(!o.check_exps.empty());
    if (chosen != 1) throw ConfigError("choose exactly one of --dim4, --dim3, --check-exps");
    if (q < 3) throw ConfigError("code subcommands need q >= 3");
    if (!o.dim4.empty()) {
        const auto& e = o.dim4;
        if (!o.no_check && !dim4_conditions(q, e[0], e[1], e[2]))
            throw InadmissibleError("(" + join(e) + ") is not an admissible dimension-4 triple");
        return dim4_code(field, e[0], e[1], e[2]);
    }
    if (!o.dim3.empty()) {
        const auto& e = o.dim3;
        if (!o.no_check && !dim3_conditions(q, e[0], e[1]))
            throw InadmissibleError("(" + join(e) + ") is not an admissible dimension-3 pair");
        return dim3_code(field, e[0], e[1]);
    }
    if (!o.no_check) {
        const auto sig = code_signature(f, o.check_exps);
        bool member = false;
        for (const auto& family : {count_distinct_dim4(f), count_distinct_dim3(f)})
            for (const auto& s : family.signatures) member = member || s == sig;
        if (!member)
            throw InadmissibleError("check exponents {" + join(o.check_exps) +
                                    "} are outside both code families (use --no-check)");
    }
    return build_code(field, o.check_exps);
}

void add_field_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--q", o.q, "field order q = p^m");
    cmd->add_option("--p", o.p, "characteristic");
    cmd->add_option("--m", o.m, "extension degree of F_q over F_p");
    cmd->add_option("--max-q", o.max_q, "largest q accepted");
    cmd->add_option("--workers", o.workers, "worker threads (default $OCYC_WORKERS or 1)")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", o.json, "JSON on stdout");
}

void add_code_options(CLI::App* cmd, Options& o) {
    add_field_options(cmd, o);
    cmd->add_option("--dim4", o.dim4, "e1 e2 e3")->expected(3);
    cmd->add_option("--dim3", o.dim3, "e2 e3")->expected(2);
    cmd->add_option("--check-exps", o.check_exps, "exponents a of the factors h_a")->expected(1, 16);
    cmd->add_flag("--no-check", o.no_check, "skip the admissibility test");
}

std::uint64_t fnv1a(const std::vector<std::int32_t>& v) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
        const auto u = static_cast<std::uint32_t>(x);
        for (int b = 0; b < 4; ++b) {
            h ^= (u >> (8 * b)) & 0xFF;
            h *= 1099511628211ull;
        }
    }
    return h;
}

int cmd_field(const Options& o) {
    const auto field = make_field(o);
    const auto& f = *field;
    std::ostringstream sum;
    sum << std::hex << std::setw(16) << std::setfill('0') << fnv1a(f.zech_table());
    if (o.json) {
        json j = {{"p", f.p()},
                  {"m", f.m()},
                  {"q", f.q()},
                  {"degree", f.degree()},
                  {"modulus", f.modulus()},
                  {"gamma", f.gamma_encoding()},
                  {"gamma_order", f.order()},
                  {"delta_exponent", f.delta_exp()},
                  {"delta", f.encode(f.delta())},
                  {"zech_fnv1a", sum.str()}};
        std::cout << j.dump() << "\n";
        return kOk;
    }
    std::cout << "q = " << f.q() << " (p = " << f.p() << ", m = " << f.m() << ")\n";
    std::cout << "F_" << f.size() << " modulus (low to high): " << join({f.modulus().begin(), f.modulus().end()}, " ")
              << "\n";
    std::cout << "gamma encoding: " << f.gamma_encoding() << ", order(gamma) = " << f.order() << "\n";
    std::cout << "delta = gamma^" << f.delta_exp() << ", encoding " << f.encode(f.delta())
              << ", order(delta) = " << f.q() - 1 << "\n";
    std::cout << "zech checksum (fnv1a-64): " << sum.str() << "\n";
    return kOk;
}

int cmd_weights(const Options& o) {
    const auto spec = make_code(o, make_field(o));
    const auto w = weight_distribution(spec, o.workers);
    if (o.json)
        std::cout << to_json(w).dump() << "\n";
    else
        std::cout << w.to_string() << "\n";
    return kOk;
}

int cmd_cwe(const Options& o) {
    const auto spec = make_code(o, make_field(o));
    const auto c = complete_weight_distribution(spec, o.workers);
    if (o.json)
        std::cout << to_json(c).dump() << "\n";
    else
        std::cout << c.to_string() << "\n";
    return kOk;
}

int cmd_dual(const Options& o) {
    const auto spec = make_code(o, make_field(o));
    const auto w = weight_distribution(spec, o.workers);
    const auto d = macwilliams_dual(w);
    const int dmin = dual_min_distance(d);
    const BigInt a4 = d.n >= 4 ? d.counts[4] : BigInt(0);
    if (o.json) {
        auto j = to_json(d);
        j["min_distance"] = dmin;
        j["A4"] = a4.str();
        std::cout << j.dump() << "\n";
        return kOk;
    }
    std::cout << "dual [" << d.n << "," << d.k << "," << dmin << "]\n";
    std::cout << d.to_string() << "\n";
    std::cout << "A4 = " << a4 << "\n";
    return kOk;
}

int cmd_sums(const Options& o, bool table1, bool gauss, const std::vector<std::int64_t>& tsum) {
    const auto field = make_field(o);
    const auto& f = *field;
    const std::int64_t q = f.q();
    if (int(table1) + int(gauss) + int(!tsum.empty()) != 1) throw ConfigError("choose one of --table1, --gauss, --tsum");
    if (gauss) {
        json rows = json::array();
        for (std::int64_t j = 0; j < q - 1; ++j) {
            const auto g = gauss_sum(f, j);
            json row = {{"j", j}, {"re", g.value.real()}, {"im", g.value.imag()}, {"abs2", std::norm(g.value)}};
            if (g.exact) row["exact"] = g.exact->to_string();
            if (o.json)
                rows.push_back(row);
            else
                std::cout << "G(psi_" << j << ") = " << g.value.real() << (g.value.imag() < 0 ? " - " : " + ")
                          << std::abs(g.value.imag()) << "i  |G|^2 = " << std::norm(g.value)
                          << (g.exact ? "  exact " + g.exact->to_string() : "") << "\n";
        }
        if (o.json) std::cout << json{{"q", q}, {"gauss_sums", rows}}.dump() << "\n";
        return kOk;
    }

    std::vector<std::int64_t> e = o.dim4;
    if (e.empty()) {
        const auto triples = admissible_triples(f);
        if (triples.empty()) throw InadmissibleError("no admissible triple at q = " + std::to_string(q));
        e.assign(triples.front().begin(), triples.front().end());
    }
    if (!dim4_conditions(q, e[0], e[1], e[2]))
        throw InadmissibleError("(" + join(e) + ") is not an admissible dimension-4 triple");

    if (table1) {
        const auto got = value_distribution(f, e[0], e[1], e[2], o.workers);
        const auto want = expected_table1(q);
        if (o.json) {
            std::cout << json{{"q", q}, {"exponents", e}, {"distribution", to_json(got)}, {"matches", got == want}}.dump()
                      << "\n";
        } else {
            std::cout << "value  frequency  (e = " << join(e) << ")\n";
            for (const auto& [v, n] : got) std::cout << std::setw(5) << v << "  " << n << "\n";
            std::cout << (got == want ? "matches" : "DIFFERS FROM") << " closed form\n";
        }
        return got == want ? kOk : kVerifyFail;
    }

    // --tsum a b c: a, b as F_q symbol indices, c as 0 or 1 + exponent of gamma.
    const auto a = f.subfield_element(tsum[0]);
    const auto b = f.subfield_element(tsum[1]);
    if (tsum[2] < 0 || tsum[2] > static_cast<std::int64_t>(f.order())) throw ConfigError("c out of range");
    const auto c = tsum[2] == 0 ? FieldElement::zero() : f.from_exponent(tsum[2] - 1);
    const CharacterSumParams s{e[0], e[1], e[2], a, b, c};
    const auto S = s_sum(f, s);
    const auto T = t_sum(f, s);
    const auto Z = z_count(f, s);
    const int which = t_sum_case(f, a, b, c);
    if (o.json) {
        std::cout << json{{"q", q},         {"exponents", e}, {"S", S.to_string()},
                          {"T", T},         {"Z", Z},         {"case", which},
                          {"case_value", t_sum_case_value(q, which)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "S = " << S.to_string() << "\nT = " << T << " (case " << which << ", closed form "
                  << t_sum_case_value(q, which) << ")\nZ = " << Z << "\n";
    }
    return kOk;
}

int emit_reports(const std::vector<VerificationReport>& reports, bool as_json) {
    int failed = 0, passed = 0, skipped = 0;
    for (const auto& r : reports) {
        if (as_json) std::cout << to_json(r).dump() << "\n";
        failed += r.status == Status::fail;
        passed += r.status == Status::pass;
        skipped += r.status == Status::skipped;
        std::ostream& out = as_json ? std::cerr : std::cout;
        out << to_string(r.status) << "  " << r.claim << " q=" << r.q << " (" << join(r.params) << ")";
        if (!r.reason.empty()) out << "  " << r.reason;
        out << "\n";
        for (const auto& c : r.checks)
            if (!c.passed) out << "    failed " << c.name << ": expected " << c.expected << ", got " << c.computed << "\n";
    }
    (as_json ? std::cerr : std::cout) << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed ? kVerifyFail : kOk;
}

int cmd_verify(const Options& o, bool all, bool counterexample) {
    std::vector<VerificationReport> reports;
    if (counterexample) {
        reports.push_back(counterexample_c25());
        return emit_reports(reports, o.json);
    }
    const auto field = make_field(o);
    const auto& f = *field;
    if (f.q() < 3) throw ConfigError("verify needs q >= 3");
    if (all) {
        for (const auto& t : count_distinct_dim4(f).representatives) {
            std::cerr << "verifying dim4 (" << join(t) << ")\n";
            reports.push_back(verify_theorem2(field, t[0], t[1], t[2], o.workers));
        }
        for (const auto& t : count_distinct_dim3(f).representatives) {
            std::cerr << "verifying dim3 (" << join(t) << ")\n";
            reports.push_back(verify_theorem3(field, t[0], t[1], o.workers));
        }
    } else if (!o.dim4.empty()) {
        reports.push_back(verify_theorem2(field, o.dim4[0], o.dim4[1], o.dim4[2], o.workers));
    } else if (!o.dim3.empty()) {
        reports.push_back(verify_theorem3(field, o.dim3[0], o.dim3[1], o.workers));
    } else {
        throw ConfigError("verify needs --all, --dim4, --dim3 or --counterexample");
    }
    return emit_reports(reports, o.json);
}

int cmd_census(const Options& o) {
    const auto r = cwe_census(make_field(o), o.workers);
    if (o.json) {
        std::cout << to_json(r).dump() << "\n";
        return kOk;
    }
    std::cout << "search space: " << r.search_space << "\n";
    std::cout << "examined " << r.examined << ", qualifying " << r.qualifying << ", distinct CWEs "
              << r.classes.size() << " (conjecture: " << r.conjectured << ")\n";
    for (const auto& c : r.classes) {
        std::cout << c.cwe.to_string() << "\n   codes:";
        for (const auto& code : c.codes) std::cout << " (" << join(code) << ")";
        std::cout << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal cyclic codes over F_q: construction, enumerators and verification"};
    app.require_subcommand(1);
    Options o;
    o.workers = default_workers();
    bool table1 = false, gauss = false, all = false, counterexample = false;
    std::vector<std::int64_t> tsum;

    auto* field = app.add_subcommand("field", "print the field tower data");
    add_field_options(field, o);
    auto* weights = app.add_subcommand("weights", "weight enumerator");
    add_code_options(weights, o);
    auto* cwe = app.add_subcommand("cwe", "complete weight enumerator");
    add_code_options(cwe, o);
    auto* dual = app.add_subcommand("dual", "dual weight enumerator via MacWilliams");
    add_code_options(dual, o);
    auto* sums = app.add_subcommand("sums", "character sums");
    add_field_options(sums, o);
    sums->add_option("--dim4", o.dim4, "e1 e2 e3 (default: first admissible triple)")->expected(3);
    sums->add_flag("--table1", table1, "value distribution of the zero count");
    sums->add_flag("--gauss", gauss, "Gauss sums of all multiplicative characters");
    sums->add_option("--tsum", tsum, "a b c: S, T and Z at one point")->expected(3);
    auto* verify = app.add_subcommand("verify", "check the closed forms exhaustively");
    add_field_options(verify, o);
    verify->add_option("--dim4", o.dim4, "e1 e2 e3")->expected(3);
    verify->add_option("--dim3", o.dim3, "e2 e3")->expected(2);
    verify->add_flag("--all", all, "every distinct code of both families");
    verify->add_flag("--counterexample", counterexample, "the code C_(2,5) over F_3");
    auto* census = app.add_subcommand("census", "group optimal three-weight codes by CWE");
    add_field_options(census, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    try {
        if (*field) return cmd_field(o);
        if (*weights) return cmd_weights(o);
        if (*cwe) return cmd_cwe(o);
        if (*dual) return cmd_dual(o);
        if (*sums) return cmd_sums(o, table1, gauss, tsum);
        if (*verify) return cmd_verify(o, all, counterexample);
        if (*census) return cmd_census(o);
    } catch (const InadmissibleError& e) {
        std::cerr << "inadmissible: " << e.what() << "\n";
        return kInadmissible;
    } catch (const BoundError& e) {
        std::cerr << "size bound: " << e.what() << "\n";
        return kBound;
    } catch (const ConfigError& e) {
        std::cerr << "config: " << e.what() << "\n";
        return kConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "config: " << e.what() << "\n";
        return kConfig;
    }
    return kConfig;
}
