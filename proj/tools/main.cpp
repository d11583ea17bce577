#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "zqcode/errors.hpp"
#include "zqcode/families.hpp"
#include "zqcode/json_io.hpp"
#include "zqcode/minweight.hpp"
#include "zqcode/oracle.hpp"
#include "zqcode/quasi.hpp"
#include "zqcode/tutte.hpp"
#include "zqcode/verify.hpp"

namespace {

using namespace zqcode;

struct CommonOptions {
    std::string input;
    std::vector<std::string> family;  // tag, k
    std::string format = "table";
    int max_n = 22;
    int jobs = 1;
    std::uint64_t oracle_budget = 100'000'000;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_format = true) {
    auto* input = cmd->add_option("-i,--input", opt.input, "matrix file (optional 'k n' header)");
    auto* family = cmd->add_option("--family", opt.family, "family generator: TAG K (e.g. --family n 4)")
                       ->expected(2);
    input->excludes(family);
    family->excludes(input);
    if (with_format)
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--max-n", opt.max_n, "cap on the number of matrix columns (default 22)");
    cmd->add_option("--jobs", opt.jobs, "worker threads for subset maps and enumeration");
    cmd->add_option("--oracle-budget", opt.oracle_budget, "max number of enumerated vectors");
}

IntMatrix resolve_matrix(const CommonOptions& opt) {
    if (!opt.input.empty()) return load_matrix_file(opt.input);
    if (opt.family.size() == 2)
        return make_family(parse_family_tag(opt.family[0]), std::stoi(opt.family[1])).generator;
    throw std::invalid_argument("no input: pass --input FILE or --family TAG K");
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("bad range '" + text + "' (expected A..B)");
    const long a = std::stol(text.substr(0, sep));
    const long b = std::stol(text.substr(sep + 2));
    if (a < 1 || b < a) throw std::invalid_argument("range bounds must satisfy 1 <= A <= B");
    return {a, b};
}

std::string enumerator_row(const WeightQuasi& wq, const std::vector<UniPoly>& f) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= wq.n; ++i) {
        const UniPoly& fi = f[static_cast<std::size_t>(i)];
        if (fi.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool has_vars = wq.n - i > 0 || i > 0;
        const bool plain_one = fi.degree() == 0 && fi.coeff(0) == 1;
        if (!plain_one || !has_vars) {
            if (fi.degree() > 0 || fi.coeff(0) < 0)
                os << "(" << fi.str("q") << ")";
            else
                os << fi.str("q");
            if (has_vars) os << "*";
        }
        if (wq.n - i > 0) {
            os << "x";
            if (wq.n - i > 1) os << "^" << wq.n - i;
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << "y";
            if (i > 1) os << "^" << i;
        }
    }
    return first ? "0" : os.str();
}

int cmd_analyze(const CommonOptions& opt, bool constituents_json, const std::string& q_text) {
    const IntMatrix g = resolve_matrix(opt);
    const DivisorProfile profile = build_profile(g, {.max_columns = opt.max_n, .jobs = opt.jobs});
    const WeightQuasi wq = weight_quasi(profile, {.jobs = opt.jobs});

    if (constituents_json || opt.format == "json") {
        Json j = to_json(wq);
        j["matrix"] = matrix_to_json(g);
        j["elementary_divisors"] = Json::array();
        for (const auto& e : profile.full_chain().divisors)
            j["elementary_divisors"].push_back(e.get_str());
        if (!q_text.empty())
            j["distribution"] = to_json(weight_distribution(profile, wq, parse_bigint(q_text)));
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "matrix: " << g.rows << " x " << g.cols << ", rank " << profile.full_rank()
              << ", elementary divisors:";
    for (const auto& e : profile.full_chain().divisors) std::cout << " " << e.get_str();
    std::cout << "\nlcm period rho0 = " << profile.lcm_period().get_str() << "\n\n";
    std::cout << "weight enumerator W(x,y;q) by class of gcd(q,rho0):\n";
    for (const auto& [m, f] : wq.constituents)
        std::cout << "  gcd=" << m.get_str() << ":  " << enumerator_row(wq, f) << "\n";
    if (!q_text.empty()) {
        const BigInt q = parse_bigint(q_text);
        const WeightDistribution dist = weight_distribution(profile, wq, q);
        std::cout << "\nat q = " << q.get_str() << ":  "
                  << enumerator_from_distribution(dist).str("x", "y") << "\n";
    }
    return 0;
}

int cmd_minweight(const CommonOptions& opt, const std::string& range) {
    const IntMatrix g = resolve_matrix(opt);
    const DivisorProfile profile = build_profile(g, {.max_columns = opt.max_n, .jobs = opt.jobs});
    const WeightQuasi wq = weight_quasi(profile, {.jobs = opt.jobs});
    const MinWeightReport report = min_weight_report(profile, wq);

    auto [lo, hi] = parse_range(range.empty() ? "2..12" : range);
    if (opt.format == "json") {
        Json j = to_json(report);
        Json dq = Json::array();
        for (long q = lo; q <= hi; ++q) {
            const MinWeight d = min_weight_at(profile, wq, q);
            dq.push_back(Json::array({q, d.is_infinite() ? Json("inf") : Json(d.value())}));
        }
        j["d_q"] = std::move(dq);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "rho0 = " << report.rho0.get_str() << ", m0 = " << report.m0.get_str()
              << ", d_{m0} = " << report.d_m0.str() << "\n\n";
    std::cout << "class  d'_m  d_m   stable  cond  witness columns\n";
    for (const auto& cr : report.classes) {
        std::cout << "  " << cr.m.get_str() << "     " << cr.d_prime.str() << "     "
                  << cr.d_at_m.str() << "     " << (cr.stable_at_m ? "yes" : "no ") << "    "
                  << (cr.condition.empty() ? "-" : cr.condition) << "     ";
        if (cr.witness_columns.empty())
            std::cout << "-";
        else
            for (std::size_t i = 0; i < cr.witness_columns.size(); ++i)
                std::cout << (i ? "," : "") << cr.witness_columns[i];
        if (cr.sufficiency_converse_fails) std::cout << "   [stable although gcd(m,e_r) != 1]";
        if (cr.necessity_converse_fails) std::cout << "   [m does not divide e_1, yet d_m > d'_m]";
        std::cout << "\n";
    }
    std::cout << "\nconcrete minimum weights:\n";
    for (long q = lo; q <= hi; ++q)
        std::cout << "  d_" << q << " = " << min_weight_at(profile, wq, q).str() << "\n";
    return 0;
}

int cmd_tutte(const CommonOptions& opt, const std::string& u_text, const std::string& v_text,
              const std::string& grid, bool dump, bool greene) {
    const IntMatrix g = resolve_matrix(opt);
    const DivisorProfile profile = build_profile(g, {.max_columns = opt.max_n, .jobs = opt.jobs});
    const TutteQuasi tq = tutte_quasi(profile);

    if (dump) {
        std::cout << to_json(tq).dump(2) << "\n";
    } else if (!grid.empty()) {
        auto [lo, hi] = parse_range(grid);
        std::cout << "u,v,Q\n";
        for (long u = lo; u <= hi; ++u)
            for (long v = lo; v <= hi; ++v)
                std::cout << u << "," << v << ","
                          << to_string(tutte_eval(tq, Rational(u), Rational(v))) << "\n";
    } else if (!u_text.empty() || !v_text.empty()) {
        if (u_text.empty() || v_text.empty())
            throw std::invalid_argument("tutte evaluation needs both --u and --v");
        const Rational u = parse_rational(u_text), v = parse_rational(v_text);
        std::cout << "Q(" << to_string(u) << ", " << to_string(v)
                  << ") = " << to_string(tutte_eval(tq, u, v)) << "\n";
    } else {
        for (const auto& [m, poly] : tq.constituents)
            std::cout << "gcd=" << m.get_str() << ":  " << poly.str("u", "v") << "\n";
    }
    if (greene) {
        const WeightQuasi wq = weight_quasi(profile, {.jobs = opt.jobs});
        bool ok = true;
        for (BigInt q = 1; q <= 6 && ok; ++q)
            for (const auto& [x, y] : {std::pair{2, 1}, {3, 1}, {3, 2}, {5, 2}})
                ok = ok && greene_forward_check(profile, wq, tq, q, Rational(x), Rational(y)).ok;
        for (BigInt u = 2; u <= 5 && ok; ++u)
            for (BigInt v = 2; v <= 5; ++v)
                ok = ok && greene_inverse_check(profile, wq, tq, u, v).ok;
        std::cout << "enumerator/Tutte identities: " << (ok ? "pass" : "FAIL") << "\n";
        if (!ok) return 2;
    }
    return 0;
}

int cmd_family(const std::string& tag_text, int k, bool transformed, bool csv,
               const std::string& range) {
    const FamilySpec spec = make_family(parse_family_tag(tag_text), k);
    if (csv) {
        auto [lo, hi] = parse_range(range.empty() ? "1..30" : range);
        const QuasiPolynomial closed = closed_char_quasi(spec.tag, spec.k);
        std::cout << "q,class,chi\n";
        for (long q = lo; q <= hi; ++q) {
            const BigInt value = char_quasi_closed(spec.tag, spec.k, q);
            if (Rational(value) != closed.eval(q))
                throw consistency_error("closed evaluation disagrees with its constituent at q=" +
                                        std::to_string(q));
            std::cout << q << "," << gcd_int(q, closed.period).get_str() << "," << value.get_str()
                      << "\n";
        }
        return 0;
    }
    std::cout << format_matrix(transformed ? spec.transformed : spec.generator);
    return 0;
}

int cmd_verify(const CommonOptions& opt, const std::string& golden, int max_q) {
    const VerifyOptions vopt{.max_q = max_q, .oracle_budget = opt.oracle_budget, .jobs = opt.jobs};
    VerifyOutcome outcome = golden.empty()
                                ? verify_matrix(resolve_matrix(opt), vopt)
                                : verify_against_golden(load_golden_fixture(golden), vopt);
    if (opt.family.size() == 2) {
        const FamilyTag tag = parse_family_tag(opt.family[0]);
        const int k = std::stoi(opt.family[1]);
        const IntMatrix g = make_family(tag, k).generator;
        bool parity_ok = true;
        std::string detail;
        for (BigInt q = 2; q <= max_q && parity_ok; ++q) {
            OracleResult oracle;
            try {
                oracle = oracle_enumerate(g, q, {.budget = opt.oracle_budget, .jobs = opt.jobs});
            } catch (const budget_error&) {
                break;
            }
            if (!parity_obstruction(tag, k, oracle.distribution)) {
                parity_ok = false;
                detail = "forbidden weight present at q=" + q.get_str();
            }
            if (oracle.min_weight != MinWeight::finite(family_min_weight(tag, k))) {
                parity_ok = false;
                detail = "family minimum weight off at q=" + q.get_str();
            }
        }
        outcome.add("family parity obstructions and minimum weight", parity_ok, detail);
    }
    for (const auto& line : outcome.lines) {
        std::cout << (line.ok ? "[ok]   " : "[FAIL] ") << line.check;
        if (!line.ok && !line.detail.empty())
            std::cout << "\n       first counterexample: " << line.detail;
        std::cout << "\n";
    }
    if (!outcome.ok()) {
        std::cout << "verification FAILED\n";
        return 2;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight-enumerator quasi-polynomials of codes over Z/qZ"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string range, golden, u_text, v_text, q_text, grid_text;
    int max_q = 8, family_k = 0;
    std::string family_tag;
    bool transformed = false, csv = false, tutte_dump = false, greene = false;

    auto* analyze = app.add_subcommand("analyze", "rank, divisors, rho0 and the constituent table");
    add_common(analyze, opt);
    analyze->add_option("--q", q_text, "also evaluate the enumerator at this modulus");

    auto* constituents = app.add_subcommand("constituents", "weight quasi-polynomial as JSON");
    add_common(constituents, opt, false);

    auto* minweight = app.add_subcommand("minweight", "per-class minimum-weight report");
    add_common(minweight, opt);
    minweight->add_option("--q-range", range, "concrete q range A..B (default 2..12)");

    auto* tutte = app.add_subcommand("tutte", "Tutte quasi-polynomial constituents or evaluation");
    add_common(tutte, opt, false);
    tutte->add_option("--u", u_text, "u coordinate (rational, e.g. 3 or 5/2)");
    tutte->add_option("--v", v_text, "v coordinate");
    tutte->add_option("--grid", grid_text, "tabulate Q over the integer square A..B");
    tutte->add_flag("--json", tutte_dump, "dump constituents as JSON");
    tutte->add_flag("--greene-check", greene, "cross-check both enumerator/Tutte identities");

    auto* family = app.add_subcommand("family", "emit a family generator matrix or its chi table");
    family->add_option("tag", family_tag, "family tag: n or z")->required();
    family->add_option("k", family_k, "family parameter k >= 2")->required();
    family->add_flag("--transformed", transformed, "emit the transformed generator");
    family->add_flag("--csv", csv, "tabulate q,class,chi instead of emitting the matrix");
    family->add_option("--q-range", range, "range for --csv (default 1..30)");

    auto* verify = app.add_subcommand("verify", "oracle equivalence, identities, and guards");
    add_common(verify, opt, false);
    verify->add_option("--golden", golden, "fixture JSON with expected constituents");
    verify->add_option("--max-q", max_q, "verify oracle equivalence for q = 1..max_q");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(opt, false, q_text);
        if (constituents->parsed()) return cmd_analyze(opt, true, "");
        if (minweight->parsed()) return cmd_minweight(opt, range);
        if (tutte->parsed()) return cmd_tutte(opt, u_text, v_text, grid_text, tutte_dump, greene);
        if (family->parsed()) return cmd_family(family_tag, family_k, transformed, csv, range);
        if (verify->parsed()) return cmd_verify(opt, golden, max_q);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const zqcode::consistency_error& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const zqcode::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
