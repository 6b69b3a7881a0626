// divpair: command-line surface over the divisor-pair construction library.
//
// Every subcommand emits one JSON document on stdout:
//   {command, inputs, outputs, checks: [{name, pass}], timing}
// Big integers are decimal strings, never floats; values too large to log
// usefully are reported as {digits, leading} magnitude summaries.
// search-k and scan can emit CSV instead (one row per k / per witness).
//
// Exit codes: 0 success, 1 verification failure, 2 budget exhausted,
// 3 invalid arguments.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "divpair/minus_two.hpp"
#include "divpair/oracle.hpp"
#include "divpair/pell.hpp"
#include "divpair/plus_two.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace divpair;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

// Values above this many digits are emitted as magnitude summaries only.
constexpr std::size_t kInlineDigitLimit = 10000;

struct RunConfig {
    std::size_t digit_budget = pell::kDefaultDigitBudget;
    std::uint64_t factor_budget = arith::kDefaultRhoBudget;
    unsigned workers = 1;
    std::string output_format = "json";
    unsigned long seed = 0x5eed;
    bool timing = true;

    void validate() const {
        if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
        if (digit_budget < 16) throw std::invalid_argument("config: digit_budget floor is 16");
        if (factor_budget < 1000)
            throw std::invalid_argument("config: factor_budget floor is 1000");
        if (output_format != "json" && output_format != "csv" && output_format != "text")
            throw std::invalid_argument("config: output_format must be json, csv or text");
    }
};

// key=value file named by DIVPAIR_CONFIG; flags override whatever it sets.
void load_config_file(RunConfig& cfg) {
    const char* path = std::getenv("DIVPAIR_CONFIG");
    if (!path) return;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(std::string("config: cannot read ") + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got: " + line);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "digit_budget")
                cfg.digit_budget = std::stoull(value);
            else if (key == "factor_budget")
                cfg.factor_budget = std::stoull(value);
            else if (key == "workers")
                cfg.workers = static_cast<unsigned>(std::stoul(value));
            else if (key == "output_format")
                cfg.output_format = value;
            else if (key == "seed")
                cfg.seed = std::stoul(value);
            else if (key == "timing")
                cfg.timing = (value == "on" || value == "true" || value == "1");
            else
                throw std::invalid_argument("config: unknown key " + key);
        } catch (const std::logic_error& e) {
            if (std::string(e.what()).rfind("config:", 0) == 0) throw;
            throw std::invalid_argument("config: bad value for " + key + ": " + value);
        }
    }
}

Int parse_int(const std::string& s, const std::string& what) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(what + ": not a valid integer: " + s);
    }
}

std::string str(const Int& v) { return v.get_str(); }

// Magnitude summary; the exact value is inlined only when reasonably small.
ordered_json summarize(const Int& v) {
    ordered_json j;
    std::size_t digits = pell::digit_count(v);
    if (digits <= kInlineDigitLimit) j["value"] = str(v);
    j["digits"] = digits;
    j["leading"] = (v < 0 ? "-" : "") + pell::leading_digits(v);
    return j;
}

ordered_json triple_json(const DivisorTriple& t) {
    ordered_json j;
    j["n"] = str(t.n);
    j["d1"] = str(t.d1);
    j["d2"] = str(t.d2);
    j["delta"] = t.delta;
    j["epsilon"] = t.epsilon;
    return j;
}

void dump_text(const ordered_json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            dump_text(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) dump_text(v, prefix + "[" + std::to_string(i++) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

struct Report {
    ordered_json inputs = ordered_json::object();
    ordered_json outputs = ordered_json::object();
    ordered_json checks = ordered_json::array();
    // CSV body, emitted instead of JSON when output_format == csv.
    std::optional<std::string> csv;
    bool budget_exhausted = false;

    void check(const std::string& name, bool pass) {
        checks.push_back(ordered_json{{"name", name}, {"pass", pass}});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.at("pass").get<bool>()) return false;
        return true;
    }
};

int emit(const std::string& command, const RunConfig& cfg, const Report& rep, long long ms) {
    if (cfg.output_format == "csv" && rep.csv) {
        std::cout << *rep.csv;
    } else {
        ordered_json doc;
        doc["command"] = command;
        doc["inputs"] = rep.inputs;
        doc["outputs"] = rep.outputs;
        doc["checks"] = rep.checks;
        if (cfg.timing)
            doc["timing"] = ordered_json{{"ms", ms}};
        else
            doc["timing"] = nullptr;
        if (cfg.output_format == "text")
            dump_text(doc, "", std::cout);
        else
            std::cout << doc.dump(2) << "\n";
    }
    if (rep.budget_exhausted) return kExitBudget;
    return rep.all_pass() ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------- commands

Report cmd_pell(const RunConfig& cfg, const std::string& d_str) {
    Report rep;
    Int D = parse_int(d_str, "D");
    rep.inputs["D"] = str(D);
    auto sol = pell::pell_fundamental(D, cfg.digit_budget);
    rep.outputs["U"] = summarize(sol.U);
    rep.outputs["V"] = summarize(sol.V);
    rep.check("pell_identity", sol.U * sol.U - D * sol.V * sol.V == 1);
    return rep;
}

Report cmd_cfrac(const std::string& d_str) {
    Report rep;
    Int D = parse_int(d_str, "D");
    rep.inputs["D"] = str(D);
    auto cf = pell::cf_sqrt(D);
    rep.outputs["a0"] = str(cf.a0);
    ordered_json period = ordered_json::array();
    for (const Int& a : cf.period) period.push_back(str(a));
    rep.outputs["period"] = period;
    rep.outputs["period_length"] = cf.period.size();
    rep.check("last_term_is_2a0", cf.period.back() == 2 * cf.a0);
    bool palindrome = true;
    std::size_t len = cf.period.size() - 1;
    for (std::size_t i = 0; i < len / 2; ++i)
        if (cf.period[i] != cf.period[len - 1 - i]) palindrome = false;
    rep.check("body_palindrome", palindrome);
    return rep;
}

Report cmd_gen_plus(const RunConfig& cfg, long delta, unsigned long count) {
    Report rep;
    rep.inputs["delta"] = delta;
    rep.inputs["count"] = count;
    auto chain = plus_two::triple_chain(delta, count, cfg.digit_budget);
    ordered_json triples = ordered_json::array();
    bool all_verify = true, chained = true;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        ordered_json j = triple_json(chain[i]);
        j["m"] = i + 1;
        triples.push_back(std::move(j));
        if (!oracle::verify_triple(chain[i])) all_verify = false;
        if (i + 1 < chain.size() && chain[i].d2 != chain[i + 1].d1) chained = false;
    }
    rep.outputs["triples"] = std::move(triples);
    rep.check("all_triples_verify", all_verify);
    rep.check("chain_links", chained);
    return rep;
}

Report cmd_resultant_check(const RunConfig& cfg, long delta, unsigned long m) {
    Report rep;
    rep.inputs["delta"] = delta;
    rep.inputs["m"] = m;
    auto f = plus_two::quadratic_for(delta, plus_two::triple_at(delta, m, cfg.digit_budget).n);
    auto g =
        plus_two::quadratic_for(delta, plus_two::triple_at(delta, m + 1, cfg.digit_budget).n);
    Int res = plus_two::resultant_2x2(f, g);
    rep.outputs["resultant"] = str(res);
    rep.check("resultant_zero", res == 0);
    rep.check("matrix_identity", plus_two::resultant_identity_check(delta, m));
    return rep;
}

Report cmd_params(long delta, const std::string& k_str) {
    Report rep;
    Int k = parse_int(k_str, "k");
    rep.inputs["delta"] = delta;
    rep.inputs["k"] = str(k);
    auto p = minus_two::derive_params(delta, k);
    rep.outputs["g"] = str(p.g);
    rep.outputs["d"] = str(p.d);
    rep.outputs["a"] = str(p.a);
    rep.outputs["b"] = str(p.b);
    rep.outputs["c"] = str(p.c);
    rep.outputs["D"] = str(minus_two::pell_modulus(p));
    rep.outputs["epsilon"] = p.epsilon;
    rep.outputs["a_prime"] = arith::is_prime(p.a);
    rep.outputs["b_prime"] = arith::is_prime(p.b);
    rep.outputs["c_prime"] = arith::is_prime(p.c);
    return rep;
}

std::string verdict_name(minus_two::Verdict v) {
    switch (v) {
        case minus_two::Verdict::ImpossibleMod8: return "impossible-mod8";
        case minus_two::Verdict::ImpossibleMinimality: return "impossible-minimality";
        case minus_two::Verdict::Conditional: return "conditional";
        case minus_two::Verdict::Possible: return "possible";
    }
    return "?";
}

Report cmd_cases(int delta_mod8, int k_mod8) {
    Report rep;
    rep.inputs["delta_mod8"] = delta_mod8;
    rep.inputs["k_mod8"] = k_mod8;
    auto table = minus_two::mod8_case_table(delta_mod8, k_mod8);
    ordered_json cases = ordered_json::array();
    for (const auto& cs : table) {
        ordered_json j;
        j["id"] = cs.id();
        j["verdict"] = verdict_name(cs.verdict);
        ordered_json conds = ordered_json::array();
        for (const auto& c : cs.conditions) conds.push_back(c.describe());
        j["conditions"] = std::move(conds);
        cases.push_back(std::move(j));
    }
    rep.outputs["cases"] = std::move(cases);
    return rep;
}

Report cmd_check_k(long delta, const std::string& k_str) {
    Report rep;
    Int k = parse_int(k_str, "k");
    rep.inputs["delta"] = delta;
    rep.inputs["k"] = str(k);
    auto r = minus_two::check_k_conditions(delta, k);
    static const char* names[6] = {"residue_mod_8", "jacobi_A", "jacobi_B",
                                   "a_prime",       "b_prime",  "c_prime"};
    for (int i = 0; i < 6; ++i) rep.check(names[i], r.cond[i]);
    ordered_json jac = ordered_json::object();
    for (const auto& [sym, val] : r.jacobi_values) jac[sym] = val;
    rep.outputs["jacobi"] = std::move(jac);
    rep.outputs["all_satisfied"] = r.all_satisfied;
    return rep;
}

std::vector<arith::Congruence> parse_residues(const std::vector<std::string>& specs) {
    std::vector<arith::Congruence> out;
    for (const std::string& s : specs) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--residue expects p=x, got: " + s);
        Int m = parse_int(s.substr(0, eq), "residue modulus");
        Int x = parse_int(s.substr(eq + 1), "residue value");
        out.emplace_back(x, m);
    }
    return out;
}

ordered_json crt_class_json(const minus_two::CrtClass& cls) {
    ordered_json j;
    j["k0"] = str(cls.k0);
    j["modulus"] = str(cls.modulus);
    j["k_seed"] = str(cls.k_seed);
    j["x_residue"] = str(cls.x_class.residue);
    j["x_modulus"] = str(cls.x_class.modulus);
    ordered_json sys = ordered_json::array();
    for (const auto& c : cls.x_system)
        sys.push_back(ordered_json{{"residue", str(c.residue)}, {"modulus", str(c.modulus)}});
    j["x_system"] = std::move(sys);
    return j;
}

Report cmd_crt_class(long delta, const std::vector<std::string>& residues) {
    Report rep;
    rep.inputs["delta"] = delta;
    rep.inputs["residues"] = residues;
    auto cls = minus_two::build_crt_class(delta, parse_residues(residues));
    rep.outputs = crt_class_json(cls);
    // the first positive member must satisfy the congruence/Jacobi conditions
    Int member = cls.k0 >= 1 ? cls.k0 : cls.k0 + cls.modulus;
    auto r = minus_two::check_k_conditions(delta, member);
    rep.check("member_residue_mod_8", r.cond[0]);
    rep.check("member_jacobi_A", r.cond[1]);
    rep.check("member_jacobi_B", r.cond[2]);
    return rep;
}

// "k0,M", k0 possibly negative; used as both the search class and the
// Schinzel seed y0.
minus_two::CrtClass parse_class(const std::string& spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--class expects k0,M, got: " + spec);
    minus_two::CrtClass cls;
    cls.k_seed = parse_int(spec.substr(0, comma), "class k0");
    cls.modulus = parse_int(spec.substr(comma + 1), "class modulus");
    if (cls.modulus < 1) throw std::invalid_argument("--class modulus must be positive");
    cls.k0 = cls.k_seed % cls.modulus;
    if (cls.k0 < 0) cls.k0 += cls.modulus;
    return cls;
}

Report cmd_search_k(const RunConfig& cfg, long delta, const std::string& max_str,
                    const std::string& class_spec) {
    Report rep;
    Int k_max = parse_int(max_str, "max");
    rep.inputs["delta"] = delta;
    rep.inputs["max"] = str(k_max);
    std::optional<minus_two::CrtClass> cls;
    if (!class_spec.empty()) {
        cls = parse_class(class_spec);
        rep.inputs["class"] = ordered_json{{"k0", str(cls->k0)}, {"modulus", str(cls->modulus)}};
    }
    auto values = minus_two::search_k(delta, k_max, cls, cfg.workers);
    ordered_json arr = ordered_json::array();
    std::string csv = "k\n";
    for (const Int& k : values) {
        arr.push_back(str(k));
        csv += str(k) + "\n";
    }
    rep.outputs["values"] = std::move(arr);
    rep.outputs["count"] = values.size();
    rep.csv = std::move(csv);
    return rep;
}

Report cmd_construct(const RunConfig& cfg, long delta, const std::string& k_str, bool force) {
    Report rep;
    Int k = parse_int(k_str, "k");
    rep.inputs["delta"] = delta;
    rep.inputs["k"] = str(k);
    rep.inputs["force"] = force;
    auto c = minus_two::construct_solution(delta, k, force, cfg.digit_budget);
    rep.outputs["D"] = str(minus_two::pell_modulus(c.params));
    rep.outputs["a"] = str(c.params.a);
    rep.outputs["b"] = str(c.params.b);
    rep.outputs["c"] = str(c.params.c);
    rep.outputs["g"] = str(c.params.g);
    rep.outputs["epsilon"] = c.params.epsilon;
    rep.outputs["U0"] = summarize(c.U0);
    rep.outputs["V0"] = summarize(c.V0);
    rep.outputs["n"] = summarize(c.triple.n);
    rep.outputs["d1"] = summarize(c.triple.d1);
    rep.outputs["d2"] = summarize(c.triple.d2);
    rep.outputs["case"] = c.case_id;
    rep.outputs["gcd_matches_g"] = c.gcd_matches_g;
    rep.check("oracle_verified", oracle::verify_triple(c.triple, /*require_gt1=*/true));
    rep.check("case_classified", c.case_id != "unknown");
    return rep;
}

Report cmd_schinzel(const RunConfig& cfg, long delta, const std::string& class_spec,
                    unsigned samples) {
    Report rep;
    auto cls = parse_class(class_spec);
    rep.inputs["delta"] = delta;
    rep.inputs["class"] = ordered_json{{"k0", str(cls.k_seed)}, {"modulus", str(cls.modulus)}};
    rep.inputs["samples"] = samples;
    arith::set_rho_seed(cfg.seed);
    auto r = minus_two::schinzel_check(delta, cls, samples);
    rep.outputs["s"] = str(r.s);
    rep.outputs["y0"] = str(r.y0);
    ordered_json arr = ordered_json::array();
    for (const auto& s : r.samples) {
        ordered_json j;
        j["e"] = str(s.e);
        const char* names[3] = {"f1", "f2", "f3"};
        for (int i = 0; i < 3; ++i) {
            ordered_json f;
            f["value"] = str(s.values[i]);
            ordered_json factors = ordered_json::array();
            for (const auto& [p, e] : s.factored[i].factors)
                factors.push_back(ordered_json{{"prime", str(p)}, {"exponent", e}});
            f["factors"] = std::move(factors);
            j[names[i]] = std::move(f);
        }
        arr.push_back(std::move(j));
    }
    rep.outputs["samples"] = std::move(arr);
    rep.outputs["gcd"] = str(r.gcd);
    rep.check("gcd_is_1", r.success);
    return rep;
}

Report cmd_verify(const std::string& n_str, const std::string& d1_str, const std::string& d2_str,
                  long delta, long epsilon, bool gt1) {
    Report rep;
    DivisorTriple t{parse_int(n_str, "n"), parse_int(d1_str, "d1"), parse_int(d2_str, "d2"),
                    delta, epsilon};
    rep.inputs["triple"] = triple_json(t);
    rep.inputs["gt1"] = gt1;
    rep.check("verified", oracle::verify_triple(t, gt1));
    return rep;
}

Report cmd_scan(const RunConfig& cfg, long delta, long epsilon, const std::string& max_str,
                bool gt1) {
    Report rep;
    Int n_max = parse_int(max_str, "max");
    rep.inputs["delta"] = delta;
    rep.inputs["epsilon"] = epsilon;
    rep.inputs["max"] = str(n_max);
    rep.inputs["gt1"] = gt1;
    arith::set_rho_seed(cfg.seed);
    auto res = oracle::scan(delta, epsilon, n_max, gt1, cfg.workers, cfg.factor_budget);
    ordered_json arr = ordered_json::array();
    std::string csv = "n,d1,d2,delta,epsilon\n";
    bool all_verify = true;
    for (const auto& w : res.witnesses) {
        arr.push_back(triple_json(w));
        csv += str(w.n) + "," + str(w.d1) + "," + str(w.d2) + "," + std::to_string(w.delta) +
               "," + std::to_string(w.epsilon) + "\n";
        if (!oracle::verify_triple(w, gt1)) all_verify = false;
    }
    rep.outputs["witnesses"] = std::move(arr);
    rep.outputs["scanned"] = res.scanned;
    if (res.stopped_at) {
        rep.outputs["stopped_at"] = str(*res.stopped_at);
        rep.budget_exhausted = true;
    }
    rep.csv = std::move(csv);
    rep.check("all_witnesses_verify", all_verify);
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    RunConfig cfg;
    try {
        load_config_file(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App app{"divisor-pair construction toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--digit-budget", cfg.digit_budget, "abort once values exceed this many digits");
    app.add_option("--factor-budget", cfg.factor_budget, "iteration bound for rho factorization");
    app.add_option("--workers", cfg.workers, "worker threads for search/scan");
    app.add_option("--format", cfg.output_format, "output format: json, csv or text");
    app.add_option("--seed", cfg.seed, "rho restart seed (affects runtime only)");
    app.add_flag("!--no-timing", cfg.timing, "omit wall-clock timing from output");

    std::string d_str, k_str, max_str, class_spec, n_str, d1_str, d2_str;
    std::vector<std::string> residues;
    long delta = 0, epsilon = 0;
    int delta_mod8 = 0, k_mod8 = 0;
    unsigned long count = 1, m_index = 1;
    unsigned samples = 3;
    bool force = false, gt1 = false;

    auto* c_pell = app.add_subcommand("pell", "fundamental solution of U^2 - D V^2 = 1");
    c_pell->add_option("D", d_str, "non-square modulus")->required();

    auto* c_cfrac = app.add_subcommand("cfrac", "periodic continued fraction of sqrt(D)");
    c_cfrac->add_option("D", d_str, "non-square radicand")->required();

    auto* c_gen = app.add_subcommand("gen-plus", "triples of the epsilon = delta + 2 family");
    c_gen->add_option("--delta", delta)->required();
    c_gen->add_option("--count", count)->required();

    auto* c_res = app.add_subcommand("resultant-check", "shared-root resultant of consecutive "
                                                        "divisor quadratics");
    c_res->add_option("--delta", delta)->required();
    c_res->add_option("--m", m_index)->required();

    auto* c_params = app.add_subcommand("params", "derived parameters of the epsilon = delta - 2 "
                                                  "family");
    c_params->add_option("--delta", delta)->required();
    c_params->add_option("--k", k_str)->required();

    auto* c_cases = app.add_subcommand("cases", "mod-8 verdicts for the sixteen factorization "
                                                "cases");
    c_cases->add_option("--delta-mod8", delta_mod8)->required();
    c_cases->add_option("--k-mod8", k_mod8)->required();

    auto* c_check = app.add_subcommand("check-k", "conditions (i)-(vi) for a candidate k");
    c_check->add_option("--delta", delta)->required();
    c_check->add_option("--k", k_str)->required();

    auto* c_crt = app.add_subcommand("crt-class", "CRT class of k guaranteeing (i)-(iii)");
    c_crt->add_option("--delta", delta)->required();
    c_crt->add_option("--residue", residues, "override prime residue, p=x (repeatable)");

    auto* c_search = app.add_subcommand("search-k", "ascending k passing all conditions");
    c_search->add_option("--delta", delta)->required();
    c_search->add_option("--max", max_str)->required();
    c_search->add_option("--class", class_spec, "restrict to k == k0 (mod M), as k0,M");

    auto* c_construct = app.add_subcommand("construct", "full pipeline: Pell solve to verified "
                                                        "divisor pair");
    c_construct->add_option("--delta", delta)->required();
    c_construct->add_option("--k", k_str)->required();
    c_construct->add_flag("--force", force, "bypass the delta mod 8 and condition guards");

    auto* c_schinzel = app.add_subcommand("schinzel", "fixed-divisor gcd check of the class "
                                                      "polynomials");
    c_schinzel->add_option("--delta", delta)->required();
    c_schinzel->add_option("--class", class_spec, "seed and modulus, as k0,M")->required();
    c_schinzel->add_option("--samples", samples)->required();

    auto* c_verify = app.add_subcommand("verify", "check a claimed triple against the oracle");
    c_verify->add_option("--n", n_str)->required();
    c_verify->add_option("--d1", d1_str)->required();
    c_verify->add_option("--d2", d2_str)->required();
    c_verify->add_option("--delta", delta)->required();
    c_verify->add_option("--epsilon", epsilon)->required();
    c_verify->add_flag("--gt1", gt1, "require d1, d2 > 1");

    auto* c_scan = app.add_subcommand("scan", "brute-force oracle scan over odd n");
    c_scan->add_option("--delta", delta)->required();
    c_scan->add_option("--epsilon", epsilon)->required();
    c_scan->add_option("--max", max_str)->required();
    c_scan->add_flag("--gt1", gt1, "require d1, d2 > 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.validate();
        auto t0 = std::chrono::steady_clock::now();
        Report rep;
        std::string command;
        if (*c_pell) {
            command = "pell";
            rep = cmd_pell(cfg, d_str);
        } else if (*c_cfrac) {
            command = "cfrac";
            rep = cmd_cfrac(d_str);
        } else if (*c_gen) {
            command = "gen-plus";
            rep = cmd_gen_plus(cfg, delta, count);
        } else if (*c_res) {
            command = "resultant-check";
            rep = cmd_resultant_check(cfg, delta, m_index);
        } else if (*c_params) {
            command = "params";
            rep = cmd_params(delta, k_str);
        } else if (*c_cases) {
            command = "cases";
            rep = cmd_cases(delta_mod8, k_mod8);
        } else if (*c_check) {
            command = "check-k";
            rep = cmd_check_k(delta, k_str);
        } else if (*c_crt) {
            command = "crt-class";
            rep = cmd_crt_class(delta, residues);
        } else if (*c_search) {
            command = "search-k";
            rep = cmd_search_k(cfg, delta, max_str, class_spec);
        } else if (*c_construct) {
            command = "construct";
            rep = cmd_construct(cfg, delta, k_str, force);
        } else if (*c_schinzel) {
            command = "schinzel";
            rep = cmd_schinzel(cfg, delta, class_spec, samples);
        } else if (*c_verify) {
            command = "verify";
            rep = cmd_verify(n_str, d1_str, d2_str, delta, epsilon, gt1);
        } else if (*c_scan) {
            command = "scan";
            rep = cmd_scan(cfg, delta, epsilon, max_str, gt1);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        return emit(command, cfg, rep, ms);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const UnsupportedDeltaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        // construction and no-solution failures are verification failures
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}
