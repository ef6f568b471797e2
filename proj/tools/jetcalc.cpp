// jetcalc: generalized jet schemes of affine schemes and the singularity
// invariants derived from their dimensions.
//
// Every subcommand prints a single JSON report on stdout (or a flat text
// rendering with --format text) and echoes its resolved configuration and
// input hashes, so identical invocations produce byte-identical output.
// Exit codes: 0 success, 2 bad input, 3 budget exhausted (partial results
// are still printed with "partial": true), 1 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <jetcalc/jetcalc.hpp>

using nlohmann::ordered_json;
using namespace jetcalc;

namespace {

struct RunConfig {
    std::string subcommand;
    std::string ideal_path;
    std::string algebra_path;
    std::string center_path;
    std::string data_path;
    std::optional<std::uint32_t> char_override;
    std::string order = "auto";  // auto | degrevlex | lex
    std::size_t budget = 200000;
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
    bool verify = false;

    ordered_json to_json() const {
        ordered_json j;
        j["subcommand"] = subcommand;
        if (!ideal_path.empty()) j["ideal"] = ideal_path;
        if (!algebra_path.empty()) j["algebra"] = algebra_path;
        if (!center_path.empty()) j["center"] = center_path;
        if (!data_path.empty()) j["data"] = data_path;
        j["char"] = char_override ? ordered_json(*char_override) : ordered_json(nullptr);
        j["order"] = order;
        j["budget"] = budget;
        j["format"] = format;
        j["cache"] = !no_cache;
        return j;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string rat(const Rational& r) { return rational_to_string(r); }

ordered_json ext_json(const ExtValue& v) {
    return ordered_json(v.str());
}

// Loaded inputs along with their hashes for the report echo.
struct Inputs {
    std::optional<IdealPresentation> ideal;
    std::optional<IdealPresentation> center;
    std::optional<LocalAlgebra> algebra;
    std::optional<ResolutionData> data;
    ordered_json hashes = ordered_json::object();
};

Inputs load_inputs(const RunConfig& cfg) {
    Inputs in;
    if (!cfg.ideal_path.empty()) {
        std::string text = read_file(cfg.ideal_path);
        in.hashes["ideal"] = content_hash_hex(text);
        try {
            in.ideal = parse_ideal_text(text, cfg.char_override);
        } catch (const ParseError& e) {
            throw DomainError(cfg.ideal_path + ": " + e.what());
        }
    }
    if (!cfg.center_path.empty()) {
        std::string text = read_file(cfg.center_path);
        in.hashes["center"] = content_hash_hex(text);
        try {
            in.center = parse_ideal_text(text, cfg.char_override);
        } catch (const ParseError& e) {
            throw DomainError(cfg.center_path + ": " + e.what());
        }
    }
    if (!cfg.algebra_path.empty()) {
        std::string text = read_file(cfg.algebra_path);
        in.hashes["algebra"] = content_hash_hex(text);
        try {
            in.algebra = parse_algebra_text(text);
        } catch (const ParseError& e) {
            throw DomainError(cfg.algebra_path + ": " + e.what());
        }
    }
    if (!cfg.data_path.empty()) {
        std::string text = read_file(cfg.data_path);
        in.hashes["data"] = content_hash_hex(text);
        try {
            in.data = ResolutionData::from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(cfg.data_path + ": invalid JSON: " + e.what());
        }
    }
    return in;
}

// Variables named a_<i>_<j> are jet coordinates; sorting them by level
// (highest first) gives the order the Groebner engine likes.  Dimension
// itself does not depend on this choice.
MonomialOrder sniff_dimension_order(const std::vector<std::string>& vars) {
    std::vector<std::pair<long long, long long>> parsed;
    parsed.reserve(vars.size());
    for (const auto& v : vars) {
        long long i = 0, j = 0;
        if (std::sscanf(v.c_str(), "a_%lld_%lld", &i, &j) != 2 || i < 1 || j < 1)
            return MonomialOrder::degrevlex();
        parsed.push_back({i, j});
    }
    std::vector<int> idx(vars.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        auto kx = std::make_pair(-parsed[static_cast<std::size_t>(x)].first,
                                 parsed[static_cast<std::size_t>(x)].second);
        auto ky = std::make_pair(-parsed[static_cast<std::size_t>(y)].first,
                                 parsed[static_cast<std::size_t>(y)].second);
        return kx < ky;
    });
    MonomialOrder order;
    order.var_order = idx;
    return order;
}

MonomialOrder resolve_order(const RunConfig& cfg, const std::vector<std::string>& vars) {
    if (cfg.order == "lex") return MonomialOrder::lex();
    if (cfg.order == "degrevlex") return MonomialOrder::degrevlex();
    return sniff_dimension_order(vars);  // auto
}

ResultCache open_cache(const RunConfig& cfg) {
    if (cfg.no_cache) return ResultCache();
    std::string dir = cfg.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("JETCALC_CACHE")) dir = env;
    }
    if (dir.empty()) {
        if (const char* home = std::getenv("HOME"))
            dir = std::string(home) + "/.cache/jetcalc";
        else
            dir = "jetcalc-cache";
    }
    return ResultCache(dir);
}

std::vector<long long> parse_exponents(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw DomainError("invalid exponent list entry '" + item + "'");
        }
    }
    if (out.empty()) throw DomainError("empty exponent list");
    return out;
}

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
    auto v = parse_rational(text);
    if (!v) throw DomainError("invalid rational for " + flag + ": '" + text + "'");
    return *v;
}

void emit_text(const ordered_json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            emit_text(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) emit_text(v, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

int emit(const RunConfig& cfg, const ordered_json& report, int code) {
    if (cfg.format == "text")
        emit_text(report, "", std::cout);
    else
        std::cout << report.dump(2) << "\n";
    return code;
}

ordered_json base_report(const RunConfig& cfg, const Inputs& in) {
    ordered_json j;
    j["command"] = cfg.subcommand;
    j["config"] = cfg.to_json();
    j["inputs"] = in.hashes;
    if (in.ideal) {
        j["field"] = in.ideal->field.name();
        if (in.ideal->field.characteristic != 0) j["heuristic"] = true;
    }
    return j;
}

// ---- subcommand bodies -------------------------------------------------

int run_dim(const RunConfig& cfg) {
    Inputs in = load_inputs(cfg);
    ordered_json report = base_report(cfg, in);
    MonomialOrder order = resolve_order(cfg, in.ideal->vars);
    RunConfig resolved = cfg;
    resolved.order = order.name();
    report["config"] = resolved.to_json();

    std::string key = "dim\norder=" + order.name() + "\nbudget=" +
                      std::to_string(cfg.budget) + "\n" + in.ideal->canonical_text();
    ResultCache cache = open_cache(cfg);
    std::optional<ordered_json> value = cache.lookup(key);
    bool hit = value.has_value();
    if (!hit || cfg.verify) {
        GroebnerOptions opt;
        opt.order = order;
        opt.budget = cfg.budget;
        opt.reduce_tails = false;
        ordered_json fresh;
        try {
            GroebnerBasis basis = buchberger(*in.ideal, opt);
            long long dim;
            if (basis.is_unit_ideal()) {
                dim = -1;
            } else {
                std::vector<std::uint64_t> supports;
                for (const auto& g : basis.generators) {
                    auto [lm, lc] = detail::leading_term(g, opt.order);
                    std::uint64_t mask = 0;
                    for (std::size_t v = 0; v < lm.size(); ++v)
                        if (lm[v] > 0) mask |= (std::uint64_t{1} << v);
                    supports.push_back(mask);
                }
                dim = monomial_dimension_from_supports(std::move(supports),
                                                       in.ideal->vars.size());
            }
            fresh["dimension"] = dim;
            fresh["unit_ideal"] = basis.is_unit_ideal();
            fresh["basis_size"] = basis.generators.size();
        } catch (const BudgetExhausted&) {
            report["error"] = "budget exhausted";
            report["partial"] = true;
            return emit(cfg, report, 3);
        }
        if (hit && cfg.verify && *value != fresh)
            throw InternalError("cache verification failed: entry differs from "
                                "recomputation");
        if (!hit) cache.store(key, fresh);
        value = fresh;
    } else {
        std::cerr << "jetcalc: cache hit\n";
    }
    for (const auto& [k, v] : value->items()) report[k] = v;
    return emit(cfg, report, 0);
}

int run_jet_eqs(const RunConfig& cfg) {
    Inputs in = load_inputs(cfg);
    JetSystem sys = generate_jet_equations(*in.ideal, *in.algebra);
    std::cout << sys.as_ideal().canonical_text();
    return 0;
}

int run_lct_estimate(const RunConfig& cfg, long long m_max) {
    Inputs in = load_inputs(cfg);
    ordered_json report = base_report(cfg, in);
    LctEstimateResult res = lct_estimate(*in.ideal, m_max, cfg.budget);
    ordered_json seq = ordered_json::array();
    for (const auto& e : res.sequence.entries) {
        ordered_json entry;
        entry["m"] = e.m;
        entry["dim"] = e.dim;
        entry["normalized"] = rat(e.normalized);
        seq.push_back(entry);
    }
    report["sequence"] = seq;
    report["lct"] = ext_json(res.lct);
    report["certified"] = res.certified;
    if (res.certificate) {
        report["certificate"] = {{"m", res.certificate->first},
                                 {"m_prime", res.certificate->second}};
    }
    report["label"] = res.report.label;
    if (res.failed_at) {
        report["partial"] = true;
        report["failed_at"] = *res.failed_at;
        return emit(cfg, report, 3);
    }
    return emit(cfg, report, 0);
}

int run_lct_closed_form(const RunConfig& cfg, const std::string& exponents, bool diagonal) {
    Inputs in;
    ordered_json report = base_report(cfg, in);
    std::vector<long long> a = parse_exponents(exponents);
    Rational v = diagonal ? lct_diagonal(a) : lct_monomial(a);
    report["lct"] = rat(v);
    return emit(cfg, report, 0);
}

int run_lct_resolution(const RunConfig& cfg) {
    Inputs in = load_inputs(cfg);
    ordered_json report = base_report(cfg, in);
    report["lct"] = rat(lct_from_resolution(*in.data));
    return emit(cfg, report, 0);
}

int run_contact_codim(const RunConfig& cfg, long long m, bool bruteforce) {
    Inputs in = load_inputs(cfg);
    ordered_json report = base_report(cfg, in);
    std::optional<long long> codim = bruteforce ? contact_codim_bruteforce(*in.data, m)
                                                : contact_codim(*in.data, m);
    report["m"] = m;
    report["codim"] = codim ? ordered_json(*codim) : ordered_json("inf");
    return emit(cfg, report, 0);
}

int run_mld_resolution(const RunConfig& cfg, const std::string& q_text) {
    Inputs in = load_inputs(cfg);
    ordered_json report = base_report(cfg, in);
    Rational q = parse_rational_arg(q_text, "--q");
    report["q"] = rat(q);
    report["mld"] = ext_json(mld_from_resolution(*in.data, q));
    return emit(cfg, report, 0);
}

int run_mld_estimate(const RunConfig& cfg, const std::string& q_text, long long m_max) {
    Inputs in = load_inputs(cfg);
    ordered_json report = base_report(cfg, in);
    Rational q = parse_rational_arg(q_text, "--q");
    MldEstimateResult res = mld_estimate(*in.ideal, *in.center, q, m_max, cfg.budget);
    report["q"] = rat(q);
    ordered_json seq = ordered_json::array();
    for (const auto& [m, v] : res.v_sequence) {
        ordered_json entry;
        entry["m"] = m;
        entry["v"] = rat(v);
        seq.push_back(entry);
    }
    report["v_sequence"] = seq;
    report["mld"] = ext_json(res.mld);
    report["certified"] = res.certified;
    report["label"] = res.report.label;
    if (res.failed_at) {
        report["partial"] = true;
        report["failed_at"] = *res.failed_at;
        return emit(cfg, report, 3);
    }
    return emit(cfg, report, 0);
}

int run_alpha(const RunConfig& cfg, int p, int q) {
    Inputs in = load_inputs(cfg);
    ordered_json report = base_report(cfg, in);
    long long d = alpha_pq(*in.ideal, p, q, cfg.budget);
    report["p"] = p;
    report["q"] = q;
    report["alpha"] = d;
    report["normalized"] = rat(Rational(d, static_cast<long long>(p) * q));
    return emit(cfg, report, 0);
}

int run_beta(const RunConfig& cfg, int m) {
    Inputs in = load_inputs(cfg);
    ordered_json report = base_report(cfg, in);
    long long d = beta_m(*in.ideal, m, cfg.budget);
    report["m"] = m;
    report["beta"] = d;
    report["normalized"] = rat(Rational(d, static_cast<long long>(m) * (m + 1) / 2));
    return emit(cfg, report, 0);
}

int run_beta_monomial(const RunConfig& cfg, const std::string& exponents, int m) {
    Inputs in;
    ordered_json report = base_report(cfg, in);
    std::vector<long long> a = parse_exponents(exponents);
    long long b = beta_monomial(a, m);
    report["m"] = m;
    report["beta"] = b;
    report["normalized"] = rat(Rational(b, static_cast<long long>(m) * (m + 1) / 2));
    report["limit"] = rat(beta_monomial_limit(a));
    return emit(cfg, report, 0);
}

int run_homog(const RunConfig& cfg, int n, int d, int m_max) {
    Inputs in;
    ordered_json report = base_report(cfg, in);
    HomogFiberResult res = homog_fiber_dims(n, d, m_max);
    report["n"] = n;
    report["d"] = d;
    report["fiber_dims"] = res.fiber_dims;
    report["jet_dims"] = res.jet_dims;
    report["pure_dimensional"] = res.pure_dimensional;
    report["irreducible"] = res.irreducible;
    return emit(cfg, report, 0);
}

int run_lci_check(const RunConfig& cfg, long long dim_x) {
    Inputs in = load_inputs(cfg);
    ordered_json report = base_report(cfg, in);
    LciVerdict v = lci_jet_check(*in.ideal, dim_x, *in.algebra, cfg.budget);
    report["dim"] = dim_x;
    report["algebra"] = in.algebra->describe();
    report["jet_dim"] = v.jet_dim;
    report["expected_dim"] = v.expected_dim;
    report["singular_fiber_dim"] = v.singular_fiber_dim;
    report["pure_dimensional"] = v.pure_dimensional;
    report["irreducible"] = v.irreducible;
    report["note"] = "pure-dimensionality is decided at the level of total dimension";
    return emit(cfg, report, 0);
}

int run_prop54(const RunConfig& cfg, long long n, long long d, int r, int j_max) {
    Inputs in;
    ordered_json report = base_report(cfg, in);
    Prop54Result res = prop54_check(n, d, r, j_max);
    report["n"] = n;
    report["d"] = d;
    report["r"] = r;
    ordered_json rhs = ordered_json::array();
    for (const auto& v : res.rhs) rhs.push_back(rat(v));
    report["rhs"] = rhs;
    report["limit"] = res.limit.str();
    report["necessary_condition_holds"] = res.necessary_condition_holds;
    report["verdict"] = res.verdict;
    return emit(cfg, report, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized jet schemes and singularity invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::uint32_t char_flag = 0;
    bool char_set = false;
    app.add_option("--char", char_flag, "field characteristic override (0 = QQ)")
        ->each([&](const std::string&) { char_set = true; });
    app.add_option("--order", cfg.order, "monomial order: auto, degrevlex, lex")
        ->check(CLI::IsMember({"auto", "degrevlex", "lex"}));
    app.add_option("--budget", cfg.budget, "pair-reduction budget for Groebner runs");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", cfg.cache_dir, "result cache directory");
    app.add_flag("--no-cache", cfg.no_cache, "disable the result cache");
    app.add_flag("--verify", cfg.verify, "recompute on cache hits and compare");

    long long m_arg = 0, mmax_arg = 0, n_arg = 0, d_arg = 0, dim_arg = 0;
    int p_arg = 1, q_arg = 1, r_arg = 2, jmax_arg = 1;
    std::string exponents_arg, q_rat_arg;
    bool bruteforce = false;

    auto* c_dim = app.add_subcommand("dim", "Krull dimension of an ideal's quotient ring");
    c_dim->add_option("--ideal", cfg.ideal_path)->required();

    auto* c_jeteqs = app.add_subcommand("jet-eqs", "print the jet equations of an ideal");
    c_jeteqs->add_option("--ideal", cfg.ideal_path)->required();
    c_jeteqs->add_option("--algebra", cfg.algebra_path)->required();

    auto* c_lcte = app.add_subcommand("lct-estimate", "lct from jet dimensions");
    c_lcte->add_option("--ideal", cfg.ideal_path)->required();
    c_lcte->add_option("--mmax", mmax_arg)->required();

    auto* c_lctm = app.add_subcommand("lct-monomial", "closed-form lct of a monomial");
    c_lctm->add_option("--exponents", exponents_arg)->required();

    auto* c_lctd = app.add_subcommand("lct-diagonal", "closed-form lct of a diagonal");
    c_lctd->add_option("--exponents", exponents_arg)->required();

    auto* c_lctr = app.add_subcommand("lct-resolution", "lct from resolution data");
    c_lctr->add_option("--data", cfg.data_path)->required();

    auto* c_cc = app.add_subcommand("contact-codim", "contact locus codimension");
    c_cc->add_option("--data", cfg.data_path)->required();
    c_cc->add_option("--m", m_arg)->required();
    c_cc->add_flag("--bruteforce", bruteforce);

    auto* c_mldr = app.add_subcommand("mld-resolution", "mld from resolution data");
    c_mldr->add_option("--data", cfg.data_path)->required();
    c_mldr->add_option("--q", q_rat_arg)->required();

    auto* c_mlde = app.add_subcommand("mld-estimate", "mld from jet dimensions");
    c_mlde->add_option("--ideal", cfg.ideal_path)->required();
    c_mlde->add_option("--center", cfg.center_path)->required();
    c_mlde->add_option("--q", q_rat_arg)->required();
    c_mlde->add_option("--mmax", mmax_arg)->required();

    auto* c_alpha = app.add_subcommand("alpha", "dim of the box-algebra jet scheme");
    c_alpha->add_option("--ideal", cfg.ideal_path)->required();
    c_alpha->add_option("--p", p_arg)->required();
    c_alpha->add_option("--q", q_arg)->required();

    auto* c_beta = app.add_subcommand("beta", "dim of the fat-point jet scheme");
    c_beta->add_option("--ideal", cfg.ideal_path)->required();
    c_beta->add_option("--m", m_arg)->required();

    auto* c_betam = app.add_subcommand("beta-monomial", "stratification beta");
    c_betam->add_option("--exponents", exponents_arg)->required();
    c_betam->add_option("--m", m_arg)->required();

    auto* c_homog = app.add_subcommand("homog", "homogeneous hypersurface recursion");
    c_homog->add_option("--n", n_arg)->required();
    c_homog->add_option("--d", d_arg)->required();
    c_homog->add_option("--mmax", mmax_arg)->required();

    auto* c_lci = app.add_subcommand("lci-check", "complete intersection verdicts");
    c_lci->add_option("--ideal", cfg.ideal_path)->required();
    c_lci->add_option("--dim", dim_arg)->required();
    c_lci->add_option("--algebra", cfg.algebra_path)->required();

    auto* c_p54 = app.add_subcommand("prop54", "iterated-jet necessary condition");
    c_p54->add_option("--n", n_arg)->required();
    c_p54->add_option("--d", d_arg)->required();
    c_p54->add_option("--r", r_arg)->required();
    c_p54->add_option("--jmax", jmax_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are input errors
    }
    if (char_set) cfg.char_override = char_flag;

    try {
        if (app.got_subcommand(c_dim)) {
            cfg.subcommand = "dim";
            return run_dim(cfg);
        }
        if (app.got_subcommand(c_jeteqs)) {
            cfg.subcommand = "jet-eqs";
            return run_jet_eqs(cfg);
        }
        if (app.got_subcommand(c_lcte)) {
            cfg.subcommand = "lct-estimate";
            return run_lct_estimate(cfg, mmax_arg);
        }
        if (app.got_subcommand(c_lctm)) {
            cfg.subcommand = "lct-monomial";
            return run_lct_closed_form(cfg, exponents_arg, false);
        }
        if (app.got_subcommand(c_lctd)) {
            cfg.subcommand = "lct-diagonal";
            return run_lct_closed_form(cfg, exponents_arg, true);
        }
        if (app.got_subcommand(c_lctr)) {
            cfg.subcommand = "lct-resolution";
            return run_lct_resolution(cfg);
        }
        if (app.got_subcommand(c_cc)) {
            cfg.subcommand = "contact-codim";
            return run_contact_codim(cfg, m_arg, bruteforce);
        }
        if (app.got_subcommand(c_mldr)) {
            cfg.subcommand = "mld-resolution";
            return run_mld_resolution(cfg, q_rat_arg);
        }
        if (app.got_subcommand(c_mlde)) {
            cfg.subcommand = "mld-estimate";
            return run_mld_estimate(cfg, q_rat_arg, mmax_arg);
        }
        if (app.got_subcommand(c_alpha)) {
            cfg.subcommand = "alpha";
            return run_alpha(cfg, p_arg, q_arg);
        }
        if (app.got_subcommand(c_beta)) {
            cfg.subcommand = "beta";
            return run_beta(cfg, static_cast<int>(m_arg));
        }
        if (app.got_subcommand(c_betam)) {
            cfg.subcommand = "beta-monomial";
            return run_beta_monomial(cfg, exponents_arg, static_cast<int>(m_arg));
        }
        if (app.got_subcommand(c_homog)) {
            cfg.subcommand = "homog";
            return run_homog(cfg, static_cast<int>(n_arg), static_cast<int>(d_arg),
                             static_cast<int>(mmax_arg));
        }
        if (app.got_subcommand(c_lci)) {
            cfg.subcommand = "lci-check";
            return run_lci_check(cfg, dim_arg);
        }
        if (app.got_subcommand(c_p54)) {
            cfg.subcommand = "prop54";
            return run_prop54(cfg, n_arg, d_arg, r_arg, jmax_arg);
        }
        std::cerr << "jetcalc: no subcommand selected\n";
        return 2;
    } catch (const BudgetExhausted& e) {
        std::cerr << "jetcalc: " << e.what() << "\n";
        std::cout << ordered_json{{"error", e.what()}, {"partial", true}}.dump(2) << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "jetcalc: error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "jetcalc: internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "jetcalc: error: " << e.what() << "\n";
        return 2;
    }
}
