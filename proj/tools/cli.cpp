#include "cli.hpp"

#include "markov/algebraic.hpp"
#include "markov/biword.hpp"
#include "markov/continued_fraction.hpp"
#include "markov/cover.hpp"
#include "markov/dimension.hpp"
#include "markov/diophantine.hpp"
#include "markov/error.hpp"
#include "markov/markov_tree.hpp"
#include "markov/spectra.hpp"
#include "markov/subshift.hpp"
#include "markov/sumset.hpp"
#include "markov/values.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace markov::cli {

using nlohmann::json;

const std::vector<OpBinding>& op_registry() {
    static const std::vector<OpBinding> ops = {
        {"convergents", "cf", "convergents", {"cf", "convergents", "--digits", "1,1,1,1"}},
        {"periodic_value", "cf", "periodic", {"cf", "periodic", "--pre", "0", "--period", "2"}},
        {"surd_cf", "cf", "surd", {"cf", "surd", "--surd", "sqrt(3)"}},
        {"f_value", "cf", "f", {"cf", "f", "--word", "(1)* | (1)*"}},
        {"markov_value", "cf", "markov", {"cf", "markov", "--word", "(2,2,1,1)* | (2,2,1,1)*"}},
        {"lagrange_value", "cf", "lagrange", {"cf", "lagrange", "--word", "(1)* 3 | (2,2,1,1)*"}},
        {"approximation_diagnostics", "cf", "diagnostics", {"cf", "diagnostics", "--digits", "1", "--nmax", "10"}},
        {"khintchine_levy_estimate", "cf", "kl", {"cf", "kl", "--samples", "100", "--depth", "100", "--seed", "3"}},
        {"enumerate_triples", "tree", "triples", {"tree", "--zmax", "5"}},
        {"vieta_children", "tree", "children", {"tree", "children", "--triple", "1,2,5"}},
        {"lagrange_number", "tree", "lagrange", {"tree", "lagrange", "--z", "5"}},
        {"unicity_report", "tree", "unicity", {"tree", "unicity", "--zmax", "1000"}},
        {"validate", "cover", "validate", {"cover", "validate", "--spec", "X"}},
        {"cylinder_cover", "cover", "cylinders", {"cover", "cylinders", "--spec", "alphabet=1,2", "--depth", "2"}},
        {"thickness_bound", "cover", "thickness", {"cover", "thickness", "--spec", "C(4)", "--depth", "4"}},
        {"minkowski_sum_cover", "sumset", "minkowski", {"sumset", "minkowski", "--spec", "C(4)", "--depth", "2"}},
        {"gap_lemma_certificate", "sumset", "gaplemma", {"sumset", "gaplemma", "--spec", "C(4)", "--depth", "4"}},
        {"hall_density_check", "sumset", "hall", {"sumset", "hall", "--depth", "6", "--eps", "1e-2"}},
        {"cover_dim_upper", "dim", "cover", {"dim", "--spec", "K", "--method", "cover", "--depth", "6"}},
        {"cover_dim_lower", "dim", "cover", {"dim", "--spec", "K", "--method", "cover", "--depth", "6"}},
        {"thermo_dimension", "dim", "thermo", {"dim", "--spec", "X", "--method", "thermo", "--wordlen", "6"}},
        {"dimension_function_lower", "dcurve", "", {"dcurve", "--tmin", "3", "--tmax", "3.5", "--steps", "2", "--wordlen", "6"}},
        {"spectrum_below_3", "spectra", "below3", {"spectra", "below3", "--count", "3"}},
        {"named_constants", "spectra", "constants", {"spectra", "constants", "--precision", "40"}},
        {"form_minimum", "spectra", "form", {"spectra", "form", "--a", "sqrt(5)/5", "--b", "sqrt(5)/5", "--c", "-sqrt(5)/5", "--box", "20"}},
        {"dynamical_spectra", "spectra", "dyn", {"spectra", "dyn", "--spec", "alphabet=1,2", "--f-table", "truncated:3", "--max-period", "4"}},
    };
    return ops;
}

namespace {

struct RunConfig {
    int precision = 30;  // decimal digits in rendered output
    std::uint64_t seed = 1;
    int depth = 0;       // 0: subcommand default
    int wordlen = 0;
    std::size_t budget = kDefaultIntervalBudget;
    std::string format = "json";
    std::string out;
    unsigned threads = 1;
};

mpfr_prec_t precision_bits(int digits) {
    return std::max<mpfr_prec_t>(64, static_cast<mpfr_prec_t>(std::ceil(digits * 3.33)) + 32);
}

std::string decimal_string(double x, int digits = 17) {
    std::ostringstream s;
    s << std::setprecision(digits) << x;
    return s.str();
}

json value_json(const AlgebraicValue& v, int digits) {
    json j;
    j["exact"] = v.is_exact() ? json(v.to_string()) : json(nullptr);
    j["decimal"] = v.decimal(digits);
    j["precision"] = digits;
    if (!v.is_exact()) j["enclosure"] = v.enclosure(precision_bits(digits)).to_string(digits);
    return j;
}

json word_json(const DigitWord& w) {
    json a = json::array();
    for (Digit d : w) a.push_back(d);
    return a;
}

DigitWord parse_digits(const std::string& text) {
    DigitWord out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) throw ValidationError("malformed digit '" + token + "'");
        out.push_back(v);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            token += ch;
    }
    flush();
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// A spec file path, a built-in name (C(N), CN, X, K) or inline text.
SubshiftSpec load_spec(const std::string& arg) {
    if (arg.empty()) throw ValidationError("missing --spec");
    std::smatch m;
    static const std::regex full(R"(^C\(?(\d+)\)?$)");
    if (std::regex_match(arg, m, full)) return full_shift(std::stoll(m[1]));
    if (arg == "X") return cantor_set_x();
    if (arg == "K" || arg == "K({1,2_2})") return block_set_k1_22();
    if (arg == "E2") return full_shift(2);
    if (std::filesystem::is_regular_file(arg)) return parse_subshift(read_file(arg));
    return parse_subshift(arg);
}

// A table file, "constant:<value>" or "truncated:<k>" (over the spec's alphabet).
CylinderTable load_table(const std::string& arg, const std::vector<Digit>& alphabet) {
    if (arg.rfind("constant:", 0) == 0) return constant_table(alphabet, parse_rational(arg.substr(9)));
    if (arg.rfind("truncated:", 0) == 0) return truncated_f_table(alphabet, std::stoi(arg.substr(10)));
    return parse_cylinder_table(read_file(arg));
}

json spectrum_json(const SpectrumApprox& s, int digits) {
    json j;
    j["kind"] = to_string(s.kind);
    j["entries"] = json::array();
    for (const auto& e : s.entries) {
        json v = value_json(e.value, digits);
        v["word"] = e.word;
        j["entries"].push_back(v);
    }
    return j;
}

json spec_json(const SubshiftSpec& spec) {
    NormalizedSpec n = validate(spec);
    json j;
    j["text"] = to_string(spec);
    j["alphabet"] = word_json(n.alphabet());
    j["forbidden_count"] = spec.forbidden.size();
    j["block_mode"] = spec.block_mode();
    j["automaton_states"] = n.state_count();
    return j;
}

struct Result {
    json doc;
    std::string text;  // non-empty for CSV output
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Markov and Lagrange spectra toolkit", "markov"};
    app.require_subcommand(1, 1);
    app.add_option("--precision", cfg.precision, "decimal digits in output")->check(CLI::Range(1, 100000));
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--depth", cfg.depth, "construction depth")->check(CLI::NonNegativeNumber);
    app.add_option("--wordlen", cfg.wordlen, "word length")->check(CLI::NonNegativeNumber);
    app.add_option("--budget", cfg.budget, "interval/state budget")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg.out, "output file (default stdout)");
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    app.fallthrough();

    std::string action, word, digits_text, pre_text, period_text, surd_text, spec_arg, spec2_arg, triple_text;
    std::string method = "cover", table_arg, a_text, b_text, c_text, alphabet_text = "1,2";
    std::string tmin_text = "2", tmax_text = "3.6";
    long long samples = 10000, zmax = 433, z = 5, count = 3;
    int generations = -1;
    int nmax = 20, steps = 16, box = 50, max_period = 6, branches = 2;
    double eps = 1e-4, tol = 1e-10, ratio = 1.0 / 3.0;

    auto* cf = app.add_subcommand("cf", "continued fractions, f, Markov and Lagrange values");
    cf->add_option("action", action)->required();
    cf->add_option("--digits", digits_text, "comma-separated digits a0,a1,...");
    cf->add_option("--pre", pre_text, "preperiod digits");
    cf->add_option("--period", period_text, "period digits");
    cf->add_option("--surd", surd_text, "quadratic surd, e.g. (1+sqrt(5))/2");
    cf->add_option("--word", word, "BiWord, e.g. '(1)* | (2,2,1,1)*'");
    cf->add_option("--nmax", nmax, "rows of diagnostics")->check(CLI::PositiveNumber);
    cf->add_option("--samples", samples, "Monte Carlo samples")->check(CLI::PositiveNumber);

    auto* tree = app.add_subcommand("tree", "Markov triples");
    tree->add_option("action", action);
    tree->add_option("--zmax", zmax, "largest coordinate")->check(CLI::PositiveNumber);
    tree->add_option("--triple", triple_text, "x,y,z");
    tree->add_option("--z", z, "Markov number")->check(CLI::PositiveNumber);
    tree->add_option("--generations", generations, "stop this many generations below (1,1,1)");

    auto* cover = app.add_subcommand("cover", "subshift validation, cylinder covers, thickness");
    cover->add_option("action", action)->required();
    cover->add_option("--spec", spec_arg, "spec file, built-in name or inline text")->required();

    auto* sumset = app.add_subcommand("sumset", "sums of Gauss-Cantor sets");
    sumset->add_option("action", action)->required();
    sumset->add_option("--spec", spec_arg, "first set");
    sumset->add_option("--spec2", spec2_arg, "second set (default: the first)");
    sumset->add_option("--eps", eps, "density threshold")->check(CLI::PositiveNumber);

    auto* dim = app.add_subcommand("dim", "Hausdorff dimension estimates");
    dim->add_option("--spec", spec_arg, "spec");
    dim->add_option("--method", method)->check(CLI::IsMember({"cover", "thermo", "affine"}));
    dim->add_option("--tol", tol)->check(CLI::PositiveNumber);
    dim->add_option("--branches", branches)->check(CLI::PositiveNumber);
    dim->add_option("--ratio", ratio);

    auto* dcurve = app.add_subcommand("dcurve", "lower bound of the dimension function d(t)");
    dcurve->add_option("--tmin", tmin_text);
    dcurve->add_option("--tmax", tmax_text);
    dcurve->add_option("--steps", steps)->check(CLI::PositiveNumber);
    dcurve->add_option("--alphabet", alphabet_text);

    auto* spectra = app.add_subcommand("spectra", "spectrum-level objects");
    spectra->add_option("action", action)->required();
    spectra->add_option("--count", count)->check(CLI::PositiveNumber);
    spectra->add_option("--a", a_text);
    spectra->add_option("--b", b_text);
    spectra->add_option("--c", c_text);
    spectra->add_option("--box", box)->check(CLI::PositiveNumber);
    spectra->add_option("--spec", spec_arg);
    spectra->add_option("--f-table", table_arg);
    spectra->add_option("--max-period", max_period)->check(CLI::PositiveNumber);

    for (auto* sub : {cf, tree, cover, sumset, dim, dcurve, spectra}) sub->fallthrough();

    static const std::set<std::string> known{"cf", "tree", "cover", "sumset", "dim", "dcurve", "spectra"};
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].rfind("-", 0) == 0) {
            if (args[i].find('=') == std::string::npos && args[i] != "-h" && args[i] != "--help") ++i;  // skip the value
            continue;
        }
        if (!known.count(args[i])) {
            err << "error: unknown subcommand '" << args[i] << "'\n" << app.help();
            return kUsage;
        }
        break;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const CLI::ConversionError& e) {
        err << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    static const std::map<std::string, std::set<std::string>> actions{
        {"cf", {"convergents", "periodic", "surd", "f", "markov", "lagrange", "diagnostics", "kl"}},
        {"tree", {"", "triples", "children", "lagrange", "unicity"}},
        {"cover", {"validate", "cylinders", "thickness"}},
        {"sumset", {"minkowski", "gaplemma", "hall"}},
        {"spectra", {"constants", "below3", "form", "dyn"}},
    };
    for (auto* sub : {cf, tree, cover, sumset, spectra}) {
        if (sub->parsed() && !actions.at(sub->get_name()).count(action)) {
            err << "error: unknown action '" << action << "' for " << sub->get_name() << "\n" << sub->help();
            return kUsage;
        }
    }

    const int digits = cfg.precision;
    const mpfr_prec_t bits = precision_bits(digits);
    Result result;
    json& doc = result.doc;
    doc["schema"] = 1;

    try {
        if (cf->parsed()) {
            doc["command"] = "cf " + action;
            if (action == "convergents") {
                auto cs = convergents(FiniteCF{parse_digits(digits_text)});
                doc["convergents"] = json::array();
                for (std::size_t n = 0; n < cs.size(); ++n)
                    doc["convergents"].push_back({{"n", n}, {"p", cs[n].p.get_str()}, {"q", cs[n].q.get_str()},
                                                  {"value", to_string(cs[n].value())}});
            } else if (action == "periodic") {
                PeriodicCF p(parse_digits(pre_text), parse_digits(period_text));
                doc["expansion"] = p.to_string();
                doc["value"] = value_json(AlgebraicValue(periodic_value(p)), digits);
            } else if (action == "surd") {
                QuadSurd s = parse_quad_surd(surd_text);
                PeriodicCF p = surd_cf(s);
                doc["surd"] = s.to_string();
                doc["preperiod"] = word_json(p.preperiod());
                doc["period"] = word_json(p.period());
                doc["expansion"] = p.to_string();
            } else if (action == "f" || action == "markov" || action == "lagrange") {
                BiWord w = parse_biword(word);
                doc["word"] = w.to_string();
                AlgebraicValue v = action == "f" ? f_value(w) : action == "markov" ? markov_value(w) : lagrange_value(w);
                doc["value"] = value_json(v, digits);
            } else if (action == "diagnostics") {
                DigitWord d = parse_digits(digits_text);
                if (d.size() == 1) d.assign(static_cast<std::size_t>(nmax) + 3, d[0]);  // constant expansion
                auto rep = approximation_diagnostics(d, nmax, bits);
                doc["max_identity_residual"] = decimal_string(rep.max_identity_residual);
                doc["all_half_checks"] = rep.all_half_checks;
                doc["all_hurwitz_checks"] = rep.all_hurwitz_checks;
                doc["rows"] = json::array();
                for (const auto& r : rep.rows)
                    doc["rows"].push_back({{"n", r.n},
                                           {"identity_residual", decimal_string(r.identity_residual)},
                                           {"scaled_error", decimal_string(r.scaled_error)},
                                           {"half_check", r.half_check},
                                           {"hurwitz_check", r.hurwitz_check}});
            } else if (action == "kl") {
                int depth = cfg.depth ? cfg.depth : 1000;
                double est = khintchine_levy_estimate(samples, depth, cfg.seed, cfg.threads);
                doc["samples"] = samples;
                doc["depth"] = depth;
                doc["seed"] = cfg.seed;
                doc["estimate"] = decimal_string(est);
                doc["constant"] = decimal_string(khintchine_levy_constant());
            }
        } else if (tree->parsed()) {
            if (action.empty()) action = "triples";
            doc["command"] = "tree " + action;
            auto triple_json = [](const MarkovTriple& t) { return json::array({t.x.get_str(), t.y.get_str(), t.z.get_str()}); };
            if (action == "triples") {
                doc["zmax"] = zmax;
                doc["triples"] = json::array();
                for (const auto& t : enumerate_triples(BigInt(static_cast<long>(zmax)), generations)) doc["triples"].push_back(triple_json(t));
            } else if (action == "children") {
                DigitWord xyz = parse_digits(triple_text);
                if (xyz.size() != 3) throw ValidationError("--triple needs three numbers");
                MarkovTriple t = make_triple(BigInt(static_cast<long>(xyz[0])), BigInt(static_cast<long>(xyz[1])),
                                             BigInt(static_cast<long>(xyz[2])));
                doc["triple"] = triple_json(t);
                doc["children"] = json::array();
                for (const auto& c : vieta_children(t)) doc["children"].push_back(triple_json(c));
            } else if (action == "lagrange") {
                QuadSurd k = lagrange_number(BigInt(static_cast<long>(z)));
                doc["z"] = z;
                doc["value"] = value_json(AlgebraicValue(k), digits);
            } else if (action == "unicity") {
                auto rep = unicity_report(BigInt(static_cast<long>(zmax)));
                doc["zmax"] = zmax;
                doc["collisions"] = json::array();
                for (const auto& c : rep)
                    doc["collisions"].push_back({{"z", c.z.get_str()}, {"first", triple_json(c.first)}, {"second", triple_json(c.second)}});
            }
        } else if (cover->parsed()) {
            doc["command"] = "cover " + action;
            SubshiftSpec spec = load_spec(spec_arg);
            int depth = cfg.depth ? cfg.depth : 4;
            if (action == "validate") {
                doc["spec"] = spec_json(spec);
            } else if (action == "cylinders") {
                IntervalCover c = cylinder_cover(spec, depth, cfg.budget);
                if (cfg.format == "csv") {
                    result.text = cover_to_csv(c);
                } else {
                    doc["depth"] = depth;
                    doc["interval_count"] = c.intervals.size();
                    doc["total_length"] = to_string(c.total_length());
                    doc["intervals"] = json::array();
                    for (const auto& iv : c.intervals)
                        doc["intervals"].push_back({{"word", word_json(iv.word)}, {"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}});
                }
            } else if (action == "thickness") {
                doc["depth"] = depth;
                doc["thickness_lower_bound"] = decimal_string(thickness_bound(spec, depth));
            }
        } else if (sumset->parsed()) {
            doc["command"] = "sumset " + action;
            int depth = cfg.depth ? cfg.depth : (action == "hall" ? 12 : 4);
            if (action == "hall") {
                DensityReport r = hall_density_check(depth, eps);
                doc["depth"] = r.depth;
                doc["interval_count"] = r.interval_count;
                doc["max_gap"] = decimal_string(r.max_gap);
                doc["eps"] = decimal_string(r.eps);
                doc["grid"] = decimal_string(r.grid);
                doc["pass"] = r.pass;
                doc["target"] = {value_json(AlgebraicValue(r.target_lo), digits), value_json(AlgebraicValue(r.target_hi), digits)};
            } else {
                SubshiftSpec s1 = load_spec(spec_arg);
                SubshiftSpec s2 = spec2_arg.empty() ? s1 : load_spec(spec2_arg);
                if (action == "minkowski") {
                    SumCover sc = minkowski_sum_cover(cylinder_cover(s1, depth, cfg.budget), cylinder_cover(s2, depth, cfg.budget), cfg.budget);
                    doc["depth"] = depth;
                    doc["interval_count"] = sc.intervals.size();
                    doc["intervals"] = json::array();
                    for (const auto& [lo, hi] : sc.intervals) doc["intervals"].push_back({to_string(lo), to_string(hi)});
                } else {
                    GapLemmaCertificate c = gap_lemma_certificate(s1, s2, depth);
                    doc["depth"] = depth;
                    doc["holds"] = c.holds;
                    doc["reason"] = c.reason;
                    doc["thickness"] = {decimal_string(c.thickness1), decimal_string(c.thickness2)};
                    doc["max_gap"] = {decimal_string(c.max_gap1), decimal_string(c.max_gap2)};
                    doc["hulls"] = {{c.hull1_lo.to_string(), c.hull1_hi.to_string()}, {c.hull2_lo.to_string(), c.hull2_hi.to_string()}};
                    if (c.holds) doc["sum_interval"] = {c.sum_lo.to_string(), c.sum_hi.to_string()};
                }
            }
        } else if (dim->parsed()) {
            doc["command"] = "dim";
            DimensionEstimate est;
            if (method == "affine") {
                est.point = thermo_dimension(affine_sft(branches, ratio), tol);
                est.method = "thermo-affine";
            } else if (method == "thermo") {
                int m = cfg.wordlen ? cfg.wordlen : 8;
                est.point = thermo_dimension(gauss_sft(load_spec(spec_arg), m, cfg.budget), tol);
                est.method = "thermo";
                est.depth = m;
            } else {
                est = cover_dimension(load_spec(spec_arg), cfg.depth ? cfg.depth : 8, cfg.budget);
            }
            doc["method"] = est.method;
            doc["depth"] = est.depth;
            auto put = [&](const char* key, const std::optional<double>& v) {
                doc[key] = v ? json(decimal_string(*v)) : json(nullptr);
            };
            put("lower", est.lower);
            put("upper", est.upper);
            put("point", est.point);
            doc["certified"] = est.method == "cover";
        } else if (dcurve->parsed()) {
            int wordlen = cfg.wordlen ? cfg.wordlen : 8;
            int depth = cfg.depth ? cfg.depth : 8;
            DigitWord alphabet = parse_digits(alphabet_text);
            BigRational lo = parse_rational(tmin_text), hi = parse_rational(tmax_text);
            if (hi < lo) throw ValidationError("tmax must be >= tmin");
            std::ostringstream csv;
            csv << "t,d_lb\n";
            json rows = json::array();
            for (int i = 0; i <= steps; ++i) {
                BigRational t = lo + (hi - lo) * BigRational(i, steps);
                t.canonicalize();
                double d = dimension_function_lower(QuadSurd(t), wordlen, depth, alphabet);
                csv << to_string(t) << ',' << decimal_string(d) << '\n';
                rows.push_back({{"t", to_string(t)}, {"d_lb", decimal_string(d)}});
            }
            if (cfg.format == "json") {
                doc["command"] = "dcurve";
                doc["wordlen"] = wordlen;
                doc["depth"] = depth;
                doc["samples"] = rows;
            } else {
                result.text = csv.str();
            }
        } else if (spectra->parsed()) {
            doc["command"] = "spectra " + action;
            if (action == "constants") {
                doc["precision"] = digits;
                doc["constants"] = json::array();
                for (const auto& c : named_constants(digits)) {
                    json e{{"name", c.name}, {"decimal", c.decimal}, {"printed", c.printed},
                           {"cross_checked", c.cross_checked}, {"check", c.check}};
                    e["closed_form"] = c.closed_form.empty() ? json(nullptr) : json(c.closed_form);
                    e["word"] = c.word ? json(*c.word) : json(nullptr);
                    doc["constants"].push_back(e);
                }
            } else if (action == "below3") {
                doc["spectrum"] = spectrum_json(spectrum_below_3(static_cast<std::size_t>(count)), digits);
            } else if (action == "form") {
                QuadraticForm q{parse_quad_surd(a_text), parse_quad_surd(b_text), parse_quad_surd(c_text)};
                FormMinimum m = form_minimum(q, box);
                doc["box"] = box;
                doc["argmin"] = {m.x, m.y};
                doc["minimum"] = value_json(AlgebraicValue(m.minimum), digits);
                doc["reciprocal"] = value_json(AlgebraicValue(m.reciprocal), digits);
            } else if (action == "dyn") {
                SubshiftSpec spec = load_spec(spec_arg);
                NormalizedSpec n = validate(spec);
                CylinderTable table = load_table(table_arg, n.alphabet());
                DynamicalSpectra d = dynamical_spectra(spec, table, max_period);
                doc["max_period"] = max_period;
                doc["markov"] = spectrum_json(d.markov, digits);
                doc["lagrange"] = spectrum_json(d.lagrange, digits);
            }
        }
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return kResource;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return kResource;
    } catch (const std::invalid_argument& e) {
        err << "validation error: " << e.what() << "\n";
        return kValidation;
    }

    std::string text = result.text.empty() ? doc.dump(2) + "\n" : result.text;
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            err << "cannot write " << cfg.out << "\n";
            return kResource;
        }
        file << text;
    }
    return kOk;
}

}  // namespace markov::cli
