#include "ghsd/accept.hpp"
#include "ghsd/analysis.hpp"
#include "ghsd/construct.hpp"
#include "ghsd/polysub.hpp"
#include "ghsd/registry.hpp"
#include "ghsd/smoothness.hpp"
#include "ghsd/splines.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ghsd;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitAnalysis = 3;
constexpr int kExitLevelCap = 4;
constexpr int kExitUnconverged = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::pair<std::string, Q>> parse_overrides(const std::vector<std::string>& params) {
    std::vector<std::pair<std::string, Q>> out;
    for (const std::string& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw ParseError("--param expects name=value, got " + p);
        out.emplace_back(p.substr(0, eq), parse_rational(p.substr(eq + 1)));
    }
    return out;
}

// A mask argument is either a registry id or a path to a mask file.
MaskFile load_mask(const std::string& arg, const std::vector<std::string>& params) {
    if (find_example(arg)) return build_example(arg, parse_overrides(params));
    if (!params.empty()) throw ParseError("--param only applies to registry ids");
    return parse_mask(read_file(arg));
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text;
}

std::string type_string(const HermiteType& t) {
    std::ostringstream os;
    os << "{";
    for (size_t l = 0; l < t.nu.size(); ++l) {
        if (l) os << "; ";
        for (size_t i = 0; i < t.nu[l].size(); ++i) os << (i ? "," : "") << t.nu[l][i];
    }
    os << "}";
    return os.str();
}

int cmd_analyze(const std::string& mask_arg, int max_order,
                const std::vector<std::string>& params) {
    MaskFile mf = load_mask(mask_arg, params);
    ClassificationReport rep = classify(mf, max_order);
    std::cout << report_to_json(rep, mf.mask.d, mf.mask.r) << "\n";
    std::ostringstream tab;
    tab << "mask: d=" << mf.mask.d << " r=" << mf.mask.r << " type=" << type_string(mf.type)
        << "\n"
        << "sum rules:          " << rep.sr_order << "\n"
        << "hermite type:       " << (rep.hermite_type_ok ? "yes" : "no") << "\n"
        << "linear-phase order: " << rep.lpm_order << "\n"
        << "interpolatory:      " << (rep.interpolatory_ok ? "yes" : "no") << "\n"
        << "spectral condition: " << (rep.spectral_ok ? "ok" : "violated") << "\n";
    std::cerr << tab.str();
    return 0;
}

DataGrid parse_data_grid(const std::string& path, int d, int r) {
    json j = json::parse(read_file(path));
    DataGrid w;
    w.d = d;
    w.rows = 1;
    w.cols = r;
    for (const auto& e : j.at("entries")) {
        Lat k;
        for (const auto& x : e.at("k")) k.push_back(x.get<long long>());
        if (int(k.size()) != d) throw ParseError("data entry with wrong dimension");
        const auto& vals = e.at("values");
        if (int(vals.size()) != r) throw ParseError("data entry needs one value per component");
        QMatrix row(1, r);
        for (int l = 0; l < r; ++l) row(0, l) = parse_rational(vals[size_t(l)].get<std::string>());
        w.v[k] = row;
    }
    return w;
}

int cmd_refine(const std::string& mask_arg, const std::string& data_path, int levels,
               const std::string& out_path, const std::vector<std::string>& params) {
    MaskFile mf = load_mask(mask_arg, params);
    int cap = mf.mask.d == 1 ? 12 : 8;
    if (const char* env = std::getenv("GHSD_MAX_LEVEL")) cap = std::atoi(env);
    if (levels < 0 || levels > cap) {
        std::cerr << "level " << levels << " exceeds cap " << cap << "\n";
        return kExitLevelCap;
    }
    DataGrid w0 = data_path.empty() ? delta_data(mf.mask.d, mf.mask.r)
                                    : parse_data_grid(data_path, mf.mask.d, mf.mask.r);
    DataGrid w = refine(mf.mask, mf.type, w0, levels);
    std::ostringstream os;
    export_refinement(os, w, mf.type);
    write_output(os.str(), out_path);
    return 0;
}

int cmd_smoothness(const std::string& mask_arg, int iters, double tol,
                   const std::vector<std::string>& params) {
    MaskFile mf = load_mask(mask_arg, params);
    SmoothnessOptions opt;
    opt.max_iters = iters;
    opt.tol = tol;
    SmoothnessReport rep = critical_sm2(mf, opt);
    json j = json::parse(smoothness_to_json(rep));
    ConvergenceVerdict cv = convergence_verdict(mf, opt);
    j["verdict"] = cv.verdict;
    j["verdict_order"] = cv.m;
    j["verdict_margin"] = cv.margin;
    std::cout << j.dump(2) << "\n";
    std::cerr << "sm2 = " << rep.sm2 << "  sm_inf >= " << rep.sminf_lower << "  " << cv.verdict
              << (rep.converged ? "" : "  [unconverged]") << "\n";
    return rep.converged ? 0 : kExitUnconverged;
}

MIdx parse_multiindex(const std::string& s, int d) {
    MIdx m;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) m.push_back(std::stoi(tok));
    if (int(m.size()) != d) throw ParseError("multi-index '" + s + "' needs " + std::to_string(d) +
                                             " entries");
    return m;
}

HermiteType parse_type_arg(const std::string& s, int d) {
    HermiteType t;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ';')) t.nu.push_back(parse_multiindex(tok, d));
    if (t.nu.empty()) throw ParseError("empty type");
    return t;
}

std::vector<long long> parse_diag(const std::string& s) {
    std::vector<long long> n;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) n.push_back(std::stoll(tok));
    return n;
}

void print_construct_summary(const MaskFile& mf) {
    ClassificationReport rep = classify(mf, mf.mask.d == 1 ? 8 : 6);
    std::cerr << "constructed d=" << mf.mask.d << " r=" << mf.mask.r << " type="
              << type_string(mf.type) << ": sr=" << rep.sr_order << ", hermite type "
              << (rep.hermite_type_ok ? "ok" : "not matched") << ", lpm=" << rep.lpm_order
              << ", interpolatory " << (rep.interpolatory_ok ? "yes" : "no") << "\n";
}

int cmd_verify(const std::vector<std::string>& ids, bool all) {
    if (all) {
        std::vector<CriterionResult> res = run_acceptance();
        int passed = 0;
        for (const CriterionResult& c : res) {
            std::cout << "criterion " << c.index << " [" << c.name << "]: "
                      << (c.pass ? "PASS" : "FAIL") << " - " << c.detail << "\n";
            passed += c.pass;
        }
        std::cout << passed << "/" << res.size() << " criteria passed\n";
        return passed == int(res.size()) ? 0 : 1;
    }
    if (ids.empty()) throw ParseError("verify needs example ids or --all");
    bool all_ok = true;
    for (const std::string& id : ids) {
        const ExampleRecord* rec = find_example(id);
        if (!rec) {
            std::cerr << "unknown example id: " << id << "\n";
            return kExitParse;
        }
        const ExpectedFacts& ex = rec->expected;
        MaskFile mf = rec->build(rec->defaults);
        auto row = [&](const std::string& what, bool ok, const std::string& got) {
            std::cout << id << "  " << what << ": " << (ok ? "ok" : "FAIL") << " (" << got
                      << ")\n";
            all_ok = all_ok && ok;
        };
        int cap = mf.mask.d == 1 ? 12 : 6;
        if (ex.sr_exact >= 0 || ex.sr_at_least >= 0) {
            int sr = sum_rule_order(mf.mask, cap).order;
            bool ok = ex.sr_exact >= 0 ? sr == ex.sr_exact : sr >= ex.sr_at_least;
            row("sum rules", ok, "sr=" + std::to_string(sr));
        }
        if (ex.lpm_exact >= 0 || ex.lpm_at_least >= 0) {
            int lpm = lpm_order(mf.mask, mf.type, mf.mask.d == 1 ? 8 : 6);
            bool ok = ex.lpm_exact >= 0 ? lpm == ex.lpm_exact : lpm >= ex.lpm_at_least;
            row("linear-phase moments", ok, "lpm=" + std::to_string(lpm));
        }
        if (ex.interpolatory >= 0) {
            InterpVerdict v = interpolatory_check(mf.mask, mf.type);
            bool want = ex.interpolatory == 1;
            row("interpolatory", (v.applicable && v.ok) == want,
                v.applicable ? (v.ok ? "yes" : "no") : "not applicable");
        }
        if (mf.symmetry) {
            SymmetryVerdict sv = symmetry_check(mf);
            row("symmetry", sv.ok, sv.ok ? mf.symmetry->group : sv.witness);
        }
        if (ex.sm2_tol > 0) {
            double sm = critical_sm2(mf).sm2;
            std::ostringstream os;
            os << "sm2=" << sm << " expected " << ex.sm2 << " +/- " << ex.sm2_tol;
            row("smoothness", std::fabs(sm - ex.sm2) <= ex.sm2_tol, os.str());
        }
        if (!ex.spline_id.empty()) {
            SplineResidual res = refinement_residual(registry_spline(ex.spline_id, rec->defaults),
                                                     mf.mask);
            row("spline residual", res.value == 0,
                res.value == 0 ? "0" : format_rational(res.value) + " at x=" + format_rational(res.x));
        }
    }
    return all_ok ? 0 : 1;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"generalized Hermite subdivision toolbox"};
    app.require_subcommand(1);

    std::string mask_arg, data_path, out_path;
    std::vector<std::string> params;
    int max_order = 12;
    int levels = 0;
    int iters = 200;
    double tol = 1e-10;

    CLI::App* analyze = app.add_subcommand("analyze", "classify a mask");
    analyze->add_option("mask", mask_arg, "mask file or registry id")->required();
    analyze->add_option("--max-order", max_order, "sum-rule search cap");
    analyze->add_option("--param", params, "override a family parameter, name=value");

    CLI::App* refine_cmd = app.add_subcommand("refine", "run the refinement iteration");
    refine_cmd->add_option("mask", mask_arg, "mask file or registry id")->required();
    refine_cmd->add_option("--data", data_path, "initial data JSON (default: delta)");
    refine_cmd->add_flag("--delta", "start from delta data (default)");
    refine_cmd->add_option("--levels", levels, "number of refinement levels")->required();
    refine_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");
    refine_cmd->add_option("--param", params, "override a family parameter, name=value");

    CLI::App* smooth = app.add_subcommand("smoothness", "estimate critical L2 smoothness");
    smooth->add_option("mask", mask_arg, "mask file or registry id")->required();
    smooth->add_option("--iters", iters, "power iteration cap");
    smooth->add_option("--tol", tol, "relative convergence tolerance");
    smooth->add_option("--param", params, "override a family parameter, name=value");

    CLI::App* construct = app.add_subcommand("construct", "build masks");
    construct->require_subcommand(1);
    int bn = 2, em = 1, eN = 1, dim = 1;
    std::string a_arg, b_arg, ndiag_arg = "2", type_arg;
    CLI::App* cb = construct->add_subcommand("bspline", "B-spline mask");
    cb->add_option("--n", bn, "B-spline order")->required();
    cb->add_option("--out", out_path, "mask file output path");
    CLI::App* ct = construct->add_subcommand("tensor", "tensor product of two masks");
    ct->add_option("--a", a_arg, "first mask file or id")->required();
    ct->add_option("--b", b_arg, "second mask file or id")->required();
    ct->add_option("--out", out_path, "mask file output path");
    CLI::App* cv = construct->add_subcommand("vectorize", "coset vectorization");
    cv->add_option("--mask", a_arg, "mask file or id")->required();
    cv->add_option("--N", ndiag_arg, "diagonal of the dilation, e.g. 2 or 2,1");
    cv->add_option("--out", out_path, "mask file output path");
    CLI::App* cf = construct->add_subcommand("from-spline", "Hermite interpolant mask");
    cf->add_option("--m", em, "derivative order")->required();
    cf->add_option("--N", eN, "nodes per unit interval");
    cf->add_option("--out", out_path, "mask file output path");
    CLI::App* ce = construct->add_subcommand("existence", "type-realizing mask");
    ce->add_option("--type", type_arg, "semicolon-separated multi-indices, e.g. 0;2")->required();
    ce->add_option("--dim", dim, "lattice dimension");
    ce->add_option("--out", out_path, "mask file output path");

    CLI::App* spline = app.add_subcommand("spline", "dump a printed basis as JSON");
    std::string spline_id;
    spline->add_option("id", spline_id, "spline id, e.g. ex6.3b")->required();
    spline->add_option("--param", params, "family parameter values in order");

    CLI::App* verify = app.add_subcommand("verify", "check expected facts / run acceptance");
    std::vector<std::string> ids;
    bool all = false;
    verify->add_option("ids", ids, "registry example ids");
    verify->add_flag("--all", all, "run the full acceptance suite");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) return cmd_analyze(mask_arg, max_order, params);
    if (refine_cmd->parsed()) return cmd_refine(mask_arg, data_path, levels, out_path, params);
    if (smooth->parsed()) return cmd_smoothness(mask_arg, iters, tol, params);
    if (construct->parsed()) {
        MaskFile mf;
        if (cb->parsed()) {
            mf.mask = bspline_mask(bn);
            mf.type.nu = {MIdx{0}};
        } else if (ct->parsed()) {
            MaskFile A = load_mask(a_arg, {}), B = load_mask(b_arg, {});
            mf.mask = tensor_mask(A.mask, B.mask);
            for (const MIdx& na : A.type.nu)
                for (const MIdx& nb : B.type.nu) {
                    MIdx n = na;
                    n.insert(n.end(), nb.begin(), nb.end());
                    mf.type.nu.push_back(n);
                }
        } else if (cv->parsed()) {
            MaskFile A = load_mask(a_arg, {});
            VectorizeResult res = vectorize_mask(A.mask, parse_diag(ndiag_arg));
            mf.mask = res.mask;
            for (int l = 0; l < mf.mask.r; ++l) mf.type.nu.push_back(MIdx(size_t(mf.mask.d), 0));
        } else if (cf->parsed()) {
            Example12 ex = example12_interpolant(em, eN);
            mf = interpolant_to_mask(ex.phi, ex.type);
        } else {
            HermiteType t = parse_type_arg(type_arg, dim);
            mf = existence_pipeline(t);
        }
        write_output(serialize_mask(mf), out_path);
        print_construct_summary(mf);
        return 0;
    }
    if (spline->parsed()) {
        std::vector<Q> ps;
        for (const std::string& p : params) ps.push_back(parse_rational(p));
        std::cout << spline_to_json(registry_spline(spline_id, ps)) << "\n";
        return 0;
    }
    return cmd_verify(ids, all);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ghsd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ghsd::CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitLevelCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
    }
}
