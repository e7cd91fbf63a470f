#include "gshape/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gshape/arithstat.hpp"
#include "gshape/decompose.hpp"
#include "gshape/literal.hpp"
#include "gshape/minkowski.hpp"

namespace gshape {

namespace {

std::string num(double v) {
    if (v == 0.0) return "0";  // avoid "-0"
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string jint(std::int64_t v) { return std::to_string(v); }

std::string jgauss(GaussianInt z) {
    return "{\"im\":" + jint(z.im) + ",\"re\":" + jint(z.re) + "}";
}

std::string jbool(bool b) { return b ? "true" : "false"; }

std::string jrational(const GaussianRational& q) {
    return "{\"den\":" + jint(q.den) + ",\"im\":" + jint(q.num.im) +
           ",\"re\":" + jint(q.num.re) + "}";
}

template <std::size_t N>
std::string jmatrix(const Mat<N>& m) {
    std::string s = "[";
    bool first = true;
    for (const auto& row : m)
        for (double v : row) {
            if (!first) s += ",";
            first = false;
            s += num(v);
        }
    return s + "]";
}

std::string jrect(const Rectangle& r) {
    return "{\"r1hi\":" + num(r.r1hi) + ",\"r1lo\":" + num(r.r1lo) +
           ",\"r2hi\":" + num(r.r2hi) + ",\"r2lo\":" + num(r.r2lo) + "}";
}

int default_threads() {
    if (const char* env = std::getenv("GSHAPE_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library default: hardware parallelism
}

struct domain_error_json : std::runtime_error {
    explicit domain_error_json(const std::string& key)
        : std::runtime_error("{\"error\":\"" + key + "\"}") {}
};

FghDecomposition decompose_or_throw(const std::string& literal) {
    try {
        return decompose(parse_gaussian(literal));
    } catch (const not_fourth_power_free&) {
        throw domain_error_json("not_fourth_power_free");
    }
}

CaseId primary_or_throw(const FghDecomposition& d) {
    const CaseMatch cm = classify(d);
    if (cm.primary == CaseId::no_match) throw domain_error_json("no_match");
    return cm.primary;
}

std::vector<double> parse_xs(const std::string& csv) {
    std::vector<double> xs;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        xs.push_back(std::stod(tok));
    }
    if (xs.empty()) throw CLI::ValidationError("--xs", "no values given");
    return xs;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gaussian-integer lattice shapes and density counts"};
    app.require_subcommand(1);

    std::string m_lit;
    std::string mode = "both";
    double x = 0, r1lo = 0, r1hi = 0, r2lo = 0, r2hi = 0;
    bool carefree = false;
    int threads = default_threads();
    std::int64_t qmax = 100000;
    std::int64_t bound = 1000;
    std::string xs_csv;

    auto* cmd_decompose = app.add_subcommand("decompose", "m = f g^2 h^3 decomposition");
    cmd_decompose->add_option("--m", m_lit, "Gaussian integer literal")->required();

    auto* cmd_classify = app.add_subcommand("classify", "congruence case of m");
    cmd_classify->add_option("--m", m_lit)->required();

    auto* cmd_basis = app.add_subcommand("basis", "integral basis for the matched case");
    cmd_basis->add_option("--m", m_lit)->required();

    auto* cmd_gram = app.add_subcommand("gram", "8x8 Gram matrix");
    cmd_gram->add_option("--m", m_lit)->required();
    cmd_gram->add_option("--mode", mode)->check(CLI::IsMember({"numeric", "closed", "both"}));

    auto* cmd_shape = app.add_subcommand("shape", "projected 6x6 shape Gram");
    cmd_shape->add_option("--m", m_lit)->required();

    auto* cmd_count = app.add_subcommand("count", "count triples by height");
    cmd_count->add_option("--x", x)->required()->check(CLI::PositiveNumber);
    cmd_count->add_option("--r1lo", r1lo)->required();
    cmd_count->add_option("--r1hi", r1hi)->required();
    cmd_count->add_option("--r2lo", r2lo)->required();
    cmd_count->add_option("--r2hi", r2hi)->required();
    cmd_count->add_flag("--carefree", carefree);
    cmd_count->add_option("--threads", threads);

    auto* cmd_density = app.add_subcommand("density", "empirical vs theoretical density");
    cmd_density->add_option("--x", x)->required()->check(CLI::PositiveNumber);
    cmd_density->add_option("--r1lo", r1lo)->required();
    cmd_density->add_option("--r1hi", r1hi)->required();
    cmd_density->add_option("--r2lo", r2lo)->required();
    cmd_density->add_option("--r2hi", r2hi)->required();
    cmd_density->add_option("--qmax", qmax);
    cmd_density->add_option("--threads", threads);

    auto* cmd_sweep = app.add_subcommand("density-sweep", "density report per X, CSV");
    cmd_sweep->add_option("--xs", xs_csv, "comma-separated X values")->required();
    cmd_sweep->add_option("--r1lo", r1lo)->required();
    cmd_sweep->add_option("--r1hi", r1hi)->required();
    cmd_sweep->add_option("--r2lo", r2lo)->required();
    cmd_sweep->add_option("--r2hi", r2hi)->required();
    cmd_sweep->add_option("--qmax", qmax);
    cmd_sweep->add_option("--threads", threads);

    auto* cmd_local = app.add_subcommand("localdensity", "brute force vs formula, TSV");
    cmd_local->add_option("--qmax", qmax)->required()->check(CLI::PositiveNumber);

    auto* cmd_audit = app.add_subcommand("audit", "classification coverage scan");
    cmd_audit->add_option("--bound", bound)->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (cmd_decompose->parsed()) {
            const FghDecomposition d = decompose_or_throw(m_lit);
            out << "{\"f\":" << jgauss(d.f) << ",\"g\":" << jgauss(d.g)
                << ",\"h\":" << jgauss(d.h) << ",\"m\":" << jgauss(d.m) << "}\n";
        } else if (cmd_classify->parsed()) {
            const FghDecomposition d = decompose_or_throw(m_lit);
            const CaseMatch cm = classify(d);
            out << "{\"f\":" << jgauss(d.f) << ",\"g\":" << jgauss(d.g)
                << ",\"h\":" << jgauss(d.h) << ",\"m\":" << jgauss(d.m) << ",\"matches\":[";
            for (std::size_t i = 0; i < cm.matches.size(); ++i) {
                if (i) out << ",";
                out << case_number(cm.matches[i]);
            }
            out << "],\"primary\":";
            if (cm.primary == CaseId::no_match) out << "\"none\"";
            else out << case_number(cm.primary);
            out << "}\n";
        } else if (cmd_basis->parsed()) {
            const FghDecomposition d = decompose_or_throw(m_lit);
            const IntegralBasis b = integral_basis(d, primary_or_throw(d));
            out << "{\"case\":" << case_number(b.case_id) << ",\"elements\":[";
            for (std::size_t i = 0; i < 8; ++i) {
                if (i) out << ",";
                const AlphaPoly& e = b.elements[i];
                out << "{\"c0\":" << jrational(e.c[0]) << ",\"c1\":" << jrational(e.c[1])
                    << ",\"c2\":" << jrational(e.c[2]) << ",\"c3\":" << jrational(e.c[3]) << "}";
            }
            out << "]}\n";
        } else if (cmd_gram->parsed()) {
            const FghDecomposition d = decompose_or_throw(m_lit);
            const CaseId c = primary_or_throw(d);
            if (mode == "numeric") {
                const Gram8 g = gram_numeric(integral_basis(d, c), d.m);
                out << "{\"case\":" << case_number(c) << ",\"gram\":" << jmatrix(g)
                    << ",\"mode\":\"numeric\"}\n";
            } else if (mode == "closed") {
                const Gram8 g = gram_closed_form(c, d);
                out << "{\"case\":" << case_number(c) << ",\"gram\":" << jmatrix(g)
                    << ",\"mode\":\"closed\"}\n";
            } else {
                const Gram8 gn = gram_numeric(integral_basis(d, c), d.m);
                const Gram8 gc = gram_closed_form(c, d);
                const double dev = max_rel_diff(gn, gc);
                out << "{\"case\":" << case_number(c) << ",\"consistent\":"
                    << jbool(dev <= 1e-8) << ",\"gram_closed\":" << jmatrix(gc)
                    << ",\"gram_numeric\":" << jmatrix(gn) << ",\"max_rel_dev\":" << num(dev)
                    << ",\"mode\":\"both\"}\n";
            }
        } else if (cmd_shape->parsed()) {
            const FghDecomposition d = decompose_or_throw(m_lit);
            const ShapeGram6 sg = project_shape(integral_basis(d, primary_or_throw(d)), d.m);
            const ShapeParams sp = shape_params(d);
            out << "{\"gram6\":" << jmatrix(sg.entries) << ",\"lambda1\":" << num(sp.lambda1)
                << ",\"lambda2\":" << num(sp.lambda2)
                << ",\"normalization\":" << num(sg.normalization) << "}\n";
        } else if (cmd_count->parsed()) {
            const Rectangle r = make_rectangle(r1lo, r1hi, r2lo, r2hi);
            const CountResult cr =
                count_triples(r, x, carefree ? CountMode::carefree : CountMode::all, threads);
            out << "{\"carefree\":" << jint(cr.carefree) << ",\"rectangle\":" << jrect(r)
                << ",\"total\":" << jint(cr.total) << ",\"x\":" << num(cr.x) << "}\n";
        } else if (cmd_density->parsed()) {
            const Rectangle r = make_rectangle(r1lo, r1hi, r2lo, r2hi);
            const DensityReport rep = density_report(r, x, qmax, threads);
            out << "{\"empirical\":" << num(rep.empirical)
                << ",\"euler_truncation\":" << jint(rep.euler_truncation)
                << ",\"g_terms\":" << jint(rep.g_terms)
                << ",\"relative_error\":" << num(rep.relative_error)
                << ",\"residual_x14\":" << num(rep.residual_x14)
                << ",\"theoretical\":" << num(rep.theoretical) << "}\n";
        } else if (cmd_sweep->parsed()) {
            const Rectangle r = make_rectangle(r1lo, r1hi, r2lo, r2hi);
            out << "x,n,n_over_x,theoretical,rel_err,residual_x14\n";
            for (const double xv : parse_xs(xs_csv)) {
                const DensityReport rep = density_report(r, xv, qmax, threads);
                out << num(rep.x) << "," << jint(rep.count) << "," << num(rep.empirical) << ","
                    << num(rep.theoretical) << "," << num(rep.relative_error) << ","
                    << num(rep.residual_x14) << "\n";
            }
        } else if (cmd_local->parsed()) {
            out << "q\tbruteforce\tformula\tmatch\n";
            for (const GaussianPrime& p : prime_ideals_up_to(qmax)) {
                const LocalDensity ld = local_density_bruteforce(p);
                const std::int64_t q = p.normQ;
                const std::int64_t formula = q * q * (q - 1) * (q - 1) * (q * q + 2 * q - 3);
                out << jint(q) << "\t" << jint(ld.admissible) << "\t" << jint(formula) << "\t"
                    << jbool(ld.admissible == formula) << "\n";
            }
        } else if (cmd_audit->parsed()) {
            const AuditReport rep = audit_partition(bound);
            out << "{\"bound\":" << jint(rep.norm_bound) << ",\"by_class\":[";
            for (std::size_t i = 0; i < rep.by_class.size(); ++i) {
                const AuditClassTally& t = rep.by_class[i];
                if (i) out << ",";
                out << "{\"multi\":" << jint(t.multi) << ",\"none\":" << jint(t.none)
                    << ",\"residue\":" << jgauss(t.residue) << ",\"single\":" << jint(t.single)
                    << "}";
            }
            out << "],\"case2_m_1_4i_mod8\":" << jint(rep.case2_m_1_4i_mod8)
                << ",\"case2_m_5_mod16\":" << jint(rep.case2_m_5_mod16)
                << ",\"multi_matched\":[";
            for (std::size_t i = 0; i < rep.multi_matched.size(); ++i) {
                if (i) out << ",";
                out << "{\"cases\":[";
                for (std::size_t j = 0; j < rep.multi_matched[i].second.size(); ++j) {
                    if (j) out << ",";
                    out << case_number(rep.multi_matched[i].second[j]);
                }
                out << "],\"m\":" << jgauss(rep.multi_matched[i].first) << "}";
            }
            out << "],\"rejected_fourth_power\":" << jint(rep.rejected_fourth_power)
                << ",\"scanned\":" << jint(rep.scanned) << ",\"unmatched\":[";
            for (std::size_t i = 0; i < rep.unmatched.size(); ++i) {
                if (i) out << ",";
                out << jgauss(rep.unmatched[i]);
            }
            out << "]}\n";
        }
    } catch (const domain_error_json& e) {
        out << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "invalid gaussian literal: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace gshape
