#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exobasis/completion.hpp"
#include "exobasis/gallery.hpp"
#include "exobasis/io.hpp"
#include "exobasis/oracle.hpp"

using namespace exobasis;

namespace {

// exit codes: 0 success / Valid, 1 negative finding (Invalid, none found,
// Degenerate, out-of-tolerance), 2 unusable input
constexpr int kOk = 0, kFinding = 1, kBadInput = 2;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MultiTileSet load_set(const std::string& path) {
    return multitile_from_json(parse_document(read_all(path)));
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        std::int64_t val;
        try {
            val = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw InputError("bad integer list entry \"" + tok + "\"");
        }
        if (pos != tok.size()) throw InputError("bad integer list entry \"" + tok + "\"");
        out.push_back(val);
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

const char* tiling_kind_name(TilingLevel::Kind k) {
    switch (k) {
    case TilingLevel::Kind::ExactTile: return "ExactTile";
    case TilingLevel::Kind::SubTile: return "SubTile";
    case TilingLevel::Kind::NotTile: return "NotTile";
    }
    return "?";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct CertFlags {
    int n = 0;
    std::string v;

    AdmissibilityCertificate parse() const {
        return AdmissibilityCertificate(n, DualVector(parse_int_list(v)));
    }
};

void add_cert_flags(CLI::App* cmd, CertFlags& cf) {
    cmd->add_option("--n", cf.n, "certificate modulus")->required();
    cmd->add_option("--v", cf.v, "certificate dual vector, comma separated")->required();
}

ExponentialSystem make_system(const Lattice& L, const AdmissibilityCertificate& c, int k,
                              const std::string& s_list) {
    if (!s_list.empty()) {
        std::vector<std::int64_t> raw = parse_int_list(s_list);
        ExponentialSystem sys =
            build_offsets_indexed(L, c, std::vector<long>(raw.begin(), raw.end()));
        if (sys.composite_warning())
            std::cerr << "warning: composite modulus, class invertibility "
                         "is decided numerically\n";
        return sys;
    }
    return build_offsets(L, c, k);
}

int run_check_tile(const std::string& input, bool json) {
    MultiTileSet s = load_set(input);
    FiberPartition P = fiber_partition(s);
    auto hist = multiplicity_histogram(P);
    TilingLevel tl = tiling_level(P);
    if (json) {
        Json rows = Json::array();
        for (const auto& [level, measure] : hist)
            rows.push_back(Json{{"level", level}, {"measure", rat_str(measure)}});
        emit(Json{{"schema", kSchemaTag},
                  {"histogram", std::move(rows)},
                  {"kind", tiling_kind_name(tl.kind)},
                  {"level", tl.level},
                  {"measure", rat_str(s.measure())}});
    } else {
        std::cout << "measure: " << rat_str(s.measure()) << "\n";
        std::cout << "multiplicity histogram:\n";
        for (const auto& [level, measure] : hist)
            std::cout << "  level " << level << ": " << rat_str(measure) << "\n";
        std::cout << "tiling: " << tiling_kind_name(tl.kind) << "(" << tl.level << ")\n";
    }
    return kOk;
}

int run_admissible_check(const std::string& input, const CertFlags& cf, bool json) {
    AdmissibilityCertificate c = cf.parse();
    FiberPartition P = fiber_partition(load_set(input));
    CheckResult res = check_certificate(P, c);
    if (json) {
        Json vs = Json::array();
        for (const Violation& v : res.violations) vs.push_back(violation_to_json(v));
        emit(Json{{"schema", kSchemaTag},
                  {"certificate", certificate_to_json(c)},
                  {"valid", res.valid},
                  {"violations", std::move(vs)}});
    } else if (res.valid) {
        std::cout << "Valid\n";
    } else {
        std::cout << "Invalid\n";
        for (const Violation& v : res.violations) {
            std::cout << "  points [";
            for (size_t i = 0; i < v.p1.z.size(); ++i)
                std::cout << (i ? "," : "") << v.p1.z[i];
            std::cout << "] and [";
            for (size_t i = 0; i < v.p2.z.size(); ++i)
                std::cout << (i ? "," : "") << v.p2.z[i];
            std::cout << "] share residue " << v.residue << " on a class of measure "
                      << rat_str(v.class_region.measure()) << "\n";
        }
    }
    return res.valid ? kOk : kFinding;
}

int run_admissible_search(const std::string& input, int n_max, int v_height, bool json) {
    FiberPartition P = fiber_partition(load_set(input));
    auto c = search_certificate(P, n_max, v_height);
    if (json) {
        Json out{{"schema", kSchemaTag}, {"found", static_cast<bool>(c)}};
        out["certificate"] = c ? certificate_to_json(*c) : Json();
        emit(out);
    } else if (c) {
        std::cout << "found n=" << c->n << " v=[";
        for (size_t i = 0; i < c->v.w.size(); ++i) std::cout << (i ? "," : "") << c->v.w[i];
        std::cout << "]\n";
    } else {
        std::cout << "none within bounds\n";
    }
    return c ? kOk : kFinding;
}

void print_bounds(const BoundsReport& rep) {
    std::cout << "kind: " << bounds_kind_name(rep.kind) << "\n";
    std::cout << "A = " << fmt12(rep.A) << ", B = " << fmt12(rep.B) << " (fiber)\n";
    std::cout << "A_L2 = " << fmt12(rep.A_L2) << ", B_L2 = " << fmt12(rep.B_L2) << "\n";
    for (size_t i = 0; i < rep.classes.size(); ++i) {
        const ClassBounds& cb = rep.classes[i];
        std::cout << "class " << i << ": size " << cb.points.size() << ", residues {";
        for (size_t t = 0; t < cb.residues.size(); ++t)
            std::cout << (t ? " " : "") << cb.residues[t];
        std::cout << "}, eig in [" << fmt12(cb.eig_min) << ", " << fmt12(cb.eig_max) << "]\n";
    }
}

int run_build_basis(const std::string& input, const CertFlags& cf, int k,
                    const std::string& s_list, bool json, bool csv) {
    MultiTileSet s = load_set(input);
    AdmissibilityCertificate c = cf.parse();
    FiberPartition P = fiber_partition(s);
    CheckResult chk = check_certificate(P, c);
    if (!chk.valid) {
        std::cerr << "certificate is invalid on this set\n";
        return kFinding;
    }
    ExponentialSystem sys = make_system(s.lattice(), c, k, s_list);
    BoundsReport rep = riesz_bounds(P, sys);
    if (csv)
        bounds_to_csv(rep, std::cout);
    else if (json)
        emit(bounds_to_json(rep));
    else
        print_bounds(rep);
    return rep.kind == BoundsKind::Degenerate ? kFinding : kOk;
}

int run_complete(const std::string& input, const CertFlags& cf, int k, bool dry_run,
                 bool json) {
    MultiTileSet omega = load_set(input);
    AdmissibilityCertificate c = cf.parse();
    FiberPartition P = fiber_partition(omega);
    MultiTileSet delta = complete_to_tile(P, c, k);
    if (!dry_run) {
        emit(multitile_to_json(delta));
        return kOk;
    }
    // report only what completion would add
    std::vector<Piece> added;
    for (const Piece& p : delta.pieces()) {
        UnitRegion extra = p.region;
        for (const Piece& q : omega.pieces())
            if (q.translate == p.translate) extra = subtract(extra, q.region);
        if (!extra.empty()) added.push_back(Piece{extra, p.translate});
    }
    if (json) {
        Json rows = Json::array();
        for (const Piece& p : added)
            rows.push_back(Json{{"region", region_to_json(p.region)},
                                {"translate", Json(p.translate.z)}});
        emit(Json{{"schema", kSchemaTag},
                  {"added", std::move(rows)},
                  {"measure_after", rat_str(delta.measure())}});
    } else {
        std::cout << "would add " << added.size() << " piece(s):\n";
        for (const Piece& p : added) {
            std::cout << "  translate [";
            for (size_t i = 0; i < p.translate.z.size(); ++i)
                std::cout << (i ? "," : "") << p.translate.z[i];
            std::cout << "], measure " << rat_str(p.region.measure()) << "\n";
        }
        std::cout << "measure after: " << rat_str(delta.measure()) << "\n";
    }
    return kOk;
}

int run_verify_parseval(const std::string& input, const CertFlags& cf, int k, int trials,
                        std::uint64_t seed, int m, double tol, bool json) {
    MultiTileSet s = load_set(input);
    AdmissibilityCertificate c = cf.parse();
    FiberPartition P = fiber_partition(s);
    ExponentialSystem sys = build_offsets(s.lattice(), c, k);
    Rng rng(seed);
    QuadratureConfig q{m};
    Json rows = Json::array();
    double max_rel = 0;
    for (int t = 0; t < trials; ++t) {
        PolySpec p = random_poly(k, s.lattice().dim(), 2, rng);
        const double direct = poly_norm_direct(s, sys, p, q);
        const double fiber = poly_norm_fiber(P, sys, p, q);
        const double rel = std::abs(direct - fiber) / std::abs(direct);
        max_rel = std::max(max_rel, rel);
        if (json)
            rows.push_back(Json{{"direct", num12(direct)},
                                {"fiber", num12(fiber)},
                                {"rel", num12(rel)}});
        else
            std::cout << "trial " << t << ": direct=" << fmt12(direct)
                      << " fiber=" << fmt12(fiber) << " rel=" << fmt12(rel) << "\n";
    }
    const bool pass = max_rel <= tol;
    if (json)
        emit(Json{{"schema", kSchemaTag},
                  {"trials", std::move(rows)},
                  {"max_rel", num12(max_rel)},
                  {"tol", num12(tol)},
                  {"pass", pass}});
    else
        std::cout << "max rel gap " << fmt12(max_rel) << " against tol " << fmt12(tol)
                  << ": " << (pass ? "pass" : "FAIL") << "\n";
    return pass ? kOk : kFinding;
}

int run_verify_rayleigh(const std::string& input, const CertFlags& cf, int k, int trials,
                        std::uint64_t seed, int m, double tol, bool json, bool csv) {
    MultiTileSet s = load_set(input);
    AdmissibilityCertificate c = cf.parse();
    FiberPartition P = fiber_partition(s);
    ExponentialSystem sys = build_offsets(s.lattice(), c, k);
    BoundsReport rep = riesz_bounds(P, sys);
    TrialSummary sum = frame_inequality_trial(P, sys, rep, trials, seed, QuadratureConfig{m});
    const double slack = tol * rep.B;
    const bool pass =
        sum.min_quotient >= rep.A - slack && sum.max_quotient <= rep.B + slack;
    if (csv) {
        quotients_to_csv(sum.quotients, std::cout);
    } else if (json) {
        Json qs = Json::array();
        for (double v : sum.quotients) qs.push_back(num12(v));
        emit(Json{{"schema", kSchemaTag},
                  {"A", num12(rep.A)},
                  {"B", num12(rep.B)},
                  {"min_quotient", num12(sum.min_quotient)},
                  {"max_quotient", num12(sum.max_quotient)},
                  {"quotients", std::move(qs)},
                  {"tol", num12(tol)},
                  {"pass", pass}});
    } else {
        std::cout << "bounds [" << fmt12(rep.A) << ", " << fmt12(rep.B) << "], quotients in ["
                  << fmt12(sum.min_quotient) << ", " << fmt12(sum.max_quotient)
                  << "]: " << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? kOk : kFinding;
}

int run_verify_gram(const std::string& input, const CertFlags& cf, int k, int h_height, int m,
                    double tol, bool json) {
    MultiTileSet s = load_set(input);
    AdmissibilityCertificate c = cf.parse();
    FiberPartition P = fiber_partition(s);
    ExponentialSystem sys = build_offsets(s.lattice(), c, k);
    BoundsReport rep = riesz_bounds(P, sys);

    const int d = s.lattice().dim();
    std::vector<std::pair<int, DualVector>> window;
    for (int j = 0; j < k; ++j) {
        std::vector<std::int64_t> w(d, -h_height);
        while (true) {
            window.push_back({j, DualVector(w)});
            int ax = d - 1;
            while (ax >= 0 && ++w[ax] > h_height) w[ax--] = -h_height;
            if (ax < 0) break;
        }
    }
    auto [lo, hi] = gram_section(s, sys, window, QuadratureConfig{m});
    const bool pass = lo >= rep.A_L2 - tol && hi <= rep.B_L2 + tol;
    if (json)
        emit(Json{{"schema", kSchemaTag},
                  {"window_size", window.size()},
                  {"eig_min", num12(lo)},
                  {"eig_max", num12(hi)},
                  {"A_L2", num12(rep.A_L2)},
                  {"B_L2", num12(rep.B_L2)},
                  {"tol", num12(tol)},
                  {"pass", pass}});
    else
        std::cout << "gram eigs [" << fmt12(lo) << ", " << fmt12(hi) << "] vs bounds ["
                  << fmt12(rep.A_L2) << ", " << fmt12(rep.B_L2)
                  << "] tol " << fmt12(tol) << ": " << (pass ? "pass" : "FAIL") << "\n";
    return pass ? kOk : kFinding;
}

int run_verify_kronecker(double a1, double a2, int j, double beta1, double beta2, double eps,
                         long m_max, bool json) {
    auto m = kronecker_search({a1, a2}, j, {beta1, beta2}, eps, m_max);
    double dist = 0;
    if (m) {
        double s = 0;
        const double a[2] = {a1, a2}, beta[2] = {beta1, beta2};
        for (int i = 0; i < 2; ++i) {
            const double d = 6.283185307179586476925286766559 *
                             (a[i] * j * static_cast<double>(*m) - beta[i]);
            s += 2.0 - 2.0 * std::cos(d);
        }
        dist = std::sqrt(s);
    }
    if (json) {
        Json out{{"schema", kSchemaTag}, {"found", static_cast<bool>(m)}, {"eps", num12(eps)}};
        out["m"] = m ? Json(*m) : Json();
        out["distance"] = m ? num12(dist) : Json();
        emit(out);
    } else if (m) {
        std::cout << "m = " << *m << ", phase distance " << fmt12(dist) << " < "
                  << fmt12(eps) << "\n";
    } else {
        std::cout << "none within bounds\n";
    }
    return m ? kOk : kFinding;
}

int run_gallery(const std::string& name, int J, int k, int dim, double a1, double a2,
                double beta1, double beta2, double eps, long m_max) {
    if (name == "linear") {
        emit(multitile_to_json(linear_tail_family(J)));
    } else if (name == "odd") {
        emit(multitile_to_json(odd_tail_family(J)));
    } else if (name == "kronecker") {
        emit(multitile_to_json(kronecker_tail_family(J, a1, a2, beta1, beta2, eps, m_max)));
    } else if (name == "box") {
        emit(multitile_to_json(box_k_tile(k, integer_lattice(dim))));
    } else {
        throw InputError("unknown gallery entry \"" + name +
                         "\" (choose linear, odd, kronecker, box)");
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-tiling analysis, exponential bases, and completions "
                 "over full lattices"};
    app.require_subcommand(1);
    bool json = false;
    auto json_flag = [&json](CLI::App* cmd) {
        cmd->add_flag("--json", json, "machine output");
    };

    std::string input = "-";
    CertFlags cf;
    int k = 2;
    std::string s_list;
    int n_max = 10, v_height = 10;
    bool dry_run = false, csv = false;
    int trials = 20, h_height = 2;
    int pv_m = 256, rq_m = 64, gr_m = 512;
    std::uint64_t seed = 0;
    double pv_tol = 1e-6, rq_tol = 1e-6, gr_tol = 1e-3;
    int jj = 1, dim = 1, J = 1;
    double a1 = 1.4142135623730951, a2 = 1.7320508075688772;
    double beta1 = 0, beta2 = 0, eps = 0.1;
    long m_max = 1000000;
    std::string gallery_name;

    CLI::App* check_tile = app.add_subcommand("check-tile", "multiplicity histogram and tiling level");
    check_tile->add_option("input", input, "MultiTileSet JSON file, - for stdin");
    json_flag(check_tile);

    CLI::App* adm = app.add_subcommand("admissible", "certificate checks and searches");
    adm->require_subcommand(1);
    CLI::App* adm_check = adm->add_subcommand("check", "verify one certificate");
    add_cert_flags(adm_check, cf);
    adm_check->add_option("input", input, "MultiTileSet JSON file, - for stdin");
    json_flag(adm_check);
    CLI::App* adm_search = adm->add_subcommand("search", "scan for the first valid certificate");
    adm_search->add_option("--n-max", n_max, "largest modulus to try")->required();
    adm_search->add_option("--v-height", v_height, "max-norm bound for v")->required();
    adm_search->add_option("input", input, "MultiTileSet JSON file, - for stdin");
    json_flag(adm_search);

    CLI::App* build = app.add_subcommand("build-basis", "offsets and stability bounds");
    add_cert_flags(build, cf);
    build->add_option("--k", k, "number of offsets (consecutive indices)");
    build->add_option("--s", s_list, "explicit offset indices, comma separated");
    build->add_flag("--csv", csv, "per-class CSV");
    build->add_option("input", input, "MultiTileSet JSON file, - for stdin");
    json_flag(build);

    CLI::App* complete = app.add_subcommand("complete", "extend a subtile to an exact k-tile");
    add_cert_flags(complete, cf);
    complete->add_option("--k", k, "target tiling level")->required();
    complete->add_flag("--dry-run", dry_run, "list additions instead of emitting the set");
    complete->add_option("input", input, "MultiTileSet JSON file, - for stdin");
    json_flag(complete);

    CLI::App* verify = app.add_subcommand("verify", "independent numerical cross-checks");
    verify->require_subcommand(1);
    CLI::App* v_parseval = verify->add_subcommand(
        "parseval", "direct vs fiber quadrature of random exponential polynomials");
    add_cert_flags(v_parseval, cf);
    v_parseval->add_option("--k", k, "number of offsets");
    v_parseval->add_option("--trials", trials, "random polynomials to draw");
    v_parseval->add_option("--seed", seed, "rng seed")->required();
    v_parseval->add_option("--m", pv_m, "quadrature points per axis unit");
    v_parseval->add_option("--tol", pv_tol, "max relative gap");
    v_parseval->add_option("input", input, "MultiTileSet JSON file, - for stdin");
    json_flag(v_parseval);

    CLI::App* v_rayleigh = verify->add_subcommand(
        "rayleigh", "random quotients against the reported bounds");
    add_cert_flags(v_rayleigh, cf);
    v_rayleigh->add_option("--k", k, "number of offsets");
    v_rayleigh->add_option("--trials", trials, "random polynomials to draw");
    v_rayleigh->add_option("--seed", seed, "rng seed")->required();
    v_rayleigh->add_option("--m", rq_m, "quadrature points per axis unit");
    v_rayleigh->add_option("--tol", rq_tol, "slack relative to B");
    v_rayleigh->add_flag("--csv", csv, "quotients as CSV");
    v_rayleigh->add_option("input", input, "MultiTileSet JSON file, - for stdin");
    json_flag(v_rayleigh);

    CLI::App* v_gram = verify->add_subcommand(
        "gram", "finite Gram section eigenvalues against the function-space bounds");
    add_cert_flags(v_gram, cf);
    v_gram->add_option("--k", k, "number of offsets");
    v_gram->add_option("--h-height", h_height, "frequency window max-norm");
    v_gram->add_option("--m", gr_m, "quadrature points per axis unit");
    v_gram->add_option("--tol", gr_tol, "absolute eigenvalue slack");
    v_gram->add_option("input", input, "MultiTileSet JSON file, - for stdin");
    json_flag(v_gram);

    CLI::App* v_kron = verify->add_subcommand("kronecker", "phase-target translate search");
    v_kron->add_option("--a1", a1, "first frequency")->required();
    v_kron->add_option("--a2", a2, "second frequency")->required();
    v_kron->add_option("--j", jj, "level multiplier")->required();
    v_kron->add_option("--beta1", beta1, "first target phase")->required();
    v_kron->add_option("--beta2", beta2, "second target phase")->required();
    v_kron->add_option("--eps", eps, "phase distance tolerance");
    v_kron->add_option("--m-max", m_max, "largest translate magnitude");
    json_flag(v_kron);

    CLI::App* gallery = app.add_subcommand("gallery", "emit a named example set");
    gallery->add_option("name", gallery_name, "linear | odd | kronecker | box")->required();
    gallery->add_option("--J", J, "truncation level");
    gallery->add_option("--k", k, "tiling level for box");
    gallery->add_option("--dim", dim, "dimension for box");
    gallery->add_option("--a1", a1, "kronecker first frequency");
    gallery->add_option("--a2", a2, "kronecker second frequency");
    gallery->add_option("--beta1", beta1, "kronecker first target phase");
    gallery->add_option("--beta2", beta2, "kronecker second target phase");
    gallery->add_option("--eps", eps, "kronecker phase tolerance");
    gallery->add_option("--m-max", m_max, "kronecker search bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*check_tile) return run_check_tile(input, json);
        if (*adm_check) return run_admissible_check(input, cf, json);
        if (*adm_search) return run_admissible_search(input, n_max, v_height, json);
        if (*build) return run_build_basis(input, cf, k, s_list, json, csv);
        if (*complete) return run_complete(input, cf, k, dry_run, json);
        if (*v_parseval) return run_verify_parseval(input, cf, k, trials, seed, pv_m, pv_tol, json);
        if (*v_rayleigh)
            return run_verify_rayleigh(input, cf, k, trials, seed, rq_m, rq_tol, json, csv);
        if (*v_gram) return run_verify_gram(input, cf, k, h_height, gr_m, gr_tol, json);
        if (*v_kron) return run_verify_kronecker(a1, a2, jj, beta1, beta2, eps, m_max, json);
        if (*gallery) return run_gallery(gallery_name, J, k, dim, a1, a2, beta1, beta2, eps, m_max);
    } catch (const CertificateInvalid& e) {
        std::cerr << "invalid certificate: " << e.what() << "\n";
        return kFinding;
    } catch (const KroneckerSearchFailed& e) {
        std::cerr << "phase search failed: " << e.what() << "\n";
        return kFinding;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
