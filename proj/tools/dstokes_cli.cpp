#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dstokes/corpus.hpp"
#include "dstokes/derham.hpp"
#include "dstokes/findiff.hpp"
#include "dstokes/invariants.hpp"
#include "dstokes/movie.hpp"
#include "dstokes/random_diagram.hpp"
#include "dstokes/triple_point.hpp"
#include "dstokes/verify.hpp"

using namespace dstokes;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Diagram load_diagram(const std::string& path) { return parse_diagram(read_file(path)); }

std::string region_name(const Diagram& d, int region) {
    auto ref = d.region_ref(region);
    switch (ref.kind) {
    case RegionRef::Outer:
        return "outer";
    case RegionRef::Face:
        return (region == d.outer_region() ? "outer(face:" : "face:") + std::to_string(ref.id) +
               (region == d.outer_region() ? ")" : "");
    case RegionRef::LoopInterior:
        return "in:" + std::to_string(ref.id);
    }
    return "?";
}

EpsilonConvention conv_of(const std::string& s) {
    return s == "opposite" ? EpsilonConvention::Opposite : EpsilonConvention::Paper;
}

int cmd_parse(const std::string& path) {
    Diagram d = load_diagram(path);
    std::cout << "name " << d.name << "\n"
              << "vertices " << d.num_vertices() << "\n"
              << "edges " << d.num_arcs() << "\n"
              << "faces " << d.num_faces() << "\n"
              << "loops " << d.loops.size() << "\n"
              << "strands " << d.strand_count() << "\n"
              << serialize(d);
    return 0;
}

int cmd_alexander(const std::string& path, const std::string& convention) {
    Diagram d = load_diagram(path);
    auto phi = compute_alexander(d, convention == "surface" ? Convention::SurfaceShifted
                                                            : Convention::Curve);
    for (int r = 0; r < d.num_regions(); ++r)
        std::cout << region_name(d, r) << " " << phi.value[r].str() << "\n";
    return 0;
}

int cmd_stokes(const std::string& path, bool all_germs) {
    Diagram d = load_diagram(path);
    auto rep = check_stokes_curve(d, all_germs ? GermRule::AllGerms : GermRule::Incoming);
    std::cout << "vertex ind lhs rhs status\n";
    for (const auto& row : rep.rows)
        std::cout << row.vertex_id << " " << row.ind.str() << " " << row.lhs.str() << " "
                  << row.rhs.str() << " " << (row.pass ? "pass" : "FAIL") << "\n";
    return rep.all_pass ? 0 : 1;
}

int cmd_signs(const std::string& path, const std::string& convention) {
    Diagram d = load_diagram(path);
    if (!d.base_arc)
        throw std::runtime_error("diagram has no base edge");
    auto phi = compute_alexander(d, Convention::Curve);
    auto eps = epsilon(d, *d.base_arc, conv_of(convention));
    auto tw = gleams(d, phi, eps);
    for (int v = 0; v < d.num_vertices(); ++v)
        std::cout << "eps v" << d.vertex_id[v] << " " << (eps[v] > 0 ? "+1" : "-1") << "\n";
    for (int a = 0; a < d.num_arcs(); ++a)
        std::cout << "edge-sign e" << d.arc_external_id(a) << " "
                  << (tw.arc[a] > 0 ? "+1" : "-1") << "\n";
    for (int r = 0; r < d.num_regions(); ++r)
        std::cout << "gleam " << region_name(d, r) << " " << tw.gleam[r].str() << "\n";
    return 0;
}

int cmd_invariants(const std::string& path, const std::string& convention) {
    Diagram d = load_diagram(path);
    auto rep = invariant_report(d, conv_of(convention), true);
    std::cout << "st1 point " << rep.st1.point.str() << "\n"
              << "st1 edge " << rep.st1.edge.str() << "\n"
              << "st1 region " << rep.st1.region.str() << "\n";
    if (rep.st) {
        std::cout << "st point " << rep.st->point.str() << "\n"
                  << "st edge " << rep.st->edge.str() << "\n"
                  << "st region " << rep.st->region.str() << "\n";
        for (const auto& row : rep.st_ledger)
            std::cout << "ledger v" << row.vertex_id << " eps " << row.eps << " ind "
                      << row.ind.str() << " levels " << row.point_level.str() << " "
                      << row.edge_level.str() << " " << row.region_level.str() << " "
                      << (row.pass() ? "pass" : "FAIL") << "\n";
    }
    std::cout << (rep.all_pass() ? "all identities pass" : "IDENTITY FAILURE") << "\n";
    return rep.all_pass() ? 0 : 1;
}

int cmd_surface(int range) {
    bool all = true;
    for (long long k = -range; k <= range; ++k) {
        auto ball = build_ball(Rational(k, 2));
        auto e = d1_surface_eval(ball);
        auto f = d2_surface_eval(ball);
        auto r = d3_surface_eval(ball);
        auto s = check_stokes_surface(ball);
        bool ok = e.pass && f.pass && r.pass && s.pass;
        all = all && ok;
        std::cout << "x=" << ball.x.str() << " edge=" << e.value.str()
                  << " face=" << f.value.str() << " region=" << r.value.str() << " "
                  << (ok ? "pass" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_movie_st2(const std::string& path) {
    Movie m = parse_movie(read_file(path));
    auto res = st2_of_movie(m);
    for (const auto& rec : res.records)
        std::cout << "riii event " << rec.event_index << " before " << rec.before_value.str()
                  << " after " << rec.after_value.str() << " ind " << rec.ind.str() << "\n";
    std::cout << "st2 " << res.st2.str() << "\n";
    return 0;
}

int cmd_movie_compare(const std::string& before, const std::string& after, int sigma,
                      const std::string& dst1) {
    Movie mb = parse_movie(read_file(before));
    Movie ma = parse_movie(read_file(after));
    auto rep = slice_formula_check(mb, ma, parse_rational(dst1), sigma);
    std::cout << "dst2 " << rep.dst2.str() << "\n"
              << "dst1 " << rep.dst1.str() << "\n"
              << "sigma " << rep.sigma << "\n"
              << "dst2 == dst1 + sigma: " << (rep.holds ? "yes" : "no") << "\n";
    return 0;
}

int cmd_findiff_sweep(int range) {
    auto x2 = Polynomial::monomial(2);
    auto x3 = Polynomial::monomial(3);
    auto x4 = Polynomial::monomial(4);
    bool all = true;
    for (long long k = -range; k <= range; ++k) {
        Rational x(k, 2);
        bool ok = central_difference(1, Rational(1), x2, x) == Rational(2) * x &&
                  central_difference(2, Rational(1), x3, x) == Rational(6) * x &&
                  central_difference(3, Rational(1), x4, x) == Rational(24) * x;
        all = all && ok;
        std::cout << "x=" << x.str() << " " << (ok ? "pass" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorial engine for strangeness-type curve invariants"};
    app.require_subcommand(1);

    std::string path, path2, convention = "paper", alex_conv = "curve", format = "text";
    std::string dst1 = "0";
    bool all_germs = false, use_corpus = false;
    int range = 21, sigma = 1, gen_n = 1, random_count = 0, max_n = 12;
    std::uint64_t seed = 1;
    std::vector<std::string> paths;

    auto* curve = app.add_subcommand("curve", "diagram queries");
    curve->require_subcommand(1);
    auto* cparse = curve->add_subcommand("parse", "validate and echo a diagram");
    cparse->add_option("file", path)->required();
    auto* calex = curve->add_subcommand("alexander", "region value table");
    calex->add_option("file", path)->required();
    calex->add_option("--convention", alex_conv)->check(CLI::IsMember({"curve", "surface"}));
    auto* cstokes = curve->add_subcommand("stokes", "per-crossing boundary compatibility");
    cstokes->add_option("file", path)->required();
    cstokes->add_flag("--all-germs", all_germs);
    auto* csigns = curve->add_subcommand("signs", "traversal signs, edge signs and gleams");
    csigns->add_option("file", path)->required();
    csigns->add_option("--epsilon-convention", convention)
        ->check(CLI::IsMember({"paper", "opposite"}));
    auto* cinv = curve->add_subcommand("invariants", "three-level invariant report");
    cinv->add_option("file", path)->required();
    cinv->add_option("--epsilon-convention", convention)
        ->check(CLI::IsMember({"paper", "opposite"}));

    auto* surface = app.add_subcommand("surface", "triple-point model checks");
    auto* slocal = surface->add_subcommand("local-check", "sweep the local level identities");
    slocal->add_option("--range", range);

    auto* movie = app.add_subcommand("movie", "slice movie queries");
    movie->require_subcommand(1);
    auto* mst2 = movie->add_subcommand("st2", "triple-point contributions of a movie");
    mst2->add_option("file", path)->required();
    auto* mcmp = movie->add_subcommand("compare", "transition bookkeeping for a movie pair");
    mcmp->add_option("before", path)->required();
    mcmp->add_option("after", path2)->required();
    mcmp->add_option("--sigma", sigma)->check(CLI::IsMember({-1, 1}))->required();
    mcmp->add_option("--dst1", dst1);

    auto* findiff = app.add_subcommand("findiff", "difference kernel");
    auto* fsweep = findiff->add_subcommand("sweep", "check the backbone identities");
    fsweep->add_option("--range", range);

    auto* verify = app.add_subcommand("verify", "run every identity suite");
    verify->add_option("files", paths);
    verify->add_flag("--corpus", use_corpus);
    verify->add_option("--random", random_count);
    verify->add_option("--max-n", max_n);
    verify->add_option("--seed", seed);
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));
    verify->add_option("--epsilon-convention", convention)
        ->check(CLI::IsMember({"paper", "opposite"}));

    auto* gen = app.add_subcommand("gen", "emit a random diagram");
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cparse->parsed())
            return cmd_parse(path);
        if (calex->parsed())
            return cmd_alexander(path, alex_conv);
        if (cstokes->parsed())
            return cmd_stokes(path, all_germs);
        if (csigns->parsed())
            return cmd_signs(path, convention);
        if (cinv->parsed())
            return cmd_invariants(path, convention);
        if (slocal->parsed())
            return cmd_surface(range);
        if (mst2->parsed())
            return cmd_movie_st2(path);
        if (mcmp->parsed())
            return cmd_movie_compare(path, path2, sigma, dst1);
        if (fsweep->parsed())
            return cmd_findiff_sweep(range);
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.use_corpus = use_corpus;
            opt.paths = paths;
            opt.random_count = random_count;
            opt.max_crossings = max_n;
            opt.seed = seed;
            opt.records = (format == "records");
            opt.convention = conv_of(convention);
            auto res = run_verify(opt, read_file);
            std::cout << res.report;
            return res.exit_code;
        }
        if (gen->parsed()) {
            std::cout << serialize(generate_random_diagram(gen_n, seed));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
