#include "dstokes/verify.hpp"

#include <sstream>

#include "dstokes/corpus.hpp"
#include "dstokes/derham.hpp"
#include "dstokes/findiff.hpp"
#include "dstokes/invariants.hpp"
#include "dstokes/movie.hpp"
#include "dstokes/random_diagram.hpp"
#include "dstokes/triple_point.hpp"

namespace dstokes {

namespace {

class Report {
  public:
    Report(bool records) : records_(records) {}

    void check(const std::string& suite, const std::string& subject, bool ok,
               const std::string& detail) {
        ++total_;
        if (!ok)
            ++failed_;
        if (records_) {
            out_ << (ok ? "ok" : "FAIL") << " " << suite << " " << subject << " " << detail
                 << "\n";
        } else {
            out_ << (ok ? "  [pass] " : "  [FAIL] ") << suite << ": " << subject << " — "
                 << detail << "\n";
        }
    }
    void note(const std::string& text) {
        if (records_)
            out_ << "note " << text << "\n";
        else
            out_ << text << "\n";
    }
    void input_error(const std::string& subject, const std::string& what) {
        ++input_errors_;
        if (records_)
            out_ << "error input " << subject << " " << what << "\n";
        else
            out_ << "  [error] " << subject << ": " << what << "\n";
    }

    std::string render() {
        std::ostringstream tail;
        if (records_)
            tail << "summary checks=" << total_ << " failures=" << failed_
                 << " input-errors=" << input_errors_ << "\n";
        else
            tail << total_ << " checks, " << failed_ << " failures, " << input_errors_
                 << " input errors\n";
        return out_.str() + tail.str();
    }
    int exit_code() const { return input_errors_ ? 2 : (failed_ ? 1 : 0); }

  private:
    bool records_;
    std::ostringstream out_;
    int total_ = 0, failed_ = 0, input_errors_ = 0;
};

void suite_findiff(Report& rep) {
    auto x2 = Polynomial::monomial(2);
    auto x3 = Polynomial::monomial(3);
    auto x4 = Polynomial::monomial(4);
    bool ok = true;
    for (long long k = -21; k <= 21; ++k) {
        Rational x(k, 2);
        ok = ok && central_difference(1, Rational(1), x2, x) == Rational(2) * x;
        ok = ok && central_difference(2, Rational(1), x3, x) == Rational(6) * x;
        ok = ok && central_difference(3, Rational(1), x4, x) == Rational(24) * x;
    }
    rep.check("findiff", "difference-backbone", ok, "D(x^2)=2x D^2(x^3)=6x D^3(x^4)=24x");
    bool norms = normalization(1, 1) == Rational(1, 2) && normalization(2, 1) == Rational(1, 6) &&
                 normalization(1, 3) == Rational(1, 6) && normalization(2, 3) == Rational(1, 18) &&
                 normalization(3, 1) == Rational(1, 24);
    rep.check("findiff", "normalizations", norms, "coefficients 1/2 1/6 1/6 1/18 1/24");
}

void suite_surface(Report& rep) {
    bool ok = true;
    bool profile_ok = true;
    for (long long k = -21; k <= 21; ++k) {
        auto ball = build_ball(Rational(k, 2));
        auto e = d1_surface_eval(ball);
        auto f = d2_surface_eval(ball);
        auto r = d3_surface_eval(ball);
        auto s = check_stokes_surface(ball);
        ok = ok && e.pass && f.pass && r.pass && s.pass;
        auto prof = region_sign_profile(ball);
        profile_ok = profile_ok && prof == std::array<long long, 4>{1, -3, 3, -1};
    }
    rep.check("surface", "level-sweep", ok, "four levels equal ind over the half-integer sweep");
    rep.check("surface", "region-sign-profile", profile_ok, "coefficients 1 -3 3 -1");
}

void suite_diagram(Report& rep, const std::string& label, const Diagram& d,
                   EpsilonConvention conv) {
    auto phi = compute_alexander(d, Convention::Curve);

    auto stokes = check_stokes_curve(d);
    rep.check("stokes", label, stokes.all_pass,
              "boundary compatibility at " + std::to_string(stokes.rows.size()) + " crossings");

    auto s1 = st1(d, phi);
    rep.check("st1", label, s1.pass(),
              "point=" + s1.point.str() + " edge=" + s1.edge.str() + " region=" + s1.region.str());
    bool ledger1 = true;
    for (const auto& row : per_vertex_ledger_untwisted(d, phi))
        ledger1 = ledger1 && row.pass();
    rep.check("st1-ledger", label, ledger1, "per-crossing three-level rows");

    // Orientation reversal negates the point sum and each dual-2 evaluation.
    auto rd = reverse_orientation(d);
    auto rphi = compute_alexander(rd, Convention::Curve);
    bool mirror_ok = st1(rd, rphi).point == -s1.point;
    for (int v = 0; v < d.num_vertices(); ++v) {
        int rv = -1;
        for (int w = 0; w < rd.num_vertices(); ++w)
            if (rd.vertex_id[w] == d.vertex_id[v])
                rv = w;
        mirror_ok = mirror_ok && d2_curve(rd, rphi, rv) == -d2_curve(d, phi, v);
    }
    rep.check("mirror", label, mirror_ok, "reversal negates point level and dual-2 values");

    if (d.crossing_strand_count() == 1 && d.num_vertices() > 0) {
        auto arcs = outer_adjacent_arcs(d);
        bool three_ok = true, sweep_ok = true, ledger_ok = true;
        Rational first_total;
        bool have_first = false;
        for (int a : arcs) {
            auto eps = epsilon(d, a, conv);
            auto tw = gleams(d, phi, eps);
            auto st = st_original(d, phi, tw);
            three_ok = three_ok && st.pass();
            if (!have_first) {
                first_total = st.point;
                have_first = true;
            } else {
                sweep_ok = sweep_ok && st.point == first_total;
            }
            for (const auto& row : per_vertex_ledger(d, phi, tw))
                ledger_ok = ledger_ok && row.pass();
        }
        rep.check("st", label, three_ok,
                  "three levels agree for " + std::to_string(arcs.size()) + " base edges");
        rep.check("st-base-sweep", label, sweep_ok,
                  have_first ? "total " + first_total.str() + " for every outer base edge"
                             : "no base edges");
        rep.check("st-ledger", label, ledger_ok, "per-crossing twisted rows equal eps*ind");
    }
}

void suite_movies(Report& rep) {
    for (const auto& entry : corpus::movies()) {
        Movie m = parse_movie(entry.text);
        auto res = st2_of_movie(m);
        std::string detail = "st2=" + res.st2.str() + " riii-events=" +
                             std::to_string(res.records.size());
        if (entry.name == "sphere" || entry.name == "torus")
            rep.check("movie", entry.name, res.st2 == Rational(0), detail);
        else
            rep.check("movie", entry.name, true, detail);
        auto trace = st1_trace(m);
        rep.check("movie-trace", entry.name,
                  trace.front() == Rational(0) && trace.back() == Rational(0),
                  "slice invariant trace over " + std::to_string(trace.size()) + " frames");
        Movie r = reverse_movie(m);
        rep.check("movie-reverse", entry.name, st2_of_movie(r).st2 == res.st2,
                  "time reversal preserves st2");
    }
}

} // namespace

VerifyResult run_verify(const VerifyOptions& opt,
                        const std::function<std::string(const std::string&)>& read_file) {
    Report rep(opt.records);
    suite_findiff(rep);
    suite_surface(rep);

    if (opt.use_corpus) {
        for (const auto& entry : corpus::curves()) {
            try {
                Diagram d = parse_diagram(entry.text);
                suite_diagram(rep, entry.name, d, opt.convention);
            } catch (const std::exception& e) {
                rep.input_error(entry.name, e.what());
            }
        }
        try {
            suite_movies(rep);
        } catch (const std::exception& e) {
            rep.input_error("movies", e.what());
        }
    }
    for (const auto& path : opt.paths) {
        try {
            Diagram d = parse_diagram(read_file(path));
            suite_diagram(rep, d.name, d, opt.convention);
        } catch (const std::exception& e) {
            rep.input_error(path, e.what());
        }
    }
    for (int i = 0; i < opt.random_count; ++i) {
        int n = 1 + i % opt.max_crossings;
        std::uint64_t seed = opt.seed * 1000003ull + static_cast<std::uint64_t>(i);
        try {
            Diagram d = generate_random_diagram(n, seed);
            suite_diagram(rep, d.name, d, opt.convention);
        } catch (const std::exception& e) {
            rep.input_error("random-" + std::to_string(i), e.what());
        }
    }

    VerifyResult res;
    res.report = rep.render();
    res.exit_code = rep.exit_code();
    return res;
}

} // namespace dstokes
