// Acceptance gate: each check prints one pass/fail line and the process
// exits nonzero if any check fails.  Usage: acceptance <germcalc> <fixture dir>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "germ/cohomology.hpp"
#include "germ/converse.hpp"
#include "germ/expr.hpp"
#include "germ/interp.hpp"
#include "germ/singularity.hpp"
#include "oracle.hpp"

using namespace germ;
namespace fs = std::filesystem;

namespace {

struct Germ {
    std::string expr;
    std::vector<std::string> vars;
    bool quasihomogeneous;
};

const std::vector<Germ> kCorpus = {
    {"x^2 + y^2", {"x", "y"}, true},
    {"x^3 + y^2", {"x", "y"}, true},
    {"x^4 + y^2", {"x", "y"}, true},
    {"x^5 + y^2", {"x", "y"}, true},
    {"x^6 + y^2", {"x", "y"}, true},
    {"x^3 + x*y^2", {"x", "y"}, true},
    {"x^3 + y^4", {"x", "y"}, true},
    {"x^3 + y^5", {"x", "y"}, true},
    {"x^3 + y^3 + z^3", {"x", "y", "z"}, true},
    {"x^5 + y^5 + x^2*y^2", {"x", "y"}, false},
};

Poly germ_poly(const Germ& g) {
    return parse_poly(g.expr, RingSpec::make(g.vars));
}

// One cohomology report per corpus germ, shared across checks.
const std::vector<CohomologyReport>& corpus_reports() {
    static std::vector<CohomologyReport> reps = [] {
        std::vector<CohomologyReport> r;
        for (const Germ& g : kCorpus) r.push_back(verify_ses1(germ_poly(g)));
        return r;
    }();
    return reps;
}

Poly random_poly(const RingPtr& r, std::mt19937& rng, int maxdeg, int minord) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(minord, maxdeg);
    Poly p = Poly::zero(r);
    for (int k = 0; k < 4; ++k) {
        int d = deg(rng);
        Monomial m(r->nvars());
        for (int rem = d, i = 0; i < r->nvars(); ++i) {
            std::uniform_int_distribution<int> part(0, rem);
            int a = (i + 1 == r->nvars()) ? rem : part(rng);
            m.e[i] = a;
            rem -= a;
        }
        p.add_term(m, Rational(coeff(rng)));
    }
    return p;
}

VectorField random_field(const RingPtr& r, std::mt19937& rng, int maxdeg) {
    VectorField v = VectorField::zero(r);
    for (int i = 0; i < r->nvars(); ++i) v.comp[i] = random_poly(r, rng, maxdeg, 2);
    return v;
}

FormalDiffeo random_tangent_diffeo(const RingPtr& r, std::mt19937& rng, int N) {
    FormalDiffeo d = FormalDiffeo::identity(r, N);
    for (int i = 0; i < r->nvars(); ++i) d.comp[i] += random_poly(r, rng, 4, 2);
    return d;
}

// Random field tangent to (f): Koszul combinations plus an f-multiple.
VectorField random_tangent_field(const Poly& f, std::mt19937& rng) {
    const RingPtr& r = f.ring();
    int nv = r->nvars();
    VectorField v = VectorField::zero(r);
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) {
            Poly h = random_poly(r, rng, 3, 1);
            v.comp[i] += h * f.partial(j);
            v.comp[j] -= h * f.partial(i);
        }
    for (int i = 0; i < nv; ++i) v.comp[i] += f * random_poly(r, rng, 2, 0);
    return v;
}

PForm top_unit_form(const RingPtr& r, std::mt19937& rng) {
    Poly u = Poly::constant(r, Rational(1)) + random_poly(r, rng, 3, 1);
    IndexTuple all;
    for (int i = 0; i < r->nvars(); ++i) all.push_back(i);
    return PForm::term(r, u, all);
}

VectorField hamiltonian(const Poly& f) {
    return VectorField{f.ring(), {f.partial(1), -f.partial(0)}};
}

VectorField f_times_euler(const Poly& f) {
    const RingPtr& r = f.ring();
    VectorField v = VectorField::zero(r);
    for (int i = 0; i < r->nvars(); ++i) v.comp[i] = f * Poly::variable(r, i);
    return v;
}

bool quasihomogeneous_corpus_invariants() {
    const auto& reps = corpus_reports();
    for (size_t i = 0; i < kCorpus.size(); ++i) {
        if (!kCorpus[i].quasihomogeneous) continue;
        Poly f = germ_poly(kCorpus[i]);
        SingularityReport s = analyze(f);
        const CohomologyReport& c = reps[i];
        if (s.mu != s.tau || s.d != 0 || !s.quasihomogeneous) return false;
        if (!saito_test(f)) return false;
        if (c.ker_pi != 0) return false;
        auto om = oracle::jet_quotient_dim(gradient(f));
        if (!om || *om != s.mu) return false;
    }
    return true;
}

bool wall_case_dimensions() {
    Poly f = germ_poly(kCorpus.back());
    SingularityReport s = analyze(f);
    const CohomologyReport& c = corpus_reports().back();
    if (s.mu != 11 || s.tau != 10 || s.d != 1) return false;
    if (saito_test(f) || s.quasihomogeneous) return false;
    if (c.ker_pi != s.mu - s.tau || c.brieskorn != s.mu) return false;
    auto omu = oracle::jet_quotient_dim(gradient(f));
    std::vector<Poly> tj = gradient(f);
    tj.push_back(f);
    auto otau = oracle::jet_quotient_dim(tj);
    return omu && *omu == 11 && otau && *otau == 10;
}

bool brieskorn_rank_is_milnor() {
    const auto& reps = corpus_reports();
    for (const CohomologyReport& c : reps)
        if (c.brieskorn != c.mu) return false;
    return true;
}

bool dimension_count_consistent() {
    const auto& reps = corpus_reports();
    for (const CohomologyReport& c : reps)
        if (!c.ses1_consistent) return false;
    return true;
}

bool interpolation_round_trips() {
    auto r = RingSpec::make({"x", "y"});
    std::mt19937 rng(2026);
    const int N = 8;
    for (int rep = 0; rep < 20; ++rep) {
        VectorField v = random_field(r, rng, 4);
        FormalDiffeo phi = exp_field(v, N).at(Rational(1));
        VectorField w = log_diffeo(phi, N);
        for (int i = 0; i < 2; ++i)
            if (!(w.comp[i] == v.comp[i].truncated(N))) return false;

        FormalDiffeo psi = random_tangent_diffeo(r, rng, N);
        VectorField u = log_diffeo(psi, N);
        TimeDiffeo fam = interpolate(psi, N);
        TimeDiffeo expfam = exp_field(u, N);
        for (int i = 0; i < 2; ++i)
            if (!(fam.comp[i] == expfam.comp[i])) return false;
        if (!fam.tangent_to_identity()) return false;
        FormalDiffeo at0 = fam.at(Rational(0));
        FormalDiffeo at1 = fam.at(Rational(1));
        for (int i = 0; i < 2; ++i) {
            if (!(at0.comp[i] == Poly::variable(r, i))) return false;
            if (!(at1.comp[i] == psi.comp[i].truncated(N))) return false;
        }

        for (auto [sn, sd, tn, td] :
             {std::array<int, 4>{1, 2, 1, 3}, {2, 1, -1, 2}, {-1, 3, -2, 3}}) {
            Rational s(sn, sd), t(tn, td);
            FormalDiffeo lhs = compose(fam.at(s), fam.at(t), N);
            FormalDiffeo rhs = fam.at(s + t);
            for (int i = 0; i < 2; ++i)
                if (!(lhs.comp[i] == rhs.comp[i].truncated(N))) return false;
        }
    }
    return true;
}

bool unit_families_exact() {
    auto r = RingSpec::make({"x", "y"});
    const int N = 10;
    for (const char* s : {"x^3 + y^4", "x^5 + y^5 + x^2*y^2"}) {
        Poly f = parse_poly(s, r);

        TimeDiffeo hamflow = exp_field(hamiltonian(f), N);
        UnitFamily uh = interpolate_unit(hamflow, f, N);
        if (!(uh.g == TimePoly(Poly::constant(r, Rational(1))))) return false;

        TimeDiffeo eulflow = exp_field(f_times_euler(f), N);
        UnitFamily ue = interpolate_unit(eulflow, f, N);
        // the defining identity holds in Q[t], not merely at sampled times
        TimePoly lhs = mul_trunc(ue.g, TimePoly(f), N);
        TimePoly rhs = compose(f, eulflow.comp, N);
        if (!(lhs == rhs)) return false;
        if (ue.g == TimePoly(Poly::constant(r, Rational(1)))) return false;
    }
    return true;
}

bool generated_equivalences_certify() {
    std::mt19937 rng(4711);
    for (const Germ& g : kCorpus) {
        Poly f = germ_poly(g);
        const RingPtr& r = f.ring();
        int N = r->nvars() == 3 ? 8 : 10;
        for (int rep = 0; rep < 5; ++rep) {
            VectorField v = random_tangent_field(f, rng);
            FormalDiffeo phi = exp_field(v, N).at(Rational(1));
            VolumeForm wp = VolumeForm::make(top_unit_form(r, rng), N);
            VolumeForm w = VolumeForm::make(pullback(phi, wp.form, N), N);
            ConverseReport res = verify_converse(f, w, wp, phi, N);
            if (!res.equivalence_residual_zero || !res.gap_exact ||
                !res.class_zero)
                return false;
            if (!(exterior_derivative(res.alpha) == w.form - wp.form))
                return false;
        }
    }
    return true;
}

bool kernel_class_survives_perturbation() {
    Poly f = germ_poly(kCorpus.back());
    const CohomologyReport& c = corpus_reports().back();
    if (c.kernel_basis.size() != 1) return false;
    PForm a = c.kernel_basis[0];
    if (givental_class_is_zero(f, a).zero) return false;
    std::mt19937 rng(99);
    for (int rep = 0; rep < 10; ++rep) {
        Poly h = random_poly(f.ring(), rng, 5, 1);
        PForm dh = exterior_derivative(PForm::term(f.ring(), h, {}));
        if (!givental_class_is_zero(f, dh).zero) return false;
        if (givental_class_is_zero(f, a + dh).zero) return false;
    }
    return true;
}

bool homotopy_operator_inverts_d() {
    std::mt19937 rng(31337);
    const int N = 10;
    for (auto vars : {std::vector<std::string>{"x", "y"}, {"x", "y", "z"}}) {
        auto r = RingSpec::make(vars);
        int nv = r->nvars();
        for (int p = 1; p <= nv; ++p) {
            for (int rep = 0; rep < 200; ++rep) {
                PForm w = PForm::zero(r, p);
                if (p < nv) {
                    // closed by construction
                    PForm pre = PForm::zero(r, p - 1);
                    for (const IndexTuple& idx : index_tuples(nv, p - 1))
                        pre.add_term(idx, random_poly(r, rng, N, 0));
                    w = exterior_derivative(pre).truncated(N);
                } else {
                    for (const IndexTuple& idx : index_tuples(nv, p))
                        w.add_term(idx, random_poly(r, rng, N - 1, 0));
                }
                if (w.is_zero()) continue;
                PForm k = poincare_primitive(w);
                if (!(exterior_derivative(k) == w)) return false;
            }
        }
    }
    return true;
}

// Strips the volatile timing line; everything else must be byte-identical.
std::string stripped_json(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.find("\"timing_ms\"") == std::string::npos) out << line << '\n';
    return out.str();
}

bool repeated_runs_identical(const std::string& germcalc, const fs::path& fixdir) {
    std::vector<fs::path> fixtures;
    for (const auto& e : fs::directory_iterator(fixdir))
        if (e.path().extension() == ".job") fixtures.push_back(e.path());
    if (fixtures.empty()) return false;
    std::sort(fixtures.begin(), fixtures.end());

    fs::path tmp = fs::temp_directory_path();
    fs::path ja = tmp / "germ_accept_a.json";
    fs::path jb = tmp / "germ_accept_b.json";
    for (const fs::path& fx : fixtures) {
        std::string cmd = fx.filename().string();
        cmd = cmd.substr(0, cmd.find('.'));
        for (const fs::path& out : {ja, jb}) {
            std::string line = "'" + germcalc + "' " + cmd + " '" + fx.string() +
                               "' --json '" + out.string() + "' >/dev/null 2>&1";
            int rc = std::system(line.c_str());
            if (rc == -1 || !WIFEXITED(rc) || WEXITSTATUS(rc) != 0) return false;
        }
        std::string a = stripped_json(ja);
        std::string b = stripped_json(jb);
        if (a.empty() || a != b) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <germcalc> <fixture dir>\n";
        return 2;
    }
    std::string germcalc = argv[1];
    fs::path fixdir = argv[2];

    using Check = std::function<bool()>;
    std::vector<std::pair<std::string, Check>> checks = {
        {"quasihomogeneous corpus: mu == tau, gradient membership, kernel 0",
         quasihomogeneous_corpus_invariants},
        {"x^5+y^5+x^2*y^2: (mu, tau, d) = (11, 10, 1), kernel dimension 1",
         wall_case_dimensions},
        {"brieskorn quotient dimension equals milnor number on the corpus",
         brieskorn_rank_is_milnor},
        {"kernel + deformation dimensions add up on the corpus",
         dimension_count_consistent},
        {"log/exp round trips, endpoints, and group law exact at order 8",
         interpolation_round_trips},
        {"unit families: hamiltonian unit is 1, euler multiple exact in Q[t]",
         unit_families_exact},
        {"generated volume equivalences certify with exact primitives",
         generated_equivalences_certify},
        {"kernel representative class nonzero, stable under exact perturbation",
         kernel_class_survives_perturbation},
        {"homotopy operator inverts d on closed forms",
         homotopy_operator_inverts_d},
        {"repeated runs produce identical reports",
         [&] { return repeated_runs_identical(germcalc, fixdir); }},
    };

    int failed = 0;
    for (auto& [name, fn] : checks) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            std::cout << "FAIL  " << name << "  (" << e.what() << ")\n";
            ++failed;
            continue;
        }
        std::cout << (ok ? "pass  " : "FAIL  ") << name << "\n";
        if (!ok) ++failed;
    }
    if (failed) std::cout << failed << " of " << checks.size() << " checks failed\n";
    return failed ? 1 : 0;
}
