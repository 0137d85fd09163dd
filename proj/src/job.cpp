#include "germ/job.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "germ/cohomology.hpp"
#include "germ/error.hpp"
#include "germ/expr.hpp"
#include "germ/interp.hpp"
#include "germ/singularity.hpp"

namespace germ {

using json = nlohmann::ordered_json;

const char* command_name(Command c) {
    switch (c) {
        case Command::Invariants: return "invariants";
        case Command::Cohomology: return "cohomology";
        case Command::Interpolate: return "interpolate";
        case Command::ClassQuery: return "class";
        case Command::VerifyConverse: return "verify-converse";
    }
    return "?";
}

std::optional<Command> command_from_name(const std::string& name) {
    for (Command c : {Command::Invariants, Command::Cohomology, Command::Interpolate,
                      Command::ClassQuery, Command::VerifyConverse})
        if (name == command_name(c)) return c;
    return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

struct RawEntry {
    int line = 0;       // first physical line of the logical line
    std::string text;   // value with the `key =` prefix blanked out, newlines kept
};

// Scans the document into key -> entry. The value text keeps the exact
// line/column layout of the source (prefix replaced by spaces, continuation
// backslashes by spaces), so expression errors point into the document.
std::map<std::string, RawEntry> scan_document(const std::string& doc) {
    std::vector<std::string> physical;
    {
        std::string cur;
        for (char c : doc) {
            if (c == '\n') {
                physical.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        physical.push_back(cur);
    }
    for (auto& line : physical) {
        std::size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
    }

    std::map<std::string, RawEntry> out;
    std::size_t i = 0;
    while (i < physical.size()) {
        int first = static_cast<int>(i) + 1;
        std::string text = physical[i];
        ++i;
        for (;;) {
            std::size_t last = text.find_last_not_of(" \t\r");
            if (last == std::string::npos || text[last] != '\\') break;
            if (i >= physical.size())
                throw ParseError("line " + std::to_string(static_cast<int>(i)) +
                                 ": continuation at end of document");
            text[last] = ' ';
            text += "\n" + physical[i];
            ++i;
        }
        if (trim(text).empty()) continue;
        std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(first) + ": expected `key = value`");
        std::string key = trim(text.substr(0, eq));
        if (!is_identifier(key))
            throw ParseError("line " + std::to_string(first) + ": bad key `" + key + "`");
        if (out.count(key))
            throw ParseError("line " + std::to_string(first) + ": duplicate key `" + key + "`");
        for (std::size_t k = 0; k <= eq; ++k) text[k] = ' ';
        out[key] = RawEntry{first, text};
    }
    return out;
}

int parse_trunc(const RawEntry& e) {
    std::string v = trim(e.text);
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("line " + std::to_string(e.line) +
                         ": trunc must be a positive integer");
    if (v.size() > 4) throw ParseError("line " + std::to_string(e.line) + ": trunc too large");
    int n = std::stoi(v);
    if (n < 1 || n > 1000)
        throw ParseError("line " + std::to_string(e.line) + ": trunc out of range [1, 1000]");
    return n;
}

RingPtr parse_vars(const RawEntry& e) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : e.text) {
        if (c == ',') {
            names.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    names.push_back(trim(cur));
    for (const auto& n : names) {
        if (!is_identifier(n))
            throw ParseError("line " + std::to_string(e.line) + ": bad variable name `" + n +
                             "`");
        if (n == "t")
            throw ParseError("line " + std::to_string(e.line) +
                             ": `t` is reserved for one-parameter families");
    }
    for (const auto& n : names)
        if (n.size() > 1 && n[0] == 'd' &&
            std::find(names.begin(), names.end(), n.substr(1)) != names.end())
            throw ParseError("line " + std::to_string(e.line) + ": variable `" + n +
                             "` collides with the differential of `" + n.substr(1) + "`");
    return RingSpec::make(names);
}

std::vector<Poly> parse_components(const RawEntry& e, const RingPtr& ring,
                                   const char* what) {
    auto comps = parse_poly_list(e.text, ring, e.line);
    if (static_cast<int>(comps.size()) != ring->nvars())
        throw ParseError("line " + std::to_string(e.line) + ": " + what + " needs " +
                         std::to_string(ring->nvars()) + " components, got " +
                         std::to_string(comps.size()));
    return comps;
}

const char* const kAllKeys[] = {"vars", "f", "trunc", "phi", "vfield",
                                "omega", "omega_prime", "alpha"};

struct KeySet {
    std::vector<std::string> required;
    std::vector<std::string> optional;

    bool allows(const std::string& k) const {
        return std::find(required.begin(), required.end(), k) != required.end() ||
               std::find(optional.begin(), optional.end(), k) != optional.end();
    }
};

KeySet keys_for(Command c) {
    switch (c) {
        case Command::Invariants: return {{"vars", "f"}, {}};
        case Command::Cohomology: return {{"vars", "f"}, {}};
        case Command::Interpolate: return {{"vars", "trunc"}, {"phi", "vfield"}};
        case Command::ClassQuery: return {{"vars", "f", "alpha"}, {"trunc"}};
        case Command::VerifyConverse:
            return {{"vars", "f", "trunc", "phi", "omega", "omega_prime"}, {}};
    }
    return {};
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (const auto& x : v) {
        if (!s.empty()) s += sep;
        s += x;
    }
    return s;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string render_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows) {
        os << k;
        for (std::size_t i = k.size(); i < w + 2; ++i) os << ' ';
        os << v << "\n";
    }
    return os.str();
}

}  // namespace

JobSpec parse_job(const std::string& document, Command command) {
    auto entries = scan_document(document);
    KeySet ks = keys_for(command);

    for (const auto& [k, e] : entries) {
        if (std::find(std::begin(kAllKeys), std::end(kAllKeys), k) == std::end(kAllKeys))
            throw ParseError("line " + std::to_string(e.line) + ": unknown key `" + k + "`");
        if (!ks.allows(k))
            throw ParseError("line " + std::to_string(e.line) + ": key `" + k +
                             "` is not used by `" + command_name(command) + "`");
    }
    for (const auto& k : ks.required)
        if (!entries.count(k))
            throw ParseError(std::string("`") + command_name(command) + "` requires key `" +
                             k + "`");
    if (command == Command::Interpolate) {
        int have = entries.count("phi") + entries.count("vfield");
        if (have != 1)
            throw ParseError("`interpolate` needs exactly one of `phi` or `vfield`");
    }

    JobSpec job;
    job.command = command;
    job.ring = parse_vars(entries.at("vars"));
    if (entries.count("trunc")) job.trunc = parse_trunc(entries.at("trunc"));
    if (entries.count("f")) {
        const auto& e = entries.at("f");
        job.f = parse_poly(e.text, job.ring, e.line);
    }
    if (entries.count("phi")) {
        const auto& e = entries.at("phi");
        FormalDiffeo d{job.ring, parse_components(e, job.ring, "phi"),
                       job.trunc.value_or(0)};
        if (!d.fixes_origin())
            throw InvalidInputError("phi must fix the origin (line " +
                                    std::to_string(e.line) + ")");
        job.phi = std::move(d);
    }
    if (entries.count("vfield")) {
        const auto& e = entries.at("vfield");
        job.vfield = VectorField{job.ring, parse_components(e, job.ring, "vfield")};
    }
    if (entries.count("omega")) {
        const auto& e = entries.at("omega");
        job.omega = parse_form(e.text, job.ring, e.line);
    }
    if (entries.count("omega_prime")) {
        const auto& e = entries.at("omega_prime");
        job.omega_prime = parse_form(e.text, job.ring, e.line);
    }
    if (entries.count("alpha")) {
        const auto& e = entries.at("alpha");
        job.alpha = parse_form(e.text, job.ring, e.line);
    }
    return job;
}

RunResult run_job(const JobSpec& job) {
    auto t0 = std::chrono::steady_clock::now();

    json j;
    j["schema"] = 1;
    j["command"] = command_name(job.command);
    json in;
    in["vars"] = job.ring->var_names();
    json res;

    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("command", command_name(job.command));
    rows.emplace_back("vars", join(job.ring->var_names(), ", "));

    int exit_code = 0;

    switch (job.command) {
        case Command::Invariants: {
            in["f"] = job.f->str();
            SingularityReport r = analyze(*job.f);
            res["mu"] = r.mu;
            res["tau"] = r.tau;
            res["d"] = r.d;
            res["quasihomogeneous"] = r.quasihomogeneous;
            rows.emplace_back("f", job.f->str());
            rows.emplace_back("mu", std::to_string(r.mu));
            rows.emplace_back("tau", std::to_string(r.tau));
            rows.emplace_back("d", std::to_string(r.d));
            rows.emplace_back("quasihomogeneous", yesno(r.quasihomogeneous));
            break;
        }
        case Command::Cohomology: {
            in["f"] = job.f->str();
            CohomologyReport r = verify_ses1(*job.f);
            res["mu"] = r.mu;
            res["tau"] = r.tau;
            res["brieskorn_dim"] = r.brieskorn;
            res["kernel_pi_dim"] = r.ker_pi;
            res["stabilized_at"] = r.stabilized_at;
            res["ses1_consistent"] = r.ses1_consistent;
            res["kernel_basis"] = json::array();
            for (const auto& b : r.kernel_basis) res["kernel_basis"].push_back(b.str());
            rows.emplace_back("f", job.f->str());
            rows.emplace_back("mu", std::to_string(r.mu));
            rows.emplace_back("tau", std::to_string(r.tau));
            rows.emplace_back("brieskorn_dim", std::to_string(r.brieskorn));
            rows.emplace_back("kernel_pi_dim", std::to_string(r.ker_pi));
            rows.emplace_back("stabilized_at", std::to_string(r.stabilized_at));
            rows.emplace_back("ses1_consistent", yesno(r.ses1_consistent));
            for (std::size_t i = 0; i < r.kernel_basis.size(); ++i)
                rows.emplace_back("kernel_basis[" + std::to_string(i) + "]",
                                  r.kernel_basis[i].str());
            if (!r.ses1_consistent) exit_code = 1;
            break;
        }
        case Command::Interpolate: {
            int n = *job.trunc;
            in["trunc"] = n;
            TimeDiffeo fam{job.ring, {}, n};
            VectorField gen = VectorField::zero(job.ring);
            if (job.phi) {
                json ph = json::array();
                for (const auto& c : job.phi->comp) ph.push_back(c.str());
                in["phi"] = ph;
                fam = interpolate(*job.phi, n);
                gen = log_diffeo(*job.phi, n);
            } else {
                json vf = json::array();
                for (const auto& c : job.vfield->comp) vf.push_back(c.str());
                in["vfield"] = vf;
                fam = exp_field(*job.vfield, n);
                gen = *job.vfield;
            }
            res["trunc"] = n;
            res["family"] = json::array();
            res["generator"] = json::array();
            for (const auto& c : fam.comp) res["family"].push_back(c.str());
            for (const auto& c : gen.comp) res["generator"].push_back(c.str());
            rows.emplace_back("trunc", std::to_string(n));
            for (int i = 0; i < job.ring->nvars(); ++i)
                rows.emplace_back("family[" + job.ring->var_name(i) + "]",
                                  fam.comp[i].str());
            for (int i = 0; i < job.ring->nvars(); ++i)
                rows.emplace_back("generator[" + job.ring->var_name(i) + "]",
                                  gen.comp[i].str());
            break;
        }
        case Command::ClassQuery: {
            in["f"] = job.f->str();
            in["alpha"] = job.alpha->str();
            if (job.trunc) in["trunc"] = *job.trunc;
            ClassResult c = givental_class_is_zero(*job.f, *job.alpha,
                                                   job.trunc.value_or(0));
            res["class_zero"] = c.zero;
            res["stabilized_at"] = c.stabilized_at;
            rows.emplace_back("f", job.f->str());
            rows.emplace_back("alpha", job.alpha->str());
            rows.emplace_back("class_zero", yesno(c.zero));
            rows.emplace_back("stabilized_at", std::to_string(c.stabilized_at));
            break;
        }
        case Command::VerifyConverse: {
            int n = *job.trunc;
            in["f"] = job.f->str();
            in["trunc"] = n;
            json ph = json::array();
            for (const auto& c : job.phi->comp) ph.push_back(c.str());
            in["phi"] = ph;
            in["omega"] = job.omega->str();
            in["omega_prime"] = job.omega_prime->str();
            VolumeForm w = VolumeForm::make(*job.omega, n);
            VolumeForm wp = VolumeForm::make(*job.omega_prime, n);
            ConverseReport r = verify_converse(*job.f, w, wp, *job.phi, n);
            res["equivalence_residual_zero"] = r.equivalence_residual_zero;
            res["gap_exact"] = r.gap_exact;
            res["class_zero"] = r.class_zero;
            res["stabilized_at"] = r.stabilized_at;
            res["trunc"] = r.trunc;
            res["unit"] = r.unit.str();
            res["alpha"] = r.alpha.str();
            res["alpha_hat"] = r.alpha_hat.str();
            rows.emplace_back("f", job.f->str());
            rows.emplace_back("trunc", std::to_string(r.trunc));
            rows.emplace_back("equivalence_residual_zero",
                              yesno(r.equivalence_residual_zero));
            rows.emplace_back("gap_exact", yesno(r.gap_exact));
            rows.emplace_back("class_zero", yesno(r.class_zero));
            rows.emplace_back("stabilized_at", std::to_string(r.stabilized_at));
            rows.emplace_back("unit", r.unit.str());
            rows.emplace_back("alpha", r.alpha.str());
            rows.emplace_back("alpha_hat", r.alpha_hat.str());
            if (!(r.equivalence_residual_zero && r.gap_exact && r.class_zero))
                exit_code = 1;
            break;
        }
    }

    j["input"] = in;
    j["result"] = res;
    auto dt = std::chrono::steady_clock::now() - t0;
    j["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();

    RunResult out;
    out.exit_code = exit_code;
    out.human = render_table(rows);
    out.json = j.dump(2) + "\n";
    return out;
}

RunResult run_document(const std::string& document, Command command) {
    auto fail = [](int code, const std::string& kind, const char* msg) {
        RunResult r;
        r.exit_code = code;
        r.human = kind + ": " + msg + "\n";
        return r;
    };
    try {
        return run_job(parse_job(document, command));
    } catch (const NonIsolatedError& e) {
        return fail(3, "non-isolated", e.what());
    } catch (const TruncationTooLowError& e) {
        return fail(4, "truncation too low", e.what());
    } catch (const ParseError& e) {
        return fail(2, "parse error", e.what());
    } catch (const NotEquivalentError& e) {
        return fail(2, "input error", e.what());
    } catch (const NotVolumeError& e) {
        return fail(2, "input error", e.what());
    } catch (const NotTangentToIdentityError& e) {
        return fail(2, "input error", e.what());
    } catch (const NotIsotropyError& e) {
        return fail(2, "input error", e.what());
    } catch (const NotIsotropyFamilyError& e) {
        return fail(2, "input error", e.what());
    } catch (const NotClosedError& e) {
        return fail(2, "input error", e.what());
    } catch (const RingMismatchError& e) {
        return fail(2, "input error", e.what());
    } catch (const InvalidInputError& e) {
        return fail(2, "input error", e.what());
    } catch (const Error& e) {
        return fail(1, "consistency alarm", e.what());
    }
}

}  // namespace germ
