#include "hsz/szpiro.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace hsz {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_twist(const TwistSpec& t, int genus) {
    if (t.gen < 1 || t.gen > 2 * genus + 1) {
        throw InvalidInput("twist generator " + std::to_string(t.gen) + " out of range 1.." +
                           std::to_string(2 * genus + 1));
    }
    if (t.conj.strands() != 2 * genus + 2) {
        throw InvalidInput("twist conjugator lives on " + std::to_string(t.conj.strands()) +
                           " strands, expected " + std::to_string(2 * genus + 2));
    }
}

template <typename T>
T get_field(const nlohmann::json& obj, const char* key, const char* what) {
    if (!obj.contains(key)) throw InvalidInput(std::string("missing field '") + key + "' in " + what);
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidInput(std::string("field '") + key + "' in " + what + " has the wrong type");
    }
}

}  // namespace

BraidWord TwistSpec::word() const {
    return conj * BraidWord::generator(conj.strands(), gen) * conj.inverse();
}

int FibrationSpec::N() const {
    int n = 0;
    for (const auto& f : fibers) n += static_cast<int>(f.size());
    return n;
}

int FibrationSpec::D() const { return static_cast<int>(fibers.size()); }

BraidWord FibrationSpec::monodromy_word() const {
    BraidWord mu(2 * genus + 2);
    for (const auto& fiber : fibers) {
        for (const auto& t : fiber) {
            check_twist(t, genus);
            mu *= t.word();
        }
    }
    return mu;
}

// ---------------------------------------------------------------------------
// File format

FibrationSpec parse_fibration(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed fibration file: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("fibration file must be a JSON object");

    FibrationSpec spec;
    spec.genus = get_field<int>(doc, "genus", "fibration");
    if (spec.genus < 1) throw InvalidInput("genus must be >= 1, got " + std::to_string(spec.genus));
    const int strands = 2 * spec.genus + 2;

    if (!doc.contains("fibers") || !doc["fibers"].is_array()) {
        throw InvalidInput("field 'fibers' must be an array of fibers");
    }
    for (const auto& fiber : doc["fibers"]) {
        if (!fiber.is_array()) throw InvalidInput("each fiber must be an array of twists");
        std::vector<TwistSpec> twists;
        for (const auto& twist : fiber) {
            if (!twist.is_object()) throw InvalidInput("each twist must be an object");
            TwistSpec t{get_field<int>(twist, "gen", "twist"), BraidWord(strands)};
            if (twist.contains("conj")) t.conj = parse_word(get_field<std::string>(twist, "conj", "twist"), strands);
            check_twist(t, spec.genus);
            twists.push_back(std::move(t));
        }
        spec.fibers.push_back(std::move(twists));
    }
    return spec;
}

FibrationSpec load_fibration(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open fibration file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fibration(buf.str());
}

std::string fibration_to_json(const FibrationSpec& spec) {
    ordered_json doc;
    doc["genus"] = spec.genus;
    doc["fibers"] = ordered_json::array();
    for (const auto& fiber : spec.fibers) {
        ordered_json f = ordered_json::array();
        for (const auto& t : fiber) {
            ordered_json tw;
            tw["gen"] = t.gen;
            if (!t.conj.empty()) tw["conj"] = t.conj.to_string();
            f.push_back(tw);
        }
        doc["fibers"].push_back(f);
    }
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Validation and verification

std::vector<ValidationIssue> validate(const FibrationSpec& spec) {
    std::vector<ValidationIssue> issues;
    for (std::size_t j = 0; j < spec.fibers.size(); ++j) {
        const int fiber = static_cast<int>(j);
        std::vector<LatticeVector> classes;
        for (const auto& t : spec.fibers[j]) {
            try {
                check_twist(t, spec.genus);
            } catch (const InvalidInput& e) {
                issues.push_back({fiber, e.what()});
                continue;
            }
            classes.push_back(conjugated_class(t.conj, t.gen, spec.genus));
            if (classes.back().is_zero()) {
                issues.push_back({fiber, "vanishing class of twist t" + std::to_string(t.gen) + " is zero"});
            }
        }
        for (std::size_t a = 0; a < classes.size(); ++a) {
            for (std::size_t b = a + 1; b < classes.size(); ++b) {
                const Integer p = pairing(classes[a], classes[b]);
                if (p != 0) {
                    issues.push_back({fiber, "theta(" + classes[a].to_string() + ", " + classes[b].to_string() +
                                                 ") = " + p.get_str() + " != 0"});
                }
            }
        }
    }
    return issues;
}

double predicted_winding(int genus, std::int64_t N) {
    return -static_cast<double>(genus) * std::numbers::pi * static_cast<double>(N) / (4.0 * genus + 2.0);
}

VerificationReport verify(const FibrationSpec& spec, double tolerance) {
    if (spec.genus < 1) throw InvalidInput("genus must be >= 1");
    const int g = spec.genus;
    const PolarContext ctx(g);

    VerificationReport r;
    r.genus = g;
    r.N = spec.N();
    r.D = spec.D();
    r.bound_ok = static_cast<std::int64_t>(r.N) <= static_cast<std::int64_t>(4 * g + 2) * r.D;

    const BraidWord mu = spec.monodromy_word();
    r.sigma_identity = sigma(mu, g).is_identity();
    r.winding = lift_word(mu, g, ctx).winding();
    r.winding_predicted = predicted_winding(g, r.N);
    r.winding_ok = std::abs(r.winding - r.winding_predicted) < tolerance;

    bool all_commuting = true;
    for (const auto& fiber : spec.fibers) {
        FiberRecord rec;
        rec.size = static_cast<int>(fiber.size());
        std::vector<LatticeVector> classes;
        for (const auto& t : fiber) classes.push_back(conjugated_class(t.conj, t.gen, g));
        for (std::size_t a = 0; a < classes.size(); ++a) {
            if (classes[a].is_zero()) rec.nonseparating_ok = false;
            for (std::size_t b = a + 1; b < classes.size(); ++b) {
                if (pairing(classes[a], classes[b]) != 0) rec.commuting_ok = false;
            }
        }
        if (rec.commuting_ok) {
            std::vector<NilpotentLog::Term> terms;
            for (auto& c : classes) terms.push_back({std::move(c), 1.0});
            const double da = displacement_angle_trace(NilpotentLog(g, std::move(terms)), ctx);
            rec.da_trace = da;
            rec.lemma_range_ok = da >= -std::numbers::pi && da <= 0.0;
        } else {
            rec.lemma_range_ok = false;
        }
        all_commuting = all_commuting && rec.commuting_ok;
        r.fibers.push_back(rec);
    }

    r.pass = r.bound_ok && r.sigma_identity && r.winding_ok && all_commuting;
    return r;
}

std::string VerificationReport::to_json() const {
    ordered_json doc;
    doc["genus"] = genus;
    doc["N"] = N;
    doc["D"] = D;
    doc["bound_ok"] = bound_ok;
    doc["sigma_identity"] = sigma_identity;
    doc["winding"] = winding;
    doc["winding_predicted"] = winding_predicted;
    doc["winding_ok"] = winding_ok;
    doc["fibers"] = ordered_json::array();
    for (const auto& f : fibers) {
        ordered_json rec;
        rec["size"] = f.size;
        rec["commuting_ok"] = f.commuting_ok;
        rec["nonseparating_ok"] = f.nonseparating_ok;
        rec["da_trace"] = f.da_trace ? ordered_json(*f.da_trace) : ordered_json(nullptr);
        rec["lemma_range_ok"] = f.lemma_range_ok;
        doc["fibers"].push_back(rec);
    }
    doc["verdict"] = verdict();
    return doc.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << std::setprecision(12);
    const int factor = 4 * genus + 2;
    os << "genus " << genus << ": N = " << N << " vanishing cycles, D = " << D << " singular fibers\n";
    os << "  bound N <= " << factor << " D: " << N << " <= " << static_cast<std::int64_t>(factor) * D << "  "
       << (bound_ok ? "ok" : "VIOLATED") << '\n';
    os << "  sigma(monodromy) = I: " << (sigma_identity ? "yes" : "no") << '\n';
    os << "  winding " << winding << " vs predicted " << winding_predicted << "  " << (winding_ok ? "ok" : "MISMATCH")
       << '\n';
    for (std::size_t j = 0; j < fibers.size(); ++j) {
        const auto& f = fibers[j];
        os << "  fiber " << j << ": size " << f.size << ", commuting " << (f.commuting_ok ? "yes" : "no")
           << ", nonseparating " << (f.nonseparating_ok ? "yes" : "no") << ", da_trace ";
        if (f.da_trace) {
            os << *f.da_trace;
        } else {
            os << "n/a";
        }
        if (!f.lemma_range_ok) os << "  (warning: outside [-pi, 0])";
        os << '\n';
    }
    os << "verdict: " << verdict() << '\n';
    os << "note: kernel membership is certified by necessary conditions only "
          "(sigma = I and the winding identity).\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Examples

FibrationSpec group_commuting_runs(int genus, const std::vector<TwistSpec>& twists) {
    FibrationSpec spec{genus, {}};
    for (const auto& t : twists) {
        bool fits = !spec.fibers.empty();
        if (fits) {
            for (const auto& other : spec.fibers.back()) {
                if (std::abs(other.gen - t.gen) < 2 || !(other.conj == t.conj)) {
                    fits = false;
                    break;
                }
            }
        }
        if (fits) {
            spec.fibers.back().push_back(t);
        } else {
            spec.fibers.push_back({t});
        }
    }
    return spec;
}

std::vector<ExampleFibration> example_fibrations(int genus) {
    if (genus < 1 || genus > 4) throw InvalidInput("examples are generated for 1 <= genus <= 4");
    const int strands = 2 * genus + 2;
    const BraidWord full_twist = kernel_generators(genus).r2;

    std::vector<TwistSpec> twists;
    for (const auto& l : full_twist.letters()) twists.push_back({l.index, BraidWord(strands)});

    FibrationSpec singletons{genus, {}};
    for (const auto& t : twists) singletons.fibers.push_back({t});

    const BraidWord conjugator = parse_word("t2 T1", strands);
    std::vector<TwistSpec> conjugated;
    for (const auto& t : twists) conjugated.push_back({t.gen, conjugator});

    return {
        {"singletons", singletons},
        {"grouped", group_commuting_runs(genus, twists)},
        {"conjugated", group_commuting_runs(genus, conjugated)},
    };
}

}  // namespace hsz
