#include "hsz/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "hsz/szpiro.hpp"

namespace hsz {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

void print_angles(const BraidWord& w, int genus, const std::string& csv_path, std::ostream& out) {
    const PolarContext ctx(genus);
    const LiftedElement lifted = lift_word(w, genus, ctx);
    out << std::setprecision(12);
    out << "word: " << (w.empty() ? "(identity)" : w.to_string()) << '\n';
    out << "genus: " << genus << '\n';
    out << "winding: " << lifted.winding() << '\n';
    out << "winding/pi: " << lifted.winding() / std::numbers::pi << '\n';

    const SympMatrix m = sigma(w, genus);
    try {
        const auto angles = elliptic_log_angles(m, ctx);
        out << "elliptic angles:";
        for (double a : angles) out << ' ' << a;
        out << '\n';
        out << "displacement angle (elliptic): " << displacement_angle_elliptic(m, ctx) << '\n';
    } catch (const Unsupported& e) {
        out << "displacement angle (elliptic): n/a (" << e.what() << ")\n";
    }

    bool commuting_positive = true;
    std::vector<NilpotentLog::Term> terms;
    const ChainBasis chain = chain_classes(genus);
    for (const auto& l : w.letters()) {
        if (l.sign < 0) commuting_positive = false;
        for (const auto& t : terms) {
            if (pairing(t.cls, chain[l.index]) != 0) commuting_positive = false;
        }
        terms.push_back({chain[l.index], 1.0});
    }
    if (commuting_positive) {
        out << "displacement angle (trace): " << displacement_angle_trace(NilpotentLog(genus, terms), ctx) << '\n';
    } else {
        out << "displacement angle (trace): n/a (not a product of commuting right twists)\n";
    }

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw InvalidInput("cannot write " + csv_path);
        csv << std::setprecision(17);
        lifted.write_phase_csv(csv);
        out << "phase track written to " << csv_path << '\n';
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Checks the N <= (4g+2) D bound for hyperelliptic Lefschetz fibrations"};
    app.require_subcommand(1);

    std::string file;
    double tol = 1e-6;
    bool as_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "Verify a fibration file");
    verify_cmd->add_option("file", file, "Fibration JSON file")->required();
    verify_cmd->add_option("--tol", tol, "Winding tolerance");
    verify_cmd->add_flag("--json", as_json, "Print the report as JSON");

    std::string word;
    int genus = 1;
    std::string csv_path;
    auto* angle_cmd = app.add_subcommand("angle", "Winding and displacement angles of a braid word");
    angle_cmd->add_option("word", word, "Braid word, e.g. \"t1 t2 T1\"")->required();
    angle_cmd->add_option("--genus,-g", genus, "Fiber genus")->required();
    angle_cmd->add_option("--csv", csv_path, "Dump the tracked phase as CSV");

    auto* rep_cmd = app.add_subcommand("rep", "Integral symplectic matrix of a braid word");
    rep_cmd->add_option("word", word, "Braid word")->required();
    rep_cmd->add_option("--genus,-g", genus, "Fiber genus")->required();

    std::string out_dir;
    auto* examples_cmd = app.add_subcommand("examples", "Write example fibration files");
    examples_cmd->add_option("--genus,-g", genus, "Fiber genus (1..4)")->required();
    examples_cmd->add_option("--out", out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (verify_cmd->parsed()) {
            const FibrationSpec spec = load_fibration(file);
            const VerificationReport report = verify(spec, tol);
            out << (as_json ? report.to_json() : report.to_text());
            return report.pass ? kExitPass : kExitFail;
        }
        if (angle_cmd->parsed()) {
            if (genus < 1) throw InvalidInput("genus must be >= 1");
            print_angles(parse_word(word, 2 * genus + 2), genus, csv_path, out);
            return kExitPass;
        }
        if (rep_cmd->parsed()) {
            if (genus < 1) throw InvalidInput("genus must be >= 1");
            out << sigma(parse_word(word, 2 * genus + 2), genus).to_string() << '\n';
            return kExitPass;
        }
        if (examples_cmd->parsed()) {
            const auto examples = example_fibrations(genus);
            if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
            for (const auto& ex : examples) {
                if (out_dir.empty()) {
                    out << "# " << ex.name << '\n' << fibration_to_json(ex.spec);
                    continue;
                }
                const auto path = std::filesystem::path(out_dir) /
                                  ("ex_g" + std::to_string(genus) + "_" + ex.name + ".json");
                std::ofstream f(path);
                if (!f) throw InvalidInput("cannot write " + path.string());
                f << fibration_to_json(ex.spec);
                out << path.string() << '\n';
            }
            return kExitPass;
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const TrackingError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace hsz
