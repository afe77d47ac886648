#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hsz/artin.hpp"
#include "hsz/cover.hpp"
#include "hsz/symprep.hpp"

namespace hsz {

/// Right Dehn twist conj * t_gen * conj^{-1}.
struct TwistSpec {
    int gen = 1;
    BraidWord conj{4};

    BraidWord word() const;
};

/// Monodromy of a hyperelliptic Lefschetz fibration: ordered singular fibers,
/// each an ordered list of right twists about its vanishing cycles.
struct FibrationSpec {
    int genus = 1;
    std::vector<std::vector<TwistSpec>> fibers;

    /// Number of vanishing cycles.
    int N() const;
    /// Number of singular fibers.
    int D() const;
    /// All twists flattened in fiber order, conjugators expanded.
    BraidWord monodromy_word() const;
};

/// Throws InvalidInput on malformed content.
FibrationSpec parse_fibration(const std::string& json_text);
FibrationSpec load_fibration(const std::filesystem::path& path);
std::string fibration_to_json(const FibrationSpec& spec);

struct ValidationIssue {
    int fiber = 0;
    std::string message;
};

/// Homological checks for the bound's hypotheses: vanishing classes inside
/// one fiber pairwise theta-orthogonal, every class nonzero.
std::vector<ValidationIssue> validate(const FibrationSpec& spec);

struct FiberRecord {
    int size = 0;
    bool commuting_ok = true;
    bool nonseparating_ok = true;
    /// Absent when the fiber's classes do not commute.
    std::optional<double> da_trace;
    bool lemma_range_ok = true;
};

struct VerificationReport {
    int genus = 1;
    int N = 0;
    int D = 0;
    bool bound_ok = false;
    bool sigma_identity = false;
    double winding = 0.0;
    double winding_predicted = 0.0;
    bool winding_ok = false;
    std::vector<FiberRecord> fibers;
    bool pass = false;

    std::string verdict() const { return pass ? "PASS" : "FAIL"; }
    std::string to_json() const;
    std::string to_text() const;
};

/// Predicted winding -g pi N / (4g+2) of the lifted monodromy word.
double predicted_winding(int genus, std::int64_t N);

VerificationReport verify(const FibrationSpec& spec, double tolerance = 1e-6);

struct ExampleFibration {
    std::string name;
    FibrationSpec spec;
};

/// Fibrations built from h^{2g+2}: one twist per fiber, greedy grouping of
/// adjacent commuting twists, and a globally conjugated copy. 1 <= g <= 4.
std::vector<ExampleFibration> example_fibrations(int genus);

/// Greedily merges adjacent twists whose generators are pairwise at distance
/// >= 2 (and whose conjugators agree) into one fiber.
FibrationSpec group_commuting_runs(int genus, const std::vector<TwistSpec>& twists);

}  // namespace hsz
