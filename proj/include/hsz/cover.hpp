#pragma once

#include <Eigen/Dense>

#include <functional>
#include <iosfwd>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hsz/artin.hpp"
#include "hsz/symprep.hpp"

namespace hsz {

using RealMatrix = Eigen::MatrixXd;

/// Phase tracking failed to converge (subdivision depth exhausted or a
/// non-finite matrix was produced).
class TrackingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical configuration for lifting and angle evaluation. The compact
/// subgroup is the one fixed by the standard complex structure
/// J0: e_k -> f_k, f_k -> -e_k.
struct PolarContext {
    explicit PolarContext(int genus, double eps = 1e-8);

    int genus;
    /// Internal tolerance for symplectic / cone / commutation checks.
    double eps;
    /// Eigenvalue clustering, unit-circle and semisimplicity tolerance.
    double spectral_tol = 1e-6;
    /// An accepted tracking step changes the phase by less than this.
    double step_bound = std::numbers::pi / 2;
    /// Uniform subdivisions of every segment before adaptive bisection.
    int base_steps = 4;
    int max_depth = 40;

    RealMatrix complex_structure() const;

    friend bool operator==(const PolarContext&, const PolarContext&) = default;
};

RealMatrix to_real(const SympMatrix& m);
/// Gram matrix J of theta as a real matrix.
RealMatrix pairing_form(int genus);

/// Phase in (-pi, pi] of det of the unitary polar factor of M, read as a
/// g x g complex matrix A + iB from its block form [[A, -B], [B, A]].
double polar_phase(const RealMatrix& m, const PolarContext& ctx);

/// Same phase computed from the complex-linear part (1/2)((A+D) + i(C-B)) of
/// M = [[A, B], [C, D]], without a polar decomposition. Used by the tracker.
double complex_linear_phase(const RealMatrix& m, int genus);

/// One step of a path in the universal cover: t -> T_a(t * extent), t in [0,1],
/// left-translated by the endpoint of everything before it.
struct PathSegment {
    LatticeVector cls;
    double extent = 1.0;
};

/// Element of the universal cover of Sp(2g, R), represented by a path from
/// the identity made of transvection segments.
class LiftedElement {
public:
    /// Lifts the path given by `segments` and tracks its winding.
    LiftedElement(std::vector<PathSegment> segments, const PolarContext& ctx);

    int genus() const noexcept { return ctx_.genus; }
    const PolarContext& context() const noexcept { return ctx_; }
    const std::vector<PathSegment>& segments() const noexcept { return segments_; }
    const RealMatrix& endpoint() const noexcept { return endpoint_; }
    /// Total unwrapped phase of the unitary determinant along the path.
    double winding() const noexcept { return winding_; }

    /// Writes the tracked (t, phase) samples as CSV, one block per segment.
    void write_phase_csv(std::ostream& os) const;

private:
    friend LiftedElement compose(const LiftedElement& x, const LiftedElement& y);

    LiftedElement() = default;

    PolarContext ctx_{1};
    std::vector<PathSegment> segments_;
    RealMatrix endpoint_;
    double winding_ = 0.0;
    double last_phase_ = 0.0;
};

/// Canonical lift: every positive letter t_i becomes the straight segment
/// T_{v_i}(t), t in [0,1]; negative letters run it backwards.
LiftedElement lift_word(const BraidWord& w, int genus, const PolarContext& ctx);
LiftedElement lift_word(const BraidWord& w, const PolarContext& ctx);
LiftedElement compose(const LiftedElement& x, const LiftedElement& y);
LiftedElement invert(const LiftedElement& x);

/// Rotation angles, one per theta-positive invariant plane, each in (-2pi, 0].
/// Requires M semisimple with every eigenvalue on the unit circle.
std::vector<double> elliptic_log_angles(const RealMatrix& m, const PolarContext& ctx);
std::vector<double> elliptic_log_angles(const SympMatrix& m, const PolarContext& ctx);

/// Mean of the elliptic log angles; lies in (-2pi, 0].
double displacement_angle_elliptic(const SympMatrix& m, const PolarContext& ctx);
double displacement_angle_elliptic(const RealMatrix& m, const PolarContext& ctx);

/// x = sum_i s_i x_{a_i} with x_a(v) = theta(a, v) a, for pairwise
/// theta-orthogonal classes a_i. Such x squares to zero and exponentiates to
/// the product of the commuting transvections T_{a_i}(s_i).
class NilpotentLog {
public:
    struct Term {
        LatticeVector cls;
        double weight = 1.0;
    };

    explicit NilpotentLog(int genus, std::vector<Term> terms = {});

    int genus() const noexcept { return genus_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    RealMatrix matrix() const;
    /// I + x.
    RealMatrix exp() const;

private:
    int genus_;
    std::vector<Term> terms_;
};

/// Gram matrix of gamma_x(u, v) := theta(u, x v) in the standard basis.
RealMatrix gamma_gram(const RealMatrix& x, int genus);

/// tr(gamma_x) / 2g in the standard basis metric; always <= 0.
double displacement_angle_trace(const NilpotentLog& x, const PolarContext& ctx);

/// True iff gamma_x is negative semidefinite (eigenvalues <= eps).
bool in_nonpositive_cone(const RealMatrix& x, const PolarContext& ctx);

}  // namespace hsz
