#include "hsz/cover.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <string>

namespace hsz {

namespace {

constexpr double kPi = std::numbers::pi;

using ComplexMatrix = Eigen::MatrixXcd;

double wrap(double angle) {
    // into (-pi, pi]
    double a = std::remainder(angle, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

double normalized_arg(std::complex<double> z) {
    double a = std::arg(z);
    if (a < -kPi + 1e-12) a += 2.0 * kPi;
    return a;
}

void check_square(const RealMatrix& m, int genus) {
    if (m.rows() != 2 * genus || m.cols() != 2 * genus) {
        throw InvalidInput("matrix must be " + std::to_string(2 * genus) + "x" + std::to_string(2 * genus));
    }
}

double max_abs(const RealMatrix& m) { return m.cwiseAbs().maxCoeff(); }

RealMatrix class_generator(const LatticeVector& a) {
    // x_a = a a^T J, i.e. x_a(v) = theta(a, v) a
    const int n = a.rank();
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = a[i].get_d();
    return v * (v.transpose() * pairing_form(a.genus()));
}

struct TrackState {
    RealMatrix point;
    double phase = 0.0;
    double winding = 0.0;
};

using Sink = std::function<void(double t, double winding)>;

class SegmentTracker {
public:
    SegmentTracker(const RealMatrix& base, const RealMatrix& velocity, const PolarContext& ctx, const Sink* sink)
        : base_(base), velocity_(velocity), ctx_(ctx), sink_(sink) {}

    double phase_at(double t) const {
        const RealMatrix m = base_ + t * velocity_;
        if (!m.allFinite()) throw TrackingError("non-finite matrix along the tracked path");
        return complex_linear_phase(m, ctx_.genus);
    }

    // Sum of accepted phase increments over [t0, t1].
    double refine(double t0, double p0, double t1, double p1, int depth) const {
        const double whole = wrap(p1 - p0);
        const double tm = 0.5 * (t0 + t1);
        const double pm = phase_at(tm);
        const double left = wrap(pm - p0);
        const double right = wrap(p1 - pm);
        const double bound = ctx_.step_bound;
        if (std::abs(whole) < bound && std::abs(left) < bound && std::abs(right) < bound &&
            std::abs(left + right - whole) < 1e-9) {
            if (sink_) {
                acc_ += left;
                (*sink_)(tm, acc_);
                acc_ += right;
                (*sink_)(t1, acc_);
            }
            return left + right;
        }
        if (depth >= ctx_.max_depth) {
            throw TrackingError("phase tracking did not converge within " + std::to_string(ctx_.max_depth) +
                                " bisections");
        }
        return refine(t0, p0, tm, pm, depth + 1) + refine(tm, pm, t1, p1, depth + 1);
    }

    void set_offset(double winding) const { acc_ = winding; }

private:
    const RealMatrix& base_;
    const RealMatrix& velocity_;
    const PolarContext& ctx_;
    const Sink* sink_;
    mutable double acc_ = 0.0;
};

void advance(TrackState& state, const PathSegment& seg, const PolarContext& ctx, const Sink* sink) {
    if (seg.cls.genus() != ctx.genus) throw InvalidInput("segment class does not match context genus");
    const RealMatrix velocity = seg.extent * (state.point * class_generator(seg.cls));
    const SegmentTracker tracker(state.point, velocity, ctx, sink);
    tracker.set_offset(state.winding);
    if (sink) (*sink)(0.0, state.winding);

    const int steps = std::max(1, ctx.base_steps);
    double t0 = 0.0;
    double p0 = state.phase;
    for (int k = 1; k <= steps; ++k) {
        const double t1 = static_cast<double>(k) / steps;
        const double p1 = tracker.phase_at(t1);
        state.winding += tracker.refine(t0, p0, t1, p1, 0);
        t0 = t1;
        p0 = p1;
    }
    state.point = state.point + velocity;
    state.phase = p0;
}

std::vector<PathSegment> word_segments(const BraidWord& w, int genus) {
    if (w.strands() != 2 * genus + 2) {
        throw InvalidInput("word on " + std::to_string(w.strands()) + " strands does not match genus " +
                           std::to_string(genus));
    }
    const ChainBasis chain = chain_classes(genus);
    std::vector<PathSegment> out;
    out.reserve(w.size());
    for (const auto& l : w.letters()) out.push_back({chain[l.index], static_cast<double>(l.sign)});
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PolarContext::PolarContext(int genus_, double eps_) : genus(genus_), eps(eps_) {
    if (genus < 1) throw InvalidInput("genus must be >= 1");
}

RealMatrix PolarContext::complex_structure() const {
    RealMatrix j0 = RealMatrix::Zero(2 * genus, 2 * genus);
    for (int k = 0; k < genus; ++k) {
        j0(genus + k, k) = 1.0;   // e_k -> f_k
        j0(k, genus + k) = -1.0;  // f_k -> -e_k
    }
    return j0;
}

RealMatrix to_real(const SympMatrix& m) {
    RealMatrix out(m.dim(), m.dim());
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) out(r, c) = m(r, c).get_d();
    }
    return out;
}

RealMatrix pairing_form(int genus) {
    RealMatrix j = RealMatrix::Zero(2 * genus, 2 * genus);
    for (int k = 0; k < genus; ++k) {
        j(k, genus + k) = 1.0;
        j(genus + k, k) = -1.0;
    }
    return j;
}

double polar_phase(const RealMatrix& m, const PolarContext& ctx) {
    const int g = ctx.genus;
    check_square(m, g);
    const RealMatrix j = pairing_form(g);
    const double scale = std::max(1.0, max_abs(m) * max_abs(m));
    if (max_abs(m.transpose() * j * m - j) > ctx.eps * scale) {
        throw InvalidInput("matrix is not symplectic within tolerance");
    }

    // M = W S V^T gives the orthogonal polar factor W V^T; going through M^T M
    // instead squares the condition number.
    const Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RealMatrix u = svd.matrixU() * svd.matrixV().transpose();

    const RealMatrix j0 = ctx.complex_structure();
    if (max_abs(u * j0 - j0 * u) > ctx.spectral_tol) {
        throw InvalidInput("polar factor does not commute with the complex structure");
    }
    const ComplexMatrix c = u.topLeftCorner(g, g).cast<std::complex<double>>() +
                            std::complex<double>(0.0, 1.0) * u.bottomLeftCorner(g, g).cast<std::complex<double>>();
    return normalized_arg(c.determinant());
}

double complex_linear_phase(const RealMatrix& m, int genus) {
    check_square(m, genus);
    const int g = genus;
    const RealMatrix re = 0.5 * (m.topLeftCorner(g, g) + m.bottomRightCorner(g, g));
    const RealMatrix im = 0.5 * (m.bottomLeftCorner(g, g) - m.topRightCorner(g, g));
    const ComplexMatrix c = re.cast<std::complex<double>>() + std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
    return normalized_arg(c.determinant());
}

// ---------------------------------------------------------------------------
// Lifted elements

LiftedElement::LiftedElement(std::vector<PathSegment> segments, const PolarContext& ctx)
    : ctx_(ctx), segments_(std::move(segments)) {
    TrackState state{RealMatrix::Identity(2 * ctx.genus, 2 * ctx.genus), 0.0, 0.0};
    for (const auto& seg : segments_) advance(state, seg, ctx_, nullptr);
    endpoint_ = std::move(state.point);
    winding_ = state.winding;
    last_phase_ = state.phase;
}

void LiftedElement::write_phase_csv(std::ostream& os) const {
    os << "t,phase\n";
    TrackState state{RealMatrix::Identity(2 * ctx_.genus, 2 * ctx_.genus), 0.0, 0.0};
    const Sink sink = [&os](double t, double phase) { os << t << ',' << phase << '\n'; };
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        if (k) os << '\n';
        advance(state, segments_[k], ctx_, &sink);
    }
}

LiftedElement lift_word(const BraidWord& w, int genus, const PolarContext& ctx) {
    if (genus != ctx.genus) throw InvalidInput("genus does not match the polar context");
    return LiftedElement(word_segments(w, genus), ctx);
}

LiftedElement lift_word(const BraidWord& w, const PolarContext& ctx) { return lift_word(w, ctx.genus, ctx); }

LiftedElement compose(const LiftedElement& x, const LiftedElement& y) {
    if (!(x.ctx_ == y.ctx_)) throw InvalidInput("cannot compose lifted elements with different contexts");
    LiftedElement out;
    out.ctx_ = x.ctx_;
    out.segments_ = x.segments_;
    TrackState state{x.endpoint_, x.last_phase_, x.winding_};
    for (const auto& seg : y.segments_) {
        advance(state, seg, out.ctx_, nullptr);
        out.segments_.push_back(seg);
    }
    out.endpoint_ = std::move(state.point);
    out.winding_ = state.winding;
    out.last_phase_ = state.phase;
    return out;
}

LiftedElement invert(const LiftedElement& x) {
    std::vector<PathSegment> reversed;
    reversed.reserve(x.segments().size());
    for (auto it = x.segments().rbegin(); it != x.segments().rend(); ++it) {
        reversed.push_back({it->cls, -it->extent});
    }
    return LiftedElement(std::move(reversed), x.context());
}

// ---------------------------------------------------------------------------
// Elliptic angles

std::vector<double> elliptic_log_angles(const RealMatrix& m, const PolarContext& ctx) {
    const int g = ctx.genus;
    const int n = 2 * g;
    check_square(m, g);
    const double tol = ctx.spectral_tol;
    const double scale = std::max(1.0, max_abs(m));

    const Eigen::EigenSolver<RealMatrix> es(m, false);
    const Eigen::VectorXcd ev = es.eigenvalues();

    std::vector<std::vector<std::complex<double>>> clusters;
    for (int i = 0; i < ev.size(); ++i) {
        auto it = std::find_if(clusters.begin(), clusters.end(),
                               [&](const auto& c) { return std::abs(c.front() - ev(i)) < tol * scale; });
        if (it == clusters.end()) {
            clusters.push_back({ev(i)});
        } else {
            it->push_back(ev(i));
        }
    }

    const ComplexMatrix j = pairing_form(g).cast<std::complex<double>>();
    const ComplexMatrix mc = m.cast<std::complex<double>>();
    std::vector<double> angles;
    for (const auto& cluster : clusters) {
        std::complex<double> lambda = 0.0;
        for (const auto& z : cluster) lambda += z;
        lambda /= static_cast<double>(cluster.size());
        if (std::abs(std::abs(lambda) - 1.0) > tol) {
            throw Unsupported("eigenvalue " + std::to_string(lambda.real()) + (lambda.imag() < 0 ? "" : "+") +
                              std::to_string(lambda.imag()) + "i is off the unit circle");
        }

        const ComplexMatrix shifted = mc - lambda * ComplexMatrix::Identity(n, n);
        const Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullV);
        const Eigen::VectorXd sv = svd.singularValues();
        int null_dim = 0;
        for (int i = 0; i < sv.size(); ++i) {
            if (sv(i) < tol * scale) ++null_dim;
        }
        if (null_dim != static_cast<int>(cluster.size())) {
            throw Unsupported("matrix is not semisimple (eigenvalue multiplicity " + std::to_string(cluster.size()) +
                              ", eigenspace dimension " + std::to_string(null_dim) + ")");
        }
        // singular values are sorted descending: the null space is the tail of V
        const ComplexMatrix basis = svd.matrixV().rightCols(null_dim);
        const ComplexMatrix krein = std::complex<double>(0.0, 1.0) * basis.adjoint() * j * basis;
        const Eigen::SelfAdjointEigenSolver<ComplexMatrix> kes(0.5 * (krein + krein.adjoint()));

        double arg = std::arg(lambda);
        if (arg > tol) {
            arg -= 2.0 * kPi;
        } else if (arg > -tol) {
            arg = 0.0;
        }
        for (int i = 0; i < kes.eigenvalues().size(); ++i) {
            const double k = kes.eigenvalues()(i);
            if (std::abs(k) < tol) throw Unsupported("degenerate Krein form on an eigenspace");
            if (k > 0) angles.push_back(arg);
        }
    }
    if (static_cast<int>(angles.size()) != g) {
        throw Unsupported("found " + std::to_string(angles.size()) + " theta-positive planes, expected " +
                          std::to_string(g));
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

std::vector<double> elliptic_log_angles(const SympMatrix& m, const PolarContext& ctx) {
    return elliptic_log_angles(to_real(m), ctx);
}

double displacement_angle_elliptic(const RealMatrix& m, const PolarContext& ctx) {
    const auto angles = elliptic_log_angles(m, ctx);
    double sum = 0.0;
    for (double a : angles) sum += a;
    return sum / ctx.genus;
}

double displacement_angle_elliptic(const SympMatrix& m, const PolarContext& ctx) {
    return displacement_angle_elliptic(to_real(m), ctx);
}

// ---------------------------------------------------------------------------
// Nilpotent logarithms and the non-positive cone

NilpotentLog::NilpotentLog(int genus, std::vector<Term> terms) : genus_(genus), terms_(std::move(terms)) {
    if (genus_ < 1) throw InvalidInput("genus must be >= 1");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].cls.genus() != genus_) throw InvalidInput("class rank does not match genus");
        if (!(terms_[i].weight >= 0.0)) throw InvalidInput("nilpotent log weights must be non-negative");
        for (std::size_t k = 0; k < i; ++k) {
            if (pairing(terms_[i].cls, terms_[k].cls) != 0) {
                throw InvalidInput("classes " + terms_[k].cls.to_string() + " and " + terms_[i].cls.to_string() +
                                   " are not theta-orthogonal");
            }
        }
    }
}

RealMatrix NilpotentLog::matrix() const {
    RealMatrix x = RealMatrix::Zero(2 * genus_, 2 * genus_);
    for (const auto& t : terms_) x += t.weight * class_generator(t.cls);
    return x;
}

RealMatrix NilpotentLog::exp() const { return RealMatrix::Identity(2 * genus_, 2 * genus_) + matrix(); }

RealMatrix gamma_gram(const RealMatrix& x, int genus) {
    check_square(x, genus);
    return pairing_form(genus) * x;
}

double displacement_angle_trace(const NilpotentLog& x, const PolarContext& ctx) {
    if (x.genus() != ctx.genus) throw InvalidInput("genus does not match the polar context");
    return gamma_gram(x.matrix(), ctx.genus).trace() / (2.0 * ctx.genus);
}

bool in_nonpositive_cone(const RealMatrix& x, const PolarContext& ctx) {
    const RealMatrix gram = gamma_gram(x, ctx.genus);
    const double scale = std::max(1.0, max_abs(gram));
    if (max_abs(gram - gram.transpose()) > ctx.eps * scale) {
        throw InvalidInput("operator is not in the symplectic Lie algebra (gamma_x is not symmetric)");
    }
    const Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (gram + gram.transpose()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff() <= ctx.eps * scale;
}

}  // namespace hsz
