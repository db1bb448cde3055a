#include "slidingcones/onedim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slidingcones {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAngleTol = 1e-9;

bool near(double a, double b, double tol = kAngleTol) { return std::abs(a - b) <= tol; }

void validate_branches(const std::vector<Branch1D>& branches) {
    if (branches.empty()) throw std::invalid_argument("is_minimal_1d: empty branch list");
    for (const auto& b : branches) {
        if (b.angle < -kAngleTol || b.angle > kPi + kAngleTol)
            throw std::domain_error("branch angle must lie in [0, pi]");
        bool on_line = near(b.angle, 0.0) || near(b.angle, kPi);
        if (b.in_gamma && !on_line)
            throw std::invalid_argument("in_gamma branch must have angle 0 or pi");
        if (!b.in_gamma && on_line)
            throw std::invalid_argument("branch along the boundary must be flagged in_gamma");
    }
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = i + 1; j < branches.size(); ++j)
            if (near(branches[i].angle, branches[j].angle))
                throw std::invalid_argument("branches must be distinct");
}

} // namespace

double theta_alpha(double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw std::domain_error("theta_alpha: alpha must lie in [0, 1]");
    return std::acos(alpha);
}

double join_energy(double x, double theta, double alpha) {
    double c = std::cos(theta), s = std::sin(theta);
    if (!(x > -1.0 - 1e-12 && x <= c + 1e-12))
        throw std::domain_error("join_energy: x outside (-1, cos theta]");
    return alpha * (1.0 + x) + std::sqrt((x - c) * (x - c) + s * s);
}

double join_energy_dx(double x, double theta, double alpha) {
    double c = std::cos(theta), s = std::sin(theta);
    double d = std::sqrt((x - c) * (x - c) + s * s);
    return alpha + (x - c) / d;
}

double optimal_contact(double theta, double alpha) {
    if (!(theta > 0.0 && theta <= kPi / 2.0 + 1e-15))
        throw std::domain_error("optimal_contact: theta must lie in (0, pi/2]");
    if (alpha < 0.0 || alpha > 1.0) throw std::domain_error("optimal_contact: alpha must lie in [0, 1]");
    double c = std::cos(theta), s = std::sin(theta);
    if (alpha >= 1.0) return -1.0; // energy nondecreasing, infimum at the left end
    double x = c - alpha * s / std::sqrt(1.0 - alpha * alpha);
    return std::clamp(x, -1.0, c);
}

std::vector<Branch1D> profile_branches(const Profile1D& p) {
    switch (p.kind) {
        case ProfileKind::Gamma:
            return {{0.0, true}, {kPi, true}};
        case ProfileKind::Vertical:
            return {{kPi / 2.0, false}};
        case ProfileKind::GammaPlusVertical:
            return {{0.0, true}, {kPi, true}, {kPi / 2.0, false}};
        case ProfileKind::TiltedPlusHorizontal:
            return {{kPi, true}, {p.theta, false}};
        case ProfileKind::VCone:
            return {{p.theta, false}, {kPi - p.theta, false}};
    }
    throw std::logic_error("unreachable profile kind");
}

double profile_energy_1d(const Profile1D& p, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw std::domain_error("profile_energy_1d: alpha must lie in [0, 1]");
    double e = 0.0;
    for (const auto& b : profile_branches(p)) e += b.in_gamma ? alpha : 1.0;
    return e;
}

double alpha_iii_sliding_threshold() { return std::cos(kPi / 6.0); }

namespace {

Verdict1D classify_two(const Branch1D& a, const Branch1D& b, double alpha) {
    int on = (a.in_gamma ? 1 : 0) + (b.in_gamma ? 1 : 0);
    if (on == 2) return {true, "the boundary line itself (type i)"};
    if (on == 1) {
        const Branch1D& g = a.in_gamma ? a : b;
        const Branch1D& slope = a.in_gamma ? b : a;
        double phi = std::abs(slope.angle - g.angle); // angle between the two branches
        double required = -std::cos(phi);             // alpha of the optimal contact profile
        if (required >= -kAngleTol && near(required, alpha, 1e-9))
            return {true, "optimal contact profile (type iv), cos of the contact angle equals alpha"};
        return {false, "boundary arm with a sloping branch away from the optimal angle"};
    }
    double lo = std::min(a.angle, b.angle), hi = std::max(a.angle, b.angle);
    if (!near(hi, kPi - lo))
        return {false, "two sloping branches out of mirror balance; sliding the junction shortens them"};
    double ta = theta_alpha(alpha);
    if (lo > kPi / 6.0 + kAngleTol)
        return {false, "V cone steeper than 30 degrees; pinching to a Y junction is shorter"};
    if (lo < ta - kAngleTol)
        return {false, "V cone shallower than the contact angle; pushing down onto the boundary is shorter"};
    if (near(lo, ta))
        return {true, "V cone at the contact angle (tie with the pushed-down profile, both minimal)"};
    return {true, "V cone with elevation between the contact angle and 30 degrees (type v)"};
}

Verdict1D classify_three(const std::vector<Branch1D>& branches, double alpha) {
    (void)alpha;
    std::vector<const Branch1D*> on, off;
    for (const auto& b : branches) (b.in_gamma ? on : off).push_back(&b);
    if (on.size() == 2) {
        double a = off[0]->angle;
        if (near(a, kPi / 2.0)) return {true, "boundary line plus vertical half-line (type iii)"};
        return {false, "boundary line with a tilted branch; projecting the branch down is shorter"};
    }
    if (on.size() == 1) {
        double g = on[0]->angle;
        double b1 = std::abs(off[0]->angle - g);
        double b2 = std::abs(off[1]->angle - g);
        if (b1 > kPi / 2.0 + kAngleTol || b2 > kPi / 2.0 + kAngleTol)
            return {false, "a sloping branch leans past vertical; pushing it down onto the boundary is shorter"};
        return {false, "the two sloping branches are within a right angle of each other; pinching is shorter"};
    }
    return {false, "three sloping branches in a half-plane always contain a pair under 120 degrees"};
}

} // namespace

Verdict1D is_minimal_1d(const std::vector<Branch1D>& branches, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw std::domain_error("is_minimal_1d: alpha must lie in [0, 1]");
    validate_branches(branches);
    switch (branches.size()) {
        case 1: {
            const auto& b = branches.front();
            if (!b.in_gamma && near(b.angle, kPi / 2.0)) return {true, "single vertical half-line (type ii)"};
            if (b.in_gamma) return {false, "single boundary arm retracts freely within the boundary"};
            return {false, "single tilted branch; sliding its foot shortens it"};
        }
        case 2:
            return classify_two(branches[0], branches[1], alpha);
        case 3:
            return classify_three(branches, alpha);
        default:
            return {false, "no cone with four or more branches is sliding minimal"};
    }
}

} // namespace slidingcones
