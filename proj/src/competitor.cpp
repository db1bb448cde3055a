#include "slidingcones/competitor.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace slidingcones {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

void check_x0(double x0) {
    if (!(x0 > 0.0 && x0 < kSqrt2 / 3.0))
        throw std::domain_error("x0 must lie in (0, sqrt(2)/3)");
}

// Adaptive Simpson with absolute tolerance; the integrands are smooth on
// [x0, sqrt(2)/3].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (b <= a) return 0.0;
    double m = 0.5 * (a + b);
    return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 48);
}

double log_term(double x) { return std::log(3.0 / kSqrt2 * x); }

} // namespace

double profile_x_max() { return kSqrt2 / 3.0; }

double profile_z(double x, double c) {
    if (!(x > 0.0)) throw std::domain_error("profile_z: x must be positive");
    if (c < 0.0) throw std::domain_error("profile_z: c must be nonnegative");
    return x / kSqrt2 + c * log_term(x);
}

double profile_z_prime(double x, double c) {
    if (!(x > 0.0)) throw std::domain_error("profile_z_prime: x must be positive");
    return 1.0 / kSqrt2 + c / x;
}

double c_from_x0(double x0) {
    check_x0(x0);
    return -x0 / (kSqrt2 * log_term(x0));
}

double t_plus_cone_energy() { return 4.0 * kSqrt2 / 3.0; }

CompetitorEnergy competitor_energy(double x0, double alpha) {
    check_x0(x0);
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
    double c = c_from_x0(x0);
    double hi = profile_x_max();
    auto bent = [&](double x) {
        double zp = profile_z_prime(x, c);
        return 2.0 * kSqrt3 * x * std::sqrt(1.0 + zp * zp);
    };
    auto vertical = [&](double x) { return 2.0 * profile_z(x, c); };
    double area_b = integrate(bent, x0, hi, 1e-10);
    double area_v = integrate(vertical, x0, hi, 1e-10);
    double on = 3.0 * kSqrt3 * x0 * x0;

    // antiderivative bound from sqrt(3/2 x^2 + sqrt(2) c x + c^2)
    //   <= sqrt(3/2) x + c/sqrt(3) + sqrt(2/3) c^2 / x
    auto bent_bound = [&](double x) {
        return 2.0 * kSqrt3 * (std::sqrt(1.5) * x * x / 2.0 + c * x / kSqrt3 +
                               std::sqrt(2.0 / 3.0) * c * c * log_term(x));
    };
    auto vertical_exact = [&](double x) {
        return 2.0 * (x * x / (2.0 * kSqrt2) + c * x * log_term(x) - c * x);
    };
    double bound = 3.0 * (bent_bound(hi) - bent_bound(x0)) +
                   3.0 * (vertical_exact(hi) - vertical_exact(x0)) + alpha * on;

    CompetitorEnergy out;
    out.report = make_energy_report(3.0 * (area_b + area_v), on, alpha);
    out.j_upper_bound = bound;
    out.c = c;
    return out;
}

double energy_gap(double x0, double alpha) {
    check_x0(x0);
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
    double l = log_term(x0);
    return 3.0 * x0 * x0 * (-kSqrt2 - kSqrt2 / l + alpha * kSqrt3);
}

double gap_threshold_alpha(double x0) {
    check_x0(x0);
    return std::sqrt(2.0 / 3.0) * (1.0 + 1.0 / log_term(x0));
}

double gap_small_triangle_limit(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
    return alpha * kSqrt3 - kSqrt2;
}

std::optional<double> find_beating_competitor(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
    // the gap is unimodal in x0 and stays so under the log substitution;
    // near the threshold the minimizer collapses double exponentially, so
    // run the golden-section search in log(x0)
    auto g = [&](double t) { return energy_gap(std::exp(t), alpha); };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = std::log(1e-300), b = std::log(profile_x_max() - 1e-12);
    double c1 = b - inv_phi * (b - a), c2 = a + inv_phi * (b - a);
    double f1 = g(c1), f2 = g(c2);
    for (int it = 0; it < 400 && (b - a) > 1e-12; ++it) {
        if (f1 <= f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - inv_phi * (b - a);
            f1 = g(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + inv_phi * (b - a);
            f2 = g(c2);
        }
    }
    double x = std::exp(0.5 * (a + b));
    if (energy_gap(x, alpha) < 0.0) return x;
    return std::nullopt;
}

} // namespace slidingcones
