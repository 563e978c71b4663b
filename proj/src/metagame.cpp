#include "ccstop/metagame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "ccstop/errors.hpp"

namespace ccstop {

namespace {

void check_unit(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) throw ParameterError(std::string(name) + " must lie in [0,1], got " + std::to_string(x));
}

void check_triple(double alpha, double beta, double gamma) {
    check_unit(alpha, "alpha");
    check_unit(beta, "beta");
    check_unit(gamma, "gamma");
}

void check_step(double step) {
    if (!(step > 0.0 && step <= 0.01)) throw ParameterError("grid_step must lie in (0, 0.01]");
}

constexpr int kBrentBits = std::numeric_limits<double>::digits / 2;

// Maximizes f on [lo, hi] and returns (argmax, value).
template <class F>
std::pair<double, double> brent_max(F f, double lo, double hi) {
    auto [x, neg] = boost::math::tools::brent_find_minima([&](double t) { return -f(t); }, lo, hi, kBrentBits);
    return {x, -neg};
}

PhiPoint refine(PhiPoint p, double radius, bool beta_fixed, double tol) {
    auto window = [&](double x) { return std::pair{std::max(0.0, x - radius), std::min(1.0, x + radius)}; };
    // Endpoints are candidates too; Brent only samples the interior.
    auto improve = [&](double& coord, auto eval) {
        auto [lo, hi] = window(coord);
        auto [x, v] = brent_max(eval, lo, hi);
        for (double end : {lo, hi}) {
            if (double e = eval(end); e > v) {
                x = end;
                v = e;
            }
        }
        if (v > p.value) {
            coord = x;
            p.value = v;
        }
    };
    for (int sweep = 0; sweep < 100; ++sweep) {
        const double before = p.value;
        improve(p.alpha, [&](double a) { return phi_simplified(a, p.beta, p.gamma); });
        if (!beta_fixed) improve(p.beta, [&](double b) { return phi_simplified(p.alpha, b, p.gamma); });
        improve(p.gamma, [&](double g) { return phi_simplified(p.alpha, p.beta, g); });
        if (p.value - before <= tol) break;
    }
    return p;
}

}  // namespace

double phi(double alpha, double beta, double gamma) {
    check_triple(alpha, beta, gamma);
    return (1 - alpha) * (alpha - alpha * alpha * beta) + alpha * ((gamma - gamma * gamma * beta) - gamma * (1 - beta));
}

double phi_simplified(double alpha, double beta, double gamma) {
    check_triple(alpha, beta, gamma);
    return (1 - alpha) * (alpha - alpha * alpha * beta) + alpha * beta * (gamma - gamma * gamma);
}

double mbeta_strategy_score(double alpha, double beta, double gamma) {
    check_triple(alpha, beta, gamma);
    const double first = (1 - alpha) * (alpha - alpha * alpha * beta);
    // The second phase runs with probability alpha.
    const double opened = gamma - gamma * gamma * beta;
    const double closed = gamma * (1 - beta);
    return first + alpha * (opened - closed);
}

double mt_score(double alpha, int k) {
    check_unit(alpha, "alpha");
    if (k < 0) throw ParameterError("k must be >= 0");
    return std::pow(1 - alpha, k) * alpha;
}

PhiMaximum maximize_phi(const PhiSearch& search) {
    check_step(search.grid_step);
    if (!(search.refine_tol > 0 && search.refine_tol <= 1e-9)) throw ParameterError("refine_tol must lie in (0, 1e-9]");
    if (search.beta) check_unit(*search.beta, "beta");

    const auto steps = static_cast<int>(std::lround(1.0 / search.grid_step));
    auto at = [&](int i) { return static_cast<double>(i) / steps; };
    const int beta_steps = search.beta ? 0 : steps;

    std::vector<PhiPoint> grid;
    grid.reserve(static_cast<std::size_t>(steps + 1) * (beta_steps + 1) * (steps + 1));
    double grid_max = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= beta_steps; ++j) {
            for (int l = 0; l <= steps; ++l) {
                const double b = search.beta ? *search.beta : at(j);
                PhiPoint p{at(i), b, at(l), phi_simplified(at(i), b, at(l))};
                grid_max = std::max(grid_max, p.value);
                grid.push_back(p);
            }
        }
    }

    PhiMaximum out;
    out.grid_points = grid.size();
    out.value = grid_max;
    std::vector<PhiPoint> refined;
    for (const auto& p : grid) {
        if (p.value < grid_max - search.report_tol) continue;
        refined.push_back(refine(p, search.grid_step, search.beta.has_value(), search.refine_tol));
        out.value = std::max(out.value, refined.back().value);
    }
    for (const auto& p : refined)
        if (p.value >= out.value - search.report_tol) out.maximizers.push_back(p);
    return out;
}

MtMaximum maximize_mt(int k, double grid_step) {
    if (k < 0) throw ParameterError("k must be >= 0");
    check_step(grid_step);
    const auto steps = static_cast<int>(std::lround(1.0 / grid_step));
    MtMaximum out;
    out.value = -1;
    for (int i = 0; i <= steps; ++i) {
        const double a = static_cast<double>(i) / steps;
        if (const double v = mt_score(a, k); v > out.value) {
            out.value = v;
            out.grid_alpha = a;
        }
    }
    const double lo = std::max(0.0, out.grid_alpha - grid_step);
    const double hi = std::min(1.0, out.grid_alpha + grid_step);
    auto [x, v] = brent_max([&](double a) { return mt_score(a, k); }, lo, hi);
    out.alpha = out.grid_alpha;
    if (v > out.value) {
        out.alpha = x;
        out.value = v;
    }
    return out;
}

}  // namespace ccstop
