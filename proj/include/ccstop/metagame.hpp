#pragma once

#include <optional>
#include <vector>

namespace ccstop {

// The closed-form side games. All values are per unit of n; every argument must lie
// in [0,1] (ParameterError otherwise).

// (1-a)(a - a^2 b) + a((g - g^2 b) - g(1-b)), evaluated term by term as written.
double phi(double alpha, double beta, double gamma);

// (1-a)(a - a^2 b) + a b (g - g^2).
double phi_simplified(double alpha, double beta, double gamma);

// Score of the (alpha, gamma) strategy in the density-beta game: the first-phase
// expectation plus the expected second-phase gain net of the edges it closes.
double mbeta_strategy_score(double alpha, double beta, double gamma);

// (1-alpha)^k alpha. k >= 0.
double mt_score(double alpha, int k);

struct PhiPoint {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
    double value = 0;
};

struct PhiMaximum {
    double value = 0;
    // Refined representatives of every grid point within report_tol of the maximum.
    std::vector<PhiPoint> maximizers;
    std::size_t grid_points = 0;
};

struct PhiSearch {
    double grid_step = 0.01;
    double refine_tol = 1e-9;
    double report_tol = 1e-6;
    // Restrict the search to a single beta.
    std::optional<double> beta;
};

// Grid scan over [0,1]^3, then coordinate-wise Brent refinement from each candidate.
PhiMaximum maximize_phi(const PhiSearch& search = {});

struct MtMaximum {
    double alpha = 0;
    double value = 0;
    double grid_alpha = 0;  // best grid point before refinement
};

MtMaximum maximize_mt(int k, double grid_step = 1e-3);

}  // namespace ccstop
