#pragma once

namespace gridstar {

/// Absolute tolerance used wherever a computed discrepancy value is compared
/// against a budget or against another computed value. Grid discrepancies are
/// rationals for integer mesh sizes, but general weight families force
/// floating point, so every `a <= b` decision is `a <= b + tol`.
inline constexpr double kDefaultTol = 1e-12;

inline constexpr const char* kVersion = "0.1.0";

/// Work and size limits. Algorithms whose cost is input-controlled estimate
/// their work against these caps up front and raise ResourceError instead of
/// starting a computation that cannot finish at desk scale.
struct Caps {
    long long point_cap = 10'000'000;         ///< max points grid_points may materialize
    long long work_cap = 100'000'000;         ///< max elementary steps in the brute-force oracle
    long long node_budget = 10'000'000;       ///< max branch-and-bound nodes in n_min_exact
    long long greedy_iteration_cap = 100'000; ///< max refinement steps in allocate_greedy
    int explicit_weight_dim_cap = 20;         ///< max dimension for explicit (non-product) weights
    int oracle_subset_dim_cap = 12;           ///< max dimension for subset-enumerating oracle calls
    int exact_search_dim_cap = 6;             ///< max dimension for n_min_exact

    /// Defaults with the GRID_DISC_WORK_CAP environment variable (when set to
    /// a positive integer) applied to work_cap, point_cap and node_budget.
    static Caps with_env_overrides();
};

} // namespace gridstar
