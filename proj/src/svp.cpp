#include "minperiod/svp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minperiod {

namespace {

constexpr double kTieBand = 1e-12;     // relative band for "same minimum"
constexpr double kBoundSlack = 1e-9;   // pruning-bound inflation
constexpr std::size_t kPoolCap = 1 << 16;

void normalize_sign(IntVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            if (v[i] < 0) v = -v;
            return;
        }
    }
}

bool lex_less(const IntVector& a, const IntVector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

struct Candidate {
    double value;
    IntVector vec; // sign-normalized, original coordinates
};

// Global minimum with deterministic tie-break over a candidate pool.
// The pool is a superset of the true tie set; values were all computed
// by the same expression on the original Gram matrix.
ShortestResult select_winner(std::vector<Candidate>& pool, const GramForm& g,
                             const char* method) {
    if (pool.empty())
        throw Error(Error::Code::NumericalBreakdown, "empty candidate pool");

    if (g.gram_exact) {
        // Exact re-evaluation: ties become exact equalities.
        Rational best = quadratic_value_exact(*g.gram_exact, pool.front().vec);
        std::vector<Rational> vals;
        vals.reserve(pool.size());
        vals.push_back(best);
        for (std::size_t i = 1; i < pool.size(); ++i) {
            vals.push_back(quadratic_value_exact(*g.gram_exact, pool[i].vec));
            if (vals.back() < best) best = vals.back();
        }
        const IntVector* win = nullptr;
        long ties = 0;
        std::vector<const IntVector*> seen;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (vals[i] != best) continue;
            bool dup = false;
            for (auto* s : seen)
                if (*s == pool[i].vec) { dup = true; break; }
            if (dup) continue;
            seen.push_back(&pool[i].vec);
            ++ties;
            if (!win || lex_less(pool[i].vec, *win)) win = &pool[i].vec;
        }
        ShortestResult out;
        out.vector = LatticeVector::from_coeffs(*win);
        out.value = best.to_double();
        out.method = method;
        out.num_minimizers = 2 * ties;
        return out;
    }

    double vmin = pool.front().value;
    for (const auto& c : pool) vmin = std::min(vmin, c.value);
    const double band = vmin * (1.0 + kTieBand);
    const IntVector* win = nullptr;
    std::vector<const IntVector*> seen;
    long ties = 0;
    for (const auto& c : pool) {
        if (c.value > band) continue;
        bool dup = false;
        for (auto* s : seen)
            if (*s == c.vec) { dup = true; break; }
        if (dup) continue;
        seen.push_back(&c.vec);
        ++ties;
        if (!win || lex_less(c.vec, *win)) win = &c.vec;
    }
    ShortestResult out;
    out.vector = LatticeVector::from_coeffs(*win);
    out.value = quadratic_value(g, *win);
    out.method = method;
    out.num_minimizers = 2 * ties;
    return out;
}

void pool_push(std::vector<Candidate>& pool, double value, IntVector vec) {
    if (pool.size() >= kPoolCap)
        throw Error(Error::Code::NumericalBreakdown, "minimizer candidate pool overflow");
    normalize_sign(vec);
    pool.push_back({value, std::move(vec)});
}

// Keeps `pool` a superset of the tie set of the running minimum: strict
// improvements beyond the band evict everything older (older entries are
// then provably outside the final band), near-ties are appended.
void pool_consider(std::vector<Candidate>& pool, double& best, double value,
                   const IntVector& vec) {
    if (value < best * (1.0 - 4.0 * kTieBand)) {
        best = value;
        pool.clear();
        pool_push(pool, value, vec);
    } else if (value <= best * (1.0 + kTieBand)) {
        pool_push(pool, value, vec);
    }
}

// Fincke-Pohst depth-first enumeration over the reduced basis. R is the
// upper Cholesky factor of the reduced Gram; the bound shrinks with every
// improvement but always keeps ties inside.
class Enumerator {
public:
    Enumerator(const Eigen::MatrixXd& r, const IntMatrix& basis, const GramForm& g)
        : r_(r), basis_(basis), g_(g), n_(r.rows()), x_(IntVector::Zero(r.rows())) {}

    std::vector<Candidate> run(double initial_bound) {
        bound_ = initial_bound * (1.0 + kBoundSlack);
        best_ = std::numeric_limits<double>::infinity();
        descend(n_ - 1, 0.0);
        return std::move(pool_);
    }

private:
    void descend(Eigen::Index i, double partial) {
        if (i < 0) {
            if (x_.isZero()) return;
            IntVector v = basis_ * x_;
            const double value = quadratic_value(g_, v);
            pool_consider(pool_, best_, value, v);
            bound_ = std::min(bound_, best_ * (1.0 + kBoundSlack));
            return;
        }
        double inner = 0.0;
        for (Eigen::Index j = i + 1; j < n_; ++j) inner += r_(i, j) * static_cast<double>(x_[j]);
        const double rii = r_(i, i);
        const double budget = bound_ - partial;
        if (budget < 0) return;
        const double rad = std::sqrt(budget);
        const auto lo = static_cast<std::int64_t>(std::ceil((-rad - inner) / rii - 1e-12));
        const auto hi = static_cast<std::int64_t>(std::floor((rad - inner) / rii + 1e-12));
        for (std::int64_t t = lo; t <= hi; ++t) {
            x_[i] = t;
            const double term = rii * static_cast<double>(t) + inner;
            const double next = partial + term * term;
            if (next <= bound_) descend(i - 1, next);
        }
        x_[i] = 0;
    }

    const Eigen::MatrixXd& r_;
    const IntMatrix& basis_;
    const GramForm& g_;
    Eigen::Index n_;
    IntVector x_;
    double bound_ = 0, best_ = 0;
    std::vector<Candidate> pool_;
};

// One brute-force slab: vectors with x_0..x_{L-1} = 0 and x_L = lead >= 1
// (exactly the sign-normalized half space). Quadratic row trick on the
// last coordinate keeps the scan at O(n) per vector.
void brute_slab(const Eigen::MatrixXd& g, Eigen::Index lead_idx, std::int64_t lead, int box,
                std::vector<Candidate>& pool, double& task_best) {
    const Eigen::Index n = g.rows();
    IntVector x = IntVector::Zero(n);
    x[lead_idx] = lead;

    auto consider = [&](double value, const IntVector& v) { pool_consider(pool, task_best, value, v); };

    if (lead_idx == n - 1) {
        double q = g(n - 1, n - 1) * static_cast<double>(lead) * static_cast<double>(lead);
        consider(q, x);
        return;
    }

    // Odometer over coordinates lead_idx+1 .. n-2; innermost loop on the
    // last coordinate evaluates a*t^2 + b*t + c.
    const Eigen::Index first_free = lead_idx + 1;
    const Eigen::Index last_free = n - 2;
    for (Eigen::Index j = first_free; j <= last_free; ++j) x[j] = -box;
    const double a = g(n - 1, n - 1);
    while (true) {
        double c = 0.0, b = 0.0;
        for (Eigen::Index i = lead_idx; i <= last_free; ++i) {
            if (x[i] == 0) continue;
            const double xi = static_cast<double>(x[i]);
            b += g(n - 1, i) * xi;
            double row = 0.0;
            for (Eigen::Index j = lead_idx; j <= last_free; ++j)
                if (x[j] != 0) row += g(i, j) * static_cast<double>(x[j]);
            c += xi * row;
        }
        b *= 2.0;
        for (std::int64_t t = -box; t <= box; ++t) {
            const double td = static_cast<double>(t);
            const double q = (a * td + b) * td + c;
            if (q <= task_best * (1.0 + kTieBand)) {
                x[n - 1] = t;
                consider(q, x);
                x[n - 1] = 0;
            }
        }
        // advance odometer
        Eigen::Index j = last_free;
        while (j >= first_free && x[j] == box) {
            x[j] = -box;
            --j;
        }
        if (j < first_free) break;
        ++x[j];
    }
}

ShortestResult brute_force_impl(const GramForm& g, int box, bool parallel) {
    if (box < 1) throw Error(Error::Code::BadInput, "box must be >= 1");
    const int required = certified_box(g);
    if (box < required)
        throw Error(Error::Code::BoxTooSmall,
                    "certified enclosing radius " + std::to_string(required) +
                        " exceeds box " + std::to_string(box));

    const Eigen::Index n = g.dim;
    struct Task {
        Eigen::Index lead_idx;
        std::int64_t lead;
    };
    std::vector<Task> tasks;
    for (Eigen::Index li = 0; li < n; ++li)
        for (std::int64_t lead = 1; lead <= box; ++lead) tasks.push_back({li, lead});

    std::vector<std::vector<Candidate>> pools(tasks.size());

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            double task_best = std::numeric_limits<double>::infinity();
            brute_slab(g.gram, tasks[t].lead_idx, tasks[t].lead, box, pools[t], task_best);
        }
    } else {
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            double task_best = std::numeric_limits<double>::infinity();
            brute_slab(g.gram, tasks[t].lead_idx, tasks[t].lead, box, pools[t], task_best);
        }
    }

    // Task-local pools retain everything within the band of the task
    // minimum, which always contains the global band; the final filter is
    // therefore independent of the schedule.
    std::vector<Candidate> pool;
    for (auto& p : pools)
        for (auto& c : p) pool.push_back(std::move(c));
    return select_winner(pool, g, "brute-force");
}

} // namespace

ShortestResult shortest_vector(const GramForm& g, int enum_dim_cap) {
    if (g.dim > enum_dim_cap)
        throw Error(Error::Code::DimensionTooLarge,
                    "dimension " + std::to_string(g.dim) + " exceeds exact-enumeration cap " +
                        std::to_string(enum_dim_cap));
    ReducedBasis rb = lll_reduce(g);
    Eigen::LLT<Eigen::MatrixXd> llt(rb.gram_reduced);
    if (llt.info() != Eigen::Success)
        throw Error(Error::Code::NumericalBreakdown, "Cholesky failed on reduced Gram matrix");
    Eigen::MatrixXd r = llt.matrixU();

    const double initial = rb.gram_reduced.diagonal().minCoeff();
    Enumerator en(r, rb.basis, g);
    std::vector<Candidate> pool = en.run(initial);
    return select_winner(pool, g, "enumeration");
}

int certified_box(const GramForm& g) {
    ReducedBasis rb = lll_reduce(g);
    const double q1 =
        std::min(rb.gram_reduced.diagonal().minCoeff(), g.gram.diagonal().minCoeff());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.gram, Eigen::EigenvaluesOnly);
    const double lambda_min = es.eigenvalues().minCoeff();
    if (!(lambda_min > 0))
        throw Error(Error::Code::NotPositiveDefinite, "Gram matrix is not positive definite");
    // Any minimizer x satisfies lambda_min |x|^2 <= Q(x) <= q1, and its
    // coordinates are integers, so ceil(radius - eps) covers it.
    const double radius = std::sqrt(q1 / lambda_min);
    return std::max(1, static_cast<int>(std::ceil(radius - 1e-9)));
}

ShortestResult brute_force_shortest(const GramForm& g, int box) {
    return brute_force_impl(g, box, true);
}

ShortestResult brute_force_shortest_serial(const GramForm& g, int box) {
    return brute_force_impl(g, box, false);
}

double min_period_length(const PeriodMatrix& tau) {
    return shortest_vector(gram_from_period(tau)).value;
}

} // namespace minperiod
