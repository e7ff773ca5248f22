#include "polynet/dimension/dimension.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polynet/algebra/matrix.hpp"
#include "polynet/algebra/prime_field.hpp"
#include "polynet/algebra/rational_field.hpp"
#include "polynet/bounds/bounds.hpp"
#include "polynet/dimension/jacobian.hpp"
#include "polynet/network/network.hpp"
#include "polynet/rng.hpp"

namespace polynet::dim {

using algebra::Matrix;
using algebra::PrimeField;
using algebra::RationalField;

namespace {

// seed-derivation tags for the independent substreams of one trial
constexpr std::uint64_t kTagPrime = 0x70;
constexpr std::uint64_t kTagWeights = 0x77;
constexpr std::uint64_t kTagPoints = 0x78;

// Rank of the rational coefficient Jacobian. Very rectangular matrices are
// first compressed through the Gram matrix (rank(J^T J) = rank(J) over Q),
// which keeps the Bareiss minors at the small dimension.
std::int64_t rational_rank(const Matrix<RationalField>& jac) {
    const std::size_t r = jac.rows(), c = jac.cols();
    if (r > 2 * c || c > 2 * r) {
        const auto jt = jac.transposed();
        const auto gram = r > c ? jt.multiply(jac) : jac.multiply(jt);
        return static_cast<std::int64_t>(algebra::rank(gram));
    }
    return static_cast<std::int64_t>(algebra::rank(jac));
}

std::int64_t stacked_rank(const Architecture& arch, const PrimeField& field,
                          const net::WeightAssignment<PrimeField>& theta, std::uint64_t point_seed,
                          int oversample, std::int64_t rank_cap, std::int64_t ambient) {
    const poly::MonomialBasis basis(arch.d0(), arch.out_degree());
    const std::size_t big_n = basis.size();
    const std::size_t m = big_n + static_cast<std::size_t>(oversample);
    for (int attempt = 0; attempt < 10; ++attempt) {
        Rng rng(derive_seed(point_seed, static_cast<std::uint64_t>(attempt)));
        const auto pts = sample_points(field, arch.d0(), m, rng);
        const auto grads = jacobian_point_gradients(arch, theta, pts);

        // The gradient matrix factors through the coefficient Jacobian, so
        // its rank never exceeds the ambient dimension. When parameters far
        // outnumber it, a column subset that already reaches ambient rank
        // settles the value without eliminating the full width.
        const std::size_t want = static_cast<std::size_t>(ambient) + 32;
        if (grads.cols() > want + 32) {
            std::vector<std::size_t> idx(grads.cols());
            std::iota(idx.begin(), idx.end(), 0);
            for (std::size_t i = idx.size(); i > 1; --i)
                std::swap(idx[i - 1], idx[rng.below(i)]);
            Matrix<PrimeField> sub(field, grads.rows(), want);
            for (std::size_t r = 0; r < grads.rows(); ++r)
                for (std::size_t c = 0; c < want; ++c) sub.at(r, c) = grads.at(r, idx[c]);
            if (static_cast<std::int64_t>(algebra::rank(sub)) == ambient) return ambient;
        }

        const std::int64_t rk = static_cast<std::int64_t>(algebra::rank(grads));
        if (rk >= rank_cap) return rk;
        // A low rank is only trustworthy if the points determine degree-d
        // coefficients; check the evaluation matrix before accepting it.
        const auto vmat = poly::monomial_eval_matrix(field, basis, pts);
        if (algebra::rank(vmat) == big_n) return rk;
    }
    throw DegenerateSamplesError("sample points stayed degenerate after 10 resamples");
}

} // namespace

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::FfStacked: return "ff-stacked";
        case Engine::FfInterp: return "ff-interp";
        case Engine::Symbolic: return "symbolic";
    }
    return "?";
}

std::optional<Engine> engine_from_name(const std::string& name) {
    if (name == "ff-stacked") return Engine::FfStacked;
    if (name == "ff-interp") return Engine::FfInterp;
    if (name == "symbolic") return Engine::Symbolic;
    return std::nullopt;
}

DimensionEstimate dimension(const Architecture& arch, const DimConfig& cfg) {
    arch.validate();
    if (cfg.trials < 1) throw ConfigError("dimension needs at least one trial");
    DimensionEstimate est;
    est.ambient = bounds::ambient_dim(arch);
    est.method = cfg.method;
    const std::int64_t cert_bound = bounds::composite_bound(arch);

    for (int t = 0; t < cfg.trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
        TrialRecord rec;
        rec.seed = trial_seed;
        if (cfg.method == Engine::Symbolic) {
            RationalField field;
            Rng wrng(derive_seed(trial_seed, kTagWeights));
            const auto theta = net::sample_weights(arch, field, wrng, cfg.integer_weight_bound);
            const auto jac = jacobian_coefficients(arch, theta);
            rec.prime = 0;
            rec.rank = rational_rank(jac);
        } else {
            const PrimeField field = cfg.prime
                                         ? PrimeField(*cfg.prime)
                                         : algebra::random_prime(derive_seed(trial_seed, kTagPrime),
                                                                 1ULL << 20);
            net::check_field_degree(field, arch.degree);
            Rng wrng(derive_seed(trial_seed, kTagWeights));
            const auto theta = net::sample_weights(arch, field, wrng);
            rec.prime = field.modulus();
            if (cfg.method == Engine::FfStacked) {
                const std::int64_t cap = std::min(cert_bound, est.ambient);
                rec.rank = stacked_rank(arch, field, theta, derive_seed(trial_seed, kTagPoints),
                                        cfg.oversample, cap, est.ambient);
            } else {
                Rng prng(derive_seed(trial_seed, kTagPoints));
                const auto jac = jacobian_ff_interpolated(arch, theta, prng);
                rec.rank = static_cast<std::int64_t>(algebra::rank(jac));
            }
        }
        if (rec.rank > cert_bound)
            throw std::logic_error("observed rank exceeds the unconditional upper bound; "
                                   "this is a bug");
        est.trials.push_back(rec);
        est.dim = std::max(est.dim, rec.rank);
        if (cfg.early_exit_on_filling && est.dim == est.ambient) break;
    }
    est.is_filling = est.dim == est.ambient ? Filling::Proved : Filling::ProbablyNot;
    return est;
}

std::int64_t dimension_value(const Architecture& arch, std::uint64_t seed, int trials) {
    DimConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    return dimension(arch, cfg).dim;
}

} // namespace polynet::dim
