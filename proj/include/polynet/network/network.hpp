#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "polynet/algebra/matrix.hpp"
#include "polynet/architecture.hpp"
#include "polynet/errors.hpp"
#include "polynet/poly/homog_poly.hpp"
#include "polynet/rng.hpp"

namespace polynet::net {

// The weights theta = (W_1,...,W_h); W_i has shape d_i x d_{i-1}.
template <class F>
struct WeightAssignment {
    std::vector<algebra::Matrix<F>> layers;

    void check_shapes(const Architecture& arch) const {
        if (layers.size() != static_cast<std::size_t>(arch.h()))
            throw ShapeMismatchError("weight layer count does not match architecture");
        for (int i = 1; i <= arch.h(); ++i) {
            const auto& w = layers[static_cast<std::size_t>(i - 1)];
            if (w.rows() != static_cast<std::size_t>(arch.widths[static_cast<std::size_t>(i)]) ||
                w.cols() != static_cast<std::size_t>(arch.widths[static_cast<std::size_t>(i - 1)]))
                throw ShapeMismatchError("weight matrix shape mismatch in layer " + std::to_string(i));
        }
    }
};

// Per-layer scaling + hidden-unit relabeling that leaves the network map
// unchanged: W_1 <- P_1 D_1 W_1, W_i <- P_i D_i W_i D_{i-1}^{-r} P_{i-1}^T,
// W_h <- W_h D_{h-1}^{-r} P_{h-1}^T.
template <class F>
struct ScalePermAction {
    // index i in [0, h-2] acts between layers i+1 and i+2
    std::vector<std::vector<typename F::Elem>> diagonals;
    std::vector<std::vector<int>> permutations;
};

// The construction degenerates over F_p when p divides the activation
// degree (d/dz z^r = r z^{r-1} vanishes identically).
template <class F>
void check_field_degree(const F& field, int degree) {
    if constexpr (F::is_finite_field) {
        if (static_cast<std::uint64_t>(degree) % field.modulus() == 0)
            throw BadPrimeError("modulus divides the activation degree");
    } else {
        (void)field;
        (void)degree;
    }
}

// Evaluates the network map layer by layer as polynomials in the input
// variables: z_1 = W_1 x, then z_i = W_i (z_{i-1} elementwise ^r).
template <class F>
poly::PolyVector<F> forward(const Architecture& arch, const WeightAssignment<F>& theta) {
    theta.check_shapes(arch);
    const F& field = theta.layers.front().field();
    check_field_degree(field, arch.degree);
    const int n = arch.d0();
    std::vector<poly::HomogPoly<F>> z;
    z.reserve(static_cast<std::size_t>(arch.widths[1]));
    poly::MonomialBasis lin(n, 1);
    for (int a = 0; a < arch.widths[1]; ++a) {
        poly::HomogPoly<F> p(field, lin);
        for (int b = 0; b < n; ++b) p.coeff(static_cast<std::size_t>(b)) = theta.layers[0].at(a, b);
        z.push_back(std::move(p));
    }
    for (int i = 2; i <= arch.h(); ++i) {
        std::vector<poly::HomogPoly<F>> s;
        s.reserve(z.size());
        for (const auto& zp : z) s.push_back(poly::power(zp, arch.degree));
        const auto& w = theta.layers[static_cast<std::size_t>(i - 1)];
        std::vector<poly::HomogPoly<F>> next;
        next.reserve(w.rows());
        for (std::size_t a = 0; a < w.rows(); ++a) {
            poly::HomogPoly<F> acc(field, s.front().basis());
            for (std::size_t b = 0; b < w.cols(); ++b) acc.add_scaled(s[b], w.at(a, b));
            next.push_back(std::move(acc));
        }
        z = std::move(next);
    }
    return poly::PolyVector<F>{std::move(z)};
}

// Shallow (h = 2) network as a sum of d_1 scaled r-th powers of linear
// forms: component k = sum_i W2(k,i) * (W1(i,:) . x)^r.
template <class F>
poly::PolyVector<F> forward_cp_shallow(const algebra::Matrix<F>& w2, const algebra::Matrix<F>& w1,
                                       int r) {
    if (w2.cols() != w1.rows()) throw ShapeMismatchError("cp form: W2 columns must match W1 rows");
    const F& field = w1.field();
    const int n = static_cast<int>(w1.cols());
    poly::MonomialBasis lin(n, 1);
    std::vector<poly::HomogPoly<F>> powers;
    powers.reserve(w1.rows());
    for (std::size_t i = 0; i < w1.rows(); ++i) {
        poly::HomogPoly<F> form(field, lin);
        for (int b = 0; b < n; ++b) form.coeff(static_cast<std::size_t>(b)) = w1.at(i, static_cast<std::size_t>(b));
        powers.push_back(poly::power(form, r));
    }
    std::vector<poly::HomogPoly<F>> out;
    out.reserve(w2.rows());
    for (std::size_t k = 0; k < w2.rows(); ++k) {
        poly::HomogPoly<F> acc(field, powers.front().basis());
        for (std::size_t i = 0; i < w2.cols(); ++i) acc.add_scaled(powers[i], w2.at(k, i));
        out.push_back(std::move(acc));
    }
    return poly::PolyVector<F>{std::move(out)};
}

// Row-wise Khatri-Rao power: each row is replaced by the row-major
// vectorization of its r-fold outer product with itself, a x b -> a x b^r.
template <class F>
algebra::Matrix<F> khatri_rao_power(const algebra::Matrix<F>& m, int r) {
    if (r < 1) throw ConfigError("khatri-rao power requires r >= 1");
    const F& field = m.field();
    const std::size_t b = m.cols();
    std::size_t out_cols = b;
    for (int i = 1; i < r; ++i) {
        if (out_cols > static_cast<std::size_t>(poly::kMaxBasisSize) / b)
            throw ResourceLimitError("khatri-rao power too large");
        out_cols *= b;
    }
    algebra::Matrix<F> cur = m;
    for (int step = 1; step < r; ++step) {
        algebra::Matrix<F> next(field, m.rows(), cur.cols() * b);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < cur.cols(); ++j)
                for (std::size_t j2 = 0; j2 < b; ++j2)
                    next.at(i, j * b + j2) = field.mul(cur.at(i, j), m.at(i, j2));
        cur = std::move(next);
    }
    return cur;
}

// Accumulates a row-major order-D coefficient tensor over d0 coordinates
// into monomial coefficients: every tensor slot adds to the bucket of its
// index multiset. Division-free counterpart of row symmetrization.
template <class F>
poly::HomogPoly<F> tensor_row_to_poly(const F& field, const typename F::Elem* row,
                                      std::size_t len, int d0, std::int64_t order) {
    poly::MonomialBasis basis(d0, order);
    poly::HomogPoly<F> out(field, basis);
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(d0));
    for (std::size_t flat = 0; flat < len; ++flat) {
        if (field.is_zero(row[flat])) continue;
        std::fill(exps.begin(), exps.end(), 0u);
        std::size_t rem = flat;
        for (std::int64_t t = 0; t < order; ++t) {
            exps[rem % static_cast<std::size_t>(d0)] += 1;
            rem /= static_cast<std::size_t>(d0);
        }
        const std::size_t idx = basis.index_of(exps.data());
        out.coeff(idx) = field.add(out.coeff(idx), row[flat]);
    }
    return out;
}

// Full iterated Khatri-Rao form of the network map: T = W_1, then
// T <- W_i (T^{.r}) for i = 2..h, followed by row symmetrization into the
// monomial basis. Must agree with forward() exactly.
template <class F>
poly::PolyVector<F> khatri_rao_forward(const Architecture& arch, const WeightAssignment<F>& theta) {
    theta.check_shapes(arch);
    const F& field = theta.layers.front().field();
    algebra::Matrix<F> t = theta.layers[0];
    for (int i = 2; i <= arch.h(); ++i)
        t = theta.layers[static_cast<std::size_t>(i - 1)].multiply(khatri_rao_power(t, arch.degree));
    const std::int64_t order = arch.out_degree();
    std::vector<poly::HomogPoly<F>> comps;
    comps.reserve(t.rows());
    for (std::size_t k = 0; k < t.rows(); ++k)
        comps.push_back(tensor_row_to_poly<F>(field, t.row(k), t.cols(), arch.d0(), order));
    return poly::PolyVector<F>{std::move(comps)};
}

// Applies the scale/permutation replacement. Exact inverses of the r-th
// powers of diagonal entries are required; zero entries are rejected.
template <class F>
WeightAssignment<F> apply_action(const Architecture& arch, const WeightAssignment<F>& theta,
                                 const ScalePermAction<F>& g) {
    theta.check_shapes(arch);
    const F& field = theta.layers.front().field();
    const int h = arch.h();
    if (g.diagonals.size() != static_cast<std::size_t>(h - 1) ||
        g.permutations.size() != static_cast<std::size_t>(h - 1))
        throw ShapeMismatchError("action must provide h-1 diagonal/permutation pairs");
    for (const auto& diag : g.diagonals)
        for (const auto& e : diag)
            if (field.is_zero(e)) throw NonInvertibleDiagonalError("zero diagonal entry in action");

    // left factor P_i D_i and right factor D_i^{-r} P_i^T as explicit matrices
    auto left = [&](int i) {
        const auto& diag = g.diagonals[static_cast<std::size_t>(i)];
        const auto& perm = g.permutations[static_cast<std::size_t>(i)];
        algebra::Matrix<F> m(field, diag.size(), diag.size());
        for (std::size_t j = 0; j < diag.size(); ++j)
            m.at(static_cast<std::size_t>(perm[j]), j) = diag[j];
        return m;
    };
    auto right = [&](int i) {
        const auto& diag = g.diagonals[static_cast<std::size_t>(i)];
        const auto& perm = g.permutations[static_cast<std::size_t>(i)];
        algebra::Matrix<F> m(field, diag.size(), diag.size());
        for (std::size_t j = 0; j < diag.size(); ++j)
            m.at(j, static_cast<std::size_t>(perm[j])) =
                field.pow(field.inv(diag[j]), static_cast<std::uint64_t>(arch.degree));
        return m;
    };

    WeightAssignment<F> out = theta;
    for (int i = 1; i <= h; ++i) {
        auto& w = out.layers[static_cast<std::size_t>(i - 1)];
        if (i < h) w = left(i - 1).multiply(w);
        if (i > 1) w = w.multiply(right(i - 2));
    }
    return out;
}

// Uniform weight sampling, row-major within each layer, layers in order.
// Finite fields draw uniformly from [0, p); rationals draw integers in
// [-integer_bound, integer_bound].
template <class F>
WeightAssignment<F> sample_weights(const Architecture& arch, const F& field, Rng& rng,
                                   std::int64_t integer_bound = 1000) {
    WeightAssignment<F> out;
    out.layers.reserve(static_cast<std::size_t>(arch.h()));
    for (int i = 1; i <= arch.h(); ++i) {
        algebra::Matrix<F> w(field, static_cast<std::size_t>(arch.widths[static_cast<std::size_t>(i)]),
                             static_cast<std::size_t>(arch.widths[static_cast<std::size_t>(i - 1)]));
        for (std::size_t a = 0; a < w.rows(); ++a)
            for (std::size_t b = 0; b < w.cols(); ++b) {
                if constexpr (F::is_finite_field)
                    w.at(a, b) = rng.below(field.modulus());
                else
                    w.at(a, b) = field.from_int(rng.in_range(-integer_bound, integer_bound));
            }
        out.layers.push_back(std::move(w));
    }
    return out;
}

// Random invertible-diagonal + permutation action on the hidden layers.
template <class F>
ScalePermAction<F> sample_action(const Architecture& arch, const F& field, Rng& rng,
                                 std::int64_t integer_bound = 20) {
    ScalePermAction<F> g;
    for (int i = 1; i < arch.h(); ++i) {
        const std::size_t n = static_cast<std::size_t>(arch.widths[static_cast<std::size_t>(i)]);
        std::vector<typename F::Elem> diag;
        diag.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            if constexpr (F::is_finite_field)
                diag.push_back(1 + rng.below(field.modulus() - 1));
            else {
                std::int64_t v = 0;
                while (v == 0) v = rng.in_range(-integer_bound, integer_bound);
                diag.push_back(field.from_int(v));
            }
        }
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t j = n; j > 1; --j)
            std::swap(perm[j - 1], perm[rng.below(j)]);
        g.diagonals.push_back(std::move(diag));
        g.permutations.push_back(std::move(perm));
    }
    return g;
}

} // namespace polynet::net
