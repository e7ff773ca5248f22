#pragma once

#include <cstdint>
#include <vector>

#include "polynet/algebra/matrix.hpp"
#include "polynet/architecture.hpp"
#include "polynet/network/network.hpp"
#include "polynet/poly/homog_poly.hpp"

namespace polynet::dim {

// Coefficient Jacobian of the network map at theta by reverse-mode
// differentiation through the layers, carried out on polynomial values.
// Row (k, alpha) = k * N + alpha holds the coefficient of monomial alpha in
// d p_k / d w; columns are layer-major, row-major within a layer. Works
// over any exact field; over Q with integer weights this is the exact
// rational Jacobian, over F_p it equals that matrix reduced mod p.
template <class F>
algebra::Matrix<F> jacobian_coefficients(const Architecture& arch,
                                         const net::WeightAssignment<F>& theta) {
    theta.check_shapes(arch);
    const F& field = theta.layers.front().field();
    net::check_field_degree(field, arch.degree);
    const int h = arch.h();
    const int r = arch.degree;
    const int n = arch.d0();
    const std::int64_t out_deg = arch.out_degree();
    const poly::MonomialBasis out_basis(n, out_deg);
    const std::size_t big_n = out_basis.size();
    const std::int64_t d_theta = arch.d_theta();

    // forward, keeping the input polynomials s_i of every layer
    std::vector<std::vector<poly::HomogPoly<F>>> s(static_cast<std::size_t>(h) + 1);
    std::vector<std::vector<poly::HomogPoly<F>>> z(static_cast<std::size_t>(h) + 1);
    s[1].reserve(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) s[1].push_back(poly::HomogPoly<F>::variable(field, n, b));
    for (int i = 1; i <= h; ++i) {
        if (i >= 2) {
            s[static_cast<std::size_t>(i)].reserve(z[static_cast<std::size_t>(i - 1)].size());
            for (const auto& zp : z[static_cast<std::size_t>(i - 1)])
                s[static_cast<std::size_t>(i)].push_back(poly::power(zp, r));
        }
        const auto& w = theta.layers[static_cast<std::size_t>(i - 1)];
        auto& si = s[static_cast<std::size_t>(i)];
        auto& zi = z[static_cast<std::size_t>(i)];
        zi.reserve(w.rows());
        for (std::size_t a = 0; a < w.rows(); ++a) {
            poly::HomogPoly<F> acc(field, si.front().basis());
            for (std::size_t b = 0; b < w.cols(); ++b) acc.add_scaled(si[b], w.at(a, b));
            zi.push_back(std::move(acc));
        }
    }

    // r * z_i^(r-1), the elementwise activation derivative per hidden layer
    std::vector<std::vector<poly::HomogPoly<F>>> zpow(static_cast<std::size_t>(h));
    const auto r_elem = field.from_int(r);
    for (int i = 1; i < h; ++i)
        for (const auto& zp : z[static_cast<std::size_t>(i)])
            zpow[static_cast<std::size_t>(i)].push_back(poly::power(zp, r - 1).scaled(r_elem));

    algebra::Matrix<F> jac(field, big_n * static_cast<std::size_t>(arch.dh()),
                           static_cast<std::size_t>(d_theta));

    for (int k = 0; k < arch.dh(); ++k) {
        // lambda_i[a] = d p_k / d (z_i)_a as a polynomial in x
        std::vector<poly::HomogPoly<F>> lambda;
        for (int a = 0; a < arch.dh(); ++a)
            lambda.push_back(poly::HomogPoly<F>::constant(field, n, a == k ? field.one() : field.zero()));
        for (int i = h; i >= 1; --i) {
            const auto& w = theta.layers[static_cast<std::size_t>(i - 1)];
            const std::int64_t off = arch.weight_offset(i);
            for (std::size_t a = 0; a < w.rows(); ++a) {
                if (lambda[a].is_zero()) continue;
                for (std::size_t b = 0; b < w.cols(); ++b) {
                    const auto prod = poly::multiply(lambda[a], s[static_cast<std::size_t>(i)][b]);
                    const std::size_t col = static_cast<std::size_t>(off) + a * w.cols() + b;
                    for (std::size_t idx = 0; idx < big_n; ++idx)
                        jac.at(static_cast<std::size_t>(k) * big_n + idx, col) = prod.coeff(idx);
                }
            }
            if (i == 1) break;
            std::vector<poly::HomogPoly<F>> prev;
            prev.reserve(w.cols());
            for (std::size_t c = 0; c < w.cols(); ++c) {
                poly::HomogPoly<F> mu(field, lambda.front().basis());
                for (std::size_t a = 0; a < w.rows(); ++a) mu.add_scaled(lambda[a], w.at(a, c));
                prev.push_back(poly::multiply(mu, zpow[static_cast<std::size_t>(i - 1)][c]));
            }
            lambda = std::move(prev);
        }
    }
    return jac;
}

// Gradient rows of the network outputs at explicit sample points over F_p,
// one row per (point, output component): row j * d_h + k holds
// d p_k(x_j) / d theta. Shares the column convention above. Its rank equals
// the coefficient Jacobian's rank whenever the monomial evaluation matrix
// of the points has full column rank.
algebra::Matrix<algebra::PrimeField> jacobian_point_gradients(
    const Architecture& arch, const net::WeightAssignment<algebra::PrimeField>& theta,
    const std::vector<std::vector<std::uint64_t>>& points);

// Coefficient Jacobian over F_p recovered by interpolation: backprop at
// exactly N sample points, then one exact linear solve against the monomial
// evaluation matrix. Resamples on singular evaluation matrices, up to
// `max_attempts`, then throws InterpolationFailedError.
algebra::Matrix<algebra::PrimeField> jacobian_ff_interpolated(
    const Architecture& arch, const net::WeightAssignment<algebra::PrimeField>& theta, Rng& rng,
    int max_attempts = 10);

// Uniform sample points in F_p^{d0}.
std::vector<std::vector<std::uint64_t>> sample_points(const algebra::PrimeField& field, int nvars,
                                                      std::size_t count, Rng& rng);

} // namespace polynet::dim
