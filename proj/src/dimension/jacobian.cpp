#include "polynet/dimension/jacobian.hpp"

#include "polynet/poly/monomial_basis.hpp"

namespace polynet::dim {

using algebra::Matrix;
using algebra::PrimeField;

std::vector<std::vector<std::uint64_t>> sample_points(const PrimeField& field, int nvars,
                                                      std::size_t count, Rng& rng) {
    std::vector<std::vector<std::uint64_t>> pts(count);
    for (auto& p : pts) {
        p.resize(static_cast<std::size_t>(nvars));
        for (auto& c : p) c = rng.below(field.modulus());
    }
    return pts;
}

Matrix<PrimeField> jacobian_point_gradients(const Architecture& arch,
                                            const net::WeightAssignment<PrimeField>& theta,
                                            const std::vector<std::vector<std::uint64_t>>& points) {
    theta.check_shapes(arch);
    const PrimeField& f = theta.layers.front().field();
    net::check_field_degree(f, arch.degree);
    const int h = arch.h();
    const std::uint64_t r = static_cast<std::uint64_t>(arch.degree);
    const std::size_t d_theta = static_cast<std::size_t>(arch.d_theta());
    const std::size_t dh = static_cast<std::size_t>(arch.dh());

    Matrix<PrimeField> out(f, points.size() * dh, d_theta);

    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(h) + 1);
    std::vector<std::vector<std::uint64_t>> z(static_cast<std::size_t>(h) + 1);
    std::vector<std::vector<std::uint64_t>> zpow(static_cast<std::size_t>(h));

    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].size() != static_cast<std::size_t>(arch.d0()))
            throw ShapeMismatchError("sample point arity mismatch");
        s[1] = points[j];
        for (int i = 1; i <= h; ++i) {
            if (i >= 2) {
                auto& si = s[static_cast<std::size_t>(i)];
                const auto& zp = z[static_cast<std::size_t>(i - 1)];
                si.resize(zp.size());
                for (std::size_t c = 0; c < zp.size(); ++c) si[c] = f.pow(zp[c], r);
            }
            const auto& w = theta.layers[static_cast<std::size_t>(i - 1)];
            const auto& si = s[static_cast<std::size_t>(i)];
            auto& zi = z[static_cast<std::size_t>(i)];
            zi.assign(w.rows(), 0);
            for (std::size_t a = 0; a < w.rows(); ++a) {
                std::uint64_t acc = 0;
                for (std::size_t b = 0; b < w.cols(); ++b)
                    acc = f.add(acc, f.mul(w.at(a, b), si[b]));
                zi[a] = acc;
            }
        }
        for (int i = 1; i < h; ++i) {
            const auto& zi = z[static_cast<std::size_t>(i)];
            auto& zp = zpow[static_cast<std::size_t>(i)];
            zp.resize(zi.size());
            const std::uint64_t r_mod = f.from_int(arch.degree);
            for (std::size_t c = 0; c < zi.size(); ++c)
                zp[c] = f.mul(r_mod, f.pow(zi[c], r - 1));
        }

        for (std::size_t k = 0; k < dh; ++k) {
            std::uint64_t* row = out.row(j * dh + k);
            std::vector<std::uint64_t> lambda(dh, 0);
            lambda[k] = 1;
            for (int i = h; i >= 1; --i) {
                const auto& w = theta.layers[static_cast<std::size_t>(i - 1)];
                const std::size_t off = static_cast<std::size_t>(arch.weight_offset(i));
                const auto& si = s[static_cast<std::size_t>(i)];
                for (std::size_t a = 0; a < w.rows(); ++a) {
                    if (lambda[a] == 0) continue;
                    for (std::size_t b = 0; b < w.cols(); ++b)
                        row[off + a * w.cols() + b] = f.mul(lambda[a], si[b]);
                }
                if (i == 1) break;
                std::vector<std::uint64_t> prev(w.cols(), 0);
                for (std::size_t c = 0; c < w.cols(); ++c) {
                    std::uint64_t acc = 0;
                    for (std::size_t a = 0; a < w.rows(); ++a)
                        acc = f.add(acc, f.mul(w.at(a, c), lambda[a]));
                    prev[c] = f.mul(acc, zpow[static_cast<std::size_t>(i - 1)][c]);
                }
                lambda = std::move(prev);
            }
        }
    }
    return out;
}

Matrix<PrimeField> jacobian_ff_interpolated(const Architecture& arch,
                                            const net::WeightAssignment<PrimeField>& theta,
                                            Rng& rng, int max_attempts) {
    theta.check_shapes(arch);
    const PrimeField& f = theta.layers.front().field();
    net::check_field_degree(f, arch.degree);
    const poly::MonomialBasis basis(arch.d0(), arch.out_degree());
    const std::size_t big_n = basis.size();
    const std::size_t dh = static_cast<std::size_t>(arch.dh());
    const std::size_t d_theta = static_cast<std::size_t>(arch.d_theta());

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto pts = sample_points(f, arch.d0(), big_n, rng);
        auto vmat = poly::monomial_eval_matrix(f, basis, pts);
        Matrix<PrimeField> grads = jacobian_point_gradients(arch, theta, pts);
        // right-hand side per output component: G_k[j, w] = d p_k(x_j)/d w
        try {
            Matrix<PrimeField> jac(f, big_n * dh, d_theta);
            for (std::size_t k = 0; k < dh; ++k) {
                Matrix<PrimeField> gk(f, big_n, d_theta);
                for (std::size_t j = 0; j < big_n; ++j)
                    for (std::size_t w = 0; w < d_theta; ++w) gk.at(j, w) = grads.at(j * dh + k, w);
                Matrix<PrimeField> coeffs = algebra::solve(vmat, gk);
                for (std::size_t idx = 0; idx < big_n; ++idx)
                    for (std::size_t w = 0; w < d_theta; ++w)
                        jac.at(k * big_n + idx, w) = coeffs.at(idx, w);
            }
            return jac;
        } catch (const SingularMatrixError&) {
            continue; // degenerate sample set; draw fresh points
        }
    }
    throw InterpolationFailedError("evaluation matrix stayed singular after " +
                                   std::to_string(max_attempts) + " resamples");
}

} // namespace polynet::dim
