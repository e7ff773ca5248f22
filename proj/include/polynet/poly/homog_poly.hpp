#pragma once

#include <cstdint>
#include <vector>

#include "polynet/algebra/matrix.hpp"
#include "polynet/errors.hpp"
#include "polynet/poly/monomial_basis.hpp"

namespace polynet::poly {

// Dense homogeneous polynomial over an exact field: a coefficient vector
// indexed by the shared MonomialBasis of its (nvars, degree).
template <class F>
class HomogPoly {
public:
    using Elem = typename F::Elem;

    HomogPoly(const F& field, MonomialBasis basis)
        : field_(field), basis_(std::move(basis)), coeffs_(basis_.size(), field.zero()) {}

    HomogPoly(const F& field, MonomialBasis basis, std::vector<Elem> coeffs)
        : field_(field), basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != basis_.size())
            throw ShapeMismatchError("coefficient count does not match basis size");
    }

    static HomogPoly constant(const F& field, int nvars, Elem value) {
        HomogPoly p(field, MonomialBasis(nvars, 0));
        p.coeffs_[0] = std::move(value);
        return p;
    }

    // The j-th coordinate variable as a degree-1 polynomial.
    static HomogPoly variable(const F& field, int nvars, int j) {
        HomogPoly p(field, MonomialBasis(nvars, 1));
        p.coeffs_[static_cast<std::size_t>(j)] = field.one(); // degree-1 basis lists x_j at index j
        return p;
    }

    const F& field() const { return field_; }
    const MonomialBasis& basis() const { return basis_; }
    int nvars() const { return basis_.nvars(); }
    std::int64_t degree() const { return basis_.degree(); }

    const std::vector<Elem>& coeffs() const { return coeffs_; }
    Elem& coeff(std::size_t i) { return coeffs_[i]; }
    const Elem& coeff(std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const {
        for (const Elem& c : coeffs_)
            if (!field_.is_zero(c)) return false;
        return true;
    }

    void add_scaled(const HomogPoly& other, const Elem& scale) {
        require_compatible(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] = field_.add(coeffs_[i], field_.mul(scale, other.coeffs_[i]));
    }

    HomogPoly scaled(const Elem& scale) const {
        HomogPoly out(field_, basis_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = field_.mul(coeffs_[i], scale);
        return out;
    }

    HomogPoly operator+(const HomogPoly& other) const {
        require_compatible(other);
        HomogPoly out(field_, basis_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out.coeffs_[i] = field_.add(coeffs_[i], other.coeffs_[i]);
        return out;
    }

    HomogPoly operator-(const HomogPoly& other) const {
        require_compatible(other);
        HomogPoly out(field_, basis_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out.coeffs_[i] = field_.sub(coeffs_[i], other.coeffs_[i]);
        return out;
    }

    bool operator==(const HomogPoly& other) const {
        return basis_.same_as(other.basis_) && coeffs_ == other.coeffs_;
    }

    void require_compatible(const HomogPoly& other) const {
        if (!(field_ == other.field_)) throw FieldMismatchError("polynomials over different fields");
        if (!basis_.same_as(other.basis_)) throw ShapeMismatchError("polynomials over different bases");
    }

private:
    F field_;
    MonomialBasis basis_;
    std::vector<Elem> coeffs_;
};

// Exponent-vector convolution; each coefficient pair lands in the product
// monomial found by binary search in the product basis.
template <class F>
HomogPoly<F> multiply(const HomogPoly<F>& f, const HomogPoly<F>& g) {
    if (!(f.field() == g.field())) throw FieldMismatchError("polynomials over different fields");
    if (f.nvars() != g.nvars()) throw FieldMismatchError("polynomials in different variable counts");
    const auto& field = f.field();
    const int n = f.nvars();
    MonomialBasis pb(n, f.degree() + g.degree());
    HomogPoly<F> out(field, pb);
    std::vector<std::uint32_t> sum(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < f.basis().size(); ++i) {
        if (field.is_zero(f.coeff(i))) continue;
        const std::uint32_t* ei = f.basis().exponents(i);
        for (std::size_t j = 0; j < g.basis().size(); ++j) {
            if (field.is_zero(g.coeff(j))) continue;
            const std::uint32_t* ej = g.basis().exponents(j);
            for (int v = 0; v < n; ++v) sum[static_cast<std::size_t>(v)] = ei[v] + ej[v];
            const std::size_t k = pb.index_of(sum.data());
            out.coeff(k) = field.add(out.coeff(k), field.mul(f.coeff(i), g.coeff(j)));
        }
    }
    return out;
}

// f^r by repeated squaring; f^0 is the constant 1.
template <class F>
HomogPoly<F> power(const HomogPoly<F>& f, std::int64_t r) {
    if (r < 0) throw ConfigError("polynomial power must be nonnegative");
    HomogPoly<F> result = HomogPoly<F>::constant(f.field(), f.nvars(), f.field().one());
    HomogPoly<F> base = f;
    while (r > 0) {
        if (r & 1) result = multiply(result, base);
        r >>= 1;
        if (r > 0) base = multiply(base, base);
    }
    return result;
}

// Exact evaluation at a point; powers of each coordinate are tabulated once.
template <class F>
typename F::Elem evaluate(const HomogPoly<F>& f, const std::vector<typename F::Elem>& x) {
    const auto& field = f.field();
    const int n = f.nvars();
    if (static_cast<int>(x.size()) != n) throw ShapeMismatchError("evaluation point has wrong arity");
    const std::int64_t d = f.degree();
    std::vector<std::vector<typename F::Elem>> pw(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& t = pw[static_cast<std::size_t>(v)];
        t.resize(static_cast<std::size_t>(d) + 1);
        t[0] = field.one();
        for (std::int64_t e = 1; e <= d; ++e)
            t[static_cast<std::size_t>(e)] = field.mul(t[static_cast<std::size_t>(e - 1)], x[static_cast<std::size_t>(v)]);
    }
    auto acc = field.zero();
    for (std::size_t i = 0; i < f.basis().size(); ++i) {
        if (field.is_zero(f.coeff(i))) continue;
        const std::uint32_t* e = f.basis().exponents(i);
        auto term = f.coeff(i);
        for (int v = 0; v < n; ++v)
            term = field.mul(term, pw[static_cast<std::size_t>(v)][e[v]]);
        acc = field.add(acc, term);
    }
    return acc;
}

// M x N matrix of monomial values: row i evaluates every basis monomial at
// points[i]. Converts point evaluations of a polynomial into its
// coefficient vector (solve against it).
template <class F>
algebra::Matrix<F> monomial_eval_matrix(const F& field, const MonomialBasis& basis,
                                        const std::vector<std::vector<typename F::Elem>>& points) {
    const int n = basis.nvars();
    const std::int64_t d = basis.degree();
    algebra::Matrix<F> out(field, points.size(), basis.size());
    std::vector<std::vector<typename F::Elem>> pw(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& x = points[i];
        if (static_cast<int>(x.size()) != n) throw ShapeMismatchError("sample point has wrong arity");
        for (int v = 0; v < n; ++v) {
            auto& t = pw[static_cast<std::size_t>(v)];
            t.assign(static_cast<std::size_t>(d) + 1, field.one());
            for (std::int64_t e = 1; e <= d; ++e)
                t[static_cast<std::size_t>(e)] =
                    field.mul(t[static_cast<std::size_t>(e - 1)], x[static_cast<std::size_t>(v)]);
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const std::uint32_t* e = basis.exponents(j);
            auto val = field.one();
            for (int v = 0; v < n; ++v)
                val = field.mul(val, pw[static_cast<std::size_t>(v)][e[v]]);
            out.at(i, j) = val;
        }
    }
    return out;
}

// Vector of homogeneous polynomials sharing one basis.
template <class F>
struct PolyVector {
    std::vector<HomogPoly<F>> components;

    void require_uniform() const {
        for (std::size_t i = 1; i < components.size(); ++i)
            components[0].require_compatible(components[i]);
    }
};

} // namespace polynet::poly
