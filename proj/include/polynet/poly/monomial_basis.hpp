#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "polynet/errors.hpp"

namespace polynet::poly {

// Number of monomials of total degree `degree` in `nvars` variables,
// binomial(nvars+degree-1, degree). Throws ResourceLimitError beyond the
// dense-representation guard.
std::int64_t basis_size(int nvars, std::int64_t degree);

// Same binomial but saturating at `cap` instead of throwing; used by width
// bounds where the value only ever feeds comparisons.
std::int64_t saturating_basis_size(int nvars, std::int64_t degree, std::int64_t cap);

inline constexpr std::int64_t kMaxBasisSize = 1000000;

// Canonical ordered monomial basis of Sym_degree(nvars variables).
// Exponent vectors are listed in descending lexicographic order (x1^d
// first), which for fixed total degree coincides with graded-lex. Instances
// share immutable data through a process-wide cache, so copies are cheap.
class MonomialBasis {
public:
    MonomialBasis(int nvars, std::int64_t degree);

    int nvars() const { return d_->nvars; }
    std::int64_t degree() const { return d_->degree; }
    std::size_t size() const { return d_->size; }

    // Exponent vector of the idx-th monomial, nvars() entries.
    const std::uint32_t* exponents(std::size_t idx) const {
        return d_->exps.data() + idx * static_cast<std::size_t>(d_->nvars);
    }

    // Index of an exponent vector in this basis (binary search).
    std::size_t index_of(const std::uint32_t* exps) const;

    bool same_as(const MonomialBasis& other) const { return d_ == other.d_; }

private:
    struct Data {
        int nvars;
        std::int64_t degree;
        std::size_t size;
        std::vector<std::uint32_t> exps; // size * nvars, row-major
    };
    std::shared_ptr<const Data> d_;
};

} // namespace polynet::poly
