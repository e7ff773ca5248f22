#include "polynet/poly/monomial_basis.hpp"

#include <map>
#include <mutex>
#include <string>

namespace polynet::poly {

namespace {

// binomial(nvars+degree-1, nvars-1) via exact incremental multiply/divide;
// every intermediate is itself a binomial coefficient, so division is exact.
std::int64_t binom_count(int nvars, std::int64_t degree, std::int64_t cap) {
    unsigned __int128 b = 1;
    for (int i = 1; i < nvars; ++i) {
        b = b * static_cast<unsigned __int128>(degree + i);
        b /= static_cast<unsigned __int128>(i);
        if (b > static_cast<unsigned __int128>(cap)) return cap + 1;
    }
    return static_cast<std::int64_t>(b);
}

} // namespace

std::int64_t basis_size(int nvars, std::int64_t degree) {
    if (nvars < 1) throw ConfigError("basis needs at least one variable");
    if (degree < 0) throw ConfigError("basis degree must be nonnegative");
    std::int64_t n = binom_count(nvars, degree, kMaxBasisSize);
    if (n > kMaxBasisSize)
        throw ResourceLimitError("monomial basis too large: nvars=" + std::to_string(nvars) +
                                 " degree=" + std::to_string(degree) + " exceeds " +
                                 std::to_string(kMaxBasisSize) + " monomials");
    return n;
}

std::int64_t saturating_basis_size(int nvars, std::int64_t degree, std::int64_t cap) {
    if (degree < 0) return 0;
    return binom_count(nvars, degree, cap);
}

namespace {

void enumerate_rec(int nvars, std::int64_t degree, int pos, std::vector<std::uint32_t>& cur,
                   std::vector<std::uint32_t>& out) {
    if (pos == nvars - 1) {
        cur[pos] = static_cast<std::uint32_t>(degree);
        out.insert(out.end(), cur.begin(), cur.end());
        return;
    }
    for (std::int64_t e = degree; e >= 0; --e) {
        cur[pos] = static_cast<std::uint32_t>(e);
        enumerate_rec(nvars, degree - e, pos + 1, cur, out);
    }
}

std::mutex cache_mutex;
std::map<std::pair<int, std::int64_t>, std::shared_ptr<const void>>& cache() {
    static std::map<std::pair<int, std::int64_t>, std::shared_ptr<const void>> c;
    return c;
}

} // namespace

MonomialBasis::MonomialBasis(int nvars, std::int64_t degree) {
    const std::int64_t n = basis_size(nvars, degree); // validates and guards
    if (degree > 0xffffffffLL) throw ResourceLimitError("monomial degree exceeds exponent range");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(nvars, degree);
    auto it = cache().find(key);
    if (it != cache().end()) {
        d_ = std::static_pointer_cast<const Data>(it->second);
        return;
    }
    auto data = std::make_shared<Data>();
    data->nvars = nvars;
    data->degree = degree;
    data->size = static_cast<std::size_t>(n);
    data->exps.reserve(data->size * static_cast<std::size_t>(nvars));
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(nvars), 0);
    enumerate_rec(nvars, degree, 0, cur, data->exps);
    d_ = data;
    cache().emplace(key, std::static_pointer_cast<const void>(data));
}

std::size_t MonomialBasis::index_of(const std::uint32_t* exps) const {
    const int n = d_->nvars;
    // binary search over the descending-lex ordered list
    std::size_t lo = 0, hi = d_->size;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        const std::uint32_t* m = exponents(mid);
        int cmp = 0;
        for (int i = 0; i < n; ++i) {
            if (m[i] != exps[i]) {
                cmp = m[i] > exps[i] ? 1 : -1; // m lex-greater => m comes first
                break;
            }
        }
        if (cmp == 0) return mid;
        if (cmp > 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    throw Error("exponent vector not in basis (degree mismatch?)");
}

} // namespace polynet::poly
