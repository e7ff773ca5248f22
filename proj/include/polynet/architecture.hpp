#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polynet/errors.hpp"

namespace polynet {

// Width sequence (d_0,...,d_h) together with the activation degree r. The
// network computed by these widths maps R^{d_0} -> R^{d_h} through h weight
// layers, raising every hidden coordinate to the r-th power between layers,
// so the outputs are homogeneous of degree r^(h-1).
struct Architecture {
    std::vector<int> widths;
    int degree = 2;

    Architecture() = default;
    Architecture(std::vector<int> w, int r) : widths(std::move(w)), degree(r) { validate(); }

    void validate() const {
        if (widths.size() < 2) throw ConfigError("architecture needs at least one layer (two widths)");
        for (int d : widths)
            if (d < 1) throw ConfigError("layer widths must be positive");
        if (degree < 1) throw ConfigError("activation degree must be at least 1");
    }

    int h() const { return static_cast<int>(widths.size()) - 1; }
    int d0() const { return widths.front(); }
    int dh() const { return widths.back(); }

    std::int64_t d_theta() const {
        std::int64_t n = 0;
        for (std::size_t i = 1; i < widths.size(); ++i)
            n += static_cast<std::int64_t>(widths[i]) * widths[i - 1];
        return n;
    }

    std::int64_t internal_width_sum() const {
        std::int64_t n = 0;
        for (std::size_t i = 1; i + 1 < widths.size(); ++i) n += widths[i];
        return n;
    }

    // r^(h-1), the degree of the output polynomials.
    std::int64_t out_degree() const {
        std::int64_t d = 1;
        for (int i = 1; i < h(); ++i) {
            if (d > (1LL << 31) / degree)
                throw ResourceLimitError("output degree overflows representable range");
            d *= degree;
        }
        return d;
    }

    // Column offset of weight matrix W_layer (1-based layer) in the
    // canonical layer-major, row-major parameter ordering.
    std::int64_t weight_offset(int layer) const {
        std::int64_t off = 0;
        for (int i = 1; i < layer; ++i)
            off += static_cast<std::int64_t>(widths[static_cast<std::size_t>(i)]) *
                   widths[static_cast<std::size_t>(i - 1)];
        return off;
    }

    Architecture sub(std::size_t from, std::size_t to) const {
        return Architecture(std::vector<int>(widths.begin() + static_cast<std::ptrdiff_t>(from),
                                             widths.begin() + static_cast<std::ptrdiff_t>(to) + 1),
                            degree);
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < widths.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(widths[i]);
        }
        return s;
    }

    bool operator==(const Architecture& o) const { return widths == o.widths && degree == o.degree; }
};

// Parses "2,3,2" into a width vector; throws ConfigError on junk.
Architecture parse_architecture(const std::string& text, int degree);

} // namespace polynet
