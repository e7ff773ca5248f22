#include "polynet/architecture.hpp"

#include <cstdlib>

namespace polynet {

Architecture parse_architecture(const std::string& text, int degree) {
    std::vector<int> widths;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        if (tok.empty()) throw ConfigError("malformed architecture string: '" + text + "'");
        char* end = nullptr;
        const long v = std::strtol(tok.c_str(), &end, 10);
        if (end == nullptr || *end != '\0' || v < 1 || v > 1000000)
            throw ConfigError("malformed width '" + tok + "' in architecture string");
        widths.push_back(static_cast<int>(v));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return Architecture(std::move(widths), degree);
}

} // namespace polynet
