#include "kaccoh/torus.hpp"

#include <cstdlib>

namespace kaccoh {

TorusValue parse_torus_value(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(text);
            return TorusValue(n, 1);
        }
        const std::int64_t n = std::stoll(text.substr(0, slash));
        const std::int64_t d = std::stoll(text.substr(slash + 1));
        if (d == 0) throw SchemaError("zero denominator in '" + text + "'");
        return TorusValue(n, d);
    } catch (const std::logic_error&) {
        throw SchemaError("cannot parse rational '" + text + "'");
    }
}

}  // namespace kaccoh
