#include "argshift/rational.hpp"

#include <cctype>
#include <sstream>

namespace argshift {

Rat parse_rational(std::string_view text) {
    // strict grammar: -?digits(/digits)?
    if (text.empty()) throw InputError("empty rational");
    size_t pos = 0;
    if (text[pos] == '-') ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InputError("bad rational '" + std::string(text) + "'");
    bool seen_slash = false;
    for (size_t i = pos; i < text.size(); ++i) {
        if (text[i] == '/') {
            if (seen_slash || i + 1 >= text.size()) throw InputError("bad rational '" + std::string(text) + "'");
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InputError("bad rational '" + std::string(text) + "'");
    }
    Rat value;
    if (mpq_set_str(value.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        throw InputError("bad rational '" + std::string(text) + "'");
    if (value.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value.canonicalize();
    return value;
}

std::string format_rational(const Rat& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

} // namespace argshift
