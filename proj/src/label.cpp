#include "fusion/label.hpp"

#include <sstream>

namespace fusion {

std::string default_label_text(const Label& l) {
    if (l.width() == 1) {
        return std::to_string(l[0]);
    }
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < l.width(); ++i) {
        if (i) out << ',';
        out << l[i];
    }
    out << ')';
    return out.str();
}

}  // namespace fusion
