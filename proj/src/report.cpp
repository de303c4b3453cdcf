#include "kuc/report.hpp"

#include <sstream>

namespace kuc {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string render_text(const CheckReport& r) {
    std::ostringstream os;
    os << "[" << to_string(r.status) << "] " << r.claim_id << ": " << r.anchor;
    if (r.seed) os << " (seed " << *r.seed << ")";
    if (r.precision_bits) os << " (prec " << r.precision_bits << " bits)";
    os << "\n";
    for (const auto& w : r.witnesses) {
        os << "    " << w.expr << " = " << w.value;
        if (w.precision_bits) os << " @" << w.precision_bits << "b";
        os << "\n";
    }
    return os.str();
}

}  // namespace kuc
