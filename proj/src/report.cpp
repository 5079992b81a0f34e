#include "ppeval/report.hpp"

#include <sstream>

namespace ppeval {

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    if (ok()) {
        out << "ok";
        if (sampled_only)
            out << " (sampled only)";
        return out.str();
    }
    out << violations.size() << " violation" << (violations.size() == 1 ? "" : "s");
    if (sampled_only)
        out << " (sampled only)";
    for (const Violation& v : violations) {
        out << "\n  " << v.context << ": " << v.message;
        if (v.offending_sum)
            out << " (sum " << v.offending_sum->to_string() << ")";
    }
    return out.str();
}

}  // namespace ppeval
