#include "feasikit/solvers/run.hpp"

#include <string>

namespace feasikit {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::dr:
            return "dr";
        case Method::lt:
            return "lt";
        case Method::plt:
            return "plt";
    }
    return "?";
}

std::string_view to_string(TerminatedBy t) {
    switch (t) {
        case TerminatedBy::tolerance:
            return "tolerance";
        case TerminatedBy::max_iter:
            return "max_iter";
        case TerminatedBy::exact_zero:
            return "exact_zero";
        case TerminatedBy::stagnation:
            return "stagnation";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    if (text == "dr") return Method::dr;
    if (text == "lt") return Method::lt;
    if (text == "plt") return Method::plt;
    throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected dr, lt or plt)");
}

}  // namespace feasikit
