#include "feasikit/solvers/trace_io.hpp"

namespace feasikit {

void write_metadata(std::ostream& os, const Metadata& meta) {
    for (const auto& [key, value] : meta) os << "# " << key << ": " << value << '\n';
}

}  // namespace feasikit
