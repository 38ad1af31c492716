#pragma once

#include "feasikit/solvers/run.hpp"

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace feasikit {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// `# key: value` lines, one per entry.
void write_metadata(std::ostream& os, const Metadata& meta);

/// Trace CSV: metadata block, then `iter,error,step_seconds`. Errors are
/// full-precision decimal strings.
template <InnerProductPoint P>
void write_trace_csv(std::ostream& os, const Trace<P>& trace, Metadata meta) {
    meta.emplace_back("terminated_by", std::string(to_string(trace.terminated_by)));
    meta.emplace_back("iterations", std::to_string(trace.iterations()));
    write_metadata(os, meta);
    os << "iter,error,step_seconds\n";
    char buf[32];
    for (std::size_t k = 0; k < trace.errors.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.9f", trace.step_seconds[k]);
        os << k << ',' << trace.errors[k].to_string() << ',' << buf << '\n';
    }
}

}  // namespace feasikit
