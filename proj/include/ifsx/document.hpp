#pragma once

#include "ifsx/system.hpp"

#include <string>
#include <string_view>

namespace ifsx {

// .ifs documents are JSON objects:
//   {
//     "dimension": 1,
//     "mode": "exact",                    // or "interval"
//     "maps": [
//       {"ratio": "1/5", "orthogonal": [["1"]], "translation": ["0"]},
//       ...
//     ],
//     "attributes": {"osc": "declared", "notes": "..."}   // optional
//   }
// Scalars are rational strings "p/q" (or integer literals); in interval mode
// a scalar may also be {"lo": "p/q", "hi": "p/q"}.  Parse failures raise
// ParseError with 1-based line/column positions.
IfsSystem parse_document(std::string_view text, const SystemOptions& opts = {});

// Reads and parses a file; I/O failures raise std::runtime_error.
IfsSystem load_document(const std::string& path, const SystemOptions& opts = {});

// Serializes a system back to document form.  Exact scalars render as
// canonical rational strings, so exact-mode systems round-trip identically.
std::string serialize_document(const IfsSystem& sys, const std::string& notes = "");

} // namespace ifsx
