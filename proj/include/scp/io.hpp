#ifndef SCP_IO_HPP
#define SCP_IO_HPP

#include <string>
#include <string_view>

#include "scp/collection.hpp"

namespace scp {

// SCP text grammar: optional header line `scp q=<q> n=<n>`, then one subcube
// per line using characters 0-9/a-z and `*`. `#` starts a comment, blank
// lines are ignored. Without a header, q is inferred as 1 + max symbol
// (minimum 2) and n as the common word length.
SubcubeCollection parse_scp(std::string_view text);

std::string format_scp(const SubcubeCollection& F, bool with_header = true);

}  // namespace scp

#endif
