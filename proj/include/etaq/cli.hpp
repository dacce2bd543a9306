#ifndef ETAQ_CLI_HPP
#define ETAQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace etaq {

/*
 * Command-line dispatch.  Reports are JSON documents with a top-level
 * "schema": 1 and every scalar serialized as an exact string; --text selects
 * a plain-text rendering.  Exit codes: 0 success, 2 invalid input (parse
 * errors and precondition failures), 3 curve not smooth, 4 internal
 * consistency failure.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace etaq

#endif
