#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftalg::audit {

// Full command-line front end; args excludes the program name.
// Exit codes: 0 = ran (findings included), 1 = a check crashed or --strict
// found a status drift, 2 = usage or expression parse error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace shiftalg::audit
