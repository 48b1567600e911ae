#pragma once

namespace bicentric {

// Full command-line surface (solve / generate / verify / render / sweep).
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
// failure. Diagnostics go to standard error.
int cli_main(int argc, const char* const* argv);

}  // namespace bicentric
