#pragma once

namespace twoarm {

/// Entry point for the `twoarm` command-line tool.
/// Exit codes: 0 success, 1 usage error, 2 data/parse error,
/// 3 degenerate-statistics error.
int cli_main(int argc, char** argv);

}  // namespace twoarm
