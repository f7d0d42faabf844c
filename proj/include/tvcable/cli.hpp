#pragma once

#include <iosfwd>

namespace tvcable {

/// Exit status: 0 on success, 1 on usage or validation errors, 2 when a
/// computation fails or a verification does not hold.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tvcable
