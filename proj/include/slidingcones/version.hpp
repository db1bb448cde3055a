#pragma once

namespace slidingcones {

inline constexpr const char* kVersion = "0.1.0";

int cli_dispatch(int argc, const char* const* argv);

} // namespace slidingcones
