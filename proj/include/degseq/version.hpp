#pragma once

#include <string_view>

namespace degseq {

inline constexpr std::string_view kCodeVersion = "degseq-0.1.0";

} // namespace degseq
