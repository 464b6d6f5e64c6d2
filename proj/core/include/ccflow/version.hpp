#pragma once

namespace ccflow {

inline constexpr char kToolVersion[] = "0.1.0";

} // namespace ccflow
