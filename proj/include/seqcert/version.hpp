#pragma once

namespace seqcert {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace seqcert
