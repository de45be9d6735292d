#pragma once

namespace flagcat {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace flagcat
