#pragma once

namespace turan {

inline constexpr const char* kToolkitVersion = "0.1.0";

}
