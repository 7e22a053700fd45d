#pragma once

#include <stdexcept>
#include <string>

namespace turan {

// Malformed hypergraph/certificate input (text or JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured node/time/enumeration budget was exceeded.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}
