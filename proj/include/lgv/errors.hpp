#pragma once

#include <stdexcept>
#include <string>

namespace lgv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file (weight file, dataset).
struct ParseError : Error {
    using Error::Error;
};

// Inconsistent sizes between vectors, matrices, layers or boxes.
struct DimensionError : Error {
    using Error::Error;
};

// Simplex ran out of iterations or hit an impossible state.
struct LpError : Error {
    using Error::Error;
};

} // namespace lgv
