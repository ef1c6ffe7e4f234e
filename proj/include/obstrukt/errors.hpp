#pragma once
#include <stdexcept>

namespace obk {

// Exit code 1: the input fails a precondition or a qualifying filter
// (malformed word, instability violation, non-admissible where required).
struct rejection_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exit code 2: a verification the tool performs came out false. This
// falsifies the implementation (or the loaded data), never the theory.
struct verify_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exit code 2: an internal guard tripped (rewriting depth, size caps).
struct limit_error : verify_error {
    using verify_error::verify_error;
};

// Exit code 3: malformed command line.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}
