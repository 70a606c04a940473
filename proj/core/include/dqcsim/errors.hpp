#pragma once

#include <stdexcept>
#include <string>

namespace dqcsim {

// Invalid or inconsistent input (parameter files, schema violations, bad
// physical parameters). The CLI maps this to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical procedure failed (eigensolver non-convergence, an exact pole on
// the evaluation grid). The CLI maps this to exit status 3.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dqcsim
