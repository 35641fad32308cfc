#pragma once

#include <stdexcept>
#include <string>

namespace exacthh {

/* Bad user input: malformed files, non-associative tables, spans that are not
 * subalgebras, mismatched dimensions.  The CLI maps this to exit code 3. */
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/* A constructed object violated an internal invariant (d^2 != 0, a map that
 * should be a chain map is not, ...).  Always a bug in the caller or in this
 * library, never a property of the mathematical input. */
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace exacthh
