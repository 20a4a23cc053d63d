#ifndef A1GM_ERRORS_HPP
#define A1GM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace a1gm {

// Invalid arguments or malformed data: bad shapes, nonpositive entries where
// positivity is required, unparsable CSV cells, out-of-range options.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Masks the pipeline cannot work with: grid expansion would discard every
// row or column, or a mask observes nothing at all.
class mask_error : public std::runtime_error {
public:
    explicit mask_error(const std::string& what) : std::runtime_error(what) {}
};

// Failures arising during computation: undefined divergences, non-finite
// intermediate values.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace a1gm

#endif
