#ifndef PF_ERROR_HPP
#define PF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pf {

// Violated input contract: the caller handed us something the operation
// rejects (wrong degree, not monic, not balanced, ...). CLI maps these
// to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Something went wrong that the inputs did not promise to avoid
// (non-convergence, rank deficiency we cannot certify, ...).
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pf

#endif
