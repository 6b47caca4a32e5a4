#ifndef SGDIM_ERROR_HPP
#define SGDIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sgdim {

// Machine-readable failure kinds. The CLI maps these onto its exit-status
// contract; library code throws them directly.
enum class errc {
    field_mismatch,
    arity_mismatch,
    index_range,
    unit_defining_ideal,
    invalid_presentation,
    inconclusive,        // certification budget exhausted, raise the schedule
    not_isolated,        // isolated-singularity certificate not found
    parse,               // syntax or document errors, carries line/column
    resource,            // refused: model too large
    internal             // broken invariant, always a bug
};

class sg_error : public std::runtime_error {
public:
    sg_error(errc code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw sg_error(code, msg);
}

} // namespace sgdim

#endif
